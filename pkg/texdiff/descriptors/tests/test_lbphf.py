import numpy as np
from hypothesis import given

from texdiff.testutils import strategies as tdst
from texdiff.testutils.test_patterns import reference_lbphf

from ..lbphf import LENGTH, lbphf, lbphf_from_codes
from ..neighborhood import ROTATION_TABLES, QuantizedImage, lbp_codes


def test_length() -> None:
    assert LENGTH == 38


def test_constant_image_only_fills_the_all_ones_bin() -> None:
    values = lbphf(QuantizedImage(np.full((3, 4), 17))).values
    assert values[36] == 12
    assert np.count_nonzero(values) == 1


@given(tdst.quantized_image())
def test_lbphf_matches_reference(image: QuantizedImage) -> None:
    expected = reference_lbphf(image.levels.tolist())
    assert np.allclose(lbphf(image).values, expected, atol=1e-9)


@given(tdst.quantized_image())
def test_zero_frequency_is_the_orbit_mass(image: QuantizedImage) -> None:
    values = lbphf(image).values
    uniform_mass = values[0:35:5].sum() + values[35] + values[36] + values[37]
    assert uniform_mass == image.pixel_count


@given(tdst.quantized_image())
def test_ring_rotations_leave_features_unchanged(image: QuantizedImage) -> None:
    codes = lbp_codes(image)
    features = lbphf_from_codes(codes).values
    for table in ROTATION_TABLES:
        rotated = lbphf_from_codes(table[codes]).values
        assert np.allclose(rotated, features, atol=1e-9)


@given(tdst.quantized_image())
def test_quarter_turns_leave_features_unchanged(image: QuantizedImage) -> None:
    features = lbphf(image).values
    turned = lbphf(QuantizedImage(np.rot90(image.levels))).values
    assert np.allclose(turned, features, atol=1e-9)
