import math

import numpy as np
import pytest

from texdiff.errors import ShapeError
from texdiff.image import Image

from ..stencil import gradient_magnitude, total_variation


def test_gradient_of_a_constant_image_is_zero() -> None:
    assert np.all(gradient_magnitude(Image(np.full((4, 4), 0.7))).data == 0)


def test_gradient_of_a_ramp_is_one_inside() -> None:
    ramp = Image(np.tile(np.arange(6, dtype=np.float64), (5, 1)))
    magnitude = gradient_magnitude(ramp).data
    assert np.all(magnitude[:, 1:-1] == 1)


def test_central_differences_cancel_on_an_isolated_peak() -> None:
    peak = Image.from_array([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    magnitude = gradient_magnitude(peak).data
    assert magnitude[1, 1] == 0
    assert magnitude[0, 1] == pytest.approx(0.5)
    assert magnitude[0, 0] == pytest.approx(0)


def test_gradient_magnitude_is_nonnegative() -> None:
    data = np.random.default_rng(0).random((6, 5))
    assert np.all(gradient_magnitude(Image(data)).data >= 0)
    assert math.isfinite(total_variation(Image(data)))


@pytest.mark.parametrize("shape", [(1, 5), (5, 1), (1, 1)])
def test_that_degenerate_images_have_no_gradient(shape: tuple) -> None:
    with pytest.raises(ShapeError):
        gradient_magnitude(Image(np.zeros(shape)))


def test_total_variation_counts_every_edge() -> None:
    image = Image.from_array([[0, 1], [1, 3]])
    assert total_variation(image) == 1 + 2 + 1 + 2
