import numpy as np
import pytest

from texdiff.descriptors import Descriptor, DescriptorOptions
from texdiff.diffusion import DEFAULT_PARAMS, DiffusionParams, Method
from texdiff.testutils.test_patterns import open_temp_dir

from ..cache import FeatureCache, FeatureKey

OPTIONS = DescriptorOptions()


def key(
    method: Method = Method.PM,
    it: int = 1,
    descriptor: Descriptor = Descriptor.LBPV,
    params: DiffusionParams = DEFAULT_PARAMS,
    options: DescriptorOptions = OPTIONS,
) -> FeatureKey:
    return FeatureKey.for_scale("dataset", method, it, descriptor, params, options)


def test_original_features_are_shared_by_every_method() -> None:
    assert key(Method.PM, 0) == key(Method.NL, 0)
    assert key(Method.PM, 1) != key(Method.NL, 1)


def test_original_features_ignore_diffusion_parameters() -> None:
    other = DiffusionParams(kappa=0.5)
    assert key(it=0, params=other) == key(it=0)
    assert key(it=2, params=other) != key(it=2)


def test_descriptor_options_only_affect_their_descriptor() -> None:
    wide = DescriptorOptions(ltp_k=9)
    ltp, lbp = Descriptor.LTP, Descriptor.LBP
    assert key(descriptor=ltp, options=wide) != key(descriptor=ltp)
    assert key(descriptor=lbp, options=wide) == key(descriptor=lbp)
    median = DescriptorOptions(cslbp_median=True)
    assert key(descriptor=Descriptor.CSLBP, options=median) != key(
        descriptor=Descriptor.CSLBP
    )


def test_stored_rows_load_back() -> None:
    rows = np.random.default_rng(0).random((3, 10))
    with open_temp_dir() as folder:
        cache = FeatureCache(folder)
        assert not cache.has(key(), 3)
        cache.store(key(), rows)
        assert cache.has(key(), 3)
        assert np.array_equal(cache.load(key(), 3), rows)
        assert cache.sidecar_for(key()).exists()


def test_corrupted_entries_are_recomputed() -> None:
    with open_temp_dir() as folder:
        cache = FeatureCache(folder)
        cache.path_for(key()).write_bytes(b"definitely not numpy")
        with pytest.warns(UserWarning, match="Corrupted"):
            assert cache.load(key(), 3) is None


def test_entries_of_the_wrong_shape_are_recomputed() -> None:
    with open_temp_dir() as folder:
        cache = FeatureCache(folder)
        cache.store(key(), np.zeros((4, 10)))
        with pytest.warns(UserWarning, match="shape"):
            assert not cache.has(key(), 3)


def test_non_finite_entries_are_recomputed() -> None:
    rows = np.zeros((2, 10))
    rows[1, 3] = np.nan
    with open_temp_dir() as folder:
        cache = FeatureCache(folder)
        cache.store(key(), rows)
        with pytest.warns(UserWarning, match="non-finite"):
            assert cache.load(key(), 2) is None


def test_unusable_entries_are_discarded() -> None:
    rows = np.zeros((2, 10))
    rows[0, 0] = np.inf
    with open_temp_dir() as folder:
        cache = FeatureCache(folder)
        cache.store(key(), rows)
        with pytest.warns(UserWarning, match="non-finite"):
            assert not cache.has(key(), 2)
        assert not cache.path_for(key()).exists()
        assert not cache.sidecar_for(key()).exists()
        assert cache.load(key(), 2) is None
