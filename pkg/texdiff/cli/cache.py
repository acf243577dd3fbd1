"""On-disk cache of feature tables.

Each entry holds the feature rows of a whole dataset for one
(method, it, descriptor) combination, stored as <digest>.npy next to a json
sidecar describing the key. Entries are written atomically so concurrent runs
sharing a cache folder never read half-written files"""

from __future__ import annotations

import io
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import numpy as np
import simplejson as json

from texdiff.descriptors import Descriptor, DescriptorOptions
from texdiff.descriptors.vector import VECTOR_LENGTHS
from texdiff.diffusion import DiffusionParams, Method
from texdiff.image import FloatArray
from texdiff.utils import digest_json, write_atomically
from texdiff.version import __version__

# options that change the output of each descriptor
DESCRIPTOR_OPTION_FIELDS = {
    Descriptor.LTP: ("ltp_k",),
    Descriptor.CSLBP: ("cslbp_t", "cslbp_median"),
}


def relevant_options(
    descriptor: Descriptor, options: DescriptorOptions
) -> Dict[str, Any]:
    return {
        name: getattr(options, name)
        for name in DESCRIPTOR_OPTION_FIELDS.get(descriptor, ())
    }


@dataclass(frozen=True)
class FeatureKey:
    dataset: str
    # None for the original images, which don't depend on the method
    method: Optional[Method]
    it: int
    descriptor: Descriptor
    params: str

    @classmethod
    def for_scale(
        cls,
        dataset_digest: str,
        method: Method,
        it: int,
        descriptor: Descriptor,
        diffusion_params: DiffusionParams,
        options: DescriptorOptions,
    ) -> FeatureKey:
        params: Dict[str, Any] = {"descriptor": relevant_options(descriptor, options)}
        if it > 0:
            params["diffusion"] = diffusion_params.dump()
        return cls(
            dataset=dataset_digest,
            method=method if it > 0 else None,
            it=it,
            descriptor=descriptor,
            params=digest_json(params),
        )

    def describe(self) -> Dict[str, Any]:
        return {
            "dataset": self.dataset,
            "method": None if self.method is None else self.method.value,
            "it": self.it,
            "descriptor": self.descriptor.value,
            "params": self.params,
        }

    def digest(self) -> str:
        return digest_json(self.describe())


class FeatureCache:
    def __init__(self, folder: Path):
        self.folder = folder

    def path_for(self, key: FeatureKey) -> Path:
        return self.folder / f"{key.digest()}.npy"

    def sidecar_for(self, key: FeatureKey) -> Path:
        return self.folder / f"{key.digest()}.json"

    def expected_shape(self, key: FeatureKey, rows: int) -> Tuple[int, int]:
        return (rows, VECTOR_LENGTHS[key.descriptor])

    def has(self, key: FeatureKey, rows: int) -> bool:
        """Whether a usable entry exists, read through a memory map"""
        return self._read(key, rows, mmap=True) is not None

    def load(self, key: FeatureKey, rows: int) -> Optional[FloatArray]:
        """The cached rows, or None if the entry is missing or unusable"""
        return self._read(key, rows, mmap=False)

    def _read(self, key: FeatureKey, rows: int, mmap: bool) -> Optional[FloatArray]:
        """Unusable entries are deleted with a warning, so has() and load()
        always agree and the next computation replaces them"""
        path = self.path_for(key)
        if not path.exists():
            return None

        try:
            values = np.load(path, mmap_mode="r" if mmap else None, allow_pickle=False)
        except (OSError, ValueError, EOFError) as e:
            self.discard(key, f"Corrupted cache entry {path.name} : {e}")
            return None

        problem = self.check(values, self.expected_shape(key, rows))
        if problem is not None:
            del values
            self.discard(key, f"Cache entry {path.name} {problem}")
            return None

        return values if mmap else np.asarray(values)

    @staticmethod
    def check(values: np.ndarray, expected: Tuple[int, int]) -> Optional[str]:
        if values.shape != expected or values.dtype != np.float64:
            return (
                f"has shape {values.shape} and dtype {values.dtype} instead of "
                f"{expected} float64"
            )
        if not np.all(np.isfinite(values)):
            return "holds non-finite values"
        return None

    def discard(self, key: FeatureKey, reason: str) -> None:
        warnings.warn(f"{reason}, it will be recomputed")
        self.path_for(key).unlink(missing_ok=True)
        self.sidecar_for(key).unlink(missing_ok=True)

    def store(self, key: FeatureKey, values: FloatArray) -> None:
        buffer = io.BytesIO()
        np.save(buffer, np.asarray(values, dtype=np.float64), allow_pickle=False)
        write_atomically(self.path_for(key), buffer.getvalue())
        sidecar = {
            "texdiff": __version__,
            "key": key.describe(),
            "shape": list(values.shape),
        }
        write_atomically(
            self.sidecar_for(key),
            json.dumps(sidecar, indent=2, sort_keys=True).encode("utf-8"),
        )
