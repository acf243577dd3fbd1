from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from texdiff.image import FloatArray

from .names import Descriptor

VECTOR_LENGTHS = {
    Descriptor.LBP: 256,
    Descriptor.LBPV: 10,
    Descriptor.CLBP: 256 + 256 + 2,
    Descriptor.LBPHF: 38,
    Descriptor.LTP: 512,
    Descriptor.CSLBP: 256,
}


@dataclass(frozen=True, eq=False)
class FeatureVector:
    """A histogram, or a concatenation of histograms (blocks) describing one
    image. Blocks are normalized independently"""

    values: FloatArray
    descriptor: Descriptor
    blocks: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64, copy=True)
        expected = VECTOR_LENGTHS[self.descriptor]
        if values.shape != (expected,):
            raise ValueError(
                f"{self.descriptor.value} vectors have {expected} values, "
                f"got shape {values.shape}"
            )
        if sum(self.blocks) != expected:
            raise ValueError(f"Blocks {self.blocks} don't add up to {expected}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def length(self) -> int:
        return len(self.values)

    def iter_blocks(self) -> Tuple[FloatArray, ...]:
        bounds = np.cumsum(self.blocks)[:-1]
        return tuple(np.split(self.values, bounds))

    def l1_normalized(self) -> FeatureVector:
        """Each block divided by its L1 norm, all-zero blocks are kept as is"""
        normalized = []
        for block in self.iter_blocks():
            norm = np.abs(block).sum()
            normalized.append(block / norm if norm > 0 else block)
        return FeatureVector(np.concatenate(normalized), self.descriptor, self.blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureVector):
            return NotImplemented
        return (
            self.descriptor == other.descriptor
            and self.blocks == other.blocks
            and bool(np.array_equal(self.values, other.values))
        )

    __hash__ = object.__hash__
