"""
Hypothesis strategies to generate images, quantized images and datasets
"""

from typing import Optional

import hypothesis.strategies as st
import numpy as np
from hypothesis.extra.numpy import arrays

from texdiff.descriptors import QuantizedImage
from texdiff.diffusion import DiffusionParams, EdgeStopping
from texdiff.image import Dataset, Image, LabeledImage


@st.composite
def image(
    draw: st.DrawFn,
    min_side: int = 1,
    max_side: int = 8,
    height: Optional[int] = None,
    width: Optional[int] = None,
) -> Image:
    """Images with intensities in [0, 1]"""
    if height is None:
        height = draw(st.integers(min_value=min_side, max_value=max_side))
    if width is None:
        width = draw(st.integers(min_value=min_side, max_value=max_side))
    data = draw(
        arrays(
            np.float64,
            (height, width),
            elements=st.floats(min_value=0, max_value=1, allow_nan=False),
        )
    )
    return Image(data)


@st.composite
def quantized_image(
    draw: st.DrawFn,
    min_side: int = 1,
    max_side: int = 8,
    max_level: int = 255,
) -> QuantizedImage:
    height = draw(st.integers(min_value=min_side, max_value=max_side))
    width = draw(st.integers(min_value=min_side, max_value=max_side))
    levels = draw(
        arrays(
            np.int64,
            (height, width),
            elements=st.integers(min_value=0, max_value=max_level),
        )
    )
    return QuantizedImage(levels)


@st.composite
def diffusion_params(draw: st.DrawFn) -> DiffusionParams:
    return DiffusionParams(
        kappa=draw(st.floats(min_value=0.05, max_value=2)),
        delta=draw(st.floats(min_value=0, max_value=0.5)),
        p=draw(st.floats(min_value=1.05, max_value=2)),
        epsilon=draw(st.floats(min_value=0.05, max_value=0.95)),
        dt=draw(st.floats(min_value=0.01, max_value=0.25)),
        edge_stopping=draw(st.sampled_from(EdgeStopping)),
    )


@st.composite
def dataset(
    draw: st.DrawFn,
    min_classes: int = 2,
    max_classes: int = 4,
    folds: int = 2,
    max_per_class: int = 5,
    side: int = 6,
) -> Dataset:
    """Small datasets of random images, every class has at least as many
    images as there are folds"""
    class_count = draw(st.integers(min_value=min_classes, max_value=max_classes))
    items = []
    for class_id in range(class_count):
        size = draw(st.integers(min_value=folds, max_value=max(folds, max_per_class)))
        for index in range(size):
            items.append(
                LabeledImage(
                    image=draw(image(height=side, width=side)),
                    class_id=class_id,
                    source_path=f"class_{class_id}/{index:03}.pgm",
                )
            )
    items.sort(key=lambda i: i.source_path)
    seed = draw(st.integers(min_value=0, max_value=2 ** 32 - 1))
    return Dataset.from_items(
        items,
        class_names=[f"class_{c}" for c in range(class_count)],
        folds=folds,
        seed=seed,
    )
