"""Multiscale stacks : the sequence of images obtained by iterating one
diffusion method on a source image"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Tuple

import simplejson as json

from texdiff.errors import ParameterError
from texdiff.formats import DUMPERS, Format
from texdiff.formats.dump_tools import FormatParameters, FrameNameFormat
from texdiff.image import Image
from texdiff.version import __version__

from .fractional import nl_step
from .gaussian import gaussian_blur, heat_equation_time
from .params import DiffusionParams
from .perona_malik import fbr_step, pm_step


class Method(str, Enum):
    GAUSSIAN = "gaussian"
    PM = "pm"
    FBR = "fbr"
    NL = "nl"


Step = Callable[[Image, DiffusionParams], Image]

STEPS: Dict[Method, Step] = {
    Method.PM: pm_step,
    Method.FBR: fbr_step,
    Method.NL: nl_step,
}


def sigma_at(it: int, params: DiffusionParams) -> float:
    return params.sigma_step * it


def advance(
    method: Method,
    source: Image,
    previous: Image,
    it: int,
    params: DiffusionParams,
) -> Image:
    """Scale number it, given the source image and the scale at it - 1.
    Gaussian scales are computed from the source directly"""
    if method == Method.GAUSSIAN:
        return gaussian_blur(source, sigma_at(it, params))
    return STEPS[method](previous, params)


def iter_scales(
    image: Image, method: Method, n_scales: int, params: DiffusionParams
) -> Iterator[Tuple[int, Image]]:
    """Yields (it, scale) for it = 1 .. n_scales without holding the whole
    stack in memory"""
    if n_scales < 1:
        raise ParameterError(f"n_scales must be at least 1, got {n_scales}")

    current = image
    for it in range(1, n_scales + 1):
        current = advance(method, image, current, it, params)
        yield it, current


@dataclass(frozen=True)
class ScaleStack:
    """scales[it - 1] holds the image at iteration it"""

    method: Method
    scales: Tuple[Image, ...]
    params: DiffusionParams

    def __len__(self) -> int:
        return len(self.scales)

    def at(self, it: int) -> Image:
        if not 1 <= it <= len(self.scales):
            raise IndexError(f"Iteration {it} out of [1, {len(self.scales)}]")
        return self.scales[it - 1]

    def frame_info(self, it: int) -> Dict[str, Any]:
        info: Dict[str, Any] = {"it": it}
        if self.method == Method.GAUSSIAN:
            sigma = sigma_at(it, self.params)
            info.update(sigma=sigma, t=heat_equation_time(sigma))
        else:
            info.update(t=it * self.params.dt)
        return info


def diffuse(
    image: Image, method: Method, n_scales: int, params: DiffusionParams
) -> ScaleStack:
    scales = tuple(scale for _, scale in iter_scales(image, method, n_scales, params))
    return ScaleStack(method=method, scales=scales, params=params)


def dump_stack(
    stack: ScaleStack,
    folder: Path,
    stem: str,
    template: str = "{stem}_{method}_{it}.pgm",
) -> Dict[Path, bytes]:
    """PGM frames (rescaled to 8 bits, for inspection only) plus a json
    manifest listing the parameters"""
    dumper = DUMPERS[Format.PGM]
    name_format = FrameNameFormat(folder, template)
    files: Dict[Path, bytes] = {}
    frames: List[Dict[str, Any]] = []
    for it, scale in enumerate(stack.scales, start=1):
        path = name_format.path_for(
            FormatParameters(stem=stem, method=stack.method.value, it=it)
        )
        files.update(dumper(scale, path))
        frames.append({"file": path.name, **stack.frame_info(it)})

    manifest = {
        "texdiff": __version__,
        "source": stem,
        "method": stack.method.value,
        "n_scales": len(stack),
        "params": stack.params.dump(),
        "frames": frames,
    }
    manifest_bytes = json.dumps(manifest, indent=2, sort_keys=True).encode("utf-8")
    files[folder / f"{stem}_{stack.method.value}_manifest.json"] = manifest_bytes
    return files
