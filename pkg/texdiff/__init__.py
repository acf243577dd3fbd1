"""Diffusion scale-spaces as a preprocessing step for texture classification"""

from .version import __version__
