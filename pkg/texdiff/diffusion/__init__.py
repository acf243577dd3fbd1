"""
Diffusion methods used to build multiscale stacks : Gaussian (isotropic),
Perona-Malik, forward-backward regularized Perona-Malik and nonlocal
(fractional gradient) diffusion
"""
from .fractional import SpectralMultiplier, fractional_gradient_magnitude, nl_step
from .gaussian import gaussian_blur, gaussian_kernel
from .params import DEFAULT_PARAMS, DiffusionParams, EdgeStopping
from .perona_malik import fbr_step, pm_step
from .stack import Method, ScaleStack, advance, diffuse, dump_stack, iter_scales
from .stencil import gradient_magnitude, total_variation
