from .kernels import (
    phase,
    gaussian_weight,
    kernel_x,
    kernel_y,
    kernel_x2,
    kernel_y2,
    kernel_vx,
    kernel_vy,
    kernel,
    KERNELS,
    velocity_square,
    free_baseline,
)
from .radial import Monomial, Radial, Term, radial_terms, radial_value, evaluate_terms
from .symmetric import symmetric_kernel
