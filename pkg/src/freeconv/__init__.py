"""Exact finite free convolution, certified real roots and root-inequality verifiers."""

from .errors import FreeConvError
from .poly import (
    RatPoly,
    apply_U_alpha,
    boxplus,
    derivative,
    from_roots,
    scale_arg,
    shift,
    squarefree_part,
    u_alpha,
)
from .roots import (
    DEFAULT_EPS,
    RealAlgebraic,
    RootEnclosure,
    RootVector,
    Trilean,
    cauchy_inverse,
    interlaces,
    is_real_rooted,
    maxroot,
    padded_root_vector,
    root_vector,
    sturm_count,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EPS",
    "FreeConvError",
    "RatPoly",
    "RealAlgebraic",
    "RootEnclosure",
    "RootVector",
    "Trilean",
    "apply_U_alpha",
    "boxplus",
    "cauchy_inverse",
    "derivative",
    "from_roots",
    "interlaces",
    "is_real_rooted",
    "maxroot",
    "padded_root_vector",
    "root_vector",
    "scale_arg",
    "shift",
    "squarefree_part",
    "sturm_count",
    "u_alpha",
]
