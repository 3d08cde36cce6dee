"""Exact computations on finite near-vector spaces over twisted fields."""

from .errors import (
    ConstructionFailedError,
    DivisionByZeroError,
    HypothesisUnmetError,
    NearVecError,
    NonPrimeError,
    NotABasisError,
    NotCoprimeError,
    NotInQuasiKernelError,
    ReduciblePolynomialError,
    TooLargeError,
    ZeroVectorError,
)
from .finite_field import Field
from .space import (
    TwistedSpace,
    make_twisted_space,
    quasi_kernel_bruteforce,
    quasi_kernel_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "Field",
    "TwistedSpace",
    "make_twisted_space",
    "quasi_kernel_bruteforce",
    "quasi_kernel_closed_form",
    "NearVecError",
    "NonPrimeError",
    "ReduciblePolynomialError",
    "TooLargeError",
    "DivisionByZeroError",
    "NotCoprimeError",
    "NotInQuasiKernelError",
    "ZeroVectorError",
    "HypothesisUnmetError",
    "NotABasisError",
    "ConstructionFailedError",
    "__version__",
]
