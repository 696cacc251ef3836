"""Exact arithmetic for CYBE solutions, Drinfeld doubles and Rota-Baxter operators."""

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    BilinearForm,
    ad_matrix,
    check_anticommutative,
    check_form,
    check_jacobi,
    check_malcev,
    ideal_closure,
    is_simple,
    jacobian,
    multiply,
    trace_form,
)
from .double import (
    DoubleAlgebra,
    DoubleDecomposition,
    build_double,
    decompose,
    derived_rb,
    form_q,
    omega_form,
)
from .exactlinalg import InputError, Matrix, PreconditionError, kernel_basis, rank, solve_linear
from .rotabaxter import LinearOperator, RBReport, companion, from_r, infer_weight, rb_defect, weight_scaling
from .yangbaxter import Tensor2, Tensor3, comultiplication, cybe_residual, invariance_defect, is_skew, symmetric_part, tau

__version__ = "0.1.0"
