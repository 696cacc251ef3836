"""Rota-Baxter operators: construction from r, verification, weights.

R has weight lam when R(x)R(y) = R(R(x)y + xR(y) + lam xy) for all x, y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .algebra import AlgebraSpec, BilinearForm
from .exactlinalg import ZERO, InputError, Matrix, PreconditionError, format_scalar, scalar, vadd, vscale, vsub
from .yangbaxter import Tensor2, cybe_residual, is_skew

ANY = "any"


@dataclass(frozen=True)
class LinearOperator:
    """Operator on an algebra; column j of ``matrix`` is the image of e_j."""

    algebra: AlgebraSpec
    matrix: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.matrix.shape != (n, n):
            raise InputError("operator matrix does not match algebra dimension")

    def __call__(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.algebra, self.matrix + other.matrix)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(self.algebra, self.matrix - other.matrix)

    def scale(self, c) -> "LinearOperator":
        return LinearOperator(self.algebra, self.matrix.scale(c))

    @classmethod
    def identity(cls, alg: AlgebraSpec) -> "LinearOperator":
        return cls(alg, Matrix.identity(alg.dim))

    def image(self, label: str) -> tuple:
        return self.matrix.column(self.algebra.index(label))


Weight = Union[Fraction, str, None]


@dataclass
class RBReport:
    operator: LinearOperator
    weight: Weight  # Fraction, ANY, or None when no weight fits
    defects: list = field(default_factory=list)

    @property
    def weight_str(self) -> str:
        if self.weight is None:
            return "none"
        if self.weight == ANY:
            return ANY
        return format_scalar(self.weight)

    def as_dict(self) -> dict:
        alg = self.operator.algebra
        return {
            "weight": self.weight_str,
            "defects": [
                {"pair": [alg.basis[i], alg.basis[j]], "residual": alg.format(res)}
                for (i, j), res in self.defects
            ],
        }


def from_r(r: Tensor2, form: BilinearForm) -> LinearOperator:
    """R(e_k) = sum_{i,j} r[i][j] omega(e_i, e_k) e_j."""
    if form.algebra != r.algebra:
        raise InputError("form and tensor live on different algebras")
    g = form.gram
    # matrix[j][k] = sum_i r[i][j] g[i][k], i.e. r^T g
    return LinearOperator(r.algebra, r.coeff.transpose() @ g)


def _split_defect(op: LinearOperator, x: Sequence, y: Sequence) -> tuple:
    """(R(x)R(y) - R(R(x)y + xR(y)), R(xy)): the identity reads first - lam*second = 0."""
    alg = op.algebra
    rx, ry = op(x), op(y)
    lhs = alg.mul(rx, ry)
    inner = vadd(alg.mul(rx, y), alg.mul(x, ry))
    return vsub(lhs, op(inner)), op(alg.mul(x, y))


def rb_defect(op: LinearOperator, lam, x: Sequence, y: Sequence) -> tuple:
    """R(x)R(y) - R(R(x)y + xR(y) + lam xy)."""
    free, coeff = _split_defect(op, x, y)
    return vsub(free, vscale(scalar(lam), coeff))


def rb_defect_table(op: LinearOperator, lam) -> dict:
    alg = op.algebra
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(n)]
    return {(i, j): rb_defect(op, lam, e[i], e[j]) for i in range(n) for j in range(n)}


def is_rota_baxter(op: LinearOperator, lam) -> bool:
    return all(not any(v) for v in rb_defect_table(op, lam).values())


def infer_weight(op: LinearOperator) -> RBReport:
    """Solve the identity for lam pair by pair; it is affine in lam."""
    alg = op.algebra
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(n)]
    parts = {(i, j): _split_defect(op, e[i], e[j]) for i in range(n) for j in range(n)}
    lam = None
    for free, coeff in parts.values():
        k = next((k for k, c in enumerate(coeff) if c), None)
        if k is not None:
            lam = free[k] / coeff[k]
            break
    if lam is None:
        defects = [(p, free) for p, (free, _) in parts.items() if any(free)]
        return RBReport(op, None if defects else ANY, defects)
    defects = []
    for p, (free, coeff) in parts.items():
        res = vsub(free, vscale(lam, coeff))
        if any(res):
            defects.append((p, res))
    return RBReport(op, None if defects else lam, defects)


def companion(op: LinearOperator, lam) -> LinearOperator:
    """-lam id - R, a Rota-Baxter operator of the same weight."""
    lam = scalar(lam)
    return LinearOperator(op.algebra, Matrix.identity(op.algebra.dim).scale(-lam) - op.matrix)


def weight_scaling(op: LinearOperator, lam, c) -> tuple:
    c = scalar(c)
    return op.scale(c), c * scalar(lam)


def proportionality(a: LinearOperator, b: LinearOperator) -> Optional[Fraction]:
    """The unique c with a = c*b, or None (b must be non-zero)."""
    pairs = [(x, y) for ra, rb in zip(a.matrix.entries, b.matrix.entries) for x, y in zip(ra, rb)]
    ref = next(((x, y) for x, y in pairs if y), None)
    if ref is None:
        return None
    c = ref[0] / ref[1]
    return c if all(x == c * y for x, y in pairs) else None


def weight0_from_skew(r: Tensor2, form: BilinearForm) -> RBReport:
    if not is_skew(r):
        raise PreconditionError("r is not skew-symmetric")
    res = cybe_residual(r)
    if not res.is_zero():
        raise PreconditionError("r does not solve the classical Yang-Baxter equation", residual=res)
    report = infer_weight(from_r(r, form))
    if report.weight not in (ANY, ZERO):
        raise AssertionError(f"skew solution produced weight {report.weight_str}")
    return report
