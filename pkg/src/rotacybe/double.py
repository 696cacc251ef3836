"""The Drinfeld double of (A, Delta_r) and the operators it induces.

Coordinates on the double are ``(a_1..a_n, f_1..f_n)``: the first n basis
vectors are those of A, the last n the dual basis of A*.  Maps between A
and A* are matrices whose column j is the image of the j-th basis vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraSpec, BilinearForm, Report, check_form, is_simple, subalgebra
from .exactlinalg import (
    EchelonBasis,
    ZERO,
    InputError,
    Matrix,
    PreconditionError,
    dot,
    kernel_basis,
    rank,
    solve_linear,
    unit_vector,
    vsub,
)
from .rotabaxter import LinearOperator, from_r, rb_defect_table
from .yangbaxter import Tensor2, comultiplication, cybe_residual, invariance_defect, is_skew, symmetric_part


class DecompositionError(ValueError):
    """The double does not split as expected for this r."""


@dataclass(frozen=True)
class Covector:
    algebra: AlgebraSpec
    coords: tuple

    def __call__(self, a: Sequence) -> Fraction:
        return dot(self.coords, a)


def _coproducts(r: Tensor2) -> list:
    return [comultiplication(r, r.algebra.basis_vector(k)) for k in range(r.algebra.dim)]


def dual_multiply(r: Tensor2, f: Sequence, g: Sequence) -> tuple:
    """(fg)(e_k) = sum f(a_(1)) g(a_(2)) over Delta_r(e_k)."""
    return tuple(
        sum((d[p, q] * f[p] * g[q] for p, q, _ in d.terms()), ZERO) for d in _coproducts(r)
    )


def act_module(r: Tensor2, f: Sequence, a: Sequence) -> tuple:
    """Return (f -> a, a <- f): sum a_(1) f(a_(2)) and sum f(a_(1)) a_(2)."""
    d = comultiplication(r, a)
    n = r.algebra.dim
    left = [ZERO] * n
    right = [ZERO] * n
    for p, q, c in d.terms():
        left[p] += c * f[q]
        right[q] += c * f[p]
    return tuple(left), tuple(right)


def act_dual(alg: AlgebraSpec, f: Sequence, a: Sequence) -> tuple:
    """Return (f <- a, a -> f) with (f <- a)(b) = f(ab), (a -> f)(b) = f(ba)."""
    n = alg.dim
    e = [alg.basis_vector(b) for b in range(n)]
    return (tuple(dot(f, alg.mul(a, e[b])) for b in range(n)),
            tuple(dot(f, alg.mul(e[b], a)) for b in range(n)))


def check_hypotheses(r: Tensor2) -> list:
    """Failing hypotheses as (name, residual) pairs; empty when r is admissible."""
    failures = []
    res = cybe_residual(r)
    if not res.is_zero():
        failures.append(("cybe", res))
    defect = invariance_defect(symmetric_part(r))
    if any(not d.is_zero() for d in defect):
        failures.append(("invariance", defect))
    return failures


@dataclass(frozen=True)
class DoubleAlgebra:
    base: AlgebraSpec
    r: Tensor2
    spec: AlgebraSpec
    qform: BilinearForm

    @property
    def n(self) -> int:
        return self.base.dim

    def embed_base(self, a: Sequence) -> tuple:
        return tuple(a) + (ZERO,) * self.n

    def embed_dual(self, f: Sequence) -> tuple:
        return (ZERO,) * self.n + tuple(f)


def build_double(base: AlgebraSpec, r: Tensor2, check: bool = True) -> DoubleAlgebra:
    """Materialize D(A) = A + A* as a 2n-dimensional AlgebraSpec.

    (a+f)(b+g) = (ab + f->b + a<-g) + (fg + f<-b + a->g)
    """
    if r.algebra != base:
        raise InputError("tensor is not over the given algebra")
    if check:
        failures = check_hypotheses(r)
        if failures:
            names = ", ".join(name for name, _ in failures)
            raise PreconditionError(f"r fails: {names}", residual=failures)
    n = base.dim
    deltas = _coproducts(r)
    table = [[None] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            # e_i e_j
            table[i][j] = base.table[i][j] + (ZERO,) * n
            # e_i f_j: (e_i <- f_j) + (e_i -> f_j); (e_i -> f_j)(e_c) = f_j(e_c e_i)
            a_part = tuple(deltas[i][j, q] for q in range(n))
            f_part = tuple(base.table[c][i][j] for c in range(n))
            table[i][n + j] = a_part + f_part
            # f_i e_j: (f_i -> e_j) + (f_i <- e_j); (f_i <- e_j)(e_c) = f_i(e_j e_c)
            a_part = tuple(deltas[j][p, i] for p in range(n))
            f_part = tuple(base.table[j][c][i] for c in range(n))
            table[n + i][j] = a_part + f_part
            # f_i f_j
            table[n + i][n + j] = (ZERO,) * n + tuple(deltas[k][i, j] for k in range(n))
    labels = list(base.basis) + [f"{b}*" for b in base.basis]
    spec = AlgebraSpec(f"D({base.name})", labels, table)
    return DoubleAlgebra(base, r, spec, BilinearForm(spec, q_gram(n)))


def q_gram(n: int) -> Matrix:
    """Q(a+f, b+g) = g(a) + f(b)."""
    rows = []
    for i in range(2 * n):
        j = i + n if i < n else i - n
        rows.append(unit_vector(2 * n, j))
    return Matrix(rows, 2 * n)


def form_q(d: DoubleAlgebra, u: Sequence, v: Sequence) -> Fraction:
    n = d.n
    return dot(u[:n], v[n:]) + dot(u[n:], v[:n])


@dataclass(frozen=True)
class DoubleDecomposition:
    double: DoubleAlgebra
    ideal1: list
    ideal2: list
    phi1: Matrix  # A* -> A, f -> -sum f(a_i) b_i; ideal1 = {f - phi1(f)}
    phi2: Matrix  # A* -> A, read off ideal2 = {f - phi2(f)}
    psi: Matrix   # A -> A*, a = -phi1(psi a) + phi2(psi a)

    @property
    def base(self) -> AlgebraSpec:
        return self.double.base

    @property
    def r1(self) -> Tensor2:
        """The tensor with phi1(f) = sum f(a_i) b_i, i.e. -r."""
        return Tensor2(self.base, self.phi1.transpose())


def phi1_matrix(r: Tensor2) -> Matrix:
    """f -> -sum f(a_i) b_i; column p is the image of the p-th dual basis vector."""
    return -r.coeff.transpose()


def phi2_formula(r: Tensor2) -> Matrix:
    """f -> sum f(b_i) a_i."""
    return r.coeff


def _is_ideal(alg: AlgebraSpec, basis: list) -> bool:
    span = EchelonBasis(alg.dim)
    for v in basis:
        span.add(v)
    for v in basis:
        for i in range(alg.dim):
            e = alg.basis_vector(i)
            if alg.mul(e, v) not in span or alg.mul(v, e) not in span:
                return False
    return True


def decompose(d: DoubleAlgebra) -> DoubleDecomposition:
    """Split D into the graph ideal of phi1 and its Q-orthogonal complement."""
    r = d.r
    n = d.n
    if is_skew(r):
        raise PreconditionError("r is skew-symmetric: its symmetric part vanishes")
    alg = d.spec
    phi1 = phi1_matrix(r)
    ideal1 = [vsub((ZERO,) * n, phi1.column(p)) + unit_vector(n, p) for p in range(n)]
    if not _is_ideal(alg, ideal1):
        raise DecompositionError("graph of phi1 is not an ideal of the double")
    # ideal2 = {v : Q(u, v) = 0 for u in ideal1}
    constraints = Matrix([d.qform.gram.apply(u) for u in ideal1], 2 * n)
    ideal2 = kernel_basis(constraints)
    if rank(Matrix(ideal1 + ideal2, 2 * n)) != 2 * n:
        raise DecompositionError("ideal1 meets its orthogonal complement")
    if not _is_ideal(alg, ideal2):
        raise DecompositionError("orthogonal complement of ideal1 is not an ideal")
    # ideal2 elements are (-phi2(f), f); invert the dual block to read phi2 off
    dual_block = Matrix.from_columns([v[n:] for v in ideal2], rows=n)
    base_block = Matrix.from_columns([v[:n] for v in ideal2], rows=n)
    if rank(dual_block) != n:
        raise DecompositionError("ideal2 meets the embedded algebra")
    cols = []
    for p in range(n):
        x = solve_linear(dual_block, unit_vector(n, p))
        cols.append(tuple(-c for c in base_block.apply(x)))
    phi2 = Matrix.from_columns(cols, rows=n)
    diff = phi2 - phi1
    psi_cols = [solve_linear(diff, unit_vector(n, k)) for k in range(n)]
    if any(c is None for c in psi_cols) or rank(diff) != n:
        raise DecompositionError("psi is not invertible")
    psi = Matrix.from_columns(psi_cols, rows=n)
    return DoubleDecomposition(d, ideal1, ideal2, phi1, phi2, psi)


def derived_rb(dec: DoubleDecomposition) -> tuple:
    """(phi1 o psi, phi2 o psi): weights 1 and -1."""
    alg = dec.base
    return (LinearOperator(alg, dec.phi1 @ dec.psi), LinearOperator(alg, dec.phi2 @ dec.psi))


def omega_form(dec: DoubleDecomposition) -> BilinearForm:
    """omega(a, b) = Q(psi(a), b)."""
    return BilinearForm(dec.base, dec.psi.transpose())


def ideal_algebras(dec: DoubleDecomposition) -> tuple:
    alg = dec.double.spec
    n = dec.double.n
    return (subalgebra(alg, dec.ideal1, f"{alg.name}/L1", [f"l{i}" for i in range(n)]),
            subalgebra(alg, dec.ideal2, f"{alg.name}/L2", [f"m{i}" for i in range(n)]))


# Invariant checks over a computed decomposition.

def _psi(dec: DoubleDecomposition, a: Sequence) -> tuple:
    return dec.psi.apply(a)


def check_orthogonal(dec: DoubleDecomposition) -> Report:
    q = dec.double.qform
    bad = [(i, j) for i, u in enumerate(dec.ideal1) for j, v in enumerate(dec.ideal2) if q(u, v)]
    return Report("Q(ideal1, ideal2) = 0", not bad, bad)


def check_phi2_formula(dec: DoubleDecomposition) -> Report:
    ok = dec.phi2 == phi2_formula(dec.double.r)
    return Report("phi2(f) = sum f(b_i) a_i", ok, [] if ok else ["phi2 mismatch"])


def check_psi_intertwines(dec: DoubleDecomposition) -> Report:
    """psi(ab) = psi(a) <- b = a -> psi(b) on basis pairs."""
    alg = dec.base
    n = alg.dim
    bad = []
    for i in range(n):
        for j in range(n):
            a, b = alg.basis_vector(i), alg.basis_vector(j)
            lhs = _psi(dec, alg.mul(a, b))
            left_act, _ = act_dual(alg, _psi(dec, a), b)
            _, right_act = act_dual(alg, _psi(dec, b), a)
            if not (lhs == left_act == right_act):
                bad.append((alg.basis[i], alg.basis[j]))
    return Report("psi(ab) = psi(a)<-b = a->psi(b)", not bad, bad)


def check_phi_homomorphism(dec: DoubleDecomposition) -> Report:
    """phi(fg) = phi(f) phi(g) for phi1 and phi2 on dual basis pairs."""
    alg = dec.base
    r = dec.double.r
    n = alg.dim
    bad = []
    for name, phi in (("phi1", dec.phi1), ("phi2", dec.phi2)):
        for p in range(n):
            for q in range(n):
                f, g = unit_vector(n, p), unit_vector(n, q)
                lhs = phi.apply(dual_multiply(r, f, g))
                rhs = alg.mul(phi.apply(f), phi.apply(g))
                if lhs != rhs:
                    bad.append((name, p, q))
    return Report("phi(fg) = phi(f)phi(g)", not bad, bad)


def check_psi_product_verbatim(dec: DoubleDecomposition) -> Report:
    """psi(ab) = psi(a)psi(b) - phi1(psi a)->psi(b) - psi(a)<-phi1(psi b), as printed.

    Logged for information only; see check_psi_product for the form that holds.
    """
    return _psi_product(dec, dec.phi1, "psi(ab) product rule (verbatim)", sign=1)


def _psi_product(dec: DoubleDecomposition, phi: Matrix, name: str, sign: int) -> Report:
    alg = dec.base
    r = dec.double.r
    n = alg.dim
    bad = []
    for i in range(n):
        for j in range(n):
            a, b = alg.basis_vector(i), alg.basis_vector(j)
            fa, fb = _psi(dec, a), _psi(dec, b)
            prod = dual_multiply(r, fa, fb)
            _, t1 = act_dual(alg, fb, phi.apply(fa))
            t2, _ = act_dual(alg, fa, phi.apply(fb))
            rhs = tuple(sign * (p - x - y) for p, x, y in zip(prod, t1, t2))
            if _psi(dec, alg.mul(a, b)) != rhs:
                bad.append((alg.basis[i], alg.basis[j]))
    return Report(name, not bad, bad)


def check_rb_weights(dec: DoubleDecomposition) -> list:
    r1, q1 = derived_rb(dec)
    out = []
    for name, op, lam in (("R1 weight 1", r1, 1), ("Q1 weight -1", q1, -1)):
        bad = [(i, j) for (i, j), res in rb_defect_table(op, lam).items() if any(res)]
        out.append(Report(name, not bad, bad))
    n = dec.base.dim
    ok = (r1.matrix - q1.matrix) == -Matrix.identity(n)
    out.append(Report("R1 - Q1 = -id", ok, [] if ok else ["mismatch"]))
    return out


def check_omega(dec: DoubleDecomposition) -> list:
    omega = omega_form(dec)
    rep = check_form(omega)
    r1, _ = derived_rb(dec)
    recon = from_r(dec.r1, omega)
    return [
        Report("omega symmetric", rep.symmetric),
        Report("omega associative", rep.associative),
        Report("omega nondegenerate", rep.nondegenerate),
        Report("sum omega(a_i, a) b_i = phi1(psi(a))", recon.matrix == r1.matrix),
    ]


def invariant_reports(dec: DoubleDecomposition, simple_ideals: bool = True) -> list:
    reports = [
        check_orthogonal(dec),
        check_phi2_formula(dec),
        check_phi_homomorphism(dec),
        check_psi_intertwines(dec),
        Report("rank psi = n", rank(dec.psi) == dec.base.dim),
    ]
    reports += check_rb_weights(dec)
    reports += check_omega(dec)
    if simple_ideals:
        for k, sub in enumerate(ideal_algebras(dec), start=1):
            verdict = is_simple(sub)
            reports.append(Report(f"ideal{k} simple", verdict is True,
                                  detail="" if verdict is not None else "simple: unverified"))
    return reports
