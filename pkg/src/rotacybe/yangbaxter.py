"""Tensors over an algebra and the classical Yang-Baxter equation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraSpec
from .exactlinalg import ZERO, InputError, Matrix, format_scalar, scalar


@dataclass(frozen=True)
class Tensor2:
    """sum_{i,j} coeff[i][j] e_i (x) e_j"""

    algebra: AlgebraSpec
    coeff: Matrix

    def __post_init__(self):
        n = self.algebra.dim
        if self.coeff.shape != (n, n):
            raise InputError("tensor grid does not match algebra dimension")

    @classmethod
    def zero(cls, alg: AlgebraSpec) -> "Tensor2":
        return cls(alg, Matrix.zeros(alg.dim, alg.dim))

    @classmethod
    def from_terms(cls, alg: AlgebraSpec, terms) -> "Tensor2":
        """``terms`` is an iterable of ``(left_label, right_label, coeff)``."""
        n = alg.dim
        grid = [[ZERO] * n for _ in range(n)]
        for left, right, c in terms:
            grid[alg.index(left)][alg.index(right)] += scalar(c)
        return cls(alg, Matrix(grid, n))

    @classmethod
    def outer(cls, alg: AlgebraSpec, u: Sequence, v: Sequence) -> "Tensor2":
        return cls(alg, Matrix([[a * b for b in v] for a in u], alg.dim))

    def __getitem__(self, idx) -> Fraction:
        return self.coeff[idx]

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.algebra, self.coeff + other.coeff)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.algebra, self.coeff - other.coeff)

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.algebra, -self.coeff)

    def scale(self, c) -> "Tensor2":
        return Tensor2(self.algebra, self.coeff.scale(c))

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def terms(self):
        n = self.algebra.dim
        for i in range(n):
            for j in range(n):
                c = self.coeff[i, j]
                if c:
                    yield i, j, c

    def __str__(self):
        b = self.algebra.basis
        parts = [f"{format_scalar(c)}*{b[i]}@{b[j]}" for i, j, c in self.terms()]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class Tensor3:
    algebra: AlgebraSpec
    coeff: tuple  # n x n x n nested tuples

    def is_zero(self) -> bool:
        return not any(c for plane in self.coeff for row in plane for c in row)

    def max_abs(self) -> Fraction:
        return max((abs(c) for plane in self.coeff for row in plane for c in row), default=ZERO)

    def nonzero_terms(self):
        for i, plane in enumerate(self.coeff):
            for j, row in enumerate(plane):
                for k, c in enumerate(row):
                    if c:
                        yield i, j, k, c


def _tensor3(alg: AlgebraSpec, grid) -> Tensor3:
    return Tensor3(alg, tuple(tuple(tuple(row) for row in plane) for plane in grid))


def tau(r: Tensor2) -> Tensor2:
    return Tensor2(r.algebra, r.coeff.transpose())


def symmetric_part(r: Tensor2) -> Tensor2:
    """r + tau(r) (no factor 1/2)."""
    return r + tau(r)


def is_skew(r: Tensor2) -> bool:
    return symmetric_part(r).is_zero()


def cybe_residual(r: Tensor2) -> Tensor3:
    """sum [a_i,a_j] b_i b_j - a_i [a_j,b_i] b_j + a_i a_j [b_i,b_j]."""
    alg = r.algebra
    n = alg.dim
    grid = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    terms = list(r.terms())
    tab = alg._sparse
    for p, q, c1 in terms:
        for s, t, c2 in terms:
            c = c1 * c2
            for k, v in tab[p][s]:          # e_p e_s (x) e_q (x) e_t
                grid[k][q][t] += c * v
            for k, v in tab[s][q]:          # e_p (x) e_s e_q (x) e_t
                grid[p][k][t] -= c * v
            for k, v in tab[q][t]:          # e_p (x) e_s (x) e_q e_t
                grid[p][s][k] += c * v
    return _tensor3(alg, grid)


# Slotwise products in (F1 + A)^{(x)3}; slot index -1 is the formal unit.
_UNIT = -1


def _embed(r: Tensor2, slots: tuple) -> dict:
    out = {}
    for i, j, c in r.terms():
        key = [_UNIT, _UNIT, _UNIT]
        key[slots[0]] = i
        key[slots[1]] = j
        out[tuple(key)] = out.get(tuple(key), ZERO) + c
    return out


def _slot_product(alg: AlgebraSpec, u: dict, v: dict) -> dict:
    out = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            parts = [{}] * 3
            for s in range(3):
                a, b = ku[s], kv[s]
                if a == _UNIT:
                    parts[s] = {b: Fraction(1)}
                elif b == _UNIT:
                    parts[s] = {a: Fraction(1)}
                else:
                    parts[s] = {k: c for k, c in enumerate(alg.table[a][b]) if c}
            c = cu * cv
            for i, ci in parts[0].items():
                for j, cj in parts[1].items():
                    for k, ck in parts[2].items():
                        key = (i, j, k)
                        out[key] = out.get(key, ZERO) + c * ci * cj * ck
    return out


def cybe_residual_slotwise(r: Tensor2) -> Tensor3:
    """r12 r13 + r13 r23 - r23 r12, multiplied slot by slot."""
    alg = r.algebra
    n = alg.dim
    r12, r13, r23 = _embed(r, (0, 1)), _embed(r, (0, 2)), _embed(r, (1, 2))
    grid = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for sign, (u, v) in ((1, (r12, r13)), (1, (r13, r23)), (-1, (r23, r12))):
        for (i, j, k), c in _slot_product(alg, u, v).items():
            if _UNIT in (i, j, k):
                raise InputError("unit leg survived a slotwise product")
            grid[i][j][k] += sign * c
    return _tensor3(alg, grid)


def comultiplication(r: Tensor2, a: Sequence) -> Tensor2:
    """Delta_r(a) = sum a_i a (x) b_i - a_i (x) a b_i."""
    alg = r.algebra
    n = alg.dim
    grid = [[ZERO] * n for _ in range(n)]
    for i, j, c in r.terms():
        e_i = alg.basis_vector(i)
        e_j = alg.basis_vector(j)
        left = alg.mul(e_i, a)
        for k, v in enumerate(left):
            if v:
                grid[k][j] += c * v
        right = alg.mul(a, e_j)
        for k, v in enumerate(right):
            if v:
                grid[i][k] -= c * v
    return Tensor2(alg, Matrix(grid, n))


def invariance_defect(t: Tensor2) -> list:
    """Delta_t(e_a) for every basis element; all zero iff t is invariant."""
    alg = t.algebra
    return [comultiplication(t, alg.basis_vector(a)) for a in range(alg.dim)]


def is_invariant(t: Tensor2) -> bool:
    return all(d.is_zero() for d in invariance_defect(t))
