"""Finite-dimensional algebras given by structure constants.

An :class:`AlgebraSpec` stores the full table ``c[i][j][k]`` with
``e_i e_j = sum_k c[i][j][k] e_k``.  Elements are plain coordinate tuples
of Fractions; :class:`AlgebraElement` wraps one together with its algebra
for the places where carrying the algebra around is convenient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional, Sequence

from .exactlinalg import (
    EchelonBasis,
    ONE,
    ZERO,
    InputError,
    Matrix,
    format_scalar,
    kernel_basis,
    rank,
    scalar,
    span_basis,
    unit_vector,
    vadd,
    vscale,
    vsub,
    zero_vector,
    coordinates,
)


class AlgebraSpec:
    """Structure constants over a named basis. Immutable after construction."""

    def __init__(self, name: str, basis: Sequence[str], table, anticommutative: Optional[bool] = None):
        basis = tuple(basis)
        n = len(basis)
        if len(set(basis)) != n:
            raise InputError(f"basis labels of {name!r} are not unique")
        if len(table) != n or any(len(row) != n for row in table):
            raise InputError(f"structure table of {name!r} is not {n}x{n}")
        tab = []
        for i, row in enumerate(table):
            trow = []
            for j, prod in enumerate(row):
                if len(prod) != n:
                    raise InputError(f"product ({basis[i]},{basis[j]}) has wrong length")
                trow.append(tuple(scalar(c) for c in prod))
            tab.append(tuple(trow))
        self.name = name
        self.basis = basis
        self.dim = n
        self.table = tuple(tab)
        self.declared_anticommutative = anticommutative
        # sparse view of each product, used by the hot loops
        self._sparse = tuple(
            tuple(tuple((k, c) for k, c in enumerate(prod) if c) for prod in row) for row in self.table
        )
        self._index = {label: i for i, label in enumerate(basis)}

    def __repr__(self):
        return f"AlgebraSpec({self.name!r}, dim={self.dim})"

    def __eq__(self, other):
        if not isinstance(other, AlgebraSpec):
            return NotImplemented
        return self.basis == other.basis and self.table == other.table

    def __hash__(self):
        return hash((self.basis, self.table))

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown basis label {label!r} in algebra {self.name!r}") from None

    def basis_vector(self, i) -> tuple:
        if isinstance(i, str):
            i = self.index(i)
        return unit_vector(self.dim, i)

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, tuple(scalar(c) for c in coords))

    def mul(self, a: Sequence, b: Sequence) -> tuple:
        """Product of two coordinate vectors."""
        out = [ZERO] * self.dim
        sp = self._sparse
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = sp[i]
            for j, bj in enumerate(b):
                if not bj:
                    continue
                ab = ai * bj
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def mul_basis(self, i: int, j: int) -> tuple:
        return self.table[i][j]

    def format(self, v: Sequence) -> str:
        terms = [f"{format_scalar(c)}*{self.basis[k]}" for k, c in enumerate(v) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class AlgebraElement:
    algebra: AlgebraSpec
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.algebra.dim:
            raise InputError("coordinate length does not match algebra dimension")

    def _check(self, other: "AlgebraElement") -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise InputError("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, vadd(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, vsub(self.coords, other.coords))

    def __neg__(self):
        return AlgebraElement(self.algebra, vscale(-1, self.coords))

    def __rmul__(self, c):
        return AlgebraElement(self.algebra, vscale(scalar(c), self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.__rmul__(other)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return self.algebra.format(self.coords)


@dataclass(frozen=True)
class BilinearForm:
    algebra: AlgebraSpec
    gram: Matrix

    def __post_init__(self):
        if self.gram.shape != (self.algebra.dim, self.algebra.dim):
            raise InputError("gram matrix does not match algebra dimension")

    def __call__(self, u: Sequence, v: Sequence) -> Fraction:
        return sum((ui * self.gram[i, j] * vj for i, ui in enumerate(u) if ui
                    for j, vj in enumerate(v) if vj), ZERO)

    def scale(self, c) -> "BilinearForm":
        return BilinearForm(self.algebra, self.gram.scale(c))


@dataclass
class Report:
    """Outcome of an identity check: pass flag plus every violation found."""

    name: str
    passed: bool
    violations: list = field(default_factory=list)
    detail: str = ""

    def __bool__(self):
        return self.passed

    def as_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail or _summarize(self.violations)}


def _summarize(violations) -> str:
    if not violations:
        return ""
    shown = ", ".join(str(v) for v in violations[:5])
    more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
    return f"violations: {shown}{more}"


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    return AlgebraElement(a.algebra, a.algebra.mul(a.coords, b.coords))


def ad_matrix(alg: AlgebraSpec, a: Sequence) -> Matrix:
    """Matrix of ``b -> a b``; column j is ``a e_j``."""
    cols = [alg.mul(a, alg.basis_vector(j)) for j in range(alg.dim)]
    return Matrix.from_columns(cols, rows=alg.dim)


def right_matrix(alg: AlgebraSpec, a: Sequence) -> Matrix:
    """Matrix of ``b -> b a``."""
    cols = [alg.mul(alg.basis_vector(j), a) for j in range(alg.dim)]
    return Matrix.from_columns(cols, rows=alg.dim)


def jacobian(alg: AlgebraSpec, x: Sequence, y: Sequence, z: Sequence) -> tuple:
    """(xy)z + (yz)x + (zx)y"""
    m = alg.mul
    return vadd(vadd(m(m(x, y), z), m(m(y, z), x)), m(m(z, x), y))


def check_anticommutative(alg: AlgebraSpec) -> Report:
    bad = []
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            if vadd(alg.table[i][j], alg.table[j][i]) != zero_vector(alg.dim):
                bad.append((alg.basis[i], alg.basis[j]))
    return Report("anticommutative", not bad, bad)


def _jacobian_table(alg: AlgebraSpec) -> list:
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(n)]
    return [[[jacobian(alg, e[i], e[j], e[k]) for k in range(n)] for j in range(n)] for i in range(n)]


def check_jacobi(alg: AlgebraSpec) -> Report:
    n = alg.dim
    e = [alg.basis_vector(i) for i in range(n)]
    bad = []
    # J is alternating for anticommutative algebras, so i<j<k suffices there
    triples = combinations(range(n), 3) if check_anticommutative(alg) else (
        (i, j, k) for i in range(n) for j in range(n) for k in range(n))
    for i, j, k in triples:
        if any(jacobian(alg, e[i], e[j], e[k])):
            bad.append((alg.basis[i], alg.basis[j], alg.basis[k]))
    return Report("jacobi", not bad, bad)


def _integral_table(alg: AlgebraSpec) -> list:
    """Sparse table scaled by the lcm of all denominators, as Python ints."""
    den = 1
    for row in alg.table:
        for prod in row:
            for c in prod:
                den = lcm(den, c.denominator)
    return [[[(k, int(c * den)) for k, c in enumerate(prod) if c] for prod in row] for row in alg.table]


def check_malcev(alg: AlgebraSpec) -> Report:
    """J(x,y,xz) = J(x,y,z)x for x in {e_i} and {e_i + e_j}, basis y, z.

    The identity is quadratic in x, so these x determine it completely.
    Both sides are cubic in the structure constants, so the check runs on
    the integer-scaled table.
    """
    n = alg.dim
    tab = _integral_table(alg)

    def mul(a, b):
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                row = tab[i]
                for j, bj in enumerate(b):
                    if bj:
                        ab = ai * bj
                        for k, c in row[j]:
                            out[k] += ab * c
        return out

    def jac(x, y, z):
        return [p + q + r for p, q, r in zip(mul(mul(x, y), z), mul(mul(y, z), x), mul(mul(z, x), y))]

    e = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    # J(e_i, e_j, e_m) as sparse rows; J is trilinear
    jt = [[[[(k, v) for k, v in enumerate(jac(e[i], e[j], e[m])) if v] for m in range(n)]
           for j in range(n)] for i in range(n)]

    def jac_lin(xs, j, w):
        out = [0] * n
        for i in xs:
            row = jt[i][j]
            for m, wm in enumerate(w):
                if wm:
                    for k, v in row[m]:
                        out[k] += wm * v
        return out

    bad = []
    for xs in [(i,) for i in range(n)] + list(combinations(range(n), 2)):
        x = [1 if k in xs else 0 for k in range(n)]
        xz = [mul(x, e[k]) for k in range(n)]
        for j in range(n):
            for k in range(n):
                if jac_lin(xs, j, xz[k]) != mul(jac_lin(xs, j, e[k]), x):
                    label = "+".join(alg.basis[i] for i in xs)
                    bad.append((label, alg.basis[j], alg.basis[k]))
    return Report("malcev", not bad, bad)


def trace_form(alg: AlgebraSpec) -> BilinearForm:
    """gram[i][j] = trace(ad e_i o ad e_j)."""
    ads = [ad_matrix(alg, alg.basis_vector(i)) for i in range(alg.dim)]
    n = alg.dim
    gram = [[(ads[i] @ ads[j]).trace() for j in range(n)] for i in range(n)]
    return BilinearForm(alg, Matrix(gram, n))


@dataclass
class FormReport:
    symmetric: bool
    associative: bool
    nondegenerate: bool

    def __bool__(self):
        return self.symmetric and self.associative and self.nondegenerate

    def as_dict(self) -> dict:
        return {"symmetric": self.symmetric, "associative": self.associative,
                "nondegenerate": self.nondegenerate}


def check_form(form: BilinearForm) -> FormReport:
    alg = form.algebra
    n = alg.dim
    g = form.gram
    symmetric = g == g.transpose()
    e = [alg.basis_vector(i) for i in range(n)]
    associative = all(
        form(alg.table[i][j], e[k]) == form(e[i], alg.table[j][k])
        for i in range(n) for j in range(n) for k in range(n)
    )
    return FormReport(symmetric, associative, rank(g) == n)


def ideal_closure(alg: AlgebraSpec, seed: Sequence[Sequence]) -> list:
    """Basis of the two-sided ideal generated by ``seed``."""
    n = alg.dim
    span = EchelonBasis(n)
    frontier = [v for v in seed if span.add(v)]
    while frontier:
        new = []
        for v in frontier:
            for i in range(n):
                e = alg.basis_vector(i)
                for w in (alg.mul(e, v), alg.mul(v, e)):
                    if span.add(w):
                        new.append(w)
        frontier = new
    return span_basis(span.vectors, n)


def subalgebra(alg: AlgebraSpec, basis: Sequence[Sequence], name: Optional[str] = None,
               labels: Optional[Sequence[str]] = None) -> AlgebraSpec:
    """Structure constants of a subalgebra (or ideal) in the given basis."""
    k = len(basis)
    table = []
    for u in basis:
        row = []
        for v in basis:
            c = coordinates(basis, alg.mul(u, v))
            if c is None:
                raise InputError("subspace is not closed under multiplication")
            row.append(c)
        table.append(row)
    labels = labels or [f"u{i}" for i in range(k)]
    return AlgebraSpec(name or f"{alg.name}-sub{k}", labels, table)


def multiplication_algebra_dim(alg: AlgebraSpec) -> int:
    """Dimension of the associative algebra generated by all left and right multiplications."""
    n = alg.dim
    gens = [ad_matrix(alg, alg.basis_vector(i)) for i in range(n)]
    gens += [right_matrix(alg, alg.basis_vector(i)) for i in range(n)]
    span = EchelonBasis(n * n)
    flat = lambda m: [x for row in m.entries for x in row]
    queue = [g for g in gens if span.add(flat(g))]
    while queue and len(span) < n * n:
        m = queue.pop()
        for g in gens:
            p = g @ m
            if span.add(flat(p)):
                queue.append(p)
    return len(span)


def _candidate_generators(alg: AlgebraSpec) -> list:
    n = alg.dim
    cands = [alg.basis_vector(i) for i in range(n)]
    for i in range(n):
        cands.extend(kernel_basis(ad_matrix(alg, alg.basis_vector(i))))
    return cands


def is_simple(alg: AlgebraSpec) -> Optional[bool]:
    """True if simple, False if a proper ideal was found, None if undecided.

    A proper ideal is searched for among closures of basis vectors and
    ad-kernel vectors.  If none is found, simplicity is certified when the
    multiplication algebra is the full matrix algebra (Burnside).
    """
    n = alg.dim
    if n == 0 or all(not any(p) for row in alg.table for p in row):
        return False
    for v in _candidate_generators(alg):
        if any(v) and len(ideal_closure(alg, [v])) < n:
            return False
    if multiplication_algebra_dim(alg) == n * n:
        return True
    return None


def direct_sum(a: AlgebraSpec, b: AlgebraSpec, name: Optional[str] = None) -> AlgebraSpec:
    n, m = a.dim, b.dim
    table = [[zero_vector(n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            table[i][j] = a.table[i][j] + zero_vector(m)
    for i in range(m):
        for j in range(m):
            table[n + i][n + j] = zero_vector(n) + b.table[i][j]
    labels = [f"{l}_1" for l in a.basis] + [f"{l}_2" for l in b.basis]
    return AlgebraSpec(name or f"{a.name}+{b.name}", labels, table)


def from_products(name: str, basis: Sequence[str], products, anticommutative: bool = True) -> AlgebraSpec:
    """Build an algebra from ``{(left, right): {label: coeff}}``.

    With ``anticommutative`` the table is completed by skew-symmetry.
    """
    n = len(basis)
    idx = {label: i for i, label in enumerate(basis)}
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for (l, r), result in products.items():
        i, j = idx[l], idx[r]
        for label, c in result.items():
            c = scalar(c)
            table[i][j][idx[label]] += c
            if anticommutative:
                table[j][i][idx[label]] -= c
    return AlgebraSpec(name, basis, table, anticommutative=anticommutative)
