"""Built-in algebras, r-families and golden outcomes.

Golden values carry a provenance note: ``published`` values are the
operator tables and weights printed for sl2 and the 7-dimensional split
Malcev algebra; ``derived`` values are recomputed here from definitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Tuple

from .algebra import AlgebraSpec, BilinearForm, from_products, trace_form
from .exactlinalg import InputError, Matrix
from .yangbaxter import Tensor2

SAMPLE_VALUES = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3, 5), Fraction(7, 2))


def sample_tuples(nparams: int) -> List[tuple]:
    """Deterministic parameter schedule.

    Full grid over SAMPLE_VALUES for up to two parameters.  For more, 25
    tuples taken from the lexicographic grid at stride 311 (coprime to
    6**k), starting from the all-zero tuple.
    """
    if nparams == 0:
        return [()]
    grid = list(itertools.product(SAMPLE_VALUES, repeat=nparams))
    if nparams <= 2:
        return grid
    return [grid[(k * 311) % len(grid)] for k in range(25)]


@dataclass(frozen=True)
class RFamily:
    name: str
    params: Tuple[str, ...]
    build: Callable[..., Tensor2]
    note: str = ""

    def __call__(self, **values) -> Tensor2:
        missing = [p for p in self.params if p not in values]
        extra = [p for p in values if p not in self.params]
        if missing:
            raise InputError(f"unbound parameters for {self.name}: {', '.join(missing)}")
        if extra:
            raise InputError(f"unknown parameters for {self.name}: {', '.join(extra)}")
        return self.build(**{k: Fraction(v) for k, v in values.items()})


@dataclass(frozen=True)
class Golden:
    """Expected outcomes for one (algebra, r-family, form) combination."""

    name: str
    family: str
    form: str
    weight: Fraction
    # operator(**params) -> Matrix whose column j is R(e_j)
    operator: Callable[..., Matrix]
    invariant_symmetric_part: bool
    provenance: str
    companion: Callable[..., Matrix] = None


@dataclass
class CatalogEntry:
    name: str
    algebra: AlgebraSpec
    rfamilies: Dict[str, RFamily]
    forms: Dict[str, BilinearForm]
    expected: List[Golden] = field(default_factory=list)
    provenance: str = ""
    is_lie: bool = True


def _columns(alg: AlgebraSpec, images: Dict[str, Dict[str, Fraction]]) -> Matrix:
    cols = []
    for label in alg.basis:
        img = images.get(label, {})
        cols.append(tuple(Fraction(img.get(b, 0)) for b in alg.basis))
    return Matrix.from_columns(cols, rows=alg.dim)


def sl2() -> AlgebraSpec:
    return from_products("sl2", ["x", "h", "y"], {
        ("h", "x"): {"x": 2},
        ("h", "y"): {"y": -2},
        ("x", "y"): {"h": 1},
    })


def malcev7() -> AlgebraSpec:
    return from_products("malcev7", ["h", "x", "x'", "y", "y'", "z", "z'"], {
        ("h", "x"): {"x": 2}, ("h", "y"): {"y": 2}, ("h", "z"): {"z": 2},
        ("h", "x'"): {"x'": -2}, ("h", "y'"): {"y'": -2}, ("h", "z'"): {"z'": -2},
        ("x", "x'"): {"h": 1}, ("y", "y'"): {"h": 1}, ("z", "z'"): {"h": 1},
        ("x", "y"): {"z'": 2}, ("y", "z"): {"x'": 2}, ("z", "x"): {"y'": 2},
        ("x'", "y'"): {"z": -2}, ("y'", "z'"): {"x": -2}, ("z'", "x'"): {"y": -2},
    })


def _skew(a: str, b: str, c) -> list:
    return [(a, b, c), (b, a, -c)]


def sl2_example1(alg: AlgebraSpec) -> RFamily:
    def build(alpha):
        terms = _skew("h", "x", alpha) + [("h", "h", Fraction(1, 4)), ("x", "y", 1)]
        return Tensor2.from_terms(alg, terms)
    return RFamily("example1", ("alpha",), build, "alpha(h@x - x@h) + 1/4 h@h + x@y")


def sl2_example2(alg: AlgebraSpec) -> RFamily:
    return RFamily("example2", (), lambda: Tensor2.from_terms(alg, [("x", "x", 1)]), "x@x")


def malcev7_example3(alg: AlgebraSpec) -> RFamily:
    def build(alpha, beta, gamma, delta, mu):
        terms = (_skew("h", "x", alpha) + _skew("h", "y'", beta) + _skew("h", "z", gamma)
                 + _skew("x", "y'", delta) + _skew("x", "z", -2 * beta) + _skew("y'", "z", mu))
        terms += [("h", "h", Fraction(1, 4)), ("x", "x'", 1), ("y'", "y", 1), ("z", "z'", 1)]
        return Tensor2.from_terms(alg, terms)
    return RFamily("example3", ("alpha", "beta", "gamma", "delta", "mu"), build,
                   "r0 + 1/4 h@h + x@x' + y'@y + z@z'")


def catalog_sl2() -> CatalogEntry:
    alg = sl2()
    killing = trace_form(alg)
    f = Fraction

    def r_example1(alpha):
        return _columns(alg, {"h": {"h": 2, "x": 8 * alpha}, "y": {"y": 4, "h": -4 * alpha}})

    def q_example1(alpha):
        return _columns(alg, {"x": {"x": 4}, "h": {"x": -8 * alpha, "h": 2}, "y": {"h": 4 * alpha}})

    def r_example2():
        return _columns(alg, {"y": {"x": 4}})

    return CatalogEntry(
        "sl2", alg,
        {"example1": sl2_example1(alg), "example2": sl2_example2(alg)},
        {"killing": killing},
        [
            Golden("sl2-example1", "example1", "killing", f(-4), r_example1, True,
                   "published: R(x)=0, R(h)=2h+8alpha x, R(y)=4(y-alpha h), weight -4; "
                   "companion Q(x)=4x, Q(h)=-8alpha x+2h, Q(y)=4alpha h with Q+R=4id",
                   q_example1),
            Golden("sl2-example2", "example2", "killing", f(0), r_example2, False,
                   "published: R(x)=0, R(h)=0, R(y)=4x, weight 0; symmetric part 2x@x is "
                   "not invariant (derived)"),
        ],
        "basis x, h, y with hx=2x, hy=-2y, xy=h; Killing form is the trace form (derived)",
    )


def catalog_malcev7() -> CatalogEntry:
    alg = malcev7()
    trace12 = trace_form(alg).scale(Fraction(1, 12))
    f = Fraction

    def r_example3(alpha, beta, gamma, delta, mu):
        return _columns(alg, {
            "h": {"h": f(1, 2), "x": 2 * alpha, "y'": 2 * beta, "z": 2 * gamma},
            "x'": {"x'": 1, "h": -alpha, "y'": delta, "z": -2 * beta},
            "y": {"y": 1, "h": -beta, "x": -delta, "z": mu},
            "z'": {"z'": 1, "h": -gamma, "x": 2 * beta, "y'": -mu},
        })

    return CatalogEntry(
        "malcev7", alg,
        {"example3": malcev7_example3(alg)},
        {"trace12": trace12, "trace": trace_form(alg)},
        [
            Golden("malcev7-example3", "example3", "trace12", f(-1), r_example3, True,
                   "published: normalized operator table of weight -1; the form trace/12 is a "
                   "derived normalization (trace(ad x ad x') = 12)"),
        ],
        "split 7-dimensional simple non-Lie Malcev algebra, basis h, x, x', y, y', z, z'",
        is_lie=False,
    )


CATALOG = {"sl2": catalog_sl2, "malcev7": catalog_malcev7}


def get_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]()
    except KeyError:
        raise InputError(f"unknown catalog algebra {name!r}; known: {', '.join(CATALOG)}") from None


def golden_index() -> Dict[str, Tuple[str, Golden]]:
    out = {}
    for name in CATALOG:
        entry = get_entry(name)
        for g in entry.expected:
            out[g.name] = (name, g)
    return out
