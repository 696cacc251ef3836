"""Re-derive every golden outcome of a catalog entry through the full pipeline.

Order: identity checks, CYBE residual, invariance, double build,
decomposition, derived operators, operator from r, weight inference,
companion relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import check_anticommutative, check_jacobi, check_malcev, is_simple, trace_form
from .catalog import Golden, get_entry, golden_index, sample_tuples
from .double import build_double, decompose, derived_rb, invariant_reports
from .exactlinalg import InputError, Matrix, PreconditionError, format_scalar
from .rotabaxter import LinearOperator, companion, from_r, infer_weight, proportionality
from .yangbaxter import cybe_residual, cybe_residual_slotwise, is_invariant, symmetric_part


@dataclass
class GoldenRun:
    name: str
    checks: list = field(default_factory=list)
    weight: Optional[str] = None
    bridging: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append({"name": name, "pass": bool(passed), "detail": detail})
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    @property
    def first_failure(self) -> Optional[dict]:
        return next((c for c in self.checks if not c["pass"]), None)

    def as_dict(self) -> dict:
        out = {"command": "catalog golden", "inputs": {"name": self.name}, "checks": self.checks}
        if self.weight is not None:
            out["weight"] = self.weight
        if self.bridging:
            out["bridging_scalar"] = self.bridging
        if self.first_failure:
            out["first_failure"] = self.first_failure["name"]
        return out


def _fmt_params(params, values) -> str:
    return ",".join(f"{p}={format_scalar(v)}" for p, v in zip(params, values)) or "-"


def run_golden(name: str, double_tuples: int = 2) -> GoldenRun:
    """``double_tuples`` caps how many sampled tuples go through the double."""
    try:
        entry_name, golden = golden_index()[name]
    except KeyError:
        raise InputError(f"unknown golden entry {name!r}; known: {', '.join(golden_index())}") from None
    entry = get_entry(entry_name)
    alg = entry.algebra
    run = GoldenRun(name)

    run.add("anticommutative", check_anticommutative(alg))
    run.add(f"jacobi {'holds' if entry.is_lie else 'fails'}", bool(check_jacobi(alg)) == entry.is_lie)
    run.add("malcev", check_malcev(alg))
    run.add("simple", is_simple(alg) is True)

    family = entry.rfamilies[golden.family]
    form = entry.forms[golden.form]
    killing = trace_form(alg)
    weights = set()
    for k, values in enumerate(sample_tuples(len(family.params))):
        params = dict(zip(family.params, values))
        tag = _fmt_params(family.params, values)
        r = family(**params)

        res = cybe_residual(r)
        run.add(f"[{tag}] cybe residual zero", res.is_zero(), f"max |coeff| {format_scalar(res.max_abs())}")
        run.add(f"[{tag}] bracket and slotwise residuals agree", res == cybe_residual_slotwise(r))
        inv = is_invariant(symmetric_part(r))
        run.add(f"[{tag}] symmetric part invariant: {golden.invariant_symmetric_part}",
                inv == golden.invariant_symmetric_part)

        if k < double_tuples:
            _double_checks(run, entry, golden, r, tag, killing)

        op = from_r(r, form)
        expected = LinearOperator(alg, golden.operator(**params))
        run.add(f"[{tag}] operator from r matches golden table", op == expected)
        report = infer_weight(op)
        weights.add(report.weight_str)
        run.add(f"[{tag}] weight {format_scalar(golden.weight)}", report.weight == golden.weight,
                f"inferred {report.weight_str}")
        comp = companion(op, golden.weight)
        run.add(f"[{tag}] companion has weight {format_scalar(golden.weight)}",
                infer_weight(comp).weight == golden.weight)
        run.add(f"[{tag}] R + companion = -weight*id",
                (op + comp).matrix == Matrix.identity(alg.dim).scale(-golden.weight))
        if golden.companion is not None:
            run.add(f"[{tag}] companion matches golden table", comp.matrix == golden.companion(**params))
    run.weight = weights.pop() if len(weights) == 1 else "inconsistent"
    return run


def _double_checks(run: GoldenRun, entry, golden: Golden, r, tag: str, killing) -> None:
    alg = entry.algebra
    try:
        d = build_double(alg, r)
    except PreconditionError as exc:
        run.add(f"[{tag}] double refused as expected", not golden.invariant_symmetric_part, str(exc))
        return
    if not run.add(f"[{tag}] double built", golden.invariant_symmetric_part):
        return
    run.add(f"[{tag}] double anticommutative", check_anticommutative(d.spec))
    if entry.is_lie:
        run.add(f"[{tag}] double satisfies jacobi", check_jacobi(d.spec))
    else:
        run.add(f"[{tag}] double satisfies malcev", check_malcev(d.spec))
    dec = decompose(d)
    run.add(f"[{tag}] decomposition into two {alg.dim}-dim ideals",
            len(dec.ideal1) == len(dec.ideal2) == alg.dim)
    for rep in invariant_reports(dec):
        run.add(f"[{tag}] {rep.name}", rep.passed, rep.detail)
    r1, _ = derived_rb(dec)
    c = proportionality(from_r(r, killing), r1)
    run.bridging[tag] = format_scalar(c) if c is not None else "none"
    run.add(f"[{tag}] from_r(r, trace form) proportional to phi1 o psi", c is not None,
            f"c = {run.bridging[tag]}")
