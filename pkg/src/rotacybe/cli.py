"""Command-line front end.

Exit codes: 0 all checks pass, 1 a mathematical check fails, 2 input error.
"""

from __future__ import annotations

import functools
import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import io
from .algebra import (
    AlgebraSpec,
    check_anticommutative,
    check_jacobi,
    check_malcev,
    is_simple,
    trace_form,
)
from .catalog import CATALOG, get_entry, golden_index
from .double import build_double, check_psi_product_verbatim, decompose, derived_rb, invariant_reports
from .exactlinalg import InputError, PreconditionError, format_scalar, parse_scalar
from .golden import run_golden
from .rotabaxter import companion, from_r, infer_weight, is_rota_baxter
from .yangbaxter import Tensor2, cybe_residual, invariance_defect, symmetric_part

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Outcome:
    """Collects checks for one command and renders them."""

    def __init__(self, command: str, inputs: dict):
        self.data = {"command": command, "inputs": inputs, "checks": []}

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.data["checks"].append({"name": name, "pass": bool(passed), "detail": detail})
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.data["checks"])

    def finish(self, report_path=None, as_json: bool = False) -> None:
        if report_path:
            io.write_json(self.data, report_path)
        if as_json:
            click.echo(json.dumps(self.data, indent=2))
        else:
            for c in self.data["checks"]:
                line = f"{'PASS' if c['pass'] else 'FAIL'}  {c['name']}"
                if c["detail"]:
                    line += f"  ({c['detail']})"
                click.echo(line)
            if "weight" in self.data:
                click.echo(f"weight: {self.data['weight']}")
        sys.exit(EXIT_OK if self.passed else EXIT_FAIL)


def guarded(fn):
    """Map input problems to exit code 2."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except InputError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def parse_params(items) -> dict:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise InputError(f"--param expects name=value, got {item!r}")
        out[name.strip()] = parse_scalar(value)
    return out


def resolve_algebra(source: str) -> tuple:
    """Returns (algebra, catalog entry or None)."""
    if source.startswith("catalog:"):
        entry = get_entry(source[len("catalog:"):])
        return entry.algebra, entry
    return io.load_algebra(source), None


def resolve_tensor(source: str, alg: AlgebraSpec, entry, params: dict) -> Tensor2:
    if entry is not None and source in entry.rfamilies:
        return entry.rfamilies[source](**params)
    if not Path(source).exists():
        known = f"; catalog families: {', '.join(entry.rfamilies)}" if entry else ""
        raise InputError(f"no tensor file {source!r}{known}")
    return io.load_tensor(source, alg, params)


def resolve_form(spec: str, alg: AlgebraSpec, entry):
    if entry is not None and spec in entry.forms:
        return entry.forms[spec]
    if spec == "killing" or spec == "trace":
        return trace_form(alg)
    if spec == "trace12":
        return trace_form(alg).scale(Fraction(1, 12))
    return io.load_form(spec, alg)


report_option = click.option("--report", "report_path", type=click.Path(dir_okay=False),
                             help="Write the JSON report here.")
json_option = click.option("--json", "as_json", is_flag=True, help="Print the JSON report.")
param_option = click.option("--param", "params", multiple=True, metavar="NAME=P/Q",
                            help="Bind a tensor parameter.")


@click.group()
def main():
    """Verify CYBE solutions, build Drinfeld doubles and derive Rota-Baxter operators."""


@main.group()
def algebra():
    """Identity checks on an algebra."""


@algebra.command("check")
@click.argument("source")
@click.option("--anticommutative", is_flag=True)
@click.option("--jacobi", is_flag=True)
@click.option("--malcev", is_flag=True)
@click.option("--simple", is_flag=True)
@report_option
@json_option
@guarded
def algebra_check(source, anticommutative, jacobi, malcev, simple, report_path, as_json):
    """Run identity checks (all of them when no flag is given)."""
    alg, _ = resolve_algebra(source)
    if not (anticommutative or jacobi or malcev or simple):
        anticommutative = jacobi = malcev = simple = True
    out = Outcome("algebra check", {"algebra": source})
    if anticommutative:
        rep = check_anticommutative(alg)
        out.check("anticommutative", rep, rep.as_dict()["detail"])
    if jacobi:
        rep = check_jacobi(alg)
        out.check("jacobi", rep, rep.as_dict()["detail"])
    if malcev:
        rep = check_malcev(alg)
        out.check("malcev", rep, rep.as_dict()["detail"])
    if simple:
        verdict = is_simple(alg)
        out.check("simple", verdict is True, "simple: unverified" if verdict is None else "")
    out.finish(report_path, as_json)


@main.group()
def cybe():
    """Classical Yang-Baxter equation."""


@cybe.command("check")
@click.argument("algebra_src", metavar="ALGEBRA")
@click.argument("tensor_src", metavar="TENSOR")
@param_option
@report_option
@json_option
@guarded
def cybe_check(algebra_src, tensor_src, params, report_path, as_json):
    """Evaluate the CYBE residual of TENSOR."""
    alg, entry = resolve_algebra(algebra_src)
    bindings = parse_params(params)
    r = resolve_tensor(tensor_src, alg, entry, bindings)
    res = cybe_residual(r)
    out = Outcome("cybe check", {"algebra": algebra_src, "tensor": tensor_src,
                                 "params": {k: format_scalar(v) for k, v in bindings.items()}})
    b = alg.basis
    terms = [f"{format_scalar(c)}*{b[i]}@{b[j]}@{b[k]}" for i, j, k, c in res.nonzero_terms()]
    out.check("cybe residual zero", res.is_zero(),
              "" if res.is_zero() else f"max |coeff| {format_scalar(res.max_abs())}; " + " + ".join(terms[:6]))
    out.finish(report_path, as_json)


@main.group()
def invariance():
    """Invariance of the symmetric part r + tau(r)."""


@invariance.command("check")
@click.argument("algebra_src", metavar="ALGEBRA")
@click.argument("tensor_src", metavar="TENSOR")
@param_option
@report_option
@json_option
@guarded
def invariance_check(algebra_src, tensor_src, params, report_path, as_json):
    alg, entry = resolve_algebra(algebra_src)
    bindings = parse_params(params)
    r = resolve_tensor(tensor_src, alg, entry, bindings)
    defects = invariance_defect(symmetric_part(r))
    bad = [alg.basis[a] for a, d in enumerate(defects) if not d.is_zero()]
    out = Outcome("invariance check", {"algebra": algebra_src, "tensor": tensor_src})
    out.check("r + tau(r) invariant", not bad, f"nonzero at {', '.join(bad)}" if bad else "")
    out.finish(report_path, as_json)


@main.group()
def rb():
    """Rota-Baxter operators."""


@rb.command("derive")
@click.argument("algebra_src", metavar="ALGEBRA")
@click.argument("tensor_src", metavar="TENSOR")
@click.option("--form", "form_spec", required=True, help="killing, trace12, or a form JSON file.")
@param_option
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the operator JSON here.")
@report_option
@json_option
@guarded
def rb_derive(algebra_src, tensor_src, form_spec, params, output, report_path, as_json):
    """R(a) = sum omega(a_i, a) b_i, then infer its weight."""
    alg, entry = resolve_algebra(algebra_src)
    r = resolve_tensor(tensor_src, alg, entry, parse_params(params))
    op = from_r(r, resolve_form(form_spec, alg, entry))
    if output:
        io.write_json(io.operator_to_dict(op), output)
    report = infer_weight(op)
    out = Outcome("rb derive", {"algebra": algebra_src, "tensor": tensor_src, "form": form_spec})
    out.data["operator"] = {label: alg.format(op.image(label)) for label in alg.basis}
    out.data["matrix"] = io.operator_to_dict(op)["matrix"]
    out.data["weight"] = report.weight_str
    out.check("Rota-Baxter of some weight", report.weight is not None)
    if not as_json:
        for label in alg.basis:
            click.echo(f"R({label}) = {alg.format(op.image(label))}")
    out.finish(report_path, as_json)


@rb.command("verify")
@click.argument("algebra_src", metavar="ALGEBRA")
@click.argument("operator_src", metavar="OPERATOR")
@click.option("--weight", "weight", help="Check this weight (p/q).")
@click.option("--infer", is_flag=True, help="Infer the weight.")
@report_option
@json_option
@guarded
def rb_verify(algebra_src, operator_src, weight, infer, report_path, as_json):
    alg, _ = resolve_algebra(algebra_src)
    op = io.load_operator(operator_src, alg)
    out = Outcome("rb verify", {"algebra": algebra_src, "operator": operator_src})
    if weight is not None:
        lam = parse_scalar(weight)
        out.check(f"Rota-Baxter of weight {format_scalar(lam)}", is_rota_baxter(op, lam))
    if infer or weight is None:
        report = infer_weight(op)
        out.data["weight"] = report.weight_str
        out.data["defects"] = report.as_dict()["defects"]
        out.check("weight inferred", report.weight is not None, f"weight {report.weight_str}")
    out.finish(report_path, as_json)


@rb.command("companion")
@click.argument("algebra_src", metavar="ALGEBRA")
@click.argument("operator_src", metavar="OPERATOR")
@click.option("--weight", "weight", required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False))
@report_option
@json_option
@guarded
def rb_companion(algebra_src, operator_src, weight, output, report_path, as_json):
    """-weight*id - R."""
    alg, _ = resolve_algebra(algebra_src)
    op = io.load_operator(operator_src, alg)
    lam = parse_scalar(weight)
    comp = companion(op, lam)
    if output:
        io.write_json(io.operator_to_dict(comp), output)
    out = Outcome("rb companion", {"algebra": algebra_src, "operator": operator_src, "weight": weight})
    out.data["matrix"] = io.operator_to_dict(comp)["matrix"]
    out.check(f"input has weight {format_scalar(lam)}", is_rota_baxter(op, lam))
    out.check(f"companion has weight {format_scalar(lam)}", is_rota_baxter(comp, lam))
    if not as_json:
        for label in alg.basis:
            click.echo(f"Q({label}) = {alg.format(comp.image(label))}")
    out.finish(report_path, as_json)


@main.group()
def double():
    """Drinfeld double."""


@double.command("build")
@click.argument("algebra_src", metavar="ALGEBRA")
@click.argument("tensor_src", metavar="TENSOR")
@param_option
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the double as algebra JSON.")
@report_option
@json_option
@guarded
def double_build(algebra_src, tensor_src, params, output, report_path, as_json):
    alg, entry = resolve_algebra(algebra_src)
    r = resolve_tensor(tensor_src, alg, entry, parse_params(params))
    out = Outcome("double build", {"algebra": algebra_src, "tensor": tensor_src})
    try:
        d = build_double(alg, r)
    except PreconditionError as exc:
        out.check("hypotheses (cybe, invariant symmetric part)", False, str(exc))
        out.finish(report_path, as_json)
    out.check("hypotheses (cybe, invariant symmetric part)", True)
    if output:
        io.write_json(io.algebra_to_dict(d.spec), output)
    out.check("double anticommutative", check_anticommutative(d.spec))
    lie = bool(check_jacobi(alg))
    if lie:
        out.check("double satisfies jacobi", check_jacobi(d.spec))
    else:
        out.check("double satisfies malcev", check_malcev(d.spec))
    try:
        dec = decompose(d)
    except (PreconditionError, ValueError) as exc:
        out.check("decomposition", False, str(exc))
        out.finish(report_path, as_json)
    for rep in invariant_reports(dec):
        out.check(rep.name, rep.passed, rep.detail)
    r1, q1 = derived_rb(dec)
    out.data["decomposition"] = {
        "ideal1": io.vectors_to_rows(dec.ideal1),
        "ideal2": io.vectors_to_rows(dec.ideal2),
        "phi1": io.vectors_to_rows(dec.phi1.entries),
        "phi2": io.vectors_to_rows(dec.phi2.entries),
        "psi": io.vectors_to_rows(dec.psi.entries),
        "R1": io.vectors_to_rows(r1.matrix.entries),
        "Q1": io.vectors_to_rows(q1.matrix.entries),
    }
    # informational only, not part of the pass/fail verdict
    out.data["logged"] = {"psi product rule (verbatim)": check_psi_product_verbatim(dec).passed}
    out.finish(report_path, as_json)


@main.group()
def catalog():
    """Built-in algebras and golden checks."""


@catalog.command("list")
def catalog_list():
    for name in CATALOG:
        entry = get_entry(name)
        click.echo(f"{name}: dim {entry.algebra.dim}; families {', '.join(entry.rfamilies)}; "
                   f"forms {', '.join(entry.forms)}")
    for gname, (entry_name, g) in golden_index().items():
        click.echo(f"golden {gname}: {entry_name}/{g.family} with {g.form}")
    sys.exit(EXIT_OK)


@catalog.command("golden")
@click.argument("name")
@click.option("--double-tuples", default=2, show_default=True,
              help="Sampled parameter tuples taken through the double.")
@report_option
@json_option
@guarded
def catalog_golden(name, double_tuples, report_path, as_json):
    """Re-derive every golden outcome of NAME through the full pipeline."""
    run = run_golden(name, double_tuples)
    out = Outcome("catalog golden", {"name": name})
    out.data = run.as_dict()
    out.finish(report_path, as_json)


if __name__ == "__main__":
    main()
