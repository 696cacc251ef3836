"""JSON file formats for algebras, tensors, operators and forms.

Rationals are written as "p/q" strings ("p" when q = 1).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional, Union

from .algebra import AlgebraSpec, BilinearForm, check_anticommutative
from .exactlinalg import InputError, Matrix, format_scalar, parse_scalar
from .rotabaxter import LinearOperator
from .yangbaxter import Tensor2

_COEFF = re.compile(r"^\s*([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([A-Za-z_]\w*)\s*$")


def read_json(source: Union[str, Path, Mapping]) -> dict:
    if isinstance(source, Mapping):
        return dict(source)
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: malformed JSON: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}:1: expected a JSON object at top level")
    return data


def write_json(data: dict, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")


def _require(data: Mapping, key: str, kind, where: str):
    if key not in data:
        raise InputError(f"{where}: missing field {key!r}")
    value = data[key]
    if not isinstance(value, kind):
        raise InputError(f"{where}: field {key!r} has the wrong type")
    return value


def _rational(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise InputError(f"{where}: rationals must be strings, got {value!r}")
    try:
        return parse_scalar(value)
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from None


def algebra_from_dict(data: Mapping, where: str = "algebra") -> AlgebraSpec:
    name = _require(data, "name", str, where)
    basis = _require(data, "basis", list, where)
    if not all(isinstance(b, str) for b in basis):
        raise InputError(f"{where}: basis labels must be strings")
    dim = data.get("dim", len(basis))
    if dim != len(basis):
        raise InputError(f"{where}: dim {dim} does not match {len(basis)} basis labels")
    if len(set(basis)) != len(basis):
        raise InputError(f"{where}: basis labels are not unique")
    anti = data.get("anticommutative", False)
    if not isinstance(anti, bool):
        raise InputError(f"{where}: 'anticommutative' must be true or false")
    idx = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    table = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for k, prod in enumerate(_require(data, "products", list, where)):
        pw = f"{where}: products[{k}]"
        if not isinstance(prod, Mapping):
            raise InputError(f"{pw}: expected an object")
        left, right = _require(prod, "left", str, pw), _require(prod, "right", str, pw)
        for label in (left, right):
            if label not in idx:
                raise InputError(f"{pw}: unknown basis label {label!r}")
        i, j = idx[left], idx[right]
        if (i, j) in seen:
            raise InputError(f"{pw}: duplicate product ({left}, {right})")
        seen.add((i, j))
        if anti and i >= j:
            raise InputError(f"{pw}: anticommutative tables list only left-index < right-index, "
                             f"got ({left}, {right})")
        for t, term in enumerate(_require(prod, "result", list, pw)):
            if not (isinstance(term, list) and len(term) == 2 and isinstance(term[0], str)):
                raise InputError(f"{pw}: result[{t}] must be [label, \"p/q\"]")
            if term[0] not in idx:
                raise InputError(f"{pw}: unknown basis label {term[0]!r}")
            c = _rational(term[1], f"{pw}: result[{t}]")
            table[i][j][idx[term[0]]] += c
            if anti:
                table[j][i][idx[term[0]]] -= c
    alg = AlgebraSpec(name, basis, table, anticommutative=anti)
    if anti:
        rep = check_anticommutative(alg)
        if not rep:
            raise InputError(f"{where}: declared anticommutative but {rep.violations} violate it")
    return alg


def algebra_to_dict(alg: AlgebraSpec, anticommutative: Optional[bool] = None) -> dict:
    if anticommutative is None:
        anticommutative = bool(check_anticommutative(alg))
    products = []
    n = alg.dim
    for i in range(n):
        for j in range(n):
            if anticommutative and i >= j:
                continue
            prod = alg.table[i][j]
            if any(prod):
                products.append({
                    "left": alg.basis[i],
                    "right": alg.basis[j],
                    "result": [[alg.basis[k], format_scalar(c)] for k, c in enumerate(prod) if c],
                })
    return {"name": alg.name, "dim": n, "basis": list(alg.basis),
            "anticommutative": anticommutative, "products": products}


def load_algebra(source) -> AlgebraSpec:
    where = str(source) if not isinstance(source, Mapping) else "algebra"
    return algebra_from_dict(read_json(source), where)


def _coefficient(text, bindings: Mapping[str, Fraction], params, where: str) -> Fraction:
    if not isinstance(text, str):
        raise InputError(f"{where}: coefficient must be a string, got {text!r}")
    try:
        return parse_scalar(text)
    except InputError:
        pass
    m = _COEFF.match(text)
    if not m:
        raise InputError(f"{where}: cannot parse coefficient {text!r}")
    sign, factor, name = m.groups()
    if name not in params:
        raise InputError(f"{where}: {name!r} is not a declared parameter")
    value = Fraction(bindings[name]) * (parse_scalar(factor) if factor else 1)
    return -value if sign == "-" else value


def tensor_from_dict(data: Mapping, alg: AlgebraSpec, bindings: Optional[Mapping] = None,
                     where: str = "tensor") -> Tensor2:
    """Coefficients are rationals or declared parameters, optionally as "[-][p/q*]name"."""
    bindings = dict(bindings or {})
    declared = data.get("algebra")
    if declared is not None and declared != alg.name:
        raise InputError(f"{where}: tensor is over {declared!r}, not {alg.name!r}")
    params = data.get("params", [])
    if not isinstance(params, list) or not all(isinstance(p, str) for p in params):
        raise InputError(f"{where}: 'params' must be a list of names")
    unknown = sorted(set(bindings) - set(params))
    if unknown:
        raise InputError(f"{where}: unknown parameters {', '.join(unknown)}")
    unbound = [p for p in params if p not in bindings]
    if unbound:
        raise InputError(f"{where}: unbound parameters {', '.join(unbound)} (use --param name=value)")
    terms = []
    for k, term in enumerate(_require(data, "terms", list, where)):
        tw = f"{where}: terms[{k}]"
        if not isinstance(term, Mapping):
            raise InputError(f"{tw}: expected an object")
        left, right = _require(term, "left", str, tw), _require(term, "right", str, tw)
        for label in (left, right):
            if label not in alg.basis:
                raise InputError(f"{tw}: unknown basis label {label!r}")
        terms.append((left, right, _coefficient(term.get("coeff"), bindings, params, tw)))
    return Tensor2.from_terms(alg, terms)


def tensor_to_dict(r: Tensor2) -> dict:
    b = r.algebra.basis
    return {"algebra": r.algebra.name, "params": [],
            "terms": [{"left": b[i], "right": b[j], "coeff": format_scalar(c)} for i, j, c in r.terms()]}


def load_tensor(source, alg: AlgebraSpec, bindings=None) -> Tensor2:
    where = str(source) if not isinstance(source, Mapping) else "tensor"
    return tensor_from_dict(read_json(source), alg, bindings, where)


def _matrix(rows, n: int, where: str, key: str) -> Matrix:
    if not (isinstance(rows, list) and len(rows) == n and all(isinstance(r, list) and len(r) == n for r in rows)):
        raise InputError(f"{where}: {key!r} must be a {n}x{n} list of rational strings")
    return Matrix([[_rational(c, f"{where}: {key}[{i}][{j}]") for j, c in enumerate(row)]
                   for i, row in enumerate(rows)], n)


def _matrix_rows(m: Matrix) -> list:
    return [[format_scalar(c) for c in row] for row in m.entries]


def operator_from_dict(data: Mapping, alg: AlgebraSpec, where: str = "operator") -> LinearOperator:
    """``matrix[i][j]`` is the e_i coefficient of R(e_j)."""
    declared = data.get("algebra")
    if declared is not None and declared != alg.name:
        raise InputError(f"{where}: operator is on {declared!r}, not {alg.name!r}")
    return LinearOperator(alg, _matrix(_require(data, "matrix", list, where), alg.dim, where, "matrix"))


def operator_to_dict(op: LinearOperator) -> dict:
    return {"algebra": op.algebra.name, "matrix": _matrix_rows(op.matrix)}


def load_operator(source, alg: AlgebraSpec) -> LinearOperator:
    where = str(source) if not isinstance(source, Mapping) else "operator"
    return operator_from_dict(read_json(source), alg, where)


def form_from_dict(data: Mapping, alg: AlgebraSpec, where: str = "form") -> BilinearForm:
    declared = data.get("algebra")
    if declared is not None and declared != alg.name:
        raise InputError(f"{where}: form is on {declared!r}, not {alg.name!r}")
    return BilinearForm(alg, _matrix(_require(data, "gram", list, where), alg.dim, where, "gram"))


def form_to_dict(form: BilinearForm) -> dict:
    return {"algebra": form.algebra.name, "gram": _matrix_rows(form.gram)}


def load_form(source, alg: AlgebraSpec) -> BilinearForm:
    where = str(source) if not isinstance(source, Mapping) else "form"
    return form_from_dict(read_json(source), alg, where)


def vectors_to_rows(vectors) -> list:
    return [[format_scalar(c) for c in v] for v in vectors]
