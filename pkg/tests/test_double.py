from fractions import Fraction as F

import pytest

from rotacybe.algebra import check_jacobi, trace_form
from rotacybe.catalog import get_entry, sl2
from rotacybe.double import (
    build_double,
    check_hypotheses,
    check_psi_product_verbatim,
    decompose,
    derived_rb,
    dual_multiply,
    form_q,
    invariant_reports,
    omega_form,
    phi1_matrix,
    phi2_formula,
)
from rotacybe.exactlinalg import Matrix, PreconditionError, inverse
from rotacybe.rotabaxter import from_r, proportionality
from rotacybe.yangbaxter import Tensor2

SL2 = sl2()


def example1(alpha):
    return Tensor2.from_terms(SL2, [("h", "x", alpha), ("x", "h", -alpha), ("h", "h", F(1, 4)), ("x", "y", 1)])


def covector(label):
    return SL2.basis_vector(label)


def test_dual_products_by_hand():
    # r = 1/4 h@h + x@y:  Delta(x) = 1/2(h@x - x@h), Delta(h) = 0, Delta(y) = 1/2(h@y - y@h)
    r = example1(F(0))
    assert dual_multiply(r, covector("x"), covector("y")) == (0, 0, 0)
    assert dual_multiply(r, covector("h"), covector("x")) == (F(1, 2), 0, 0)
    assert dual_multiply(r, covector("x"), covector("h")) == (F(-1, 2), 0, 0)
    assert dual_multiply(r, covector("h"), covector("y")) == (0, 0, F(1, 2))


def test_double_structure():
    d = build_double(SL2, example1(F(1, 2)))
    assert d.spec.dim == 6
    assert d.spec.basis == ("x", "h", "y", "x*", "h*", "y*")
    assert check_jacobi(d.spec)
    x, ystar = d.embed_base(SL2.basis_vector("x")), d.embed_dual(covector("y"))
    assert form_q(d, x, ystar) == 0
    assert form_q(d, x, d.embed_dual(covector("x"))) == 1


def test_build_refuses_non_invariant():
    r = Tensor2.from_terms(SL2, [("x", "x", 1)])
    assert [name for name, _ in check_hypotheses(r)] == ["invariance"]
    with pytest.raises(PreconditionError):
        build_double(SL2, r)
    with pytest.raises(PreconditionError):
        build_double(SL2, Tensor2.from_terms(SL2, [("x", "y", 1)]))


def test_decompose_refuses_skew():
    skew = Tensor2.from_terms(SL2, [("h", "x", 1), ("x", "h", -1)])
    d = build_double(SL2, skew)
    with pytest.raises(PreconditionError):
        decompose(d)


@pytest.mark.parametrize("alpha", [F(0), F(-1), F(3, 5)])
def test_decomposition_maps(alpha):
    r = example1(alpha)
    dec = decompose(build_double(SL2, r))
    assert dec.phi1 == phi1_matrix(r) == -r.coeff.transpose()
    assert dec.phi2 == phi2_formula(r) == r.coeff
    assert dec.psi == inverse(dec.phi2 - dec.phi1)
    assert dec.r1 == Tensor2(SL2, -r.coeff)
    r1, q1 = derived_rb(dec)
    assert r1.matrix - q1.matrix == -Matrix.identity(3)
    assert omega_form(dec).gram == dec.psi.transpose()
    assert from_r(dec.r1, omega_form(dec)) == r1
    assert proportionality(from_r(r, trace_form(SL2)), r1) == -4


def test_invariant_reports_all_pass():
    dec = decompose(build_double(SL2, example1(F(1, 2))))
    reports = invariant_reports(dec)
    assert all(rep.passed for rep in reports), [rep.name for rep in reports if not rep.passed]
    assert check_psi_product_verbatim(dec)


def test_malcev_relation_to_published_table():
    entry = get_entry("malcev7")
    fam = entry.rfamilies["example3"]
    params = dict(zip(fam.params, (F(1), F(-1), F(1, 2), F(3, 5), F(7, 2))))
    dec = decompose(build_double(entry.algebra, fam(**params), check=False))
    published = entry.expected[0].operator(**params)
    r1, q1 = derived_rb(dec)
    assert r1.matrix == -published
    assert q1.matrix == Matrix.identity(7) - published
    assert omega_form(dec).gram == entry.forms["trace12"].gram
