from fractions import Fraction

import pytest

from rotacybe.catalog import get_entry, sample_tuples
from rotacybe.double import build_double, decompose

# criterion number -> (passed, note); filled by test_acceptance
CRITERIA = {}


@pytest.fixture(scope="session")
def sl2_entry():
    return get_entry("sl2")


@pytest.fixture(scope="session")
def malcev_entry():
    return get_entry("malcev7")


@pytest.fixture(scope="session")
def sl2_decs(sl2_entry):
    """Decompositions of the sl2 double for alpha in {0, 1/2}."""
    fam = sl2_entry.rfamilies["example1"]
    return {a: decompose(build_double(sl2_entry.algebra, fam(alpha=a))) for a in (Fraction(0), Fraction(1, 2))}


@pytest.fixture(scope="session")
def malcev_decs(malcev_entry):
    """Decompositions of the Malcev double at the first two scheduled tuples."""
    fam = malcev_entry.rfamilies["example3"]
    out = {}
    for values in sample_tuples(len(fam.params))[:2]:
        out[values] = decompose(build_double(malcev_entry.algebra, fam(**dict(zip(fam.params, values)))))
    return out


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        passed, note = CRITERIA[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if passed else 'FAIL'}  {note}")
