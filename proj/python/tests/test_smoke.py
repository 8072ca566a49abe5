import pytest

import pbwalg
from pbwalg import Algebra

BAD_TABLE = """\
dim 3
bracket 1 2 : 1 3
bracket 2 3 : 1 1
bracket 3 1 : 1 1
"""


@pytest.fixture
def heisenberg():
    return Algebra.builtin("heisenberg", 1)


def test_builtin_validates(heisenberg):
    assert heisenberg.is_lie
    assert heisenberg.n == 3
    assert heisenberg.names == ["P", "Q", "R"]
    assert "valid Lie algebra" in heisenberg.validation_report()


def test_normal_forms(heisenberg):
    nf = heisenberg.normal_form("Q*P")
    assert str(nf) == "P*Q + R"
    assert heisenberg.normal_form(nf) == nf

    regular = heisenberg.normal_form("P*Q", basis="regular")
    assert str(regular) == "1/2*P*Q + 1/2*Q*P - 1/2*R"
    assert regular.is_regular

    value, trace, canonical = heisenberg.normal_form_with_trace("Q*P")
    assert str(value) == "P*Q + R"
    assert canonical
    assert trace.splitlines() == ["1 | 2 1 | 1 | +"]


def test_poly_arithmetic(heisenberg):
    p = heisenberg.parse("P")
    q = heisenberg.parse("Q")
    assert str(p * q - q * p) == "P*Q - Q*P"
    assert heisenberg.equivalent(p * q - q * p, heisenberg.bracket(p, q))
    assert (p - p).is_zero
    assert (p * q).degree == 2


def test_validation_failure_and_witness():
    bad = Algebra.from_text(BAD_TABLE)
    assert not bad.is_lie
    assert "(1,2,3)" in bad.validation_report()

    residue = bad.jacobi_residue(1, 2, 3)
    assert str(residue) == "X3"

    value, trace = bad.witness(1, 2, 3)
    assert str(value) == "X3"
    assert len(trace.splitlines()) == 7

    with pytest.raises(RuntimeError):
        bad.pbw_report(2)
    with pytest.raises(RuntimeError):
        Algebra.builtin("heisenberg", 1).witness(1, 2, 3)


def test_oracle_counts(heisenberg):
    assert heisenberg.quotient_dimension(3) == 20
    ok, text = heisenberg.pbw_report(3)
    assert ok
    assert text.rstrip().endswith("PASS")

    bad = Algebra.from_text(BAD_TABLE)
    assert bad.quotient_dimension(3) < 20


def test_symmetrize_and_decompose():
    assert pbwalg.symmetrize("X1*X2") == "1/2*X1*X2 + 1/2*X2*X1"

    p = pbwalg.parse("X1*X2 + X2*X1", n=2)
    summands = p.power_decomposition()
    assert summands
    assert all(exponent == 2 for _, _, exponent in summands)

    with pytest.raises(ValueError):
        pbwalg.parse("X1*X2", n=2).power_decomposition()


def test_basis_change(heisenberg):
    labels, sym_to_ordered, ordered_to_sym = heisenberg.basis_change(1)
    assert labels == ["1", "P", "Q", "R"]
    assert len(sym_to_ordered) == 4
    assert sym_to_ordered == ordered_to_sym  # identity at degree 1


def test_algebra_text_round_trip(heisenberg):
    again = Algebra.from_text(heisenberg.text())
    assert again.names == heisenberg.names
    assert str(again.normal_form("Q*P")) == "P*Q + R"
