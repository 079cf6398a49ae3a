import pytest

from tlepoly.fforacle import support_components, support_histogram
from tlepoly.freechar import (
    char_free_gl2,
    char_free_gl2_parts,
    char_free_sl2,
    char_free_sl3,
    lambda11,
    lambda11_z2,
    lambda11_z2_derived,
    lambda111,
    mu2_stratum_gl2,
    mu5_complement_cases,
    mu5_complement_closed,
    mu5_stratum_gl3,
)
from tlepoly.qpoly import Q, RatFunc, e_general_linear, pow_int, to_intpoly

HALF = RatFunc(1, 2)


def test_rank_zero_is_a_point():
    for f in (char_free_sl2, char_free_gl2, char_free_sl3, lambda11, lambda111):
        assert f(0) == 1
    assert lambda11_z2(0).t == 1 and lambda11_z2(0).n == 0


def test_char_free_sl2_small_ranks():
    assert char_free_sl2(1) == Q
    # substitution at r = 2, term by term
    r2 = (Q**3 - Q) - (Q * Q - Q) + HALF * Q * ((Q + 1) + (Q - 1))
    assert char_free_sl2(2) == r2
    assert char_free_sl2(2) == Q**3


def test_char_free_gl2():
    # GL2 // GL2 is C x C^* through (trace, det)
    assert char_free_gl2(1) == Q * Q - Q
    red, irr = char_free_gl2_parts(1)
    assert red + irr == char_free_gl2(1)
    for r in range(6):
        assert char_free_gl2(r) == pow_int(Q - 1, r) * char_free_sl2(r)


def test_char_free_sl3_small_ranks():
    assert char_free_sl3(1) == Q * Q
    to_intpoly(char_free_sl3(2))


def test_lambda11_examples():
    assert lambda11(1) == Q**3 - Q**2
    expected = pow_int(Q - 1, 4) + pow_int(Q - 1, 3) * (pow_int(Q * Q + Q, 2) - 2 * Q * Q + 1)
    assert lambda11(2) == expected
    assert mu2_stratum_gl2(1) == to_intpoly(pow_int(Q - 1, 2) * (Q * Q - Q + 1))


@pytest.mark.parametrize("r", range(1, 9))
def test_lambda11_z2_total(r):
    assert lambda11_z2(r).total() == lambda11(r)


@pytest.mark.parametrize("r", range(0, 7))
def test_lambda11_z2_from_stratification(r):
    assert lambda11_z2_derived(r) == lambda11_z2(r)


@pytest.mark.parametrize("r", range(0, 9))
def test_everything_is_integral(r):
    for f in (char_free_sl2, char_free_gl2, char_free_sl3, lambda11, lambda111):
        to_intpoly(f(r))


@pytest.mark.parametrize("r", range(1, 7))
def test_mu5_complement(r):
    cases = mu5_complement_cases(r)
    assert set(cases) == {
        "one_vector",
        "split_block",
        "full_flag",
        "two_vectors",
        "single_entry",
        "diagonal",
    }
    total = RatFunc(0)
    for v in cases.values():
        total = total + v
    assert total == mu5_complement_closed(r)
    gl3 = pow_int(RatFunc(e_general_linear(3)), r)
    assert gl3 - RatFunc(mu5_stratum_gl3(r)) == mu5_complement_closed(r)


@pytest.mark.parametrize("r", range(1, 7))
def test_lambda111_structure(r):
    mu2_part = pow_int(Q - 1, 2 * r - 1) * (pow_int(Q * Q + Q, r) - 2 * pow_int(Q, r) + 1)
    rebuilt = (
        pow_int(Q - 1, 3 * r)
        + 3 * pow_int(Q - 1, r) * mu2_part
        + pow_int(Q - 1, 3 * r - 2) * RatFunc(mu5_stratum_gl3(r)) / pow_int(Q - 1, 3 * r)
    )
    assert lambda111(r) == rebuilt


@pytest.mark.parametrize("r", range(1, 9))
def test_lambda111_degree(r):
    deg = to_intpoly(lambda111(r)).degree
    assert deg == mu5_stratum_gl3(r).degree - 2
    assert deg == 9 * r - 2


@pytest.mark.parametrize("r", range(1, 9))
def test_lambda11_degree(r):
    assert to_intpoly(lambda11(r)).degree == 4 * r - 1


# --- strata against finite-field support counts -------------------------------------


def _strongly_connected_count(k, p, r):
    hist = support_histogram(k, p, r)
    return sum(c for mask, c in hist.items() if support_components(mask, k) == 1)


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (5, 2)])
def test_mu2_stratum_counts(p, r):
    assert mu2_stratum_gl2(r)(p) == _strongly_connected_count(2, p, r)


@pytest.mark.parametrize("p,r", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_mu5_stratum_counts(p, r):
    assert mu5_stratum_gl3(r)(p) == _strongly_connected_count(3, p, r)


@pytest.mark.parametrize("p,r", [(2, 2), (3, 1)])
def test_mu5_complement_counts(p, r):
    hist = support_histogram(3, p, r)
    rest = sum(c for mask, c in hist.items() if support_components(mask, 3) != 1)
    assert mu5_complement_closed(r).evaluate(p) == rest
