import json
import random
from fractions import Fraction

import pytest

from tlepoly.fforacle import (
    BudgetExceeded,
    VerificationReport,
    centralizer,
    classify_stab_pair,
    count_solutions,
    irreducible_pair_count,
    lambda_orbit_count,
    lambda_orbit_count_bruteforce,
    link_solutions,
    orbit_census,
    verify,
)
from tlepoly.fforacle.fqmat import (
    algebra_dim,
    commutant_dim,
    commutant_units,
    det,
    diag,
    enum_group,
    group_order,
    identity,
    is_abs_irreducible,
    is_prime,
    is_semisimple,
    mat_inv,
    mat_mul,
    mat_pow,
    primitive_root,
)
from tlepoly.freechar import lambda11, lambda111
from tlepoly.qpoly import evaluate
from tlepoly.report import LinkParams

# --- matrices and groups --------------------------------------------------------


def test_group_sizes():
    assert len(enum_group("SL2", 3)) == 24
    assert len(enum_group("SL3", 2)) == 168
    assert len(enum_group("GL2", 3)) == 48
    assert group_order("SL2", 5) == 120
    assert group_order("GL3", 2) == 168


def test_budget_is_enforced():
    with pytest.raises(BudgetExceeded):
        enum_group("SL3", 7)
    with pytest.raises(BudgetExceeded):
        enum_group("SL2", 5, budget=10)


def test_group_elements_are_distinct_and_valid():
    g = enum_group("SL2", 5)
    assert len(set(g)) == len(g) == 120
    assert all(det(a, 5) == 1 for a in g)


def test_inverse_and_power():
    rng = random.Random(1)
    g = enum_group("SL2", 7)
    for _ in range(20):
        a = rng.choice(g)
        assert mat_mul(a, mat_inv(a, 7), 7) == identity(2)
        assert mat_pow(a, 7 * 48, 7) == identity(2)  # exponent divides |SL2(F_7)| = 336


def test_primes():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primitive_root(7) == 3
    assert primitive_root(13) == 2


def test_commutant_examples():
    assert commutant_dim([identity(2)], 5) == 4
    assert commutant_dim([diag([1, 2], 5)], 5) == 2
    a = (1, 1, 0, 1)
    b = (1, 0, 1, 1)
    assert commutant_dim([a, b], 5) == 1
    assert algebra_dim([a, b], 5) == 4
    assert is_abs_irreducible([a, b], 5)
    assert not is_abs_irreducible([diag([1, 2], 5)], 5)


def test_commutant_is_conjugation_invariant():
    rng = random.Random(7)
    p = 5
    g = enum_group("SL2", p)
    for _ in range(30):
        a, b, c = rng.choice(g), rng.choice(g), rng.choice(g)
        ci = mat_inv(c, p)
        a2 = mat_mul(mat_mul(c, a, p), ci, p)
        b2 = mat_mul(mat_mul(c, b, p), ci, p)
        assert commutant_dim([a, b], p) == commutant_dim([a2, b2], p)
        assert commutant_units([a, b], p) == commutant_units([a2, b2], p)


def test_commutant_units_count_stabilizers():
    # stabilizer of a tuple under GL2 conjugation, counted directly
    p = 3
    gl2 = enum_group("GL2", p)
    for t in ([identity(2)], [diag([1, 2], p)], [(1, 1, 0, 1)]):
        direct = sum(1 for g in gl2 if all(mat_mul(g, x, p) == mat_mul(x, g, p) for x in t))
        assert commutant_units(t, p) == direct


def test_semisimplicity():
    assert is_semisimple([diag([1, 2], 5)], 5)
    assert not is_semisimple([(1, 1, 0, 1)], 5)
    assert is_semisimple([identity(3)], 2)


def test_centralizer_matches_group_scan():
    p = 3
    g = enum_group("SL2", p)
    for x in (identity(2), diag([2, 2], p), (1, 1, 0, 1), (0, 1, 2, 0)):
        scan = sorted(a for a in g if mat_mul(a, x, p) == mat_mul(x, a, p))
        assert sorted(centralizer("SL2", p, x)) == scan


# --- solution sets --------------------------------------------------------------


def test_link_solutions_counts():
    assert sum(1 for _ in link_solutions("SL2", 3, 1, 1, 1)) == 24
    assert count_solutions("SL2", 3, 1, 1, 1) == 24
    assert count_solutions("SL2", 3, 2, 3, 1) == 72
    assert count_solutions("SL2", 3, 2, 3, 2) == sum(1 for _ in link_solutions("SL2", 3, 2, 3, 2))


def test_link_solutions_satisfy_relations():
    p = 3
    for a, b, f in link_solutions("SL2", p, 2, 3, 2):
        x = mat_pow(a, 2, p)
        assert x == mat_pow(b, 3, p)
        assert mat_mul(f, x, p) == mat_mul(x, f, p)


def test_classify_examples():
    p = 5
    assert classify_stab_pair(identity(2), identity(2), 2, p) == ("Full", "Full")
    t = diag([2, 3], p)
    assert classify_stab_pair(t, identity(2), 1, p) == ("H2", "H2")
    assert classify_stab_pair((1, 1, 0, 1), (1, 0, 1, 1), 2, p)[0] == "H1"


def test_census_p5_trefoil():
    c = orbit_census("SL2", 5, 2, 3, 1)
    assert c.consistent()
    assert c.entries[("H1", "Full")].point_count == 600
    assert c.entries[("H1", "Full")].stabilizer_orders == {4}
    assert c.total_points == count_solutions("SL2", 5, 2, 3, 1)
    json.dumps(c.to_json())


def test_census_sl3_small():
    c = orbit_census("SL3", 2, 1, 1, 1)
    assert c.consistent()
    assert c.total_points == 168


# --- irreducible pairs ----------------------------------------------------------


def test_irreducible_pairs_at_thirteen():
    # 2mn divides p - 1, so the count is the closed form times |SL2|
    p, n, m = 13, 2, 3
    expected = Fraction((m - 1) * (n - 1), 2) * (p - 2) * (p**3 - p)
    assert irreducible_pair_count("SL2", p, n, m) == expected == 24024


def test_irreducible_pairs_off_the_gate():
    # off the gate the count is still a union of free PGL2 orbits
    for p in (3, 5, 7):
        c = irreducible_pair_count("SL2", p, 2, 3)
        assert c % (p**3 - p) == 0
    assert irreducible_pair_count("SL2", 5, 2, 3) == 600
    assert irreducible_pair_count("SL2", 3, 2, 3) == 48


def test_irreducible_pairs_agree_with_algebra_dimension():
    p = 5
    fast = irreducible_pair_count("SL2", p, 2, 3)
    slow = sum(1 for a, b in link_solutions("SL2", p, 2, 3, 1) if is_abs_irreducible([a, b], p))
    assert fast == slow


def test_threads_are_deterministic(monkeypatch):
    serial = irreducible_pair_count("SL2", 7, 2, 3, threads=1)
    assert irreducible_pair_count("SL2", 7, 2, 3, threads=2) == serial
    monkeypatch.setenv("TLEPOLY_THREADS", "2")
    assert irreducible_pair_count("SL2", 7, 2, 3) == serial


@pytest.mark.xfail(strict=True, reason="p = 5 is off the 2mn | p - 1 gate; the count is 600")
def test_irreducible_pairs_literal_360():
    assert irreducible_pair_count("SL2", 5, 2, 3) == 360


# --- lambda character varieties -------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("r", [1, 2])
def test_lambda11_counts(p, r):
    assert lambda_orbit_count((1, 1), p, r) == evaluate(lambda11(r), p)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("r", [1, 2])
def test_lambda111_counts(p, r):
    assert lambda_orbit_count((1, 1, 1), p, r) == evaluate(lambda111(r), p)


def test_lambda11_anchor():
    assert lambda_orbit_count((1, 1), 3, 1) == 18


@pytest.mark.parametrize("partition,p,r", [((1, 1), 2, 1), ((1, 1), 3, 1), ((1, 1), 2, 2), ((1, 1, 1), 2, 1)])
def test_lambda_bruteforce_agrees(partition, p, r):
    assert lambda_orbit_count_bruteforce(partition, p, r) == lambda_orbit_count(partition, p, r)


def test_lambda_unsupported_partition():
    with pytest.raises(ValueError):
        lambda_orbit_count((2, 1), 3, 1)


# --- verify ---------------------------------------------------------------------


def test_verify_gated_prime_passes():
    rep = verify([13], LinkParams.make(2, 3, 1), ["irreducible-count"])
    (row,) = rep.rows
    assert row.status == "pass" and row.observed == 24024


def test_verify_off_gate_prime_skips_then_checks_divisibility():
    rep = verify([5], LinkParams.make(2, 3, 1), ["irreducible-count"])
    statuses = {r.check: r.status for r in rep.rows}
    assert statuses == {"irreducible-count": "skip", "irreducible-divisibility": "pass"}
    assert rep.find("irreducible-count")[0].observed == 600
    assert rep.ok


def test_verify_default_sl2_checks():
    rep = verify([3], LinkParams.make(2, 3, 2))
    assert rep.ok
    assert {r.check for r in rep.rows} >= {"orbit-stabilizer", "centralizer-product"}


def test_verify_lambda_rows():
    rep = verify([2, 3], None, ["lambda11", "lambda111"], r_list=(1,))
    assert all(r.status == "pass" for r in rep.rows)
    assert len(rep.rows) == 4


def test_verify_sl3_v0_checks():
    rep = verify([19], LinkParams.make(2, 3, 1), ["v0-h3-sl3", "v0-h4-sl3"], group="SL3")
    assert [(r.status, r.observed) for r in rep.rows] == [("pass", 60), ("pass", 15)]
    # 3mn = 18 does not divide 6, so the torus points are not all rational
    rep = verify([7], LinkParams.make(2, 3, 1), ["v0-h3-sl3", "v0-h4-sl3"], group="SL3")
    assert all(r.status == "skip" and "gate" in r.reason for r in rep.rows)


def test_verify_sl3_budget_skips():
    rep = verify([5], LinkParams.make(2, 3, 2), ["centralizer-product", "sl3-mod-h2"], group="SL3")
    assert all(r.status == "skip" and r.reason.startswith("budget") for r in rep.rows)
    assert rep.ok


def test_verify_sl3_mod_h2_conventions():
    lp = LinkParams.make(2, 3, 2)
    group = verify([2], lp, ["sl3-mod-h2"], group="SL3", convention="group")
    display = verify([2], lp, ["sl3-mod-h2"], group="SL3", convention="display")
    assert group.rows[0].status == "pass" and group.rows[0].observed == 132
    assert display.rows[0].status == "fail" and display.rows[0].expected == 108


def test_verify_rejects_bad_input():
    with pytest.raises(ValueError):
        verify([4], LinkParams.make(2, 3, 1))
    with pytest.raises(ValueError):
        verify([5], LinkParams.make(2, 3, 1), ["no-such-check"])
    with pytest.raises(ValueError):
        verify([5], None, ["orbit-stabilizer"])


def test_report_json_round_trip():
    rep = verify([3], LinkParams.make(2, 3, 2), ["orbit-stabilizer", "centralizer-product"])
    again = VerificationReport.from_json(json.loads(rep.dumps()))
    assert again.to_json() == rep.to_json()


def test_fixtures_record_then_compare(tmp_path):
    path = tmp_path / "fixtures.json"
    lp = LinkParams.make(2, 3, 1)
    first = verify([5], lp, ["irreducible-count"], fixtures=path)
    assert first.ok and path.exists()
    stored = json.loads(path.read_text())
    assert any(v["observed"] == "600" for v in stored.values())
    assert verify([5], lp, ["irreducible-count"], fixtures=path).ok

    key = next(k for k, v in stored.items() if v["observed"] == "600")
    stored[key]["observed"] = "601"
    path.write_text(json.dumps(stored))
    rep = verify([5], lp, ["irreducible-count"], fixtures=path)
    assert not rep.ok
    assert any("regression" in r.reason for r in rep.rows)
