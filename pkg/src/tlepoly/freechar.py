"""E-polynomials of free-group character varieties and lambda-character varieties.

Throughout, ``r`` is the rank of the free group.  Inside the link strata the
rank is ``d - 1``, so the formulas must make sense at ``r = 0``; every
function here returns 1 there (the point variety) by plain substitution,
which is why everything is computed with :class:`RatFunc`.
"""

from __future__ import annotations

from .qpoly import IntPoly, Q, RatFunc, pow_int, to_intpoly
from .repring import Z2Class, z2_base_from_total, z2_torus

__all__ = [
    "char_free_sl2",
    "char_free_gl2",
    "char_free_gl2_parts",
    "char_free_sl3",
    "lambda11",
    "mu2_stratum_gl2",
    "lambda11_z2",
    "lambda11_z2_derived",
    "lambda111",
    "mu5_stratum_gl3",
    "mu5_complement_cases",
    "mu5_complement_closed",
]

HALF = RatFunc(1, 2)


def _check_rank(r: int) -> None:
    if r < 0:
        raise ValueError("free group rank must be non-negative")


def char_free_sl2(r: int) -> RatFunc:
    """e(SL2^r // SL2)."""
    _check_rank(r)
    k = r - 1
    return (
        pow_int(Q**3 - Q, k)
        - pow_int(Q**2 - Q, k)
        + HALF * Q * (pow_int(Q + 1, k) + pow_int(Q - 1, k))
    )


def char_free_gl2_parts(r: int) -> tuple[RatFunc, RatFunc]:
    """(reducible, irreducible) parts of e(GL2^r // GL2).

    The reducible locus is the symmetric product (C^*)^{2r}/Z2; the
    irreducible part is the known count for the free group.
    """
    _check_rank(r)
    red = HALF * (pow_int(Q - 1, 2 * r) + pow_int(Q * Q - 1, r))
    k = r - 1
    irr = pow_int(Q - 1, r) * (
        pow_int(Q - 1, k) * pow_int(Q, k) * (pow_int(Q + 1, k) - 1)
        + HALF * pow_int(Q - 1, k)
        - HALF * pow_int(Q + 1, k)
    )
    return red, irr


def char_free_gl2(r: int) -> RatFunc:
    """e(GL2^r // GL2) = (q - 1)^r * e(SL2^r // SL2)."""
    _check_rank(r)
    return pow_int(Q - 1, r) * char_free_sl2(r)


def char_free_sl3(r: int) -> RatFunc:
    """e(SL3^r // SL3)."""
    _check_rank(r)
    k = r - 1
    return (
        pow_int(Q**8 - Q**6 - Q**5 + Q**3, k)
        + pow_int(Q - 1, 2 * k) * (pow_int(Q, 3 * k) - pow_int(Q, r))
        + RatFunc(1, 6) * pow_int(Q - 1, 2 * k) * Q * (Q + 1)
        + HALF * pow_int(Q * Q - 1, k) * Q * (Q - 1)
        + RatFunc(1, 3) * pow_int(Q * Q + Q + 1, k) * Q * (Q + 1)
        - pow_int(Q - 1, k) * pow_int(Q, k) * pow_int(Q * Q - 1, k) * (2 * pow_int(Q, 2 * k) - Q)
    )


def _mu2_bracket(r: int) -> RatFunc:
    return pow_int(Q * Q + Q, r) - 2 * pow_int(Q, r) + 1


def mu2_stratum_gl2(r: int) -> IntPoly:
    """Point count of GL2 tuples whose two off-diagonal vectors are both nonzero."""
    _check_rank(r)
    return to_intpoly(pow_int(Q - 1, 2 * r) * _mu2_bracket(r))


def lambda11(r: int) -> RatFunc:
    """e(X_(1,1)(F_r)): GL2^r modulo the diagonal torus."""
    _check_rank(r)
    return pow_int(Q - 1, 2 * r) + pow_int(Q - 1, 2 * r - 1) * _mu2_bracket(r)


def lambda11_z2(r: int) -> Z2Class:
    """Z2-equivariant class of X_(1,1)(F_r), Z2 swapping the two basis vectors."""
    _check_rank(r)
    a = pow_int(Q - 1, 2 * r - 1)
    b = (Q * Q - Q) * pow_int(Q * Q - 1, r - 1)
    t = pow_int(Q, r + 1) * pow_int(Q + 1, r - 1) * a - pow_int(Q, r) * a + HALF * (Q * a + b)
    n = pow_int(Q, r) * pow_int(Q + 1, r - 1) * a - pow_int(Q, r) * a + HALF * (Q * a - b)
    return Z2Class(t, n)


def lambda11_z2_derived(r: int) -> Z2Class:
    """Rebuild :func:`lambda11_z2` from the equivariant stratification.

    The diagonal stratum is (C^*)^{2r} with the swap action.  The free
    stratum is obtained from the whole of GL2^r (trivial class) by removing
    the one-sided triangular tuples and the diagonal ones, and then dividing
    out the C^* fiber, which Z2 inverts.
    """
    _check_rank(r)
    x = pow_int(Q - 1, 2 * r)
    y = pow_int(Q * Q - 1, r)
    diag = Z2Class(HALF * (x + y), HALF * (x - y))
    whole = Z2Class(pow_int(Q * Q + Q, r) * x, 0)
    one_sided = Z2Class(x * (pow_int(Q, r) - 1), x * (pow_int(Q, r) - 1))
    free_total = whole - one_sided - diag
    return diag + z2_base_from_total(free_total, z2_torus(1))


def mu5_complement_cases(r: int) -> dict[str, RatFunc]:
    """The six disjoint pieces of GL3^r minus the mu^5 stratum."""
    _check_rank(r)
    base = pow_int(Q - 1, 3 * r)
    s = pow_int(Q, r) * pow_int(Q + 1, r) - 2 * pow_int(Q, r) + 1
    qr1 = pow_int(Q, r) - 1
    return {
        "one_vector": 6 * base * (pow_int(Q, 2 * r) - 1) * s,
        "split_block": 3 * base * s,
        "full_flag": 6 * base * qr1 * qr1 * pow_int(Q, r),
        "two_vectors": 6 * base * qr1 * qr1,
        "single_entry": 6 * base * qr1,
        "diagonal": base,
    }


def mu5_complement_closed(r: int) -> RatFunc:
    _check_rank(r)
    return pow_int(Q - 1, 3 * r) * (
        3 * pow_int(Q + 1, r) * (2 * pow_int(Q, 3 * r) - pow_int(Q, r))
        - 6 * pow_int(Q, 3 * r)
        + 6 * pow_int(Q, r)
        - 2
    )


def _mu5_bracket(r: int) -> RatFunc:
    return (
        pow_int(Q * Q + Q + 1, r) * pow_int(Q + 1, r) * pow_int(Q, 3 * r)
        - 3 * pow_int(Q + 1, r) * (2 * pow_int(Q, 3 * r) - pow_int(Q, r))
        + 6 * pow_int(Q, r) * (pow_int(Q, 2 * r) - 1)
        + 2
    )


def mu5_stratum_gl3(r: int) -> IntPoly:
    """Point count of GL3 tuples with irreducible off-diagonal support."""
    _check_rank(r)
    return to_intpoly(pow_int(Q - 1, 3 * r) * _mu5_bracket(r))


def lambda111(r: int) -> RatFunc:
    """e(X_(1,1,1)(F_r)): GL3^r modulo the diagonal torus."""
    _check_rank(r)
    return (
        pow_int(Q - 1, 3 * r)
        + 3 * pow_int(Q - 1, 3 * r - 1) * _mu2_bracket(r)
        + pow_int(Q - 1, 3 * r - 2) * _mu5_bracket(r)
    )
