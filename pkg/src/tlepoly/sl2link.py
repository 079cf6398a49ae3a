"""E-polynomials of SL2 character varieties of torus links.

The character variety splits into four pieces according to the stabilizer
of ``(A, B)`` and of ``A^n``:

* ``W_H1_SL2`` -- irreducible pairs; ``A^n`` is central so the ``F_i`` are free.
* ``W_SL2_SL2`` -- ``A`` and ``B`` central; two copies of the free character variety.
* ``W_H2_SL2_irr`` -- diagonal ``(A, B)`` with central ``A^n`` and irreducible ``F``.
* ``W_reducible_pair`` -- everything S-equivalent to a diagonal tuple with
  non-central ``A^n``, computed as a Z2 quotient in one go.
"""

from __future__ import annotations

from .freechar import char_free_sl2
from .qpoly import NotAPolynomial, Q, RatFunc, pow_int, to_intpoly
from .repring import Z2Class, z2_quotient_product, z2_torus
from .report import Check, EPolyReport, InternalMismatch, InvalidParams, LinkParams

__all__ = [
    "LinkParams",
    "InvalidParams",
    "InternalMismatch",
    "STRATA_SL2",
    "stratum_sl2",
    "total_sl2_assembled",
    "total_sl2_closed",
    "epoly_sl2",
    "punctured_torus_class",
]

STRATA_SL2 = ("W_H1_SL2", "W_SL2_SL2", "W_H2_SL2_irr", "W_reducible_pair")

HALF = RatFunc(1, 2)


def punctured_torus_class() -> Z2Class:
    """C^* minus {1, -1} with t -> 1/t: (q - 2) T - N.

    C^* alone is qT - N; the two removed points are fixed, so each
    contributes a T.
    """
    return Z2Class(Q - 2, -1)


def _h1_count(p: LinkParams) -> int:
    # number of components of the irreducible locus, each C minus 2 points
    c, r = divmod((p.m - 1) * (p.n - 1), 2)
    assert r == 0, "coprime n, m cannot both be even"
    return c


def stratum_sl2(s: str, p: LinkParams) -> RatFunc:
    d = p.d
    if s == "W_H1_SL2":
        return _h1_count(p) * (Q - 2) * pow_int(Q**3 - Q, d - 1)
    if s == "W_SL2_SL2":
        return 2 * char_free_sl2(d - 1)
    if s == "W_H2_SL2_irr":
        fiber = (Q * Q + Q) * pow_int(Q**3 - Q, d - 2) - pow_int(Q - 1, d - 2) * (
            2 * pow_int(Q, d - 1) - 1
        )
        return (p.m * p.n - 1) * fiber
    if s == "W_reducible_pair":
        return z2_quotient_product(punctured_torus_class(), z2_torus(d - 1))
    raise ValueError(f"unknown SL2 stratum {s!r}")


def total_sl2_assembled(p: LinkParams) -> RatFunc:
    total = RatFunc(0)
    for s in STRATA_SL2:
        total = total + stratum_sl2(s, p)
    return total


def total_sl2_closed(p: LinkParams) -> RatFunc:
    """Closed formula for the total, as a sum of five terms."""
    n, m, d = p.n, p.m, p.d
    line1 = HALF * (m - 1) * (n - 1) * (Q - 2) * pow_int(Q**3 - Q, d - 1)
    line2 = (m * n - 1) * (
        (Q * Q + Q) * pow_int(Q**3 - Q, d - 2) - pow_int(Q - 1, d - 2) * (2 * pow_int(Q, d - 1) - 1)
    )
    line3 = 2 * (
        pow_int(Q**3 - Q, d - 2)
        - pow_int(Q * Q - Q, d - 2)
        + HALF * Q * (pow_int(Q + 1, d - 2) + pow_int(Q - 1, d - 2))
    )
    line4 = (Q - 2) * HALF * (pow_int(Q + 1, d - 1) + pow_int(Q - 1, d - 1))
    line5 = HALF * (pow_int(Q + 1, d - 1) - pow_int(Q - 1, d - 1))
    return line1 + line2 + line3 + line4 + line5


def epoly_sl2(p: LinkParams) -> EPolyReport:
    """Full report; raises :class:`InternalMismatch` if the two routes disagree."""
    if not isinstance(p, LinkParams):
        raise InvalidParams("expected LinkParams")
    strata = [(s, stratum_sl2(s, p)) for s in STRATA_SL2]
    assembled = RatFunc(0)
    for _, v in strata:
        assembled = assembled + v
    closed = total_sl2_closed(p)
    if assembled != closed:
        raise InternalMismatch(f"SL2 {p.orientation()}: assembled {assembled} != closed {closed}")
    try:
        total = to_intpoly(assembled)
    except NotAPolynomial as exc:
        raise InternalMismatch(f"SL2 {p.orientation()}: total is not a polynomial") from exc
    checks = [
        Check("assembled==closed", "pass", "stratum sum equals the closed formula"),
        Check("integral", "pass", f"degree {total.degree}"),
    ]
    return EPolyReport("SL2", p, strata, total, checks)
