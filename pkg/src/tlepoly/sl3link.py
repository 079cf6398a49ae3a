"""E-polynomials of SL3 character varieties of torus links.

Nine strata, labelled by the stabilizer of ``(A, B)`` and of ``A^n``.  The
finite-group quotients in the H3 strata are done in R(Z2) and R(S3)
(:func:`stratum_sl3`) and, independently, with the expanded polynomials
(:func:`stratum_sl3_display`); the two must agree.

The ``convention`` keyword is passed down to the H1 and H2/SL3 strata, the
only places where a factor standing for e(SL3)^{d-1} appears; see
:mod:`tlepoly.gitq`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freechar import char_free_sl3
from .gitq import (
    h4_mod_h2,
    h4_mod_h3_equivariant,
    h4_mod_h4,
    sl3_factor,
    sl3_mod_h2,
    sl3_mod_h3,
    sl3_mod_h4,
)
from .qpoly import IntPoly, NotAPolynomial, Q, RatFunc, pow_int, to_intpoly
from .repring import S3Class, Z2Class, invariant_part, s3_torus_h3, z2_mul
from .report import Check, EPolyReport, InternalMismatch, InvalidParams, LinkParams

__all__ = [
    "STRATA_SL3",
    "CountHelpers",
    "stratum_sl3",
    "stratum_sl3_display",
    "v0_h3_h4",
    "v0_h3_h3",
    "total_sl3_assembled",
    "total_sl3_closed",
    "twisted_hopf_sl3",
    "knot_census_sl3",
    "epoly_sl3",
    "P4",
    "P_LOW",
]

STRATA_SL3 = (
    "H1_SL3",
    "H2_SL3",
    "H2_H4",
    "SL3_SL3",
    "H4_SL3",
    "H4_H4",
    "H3_SL3",
    "H3_H4",
    "H3_H3",
)

HALF = RatFunc(1, 2)
SIXTH = RatFunc(1, 6)
THIRD = RatFunc(1, 3)

# E-polynomials of the two kinds of irreducible components for d = 1
P4 = Q**4 + 4 * Q**3 - 9 * Q**2 - 3 * Q + 12
P_LOW = Q**2 - 3 * Q + 3


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InvalidParams(f"{a} is not divisible by {b}; parameters are not coprime")
    return q


@dataclass(frozen=True)
class CountHelpers:
    """Integer data of the d = 1 character variety."""

    n: int
    m: int

    @staticmethod
    def delta(k: int) -> int:
        return 1 if k % 2 == 0 else 0

    @property
    def delta_n(self) -> int:
        return self.delta(self.n)

    @property
    def delta_nm(self) -> int:
        return self.delta(self.n * self.m)

    @property
    def c_irr4(self) -> int:
        n, m = self.n, self.m
        return _exact_div((m - 1) * (m - 2) * (n - 1) * (n - 2), 12)

    @property
    def c_irr_low(self) -> int:
        n, m = self.n, self.m
        return _exact_div((n - 1) * (m - 1) * (n + m - 4), 2)

    @property
    def c_partial(self) -> int:
        return ((self.m - 1) // 2) * ((self.n - 1) // 2)

    def partial_factor(self) -> RatFunc:
        return self.c_partial * (Q - 2) + self.delta_n * (self.m - 1) * (Q - 1)


def v0_h3_h4(p: LinkParams) -> Z2Class:
    """Z2-class of the H3/H4 locus of the knot variety (punctured lines)."""
    k = p.m * p.n
    c = _exact_div(3 * k * (k - 1), 2)
    return Z2Class((k // 2) * (Q - 1) - c, ((k - 1) // 2) * (Q - 1) - c)


def v0_h3_h3(p: LinkParams) -> S3Class:
    """S3-class of the locus of diagonal pairs whose n-th power is regular."""
    k = p.m * p.n
    t = Q * Q - Q - (k // 2) * (Q - 1) + k * k
    s = -(((k - 1) // 2) * (Q - 1) - k * k)
    dd = -((k + 1) * (Q - 1) - 2 * k * k)
    return S3Class(t, s, dd)


def stratum_sl3(s: str, p: LinkParams, convention: str = "display") -> RatFunc:
    """Stratum E-polynomial; the H3 strata go through the representation rings."""
    h = CountHelpers(p.n, p.m)
    n, m, d = p.n, p.m, p.d
    mn = m * n
    if s == "H1_SL3":
        return pow_int(sl3_factor(convention), d - 1) * (h.c_irr4 * P4 + h.c_irr_low * P_LOW)
    if s == "H2_SL3":
        return 3 * mn * h.partial_factor() * sl3_mod_h2(d, convention)
    if s == "H2_H4":
        return (Q - 3 * mn - 1) * h.partial_factor() * h4_mod_h2(d)
    if s == "SL3_SL3":
        return 3 * char_free_sl3(d - 1)
    if s == "H4_SL3":
        return (3 * mn - 3) * sl3_mod_h4(d)
    if s == "H4_H4":
        return (Q - 3 * mn - 1) * h4_mod_h4(d)
    if s == "H3_SL3":
        return _exact_div(3 * mn * mn - 9 * mn + 6, 6) * sl3_mod_h3(d)
    if s == "H3_H4":
        return invariant_part(z2_mul(v0_h3_h4(p), h4_mod_h3_equivariant(d)))
    if s == "H3_H3":
        return invariant_part(v0_h3_h3(p) * s3_torus_h3(d - 1))
    raise ValueError(f"unknown SL3 stratum {s!r}")


def stratum_sl3_display(s: str, p: LinkParams) -> RatFunc:
    """Expanded polynomial forms of the H3/H4 and H3/H3 strata."""
    h = CountHelpers(p.n, p.m)
    d = p.d
    mn = p.m * p.n
    if s == "H3_H4":
        return (
            (mn - 1) * (Q - 3 * mn - 1)
            * (HALF * Q * pow_int(Q - 1, 2 * d - 3) - pow_int(Q, d - 1) * pow_int(Q - 1, 2 * d - 3))
            + HALF * h.delta_nm * Q * pow_int(Q - 1, d) * pow_int(Q + 1, d - 2)
            + (Q * (mn // 2) + (mn - 1) // 2)
            * pow_int(Q, d - 1) * pow_int(Q + 1, d - 2) * pow_int(Q - 1, 2 * d - 2)
            - _exact_div(3 * mn * (mn - 1), 2)
            * pow_int(Q, d - 1) * pow_int(Q + 1, d - 1) * pow_int(Q - 1, 2 * d - 3)
        )
    if s == "H3_H3":
        return (
            HALF * pow_int(Q * Q - 1, d - 1) * (Q - 1) * (Q - h.delta_nm)
            + SIXTH * pow_int(Q - 1, 2 * d - 2) * ((Q - 1) * (Q - 3 * mn - 1) + 6 * mn * mn)
            + THIRD * pow_int(Q * Q + Q + 1, d - 1) * (Q - 1) * (Q + 2)
        )
    raise ValueError(f"no expanded display for stratum {s!r}")


def total_sl3_assembled(p: LinkParams, convention: str = "display") -> RatFunc:
    total = RatFunc(0)
    for s in STRATA_SL3:
        total = total + stratum_sl3(s, p, convention)
    return total


def total_sl3_closed(p: LinkParams, convention: str = "display") -> RatFunc:
    """Closed formula for the total, one named sub-expression per stratum type."""
    n, m, d = p.n, p.m, p.d
    mn = m * n
    h = CountHelpers(n, m)
    pf = h.partial_factor()
    dnm = h.delta_nm

    if convention == "display":
        h1_fiber = RatFunc(1, 12) * pow_int(Q**3 - Q, d - 1) * pow_int(Q**5 - Q**3, d - 1)
        h2_lead = pow_int(Q, 3 * d - 3) * pow_int(Q + 1, d - 1) * pow_int(Q - 1, d - 2)
    else:
        h1_fiber = RatFunc(1, 12) * pow_int(sl3_factor(convention), d - 1)
        h2_lead = pow_int(Q**3 - 1, d - 1) * pow_int(Q, 2 * d - 2) / (Q - 1)

    irreducible = h1_fiber * (
        (m - 1) * (m - 2) * (n - 1) * (n - 2) * P4 + 6 * (n - 1) * (m - 1) * (n + m - 4) * P_LOW
    )
    partial_central = 3 * mn * pf * pow_int(Q**3 - Q, d - 1) * (
        h2_lead - (2 * pow_int(Q, 2 * d - 2) - 1) * pow_int(Q - 1, d - 2) + pow_int(Q - 1, d - 1)
    )
    partial_block = (Q - 3 * mn - 1) * pf * pow_int(Q - 1, 2 * d - 2) * pow_int(Q * Q + Q, d - 1)
    central = (
        3 * pow_int(Q**8 - Q**6 - Q**5 + Q**3, d - 2)
        + 3 * pow_int(Q - 1, 2 * d - 4) * (pow_int(Q, 3 * d - 6) - pow_int(Q, d - 1))
        + HALF * pow_int(Q - 1, 2 * d - 4) * Q * (Q + 1)
        + RatFunc(3, 2) * pow_int(Q * Q - 1, d - 2) * Q * (Q - 1)
        + pow_int(Q * Q + Q + 1, d - 2) * Q * (Q + 1)
        - 3 * pow_int(Q - 1, d - 2) * pow_int(Q, d - 2) * pow_int(Q * Q - 1, d - 2)
        * (2 * pow_int(Q, 2 * d - 4) - Q)
    )
    block_central = (3 * mn - 3) * (
        HALF * (pow_int(Q - 1, 2 * d - 2) + pow_int(Q * Q - 1, d - 1))
        + pow_int(Q - 1, 2 * d - 3) * (pow_int(Q * Q + Q, d - 1) - 2 * pow_int(Q, d - 1) + 1)
        + pow_int(Q - 1, d - 1)
        * (
            pow_int(Q - 1, d - 2) * pow_int(Q, d - 2) * (pow_int(Q + 1, d - 2) - 1)
            + HALF * pow_int(Q - 1, d - 2)
            - HALF * pow_int(Q + 1, d - 2)
        )
        + pow_int(Q - 1, 2 * d - 4)
        * (
            pow_int(Q * Q + Q + 1, d - 1) * pow_int(Q + 1, d - 2) * pow_int(Q, 3 * d - 4)
            - pow_int(Q * Q + Q, d - 2) * (2 * pow_int(Q, 2 * d - 2) - 1)
            - pow_int(Q, d - 2) * (pow_int(Q, d - 1) - 1) * (pow_int(Q, d - 1) - 1)
            - (2 * pow_int(Q, 2 * d - 3) - 1)
            * (pow_int(Q * Q + Q, d - 1) - 2 * pow_int(Q, d - 1) + 1)
        )
    )
    block_block = (Q - 3 * mn - 1) * pow_int(Q - 1, d - 1) * (
        pow_int(Q**3 - Q, d - 2)
        - pow_int(Q * Q - Q, d - 2)
        + HALF * Q * pow_int(Q + 1, d - 2)
        + HALF * Q * pow_int(Q - 1, d - 2)
    )
    torus_central = RatFunc(mn * mn - 3 * mn + 2, 2) * (
        pow_int(Q - 1, 2 * d - 2)
        + 3 * pow_int(Q - 1, 2 * d - 3) * (pow_int(Q * Q + Q, d - 1) - 2 * pow_int(Q, d - 1) + 1)
        + pow_int(Q - 1, 2 * d - 4)
        * (
            pow_int(Q * Q + Q + 1, d - 1) * pow_int(Q + 1, d - 1) * pow_int(Q, 3 * d - 3)
            - 3 * pow_int(Q + 1, d - 1) * (2 * pow_int(Q, 3 * d - 3) - pow_int(Q, d - 1))
            + 6 * pow_int(Q, d - 1) * (pow_int(Q, 2 * d - 2) - 1)
            + 2
        )
    )
    torus_block = (
        (mn - 1) * (Q - 3 * mn - 1)
        * (HALF * Q * pow_int(Q - 1, 2 * d - 3) - pow_int(Q, d - 1) * pow_int(Q - 1, 2 * d - 3))
        + HALF * dnm * Q * pow_int(Q - 1, d) * pow_int(Q + 1, d - 2)
        + (Q * (mn // 2) + (mn - 1) // 2)
        * pow_int(Q, d - 1) * pow_int(Q + 1, d - 2) * pow_int(Q - 1, 2 * d - 2)
        - RatFunc(3 * mn * (mn - 1), 2)
        * pow_int(Q, d - 1) * pow_int(Q + 1, d - 1) * pow_int(Q - 1, 2 * d - 3)
    )
    torus_torus = (
        HALF * pow_int(Q * Q - 1, d - 1) * (Q - 1) * (Q - dnm)
        + SIXTH * pow_int(Q - 1, 2 * d - 2) * ((Q - 1) * (Q - 3 * mn - 1) + 6 * mn * mn)
        + THIRD * pow_int(Q * Q + Q + 1, d - 1) * (Q - 1) * (Q + 2)
    )
    return (
        irreducible
        + partial_central
        + partial_block
        + central
        + block_central
        + block_block
        + torus_central
        + torus_block
        + torus_torus
    )


def twisted_hopf_sl3(k: int) -> IntPoly:
    """Closed polynomial for the twisted Hopf link with parameter k."""
    if k < 1:
        raise ValueError("k must be positive")
    val = (
        Q**4 + Q**2 + 1
        + RatFunc(k * k - 3 * k + 2, 2) * (Q**6 + 2 * Q**5 - 4 * Q**4 + Q**3 + 3 * Q**2 - 3 * Q + 2)
        + 3 * (k - 1) * (Q**4 - Q**3 + Q**2 - Q + 1)
        + (k - 1) * (Q - 1) * (Q**3 - 2 * Q**2 + Q)
        - ((k - 1) // 2) * (Q**3 - 2 * Q**2 + 1) * (Q - 1)
    )
    return to_intpoly(val)


def knot_census_sl3(n: int, m: int) -> IntPoly:
    """d = 1 value rebuilt from the component census of the knot variety.

    Irreducible components, the partially reducible ones (each contributing
    its base times C^*), and the totally reducible plane C^2.
    """
    h = CountHelpers(n, m) if m % 2 else CountHelpers(m, n)
    val = h.c_irr4 * P4 + h.c_irr_low * P_LOW + h.partial_factor() * (Q - 1) + Q * Q
    return to_intpoly(val)


def epoly_sl3(p: LinkParams, convention: str = "display") -> EPolyReport:
    if not isinstance(p, LinkParams):
        raise InvalidParams("expected LinkParams")
    CountHelpers(p.n, p.m).c_irr4  # divisibility guard
    strata = [(s, stratum_sl3(s, p, convention)) for s in STRATA_SL3]
    checks = []
    for s in ("H3_H4", "H3_H3"):
        ring = dict(strata)[s]
        if ring != stratum_sl3_display(s, p):
            raise InternalMismatch(f"SL3 {p.orientation()}: stratum {s} ring and display routes differ")
        checks.append(Check(f"{s}:ring==display", "pass"))
    assembled = RatFunc(0)
    for _, v in strata:
        assembled = assembled + v
    closed = total_sl3_closed(p, convention)
    if assembled != closed:
        raise InternalMismatch(f"SL3 {p.orientation()}: assembled != closed")
    try:
        total = to_intpoly(assembled)
    except NotAPolynomial as exc:
        raise InternalMismatch(f"SL3 {p.orientation()}: total is not a polynomial") from exc
    checks.append(Check("assembled==closed", "pass", "stratum sum equals the closed formula"))
    checks.append(Check("integral", "pass", f"degree {total.degree}"))
    if p.d == 1:
        census = knot_census_sl3(p.n, p.m)
        status = "pass" if census == total else "fail"
        checks.append(Check("knot-census", status, f"component census gives {census}"))
    return EPolyReport("SL3", p, strata, total, checks, convention)
