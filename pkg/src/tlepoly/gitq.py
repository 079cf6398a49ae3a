"""E-polynomials of the GIT quotients that appear as fibers of the SL3 strata.

Subgroups of SL3 (up to conjugacy):

* H2 -- ``diag(t, t, t^-2)``
* H3 -- the diagonal maximal torus
* H4 -- block matrices ``diag(P, det(P)^-1)`` with ``P`` in GL2

Every quotient is of a ``(d - 1)``-fold product, so it is a point at
``d = 1``.  Several quotients come in two implementations (a closed
expression and a sum over the strata of its derivation) that are compared
by the test suite.

The ``convention`` argument of :func:`sl3_mod_h2` selects the factor used
for the rep-level count of SL3^{d-1}: ``"display"`` gives the first term
of the closed form the factor ``((q^3 - q)(q^5 - q^3))^{d-1}``, while
``"group"`` uses the actual group order ``e(SL3)^{d-1}``.  Only ``"group"``
agrees with finite-field counts.
"""

from __future__ import annotations

from .freechar import char_free_gl2_parts, char_free_sl2, lambda11_z2, lambda111
from .qpoly import Q, RatFunc, e_general_linear, e_special_linear, pow_int
from .repring import Z2Class

__all__ = [
    "CONVENTIONS",
    "sl3_mod_h2",
    "sl3_mod_h2_strata",
    "sl3_mod_h4",
    "sl3_mod_h4_closed",
    "r1_quotient",
    "r2_quotient",
    "irr_quotient",
    "r1_count",
    "r2_count",
    "h4_mod_h4",
    "sl3_mod_h3",
    "h4_mod_h2",
    "h4_mod_h3_equivariant",
    "sl3_factor",
]

HALF = RatFunc(1, 2)
CONVENTIONS = ("display", "group")

E_SL3 = RatFunc(e_special_linear(3))
E_GL2 = RatFunc(e_general_linear(2))


def _check_d(d: int) -> None:
    if d < 1:
        raise ValueError("d must be at least 1")


def sl3_factor(convention: str) -> RatFunc:
    """Per-generator factor standing for e(SL3) under a convention."""
    if convention == "display":
        return (Q**3 - Q) * (Q**5 - Q**3)
    if convention == "group":
        return E_SL3
    raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")


def sl3_mod_h2(d: int, convention: str = "display") -> RatFunc:
    """e(SL3^{d-1} // H2), closed form."""
    _check_d(d)
    sl3_factor(convention)  # validates the name
    if convention == "display":
        lead = pow_int(Q, 3 * d - 3) * pow_int(Q + 1, d - 1) * pow_int(Q - 1, d - 2)
    else:
        lead = pow_int(Q**3 - 1, d - 1) * pow_int(Q, 2 * d - 2) / (Q - 1)
    return pow_int(Q**3 - Q, d - 1) * (
        lead
        - (2 * pow_int(Q, 2 * d - 2) - 1) * pow_int(Q - 1, d - 2)
        + pow_int(Q - 1, d - 1)
    )


def sl3_mod_h2_strata(d: int, convention: str = "group") -> RatFunc:
    """e(SL3^{d-1} // H2) as free part plus the H4 part.

    W1 and W2 are the tuples whose bottom row, resp. last column, vanishes
    off the diagonal; each has class q^{2d-2} e(GL2)^{d-1} and they meet
    in H4^{d-1}.  H2 acts freely (modulo its finite kernel) on the rest.
    """
    _check_d(d)
    gl = pow_int(E_GL2, d - 1)
    total = pow_int(sl3_factor(convention), d - 1)
    w_union = (2 * pow_int(Q, 2 * d - 2) - 1) * gl
    return (total - w_union) / (Q - 1) + gl


# --- SL3^{d-1} // H4 --------------------------------------------------------

def r1_quotient(d: int) -> RatFunc:
    """Tuples preserving the splitting C^2 + C: the GL2 character variety."""
    _check_d(d)
    red, irr = char_free_gl2_parts(d - 1)
    return red + irr


def r2_quotient(d: int) -> RatFunc:
    """Reducible semisimple tuples with an invariant line inside C^2."""
    _check_d(d)
    return pow_int(Q - 1, 2 * d - 3) * (pow_int(Q * Q + Q, d - 1) - 2 * pow_int(Q, d - 1) + 1)


def r1_count(d: int) -> RatFunc:
    _check_d(d)
    return (
        pow_int(Q - 1, 2 * d - 2)
        * pow_int(Q, d - 1)
        * pow_int(Q + 1, d - 1)
        * (2 * pow_int(Q, 2 * d - 2) - 1)
    )


def r2_count(d: int) -> RatFunc:
    _check_d(d)
    qd = pow_int(Q, d - 1)
    return (
        pow_int(Q - 1, 2 * d - 2)
        * (Q + 1)
        * (
            qd * (qd - 1) * (qd - 1)
            + (2 * pow_int(Q, 2 * d - 2) - Q) * (qd * pow_int(Q + 1, d - 1) - 2 * qd + 1)
        )
    )


def irr_quotient(d: int) -> RatFunc:
    """Irreducible part: GL2 (modulo mu_3) acts freely on it."""
    _check_d(d)
    total = pow_int(E_SL3, d - 1)
    return (total - r1_count(d) - r2_count(d)) / E_GL2


def sl3_mod_h4(d: int) -> RatFunc:
    """e(SL3^{d-1} // H4) as the sum of its three sub-strata."""
    return r1_quotient(d) + r2_quotient(d) + irr_quotient(d)


def sl3_mod_h4_closed(d: int) -> RatFunc:
    """e(SL3^{d-1} // H4) as a single closed expression."""
    _check_d(d)
    k = d - 2
    line1 = HALF * (pow_int(Q - 1, 2 * d - 2) + pow_int(Q * Q - 1, d - 1)) + pow_int(
        Q - 1, 2 * d - 3
    ) * (pow_int(Q * Q + Q, d - 1) - 2 * pow_int(Q, d - 1) + 1)
    line2 = pow_int(Q - 1, d - 1) * (
        pow_int(Q - 1, k) * pow_int(Q, k) * (pow_int(Q + 1, k) - 1)
        + HALF * pow_int(Q - 1, k)
        - HALF * pow_int(Q + 1, k)
    )
    line3 = pow_int(Q - 1, 2 * d - 4) * (
        pow_int(Q * Q + Q + 1, d - 1) * pow_int(Q + 1, k) * pow_int(Q, 3 * d - 4)
        - pow_int(Q * Q + Q, k) * (2 * pow_int(Q, 2 * d - 2) - 1)
        - pow_int(Q, k) * (pow_int(Q, d - 1) - 1) * (pow_int(Q, d - 1) - 1)
        - (2 * pow_int(Q, 2 * d - 3) - 1)
        * (pow_int(Q * Q + Q, d - 1) - 2 * pow_int(Q, d - 1) + 1)
    )
    return line1 + line2 + line3


# --- the remaining quotients -------------------------------------------------

def h4_mod_h4(d: int) -> RatFunc:
    """e(H4^{d-1} // H4): the GL2 character variety of the free group."""
    _check_d(d)
    return pow_int(Q - 1, d - 1) * char_free_sl2(d - 1)


def sl3_mod_h3(d: int) -> RatFunc:
    _check_d(d)
    return lambda111(d - 1) / pow_int(Q - 1, d - 1)


def h4_mod_h2(d: int) -> RatFunc:
    """H2 acts trivially on H4, so this is e(GL2)^{d-1}."""
    _check_d(d)
    return pow_int(Q - 1, 2 * d - 2) * pow_int(Q * Q + Q, d - 1)


def h4_mod_h3_equivariant(d: int) -> Z2Class:
    """Z2-equivariant class of H4^{d-1} // H3 (Weyl group of the 2x2 block)."""
    _check_d(d)
    return lambda11_z2(d - 1)
