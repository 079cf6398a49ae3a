"""Exact E-polynomials of SL2 and SL3 character varieties of torus links."""

from .qpoly import IntPoly, NotAPolynomial, PoleError, Q, RatFunc, evaluate, to_intpoly
from .report import EPolyReport, InternalMismatch, InvalidParams, LinkParams
from .sl2link import epoly_sl2, total_sl2_assembled, total_sl2_closed
from .sl3link import epoly_sl3, total_sl3_assembled, total_sl3_closed

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "RatFunc",
    "Q",
    "NotAPolynomial",
    "PoleError",
    "evaluate",
    "to_intpoly",
    "LinkParams",
    "InvalidParams",
    "InternalMismatch",
    "EPolyReport",
    "epoly_sl2",
    "epoly_sl3",
    "total_sl2_assembled",
    "total_sl2_closed",
    "total_sl3_assembled",
    "total_sl3_closed",
]
