"""Link parameters and report containers shared by the SL2 and SL3 engines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .qpoly import IntPoly, NotAPolynomial, RatFunc, to_intpoly

__all__ = [
    "InvalidParams",
    "InternalMismatch",
    "LinkParams",
    "Check",
    "EPolyReport",
]


class InvalidParams(ValueError):
    """Link parameters violating positivity or coprimality."""


class InternalMismatch(ArithmeticError):
    """Two independent computations of the same polynomial disagree."""


@dataclass(frozen=True)
class LinkParams:
    """The torus link K^d_{n,m}: d parallel copies of the (n, m) torus knot.

    Use :meth:`make` to validate and canonicalize; the stored orientation
    always has ``m`` odd.
    """

    n: int
    m: int
    d: int
    swapped: bool = False

    @classmethod
    def make(cls, n: int, m: int, d: int) -> "LinkParams":
        for name, v in (("n", n), ("m", m), ("d", d)):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidParams(f"{name} must be a positive integer, got {v!r}")
        if gcd(n, m) != 1:
            raise InvalidParams(f"n={n} and m={m} are not coprime")
        if m % 2 == 0:
            return cls(m, n, d, True)
        return cls(n, m, d, False)

    def orientation(self) -> str:
        note = " (swapped so that m is odd)" if self.swapped else ""
        return f"n={self.n}, m={self.m}, d={self.d}{note}"

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "d": self.d, "swapped": self.swapped}


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail", "skip" or "info"
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class EPolyReport:
    """Per-stratum breakdown, total and consistency checks for one link."""

    group: str
    params: LinkParams
    strata: list[tuple[str, RatFunc]]
    total: IntPoly
    checks: list[Check] = field(default_factory=list)
    convention: str = "display"

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def stratum_polys(self) -> list[tuple[str, RatFunc, IntPoly | None]]:
        out = []
        for name, value in self.strata:
            try:
                poly = to_intpoly(value)
            except NotAPolynomial:
                poly = None
            out.append((name, value, poly))
        return out

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "params": self.params.to_json(),
            "convention": self.convention,
            "strata": [
                {"id": name, "value": value.to_json()} for name, value in self.strata
            ],
            "total": self.total.to_json(),
            "checks": [c.to_json() for c in self.checks],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "EPolyReport":
        p = data["params"]
        return cls(
            group=data["group"],
            params=LinkParams(p["n"], p["m"], p["d"], p.get("swapped", False)),
            strata=[(s["id"], RatFunc.from_json(s["value"])) for s in data["strata"]],
            total=IntPoly.from_json(data["total"]),
            checks=[Check(c["name"], c["status"], c.get("detail", "")) for c in data["checks"]],
            convention=data.get("convention", "display"),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, EPolyReport):
            return NotImplemented
        return self.to_json() == other.to_json()
