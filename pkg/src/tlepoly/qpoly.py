"""Exact univariate arithmetic in the Hodge variable ``q``.

Two value types live here:

* :class:`IntPoly` -- sparse polynomials with Python-int coefficients.
* :class:`RatFunc` -- reduced quotients of two ``IntPoly``.  Rational
  constants such as ``1/2`` or ``1/12`` are carried in the denominator, so a
  polynomial with rational coefficients is a ``RatFunc`` with a constant
  denominator.

Everything is immutable and hashable.  Formula code should stay in
``RatFunc`` until the very end and call :func:`to_intpoly` once.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "NEG_INF",
    "IntPoly",
    "RatFunc",
    "NotAPolynomial",
    "PoleError",
    "Q",
    "ONE",
    "ZERO",
    "poly_arith",
    "pow_int",
    "to_intpoly",
    "evaluate",
    "e_general_linear",
    "e_special_linear",
    "parse_poly",
    "parse_ratfunc",
]

NEG_INF = float("-inf")


class NotAPolynomial(ValueError):
    """A rational function that was expected to be an integer polynomial."""


class PoleError(ZeroDivisionError):
    """Evaluation at a root of the denominator."""


# ---------------------------------------------------------------------------
# dense helpers (ascending coefficient lists, no trailing zeros)
# ---------------------------------------------------------------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _dense_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _content(c: list[int]) -> int:
    g = 0
    for x in c:
        g = gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(c: list[int]) -> list[int]:
    g = _content(c)
    if g in (0, 1):
        return list(c)
    return [x // g for x in c]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        _trim(r)
    return r


def _dense_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of two integer polynomials (up to sign)."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    """Quotient a / b in Z[q]; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if r:
            raise ArithmeticError("inexact polynomial division")
        return []
    quot = [0] * (len(r) - db)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        if lr % lb:
            raise ArithmeticError("inexact polynomial division")
        c = lr // lb
        shift = len(r) - 1 - db
        quot[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        _trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(quot)


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction]


class IntPoly:
    """Sparse integer polynomial in ``q``; ``coeffs`` maps degree to coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[int] | int | None = None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        elif isinstance(coeffs, Mapping):
            c = {}
            for k, v in coeffs.items():
                if k < 0:
                    raise ValueError("negative degree in IntPoly")
                if v:
                    c[int(k)] = int(v)
        else:
            c = {i: int(v) for i, v in enumerate(coeffs) if v}
        self._c = c
        self._hash = None

    @classmethod
    def _from_dense(cls, dense: list[int]) -> "IntPoly":
        p = cls.__new__(cls)
        p._c = {i: v for i, v in enumerate(dense) if v}
        p._hash = None
        return p

    def _dense(self) -> list[int]:
        if not self._c:
            return []
        out = [0] * (max(self._c) + 1)
        for k, v in self._c.items():
            out[k] = v
        return out

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    @property
    def degree(self):
        """Degree, with ``NEG_INF`` for the zero polynomial."""
        return max(self._c) if self._c else NEG_INF

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def leading(self) -> int:
        return self._c[max(self._c)] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def content(self) -> int:
        return _content(list(self._c.values()))

    def ascending(self) -> list[int]:
        return self._dense()

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self) -> "IntPoly":
        return IntPoly({k: -v for k, v in self._c.items()})

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k, 0) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return IntPoly(c)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly({k: v * other for k, v in self._c.items()})
        if not isinstance(other, IntPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for i, x in self._c.items():
            for j, y in other._c.items():
                c[i + j] = c.get(i + j, 0) + x * y
        return IntPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("IntPoly has no negative powers; use RatFunc")
        result = IntPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        """Horner evaluation at an int, Fraction or anything with + and *."""
        acc = 0
        for c in reversed(self._dense()):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPoly({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # formatting -------------------------------------------------------

    def to_text(self) -> str:
        return _format_terms(self._c, latex=False)

    def to_latex(self) -> str:
        return _format_terms(self._c, latex=True)

    def to_json(self) -> list[str]:
        return [str(c) for c in self._dense()]

    @classmethod
    def from_json(cls, data: list[str]) -> "IntPoly":
        return cls([int(x) for x in data])


def _format_terms(c: Mapping[int, int], latex: bool) -> str:
    c = {k: v for k, v in c.items() if v}
    if not c:
        return "0"
    parts = []
    for k in sorted(c, reverse=True):
        v = c[k]
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if k == 0:
            body = str(a)
        else:
            if k == 1:
                mono = "q"
            elif latex:
                mono = f"q^{{{k}}}"
            else:
                mono = f"q^{k}"
            if a == 1:
                body = mono
            elif latex:
                body = f"{a} {mono}"
            else:
                body = f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(q(?:\s*\^\s*\{?(\d+)\}?)?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse the ASCII (or simple LaTeX) form written by :meth:`IntPoly.to_text`."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    s = s.replace(" ", "")
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, digits, mono, exp = m.groups()
        if not digits and not mono:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = 0 if not mono else (int(exp) if exp else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    return IntPoly(coeffs)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

def _normalize(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return [], [1]
    if len(den) > 1 and len(num) > 1:
        g = _dense_gcd(num, den)
        if len(g) > 1:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
    elif len(den) > 1:
        # constant numerator: nothing to cancel beyond contents
        pass
    c = gcd(_content(num), _content(den))
    if c > 1:
        num = [x // c for x in num]
        den = [x // c for x in den]
    if den[-1] < 0:
        num = [-x for x in num]
        den = [-x for x in den]
    return num, den


class RatFunc:
    """Reduced quotient ``num/den`` of integer polynomials in ``q``.

    The denominator has positive leading coefficient and shares neither a
    polynomial factor nor an integer factor with the numerator, so two equal
    rational functions have identical stored forms.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, num: IntPoly | int | Fraction = 0, den: IntPoly | int = 1):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            r = RatFunc.coerce(num) / RatFunc.coerce(den)
            self._n, self._d, self._hash = r._n, r._d, None
            return
        if isinstance(num, Fraction):
            num, den = IntPoly(num.numerator), IntPoly(den) * num.denominator
        n = num._dense() if isinstance(num, IntPoly) else ([num] if num else [])
        d = den._dense() if isinstance(den, IntPoly) else ([den] if den else [])
        self._n, self._d = _normalize(n, d)
        self._hash = None

    @classmethod
    def _raw(cls, n: list[int], d: list[int]) -> "RatFunc":
        r = cls.__new__(cls)
        r._n, r._d = _normalize(n, d)
        r._hash = None
        return r

    @classmethod
    def q(cls) -> "RatFunc":
        return cls._raw([0, 1], [1])

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, IntPoly)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    @property
    def num(self) -> IntPoly:
        return IntPoly._from_dense(self._n)

    @property
    def den(self) -> IntPoly:
        return IntPoly._from_dense(self._d)

    def is_zero(self) -> bool:
        return not self._n

    def is_polynomial(self) -> bool:
        return len(self._d) == 1 and self._d[0] == 1

    def __bool__(self) -> bool:
        return bool(self._n)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, IntPoly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self._n), tuple(self._d)))
        return self._hash

    def __neg__(self) -> "RatFunc":
        r = RatFunc.__new__(RatFunc)
        r._n = [-x for x in self._n]
        r._d = self._d
        r._hash = None
        return r

    def __add__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self._d == other._d:
            n = _add_dense(self._n, other._n)
            return RatFunc._raw(n, list(self._d))
        n = _add_dense(_dense_mul(self._n, other._d), _dense_mul(other._n, self._d))
        return RatFunc._raw(n, _dense_mul(self._d, other._d))

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return RatFunc._raw(_dense_mul(self._n, other._n), _dense_mul(self._d, other._d))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._n:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc._raw(_dense_mul(self._n, other._d), _dense_mul(self._d, other._n))

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        return pow_int(self, k)

    def evaluate(self, q0) -> Fraction:
        d = _horner(self._d, q0)
        if d == 0:
            raise PoleError(f"pole at q = {q0}")
        return Fraction(_horner(self._n, q0)) / d

    def __repr__(self) -> str:
        return f"RatFunc({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        n = _format_terms(dict(enumerate(self._n)) if self._n else {}, latex=False)
        if self.is_polynomial():
            return n
        d = _format_terms(dict(enumerate(self._d)), latex=False)
        return f"({n})/({d})"

    def to_latex(self) -> str:
        n = _format_terms(dict(enumerate(self._n)) if self._n else {}, latex=True)
        if self.is_polynomial():
            return n
        d = _format_terms(dict(enumerate(self._d)), latex=True)
        return rf"\frac{{{n}}}{{{d}}}"

    def to_json(self) -> dict:
        return {"num": [str(x) for x in self._n], "den": [str(x) for x in self._d]}

    @classmethod
    def from_json(cls, data: Mapping) -> "RatFunc":
        return cls._raw([int(x) for x in data["num"]], [int(x) for x in data["den"]])


def _add_dense(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def _horner(c: list[int], x):
    acc = 0
    for v in reversed(c):
        acc = acc * x + v
    return acc


def parse_ratfunc(text: str) -> RatFunc:
    """Inverse of :meth:`RatFunc.to_text`."""
    s = text.strip()
    m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", s)
    if m:
        return RatFunc(parse_poly(m.group(1)), parse_poly(m.group(2)))
    return RatFunc(parse_poly(s))


Q = RatFunc.q()
ONE = RatFunc(1)
ZERO = RatFunc(0)


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def poly_arith(a, b, op: str) -> RatFunc:
    a, b = RatFunc.coerce(a), RatFunc.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=4096)
def _pow_cached(a: RatFunc, k: int) -> RatFunc:
    if k < 0:
        if not a._n:
            raise ZeroDivisionError("zero base with negative exponent")
        a = RatFunc._raw(list(a._d), list(a._n))
        k = -k
    n, d = [1], [1]
    bn, bd = a._n, a._d
    while k:
        if k & 1:
            n = _dense_mul(n, bn)
            d = _dense_mul(d, bd)
        k >>= 1
        if k:
            bn = _dense_mul(bn, bn)
            bd = _dense_mul(bd, bd)
    # a is reduced, so its powers are too; only the sign needs fixing
    r = RatFunc.__new__(RatFunc)
    if d[-1] < 0:
        n, d = [-x for x in n], [-x for x in d]
    r._n, r._d, r._hash = n, d, None
    return r


def pow_int(a, k: int) -> RatFunc:
    """Exact ``a**k`` for any integer ``k``."""
    a = RatFunc.coerce(a)
    if k == 0:
        return ONE
    return _pow_cached(a, int(k))


def to_intpoly(a) -> IntPoly:
    a = RatFunc.coerce(a)
    if not (len(a._d) == 1 and a._d[0] == 1):
        raise NotAPolynomial(f"not an integer polynomial: {a.to_text()}")
    return a.num


def evaluate(a, q0) -> Fraction:
    return RatFunc.coerce(a).evaluate(q0)


def e_general_linear(r: int) -> IntPoly:
    """E-polynomial of GL_r: prod_{i<r} (q^r - q^i)."""
    if r < 1:
        raise ValueError("rank must be positive")
    out = IntPoly(1)
    top = IntPoly({r: 1})
    for i in range(r):
        out = out * (top - IntPoly({i: 1}))
    return out


def e_special_linear(r: int) -> IntPoly:
    """E-polynomial of SL_r, i.e. e(GL_r) / (q - 1)."""
    return IntPoly._from_dense(_exact_div(e_general_linear(r)._dense(), [-1, 1]))


def dumps(p: IntPoly) -> str:
    return json.dumps(p.to_json())
