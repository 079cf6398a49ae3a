"""Equivariant E-polynomials with values in R(Z2) and R(S3).

A :class:`Z2Class` is ``t*T + n*N`` where ``T`` is the trivial and ``N`` the
sign character of Z2.  An :class:`S3Class` is ``t*T + s*S + d*D`` with the
trivial, sign and two-dimensional standard characters of S3.  Coefficients
are :class:`~tlepoly.qpoly.RatFunc`, so virtual (negative) classes are fine.

The coefficient of ``T`` is the E-polynomial of the quotient by the group.
"""

from __future__ import annotations

from .qpoly import Q, RatFunc, pow_int

__all__ = [
    "Z2Class",
    "S3Class",
    "DegenerateFiber",
    "z2_mul",
    "z2_pow",
    "s3_mul",
    "s3_pow",
    "invariant_part",
    "z2_quotient_product",
    "z2_fiber_total",
    "z2_base_from_total",
    "z2_torus",
    "s3_torus_h3",
    "s3_torus_h3_closed",
]


class DegenerateFiber(ValueError):
    """The fiber class cannot be divided out because (F+)^2 == (F-)^2."""


def _rf(x) -> RatFunc:
    return RatFunc.coerce(x)


class Z2Class:
    """Element ``t*T + n*N`` of R(Z2)[q]."""

    __slots__ = ("t", "n")

    def __init__(self, t=0, n=0):
        self.t = _rf(t)
        self.n = _rf(n)

    @classmethod
    def trivial(cls) -> "Z2Class":
        return cls(1, 0)

    @classmethod
    def sign(cls) -> "Z2Class":
        return cls(0, 1)

    @property
    def plus_part(self) -> RatFunc:
        return self.t

    @property
    def minus_part(self) -> RatFunc:
        return self.n

    def total(self) -> RatFunc:
        """Underlying non-equivariant E-polynomial."""
        return self.t + self.n

    def __add__(self, other):
        if not isinstance(other, Z2Class):
            return NotImplemented
        return Z2Class(self.t + other.t, self.n + other.n)

    def __sub__(self, other):
        if not isinstance(other, Z2Class):
            return NotImplemented
        return Z2Class(self.t - other.t, self.n - other.n)

    def __neg__(self):
        return Z2Class(-self.t, -self.n)

    def __mul__(self, other):
        if isinstance(other, Z2Class):
            return z2_mul(self, other)
        try:
            c = _rf(other)
        except TypeError:
            return NotImplemented
        return Z2Class(self.t * c, self.n * c)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        return z2_pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, Z2Class):
            return NotImplemented
        return self.t == other.t and self.n == other.n

    def __hash__(self):
        return hash((self.t, self.n))

    def __repr__(self):
        return f"Z2Class(T: {self.t}, N: {self.n})"

    def to_json(self) -> dict:
        return {"T": self.t.to_json(), "N": self.n.to_json()}

    @classmethod
    def from_json(cls, data) -> "Z2Class":
        return cls(RatFunc.from_json(data["T"]), RatFunc.from_json(data["N"]))


class S3Class:
    """Element ``t*T + s*S + d*D`` of R(S3)[q]."""

    __slots__ = ("t", "s", "d")

    def __init__(self, t=0, s=0, d=0):
        self.t = _rf(t)
        self.s = _rf(s)
        self.d = _rf(d)

    @classmethod
    def trivial(cls) -> "S3Class":
        return cls(1, 0, 0)

    def character(self, cls_name: str) -> RatFunc:
        """Value of the virtual character on a conjugacy class of S3.

        ``cls_name`` is one of ``"id"``, ``"transposition"``, ``"3-cycle"``.
        Tensor products become pointwise products under this map.
        """
        if cls_name == "id":
            return self.t + self.s + 2 * self.d
        if cls_name == "transposition":
            return self.t - self.s
        if cls_name == "3-cycle":
            return self.t + self.s - self.d
        raise ValueError(f"unknown conjugacy class {cls_name!r}")

    def __add__(self, other):
        if not isinstance(other, S3Class):
            return NotImplemented
        return S3Class(self.t + other.t, self.s + other.s, self.d + other.d)

    def __sub__(self, other):
        if not isinstance(other, S3Class):
            return NotImplemented
        return S3Class(self.t - other.t, self.s - other.s, self.d - other.d)

    def __neg__(self):
        return S3Class(-self.t, -self.s, -self.d)

    def __mul__(self, other):
        if isinstance(other, S3Class):
            return s3_mul(self, other)
        try:
            c = _rf(other)
        except TypeError:
            return NotImplemented
        return S3Class(self.t * c, self.s * c, self.d * c)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        return s3_pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, S3Class):
            return NotImplemented
        return self.t == other.t and self.s == other.s and self.d == other.d

    def __hash__(self):
        return hash((self.t, self.s, self.d))

    def __repr__(self):
        return f"S3Class(T: {self.t}, S: {self.s}, D: {self.d})"

    def to_json(self) -> dict:
        return {"T": self.t.to_json(), "S": self.s.to_json(), "D": self.d.to_json()}

    @classmethod
    def from_json(cls, data) -> "S3Class":
        return cls(*(RatFunc.from_json(data[k]) for k in ("T", "S", "D")))


def z2_mul(a: Z2Class, b: Z2Class) -> Z2Class:
    # N (x) N = T
    return Z2Class(a.t * b.t + a.n * b.n, a.t * b.n + a.n * b.t)


def z2_pow(a: Z2Class, k: int) -> Z2Class:
    if k < 0:
        raise ValueError("negative power of a Z2Class")
    result = Z2Class.trivial()
    base = a
    while k:
        if k & 1:
            result = z2_mul(result, base)
        k >>= 1
        if k:
            base = z2_mul(base, base)
    return result


def s3_mul(a: S3Class, b: S3Class) -> S3Class:
    # S(x)S = T, S(x)D = D, D(x)D = T + S + D
    dd = a.d * b.d
    t = a.t * b.t + a.s * b.s + dd
    s = a.t * b.s + a.s * b.t + dd
    d = a.t * b.d + a.d * b.t + a.s * b.d + a.d * b.s + dd
    return S3Class(t, s, d)


def s3_pow(a: S3Class, k: int) -> S3Class:
    if k < 0:
        raise ValueError("negative power of an S3Class")
    result = S3Class.trivial()
    base = a
    while k:
        if k & 1:
            result = s3_mul(result, base)
        k >>= 1
        if k:
            base = s3_mul(base, base)
    return result


def invariant_part(a) -> RatFunc:
    """Coefficient of the trivial character, i.e. e(Z/F)."""
    if isinstance(a, (Z2Class, S3Class)):
        return a.t
    raise TypeError("expected a Z2Class or S3Class")


def z2_quotient_product(z1: Z2Class, z2: Z2Class) -> RatFunc:
    """E-polynomial of (Z1 x Z2)/Z2 for the diagonal action."""
    return z1.t * z2.t + z1.n * z2.n


def z2_fiber_total(base: Z2Class, fiber: Z2Class) -> Z2Class:
    """Class of the total space of a Z2-equivariant bundle."""
    return z2_mul(base, fiber)


def z2_base_from_total(total: Z2Class, fiber: Z2Class) -> Z2Class:
    """Solve ``z2_fiber_total(base, fiber) == total`` for ``base``."""
    det = fiber.t * fiber.t - fiber.n * fiber.n
    if det.is_zero():
        raise DegenerateFiber("fiber class has (F+)^2 == (F-)^2")
    bt = (fiber.t * total.t - fiber.n * total.n) / det
    bn = (fiber.t * total.n - fiber.n * total.t) / det
    return Z2Class(bt, bn)


def z2_torus(k: int) -> Z2Class:
    """(C^*)^k with simultaneous inversion: (qT - N)^k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return z2_pow(Z2Class(Q, -1), k)


def s3_torus_h3(k: int) -> S3Class:
    """The maximal torus of SL3 with Weyl action, to the k-th power."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return s3_pow(S3Class(Q * Q, 1, -Q), k)


def s3_torus_h3_closed(k: int) -> S3Class:
    """Closed expansion of :func:`s3_torus_h3` via the S3 character table."""
    if k < 0:
        raise ValueError("k must be non-negative")
    a = pow_int(Q * Q - 1, k)
    b = pow_int(Q - 1, 2 * k)
    c = pow_int(Q * Q + Q + 1, k)
    half, sixth, third = RatFunc(1, 2), RatFunc(1, 6), RatFunc(1, 3)
    t = half * a + sixth * b + third * c
    s = -half * a + sixth * b + third * c
    d = third * (b - c)
    return S3Class(t, s, d)
