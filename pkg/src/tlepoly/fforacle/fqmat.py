"""Small matrices over a prime field F_p.

A matrix is a row-major tuple of ints in ``range(p)``; its size is inferred
from the length (4 or 9).  These are plain tuples so they hash fast and can
be used as dictionary keys and shipped to worker processes.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import isqrt

__all__ = [
    "BudgetExceeded",
    "GROUP_KINDS",
    "BUDGET",
    "is_prime",
    "rank_of",
    "identity",
    "mat_mul",
    "mat_pow",
    "mat_inv",
    "det",
    "trace",
    "diag",
    "enum_group",
    "group_order",
    "commutant_dim",
    "algebra_dim",
    "invariant_subspaces",
    "is_semisimple",
    "is_abs_irreducible",
    "conjugation_generators",
    "conjugate",
    "primitive_root",
    "nullspace",
    "commutant_basis",
    "commutant_units",
]

BUDGET = 10**7
GROUP_KINDS = ("SL2", "SL3", "GL2", "GL3")


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured work budget."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for k in range(2, isqrt(p) + 1):
        if p % k == 0:
            return False
    return True


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def rank_of(a: tuple) -> int:
    return 2 if len(a) == 4 else 3


def identity(r: int) -> tuple:
    return tuple(1 if i == j else 0 for i in range(r) for j in range(r))


def diag(entries, p: int) -> tuple:
    r = len(entries)
    return tuple(entries[i] % p if i == j else 0 for i in range(r) for j in range(r))


def mat_mul(a: tuple, b: tuple, p: int) -> tuple:
    if len(a) == 4:
        a0, a1, a2, a3 = a
        b0, b1, b2, b3 = b
        return (
            (a0 * b0 + a1 * b2) % p,
            (a0 * b1 + a1 * b3) % p,
            (a2 * b0 + a3 * b2) % p,
            (a2 * b1 + a3 * b3) % p,
        )
    return tuple(
        (a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]) % p
        for i in range(3)
        for j in range(3)
    )


def mat_pow(a: tuple, k: int, p: int) -> tuple:
    if k < 0:
        return mat_pow(mat_inv(a, p), -k, p)
    result = identity(rank_of(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base, p)
        k >>= 1
        if k:
            base = mat_mul(base, base, p)
    return result


def det(a: tuple, p: int) -> int:
    if len(a) == 4:
        return (a[0] * a[3] - a[1] * a[2]) % p
    return (
        a[0] * (a[4] * a[8] - a[5] * a[7])
        - a[1] * (a[3] * a[8] - a[5] * a[6])
        + a[2] * (a[3] * a[7] - a[4] * a[6])
    ) % p


def trace(a: tuple, p: int) -> int:
    return (a[0] + a[3]) % p if len(a) == 4 else (a[0] + a[4] + a[8]) % p


def mat_inv(a: tuple, p: int) -> tuple:
    dt = det(a, p)
    if dt == 0:
        raise ZeroDivisionError("singular matrix")
    inv = pow(dt, -1, p)
    if len(a) == 4:
        return ((a[3] * inv) % p, (-a[1] * inv) % p, (-a[2] * inv) % p, (a[0] * inv) % p)
    cof = []
    for i in range(3):
        for j in range(3):
            rows = [r for r in range(3) if r != j]
            cols = [c for c in range(3) if c != i]
            minor = (
                a[3 * rows[0] + cols[0]] * a[3 * rows[1] + cols[1]]
                - a[3 * rows[0] + cols[1]] * a[3 * rows[1] + cols[0]]
            )
            cof.append(((-1) ** (i + j) * minor * inv) % p)
    return tuple(cof)


def _parse_kind(kind: str) -> tuple[str, int]:
    k = kind.upper()
    if k not in GROUP_KINDS:
        raise ValueError(f"unknown group kind {kind!r}")
    return k[:2], int(k[2])


def group_order(kind: str, p: int) -> int:
    fam, r = _parse_kind(kind)
    order = 1
    for i in range(r):
        order *= p**r - p**i
    return order // (p - 1) if fam == "SL" else order


@lru_cache(maxsize=32)
def _enum_group_cached(kind: str, p: int, budget: int) -> tuple:
    fam, r = _parse_kind(kind)
    candidates = p ** (r * r)
    if candidates > budget:
        raise BudgetExceeded(f"{kind}(F_{p}) needs {candidates} candidates, budget {budget}")
    out = []
    want_sl = fam == "SL"
    for entries in itertools.product(range(p), repeat=r * r):
        dt = det(entries, p)
        if (dt == 1) if want_sl else (dt != 0):
            out.append(entries)
    return tuple(out)


def enum_group(kind: str, p: int, budget: int = BUDGET) -> list[tuple]:
    """All elements of SL_r(F_p) or GL_r(F_p), in lexicographic order."""
    _check_prime(p)
    return list(_enum_group_cached(kind.upper(), p, budget))


# --- linear algebra ----------------------------------------------------------

def _rank_mod_p(rows: list[list[int]], ncols: int, p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col] % p:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def commutant_dim(mats, p: int) -> int:
    """Dimension over F_p of {X : X A = A X for every A in ``mats``}."""
    mats = list(mats)
    if not mats:
        raise ValueError("empty tuple")
    r = rank_of(mats[0])
    rows = []
    # (XA - AX)_{ij} = sum_k X_ik A_kj - A_ik X_kj, unknown X_ab at index a*r+b
    for a in mats:
        for i in range(r):
            for j in range(r):
                row = [0] * (r * r)
                for k in range(r):
                    row[i * r + k] += a[k * r + j]
                    row[k * r + j] -= a[i * r + k]
                rows.append([x % p for x in row])
    return r * r - _rank_mod_p(rows, r * r, p)


def algebra_dim(mats, p: int) -> int:
    """Dimension of the unital F_p-algebra generated by ``mats``."""
    mats = list(mats)
    r = rank_of(mats[0])
    basis: list[tuple] = []

    def independent(v) -> bool:
        return _rank_mod_p([list(b) for b in basis] + [list(v)], r * r, p) > len(basis)

    frontier = [identity(r)]
    if independent(frontier[0]):
        basis.append(frontier[0])
    while frontier:
        new = []
        for x in frontier:
            for a in mats:
                y = mat_mul(x, a, p)
                if independent(y):
                    basis.append(y)
                    new.append(y)
                    if len(basis) == r * r:
                        return r * r
        frontier = new
    return len(basis)


def is_abs_irreducible(mats, p: int) -> bool:
    """Burnside: absolutely irreducible iff the matrices span the full algebra."""
    mats = list(mats)
    r = rank_of(mats[0])
    return algebra_dim(mats, p) == r * r


@lru_cache(maxsize=8)
def _subspaces(r: int, p: int, k: int) -> tuple:
    """All k-dimensional subspaces of F_p^r, as tuples of basis row vectors in RREF."""
    out = []
    for pivots in itertools.combinations(range(r), k):
        free_slots = [
            (row, col)
            for row, pc in enumerate(pivots)
            for col in range(pc + 1, r)
            if col not in pivots
        ]
        for vals in itertools.product(range(p), repeat=len(free_slots)):
            rows = [[0] * r for _ in range(k)]
            for row, pc in enumerate(pivots):
                rows[row][pc] = 1
            for (row, col), v in zip(free_slots, vals):
                rows[row][col] = v
            out.append(tuple(tuple(x) for x in rows))
    return tuple(out)


def _apply(a: tuple, v, p: int) -> list[int]:
    r = len(v)
    return [sum(a[i * r + j] * v[j] for j in range(r)) % p for i in range(r)]


def _is_invariant(basis, mats, p: int) -> bool:
    r = len(basis[0])
    k = len(basis)
    for a in mats:
        for v in basis:
            w = _apply(a, v, p)
            if _rank_mod_p([list(b) for b in basis] + [w], r, p) > k:
                return False
    return True


def invariant_subspaces(mats, p: int) -> list[tuple]:
    """Proper nonzero subspaces of F_p^r invariant under every matrix."""
    mats = list(mats)
    r = rank_of(mats[0])
    return [
        sub
        for k in range(1, r)
        for sub in _subspaces(r, p, k)
        if _is_invariant(sub, mats, p)
    ]


def is_semisimple(mats, p: int) -> bool:
    """Whether F_p^r is a semisimple module for the tuple.

    The socle (sum of minimal invariant subspaces) must be everything.
    F_p is perfect, so this is the same as semisimplicity over the
    algebraic closure, i.e. a closed conjugation orbit.
    """
    mats = list(mats)
    r = rank_of(mats[0])
    inv = invariant_subspaces(mats, p)
    if not inv:
        return True
    minimal = []
    for sub in sorted(inv, key=len):
        span_sub = [list(v) for v in sub]
        if not any(
            len(m) < len(sub)
            and _rank_mod_p(span_sub + [list(v) for v in m], r, p) == len(sub)
            for m in minimal
        ):
            minimal.append(sub)
    socle = [list(v) for m in minimal for v in m]
    return _rank_mod_p(socle, r, p) == r


# --- group actions -------------------------------------------------------------

def primitive_root(p: int) -> int:
    if p == 2:
        return 1
    phi = p - 1
    factors = {f for f in range(2, phi + 1) if phi % f == 0 and is_prime(f)}
    for g in range(2, p):
        if all(pow(g, phi // f, p) != 1 for f in factors):
            return g
    raise AssertionError("no primitive root found")


def conjugation_generators(r: int, p: int, full: bool = True) -> list[tuple[tuple, tuple]]:
    """(g, g^-1) pairs generating SL_r(F_p), plus a diagonal generator of GL_r if ``full``."""
    gens = []
    for i in range(r):
        for j in range(r):
            if i != j:
                g = list(identity(r))
                g[i * r + j] = 1
                g = tuple(g)
                gens.append((g, mat_inv(g, p)))
    if full and p > 2:
        g = diag([primitive_root(p)] + [1] * (r - 1), p)
        gens.append((g, mat_inv(g, p)))
    return gens


def conjugate(tup: tuple, g: tuple, ginv: tuple, p: int) -> tuple:
    return tuple(mat_mul(mat_mul(g, x, p), ginv, p) for x in tup)


def nullspace(rows: list[list[int]], ncols: int, p: int) -> list[tuple]:
    """Basis of {x : rows . x = 0} over F_p."""
    m = [[x % p for x in r] for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-m[row][free]) % p
        basis.append(tuple(v))
    return basis


def commutant_basis(mats, p: int) -> list[tuple]:
    """A basis of the commutant, each element a flattened matrix."""
    mats = list(mats)
    r = rank_of(mats[0])
    rows = []
    for a in mats:
        for i in range(r):
            for j in range(r):
                row = [0] * (r * r)
                for k in range(r):
                    row[i * r + k] += a[k * r + j]
                    row[k * r + j] -= a[i * r + k]
                rows.append(row)
    return nullspace(rows, r * r, p)


def commutant_units(mats, p: int, budget: int = BUDGET) -> int:
    """Number of invertible matrices commuting with every matrix in ``mats``.

    This is the order of the stabilizer under GL_r(F_p) conjugation.
    """
    basis = commutant_basis(mats, p)
    if p ** len(basis) > budget:
        raise BudgetExceeded("commutant too large to enumerate")
    r = rank_of(list(mats)[0])
    count = 0
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        x = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(r * r))
        if det(x, p):
            count += 1
    return count
