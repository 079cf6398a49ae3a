"""Brute-force point and orbit counts for torus-link representation varieties.

Solutions are tuples ``(A, B, F_1, ..., F_{d-1})`` with ``A^n = B^m`` and
every ``F_i`` commuting with ``A^n``.  Orbits are taken under conjugation by
GL_r(F_p), whose image in the automorphisms is the projective group acting
on the character variety.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .fqmat import (
    BUDGET,
    BudgetExceeded,
    commutant_basis,
    commutant_dim,
    commutant_units,
    conjugate,
    conjugation_generators,
    det,
    diag,
    enum_group,
    group_order,
    is_abs_irreducible,
    is_semisimple,
    mat_inv,
    mat_mul,
    mat_pow,
    primitive_root,
    rank_of,
    trace,
)

__all__ = [
    "STAB_LABELS",
    "CensusEntry",
    "OrbitCensus",
    "thread_count",
    "power_index",
    "centralizer",
    "link_solutions",
    "count_solutions",
    "stab_label",
    "classify_stab_pair",
    "irreducible_pair_count",
    "orbit_census",
    "support_histogram",
    "support_components",
    "lambda_orbit_count",
    "lambda_orbit_count_bruteforce",
]

STAB_LABELS = {
    2: {1: "H1", 2: "H2", 4: "Full"},
    3: {1: "H1", 2: "H2", 3: "H3", 5: "H4", 9: "Full"},
}


def thread_count() -> int:
    """Worker count from ``TLEPOLY_THREADS`` (default 1, i.e. serial)."""
    raw = os.environ.get("TLEPOLY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_chunks(func, chunks, threads: int | None = None) -> list:
    threads = thread_count() if threads is None else threads
    if threads <= 1 or len(chunks) <= 1:
        return [func(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, chunks))


def _chunks(n_items: int, n_chunks: int) -> list[tuple[int, int]]:
    n_chunks = max(1, min(n_chunks, n_items))
    step = -(-n_items // n_chunks)
    return [(i, min(i + step, n_items)) for i in range(0, n_items, step)]


# --- indices ----------------------------------------------------------------

@lru_cache(maxsize=32)
def power_index(kind: str, p: int, m: int, budget: int = BUDGET) -> dict:
    """Map X to the tuple of group elements B with B^m = X."""
    index: dict[tuple, list] = defaultdict(list)
    for b in enum_group(kind, p, budget):
        index[mat_pow(b, m, p)].append(b)
    return {k: tuple(v) for k, v in index.items()}


@lru_cache(maxsize=4096)
def _centralizer_cached(kind: str, p: int, x: tuple, budget: int) -> tuple:
    # span the commutant of x and keep the elements of the ambient group
    basis = commutant_basis([x], p)
    if p ** len(basis) > budget:
        raise BudgetExceeded("centralizer too large to enumerate")
    size = len(x)
    want_sl = kind.startswith("SL")
    out = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        g = tuple(sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(size))
        dt = det(g, p)
        if (dt == 1) if want_sl else (dt != 0):
            out.append(g)
    return tuple(sorted(out))


def centralizer(kind: str, p: int, x: tuple, budget: int = BUDGET) -> tuple:
    """All elements of the ambient group commuting with ``x``."""
    return _centralizer_cached(kind.upper(), p, x, budget)


def _check_link(n: int, m: int, d: int) -> None:
    for name, v in (("n", n), ("m", m), ("d", d)):
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"{name} must be a positive integer")


def _estimate(kind: str, p: int, n: int, m: int, d: int, budget: int) -> int:
    """Exact number of solutions, computed from the indices without listing them."""
    index = power_index(kind, p, m, budget)
    total = 0
    for a in enum_group(kind, p, budget):
        x = mat_pow(a, n, p)
        bs = index.get(x)
        if bs:
            total += len(bs) * (len(centralizer(kind, p, x, budget)) ** (d - 1) if d > 1 else 1)
    return total


def link_solutions(kind: str, p: int, n: int, m: int, d: int, budget: int = BUDGET):
    """Iterate over every ``(A, B, F_1, ..., F_{d-1})`` exactly once.

    For each A, the B with B^m = A^n come from a precomputed m-th-power index
    and the F_i range over the centralizer of A^n.
    """
    _check_link(n, m, d)
    kind = kind.upper()
    if d > 1 and _estimate(kind, p, n, m, d, budget) > budget:
        raise BudgetExceeded("solution set exceeds the budget")
    index = power_index(kind, p, m, budget)
    for a in enum_group(kind, p, budget):
        x = mat_pow(a, n, p)
        bs = index.get(x)
        if not bs:
            continue
        if d == 1:
            for b in bs:
                yield (a, b)
            continue
        cent = centralizer(kind, p, x, budget)
        for b in bs:
            for fs in itertools.product(cent, repeat=d - 1):
                yield (a, b) + fs


def count_solutions(kind: str, p: int, n: int, m: int, d: int, budget: int = BUDGET) -> int:
    """|R^d(n, m)(F_p)| without materializing the tuples."""
    _check_link(n, m, d)
    return _estimate(kind.upper(), p, n, m, d, budget)


# --- classification -----------------------------------------------------------

def stab_label(mats, p: int) -> str:
    """Stabilizer type of a tuple from its commutant dimension.

    Non-semisimple tuples (non-closed orbits) get ``"NC<dim>"``.  A
    semisimple tuple with a dimension outside the expected list raises.
    """
    mats = list(mats)
    r = rank_of(mats[0])
    dim = commutant_dim(mats, p)
    if not is_semisimple(mats, p):
        return f"NC{dim}"
    try:
        return STAB_LABELS[r][dim]
    except KeyError:
        raise ValueError(f"unexpected commutant dimension {dim} for a semisimple tuple") from None


def classify_stab_pair(a: tuple, b: tuple, n: int, p: int) -> tuple[str, str]:
    """(type of Stab(A, B), type of Stab(A^n))."""
    return stab_label([a, b], p), stab_label([mat_pow(a, n, p)], p)


def _is_irreducible_pair(a: tuple, b: tuple, p: int) -> bool:
    if len(a) == 4:
        # classical criterion for SL2: tr[A, B] != 2
        c = mat_mul(mat_mul(a, b, p), mat_mul(mat_inv(a, p), mat_inv(b, p), p), p)
        return trace(c, p) != 2 % p
    return is_abs_irreducible([a, b], p)


def _irr_chunk(args) -> int:
    kind, p, n, m, budget, lo, hi = args
    index = power_index(kind, p, m, budget)
    group = enum_group(kind, p, budget)
    count = 0
    for a in group[lo:hi]:
        for b in index.get(mat_pow(a, n, p), ()):
            if _is_irreducible_pair(a, b, p):
                count += 1
    return count


def irreducible_pair_count(
    kind: str, p: int, n: int, m: int, budget: int = BUDGET, threads: int | None = None
) -> int:
    """Number of absolutely irreducible pairs (A, B) with A^n = B^m."""
    _check_link(n, m, 1)
    kind = kind.upper()
    size = len(enum_group(kind, p, budget))
    threads = thread_count() if threads is None else threads
    spans = _chunks(size, 4 * threads)
    parts = _map_chunks(_irr_chunk, [(kind, p, n, m, budget, lo, hi) for lo, hi in spans], threads)
    return sum(parts)


# --- orbit census ---------------------------------------------------------------

@dataclass
class CensusEntry:
    point_count: int = 0
    orbit_count: int = 0
    stabilizer_orders: set = field(default_factory=set)
    orbit_size_sum: int = 0

    def consistent(self, g_order: int) -> bool:
        """Orbit-stabilizer check.

        With a constant stabilizer order s this is orbit_count * |G|/s ==
        point_count; in general the sum of |G|/|Stab| over orbits must equal
        the number of points.
        """
        if len(self.stabilizer_orders) == 1:
            (s,) = self.stabilizer_orders
            if self.orbit_count * (g_order // s) != self.point_count:
                return False
        return self.orbit_size_sum == self.point_count

    def to_json(self) -> dict:
        return {
            "point_count": self.point_count,
            "orbit_count": self.orbit_count,
            "stabilizer_orders": sorted(self.stabilizer_orders),
            "orbit_size_sum": self.orbit_size_sum,
        }


@dataclass
class OrbitCensus:
    kind: str
    p: int
    n: int
    m: int
    d: int
    entries: dict = field(default_factory=dict)

    @property
    def total_points(self) -> int:
        return sum(e.point_count for e in self.entries.values())

    @property
    def total_orbits(self) -> int:
        return sum(e.orbit_count for e in self.entries.values())

    def acting_order(self) -> int:
        return group_order(f"GL{2 if self.kind.endswith('2') else 3}", self.p)

    def consistent(self) -> bool:
        g = self.acting_order()
        return all(e.consistent(g) for e in self.entries.values())

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "entries": {f"{k[0]},{k[1]}": v.to_json() for k, v in sorted(self.entries.items())},
        }


def orbit_census(kind: str, p: int, n: int, m: int, d: int, budget: int = BUDGET) -> OrbitCensus:
    """Points and GL_r(F_p)-conjugation orbits, keyed by stabilizer types.

    Orbits are found by union-find over conjugation by a generating set;
    stabilizer orders are counted independently as units of the commutant.
    """
    kind = kind.upper()
    points = list(link_solutions(kind, p, n, m, d, budget))
    pos = {t: i for i, t in enumerate(points)}
    parent = list(range(len(points)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    r = rank_of(points[0][0]) if points else 2
    for g, ginv in conjugation_generators(r, p):
        for i, t in enumerate(points):
            j = pos[conjugate(t, g, ginv, p)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    census = OrbitCensus(kind, p, n, m, d)
    g_order = census.acting_order()
    labels: dict[int, tuple] = {}
    for i, t in enumerate(points):
        root = find(i)
        if root not in labels:
            key = classify_stab_pair(t[0], t[1], n, p)
            labels[root] = key
            entry = census.entries.setdefault(key, CensusEntry())
            entry.orbit_count += 1
            s = commutant_units(list(t), p, budget)
            entry.stabilizer_orders.add(s)
            entry.orbit_size_sum += g_order // s
        census.entries[labels[root]].point_count += 1
    return census


# --- lambda character varieties -----------------------------------------------

def _offdiag_positions(r: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(r) for j in range(r) if i != j]


def _mask(x: tuple, positions) -> int:
    r = rank_of(x)
    out = 0
    for bit, (i, j) in enumerate(positions):
        if x[i * r + j]:
            out |= 1 << bit
    return out


def _weak_components_if_polystable(mask: int, r: int, positions) -> int | None:
    """Number of weak components of the support digraph, or None if some
    edge lies on no directed cycle (non-closed torus orbit)."""
    edges = [positions[b] for b in range(len(positions)) if mask >> b & 1]
    reach = [[i == j for j in range(r)] for i in range(r)]
    for i, j in edges:
        reach[i][j] = True
    for k in range(r):
        for i in range(r):
            for j in range(r):
                if reach[i][k] and reach[k][j]:
                    reach[i][j] = True
    if any(not reach[j][i] for i, j in edges):
        return None
    comp = list(range(r))

    def root(i):
        while comp[i] != i:
            i = comp[i]
        return i

    for i, j in edges:
        comp[root(i)] = root(j)
    return len({root(i) for i in range(r)})


def support_histogram(k: int, p: int, r: int, budget: int = BUDGET) -> dict[int, int]:
    """Number of r-tuples in GL_k(F_p) by the union of their off-diagonal supports.

    Keys are bitmasks over the off-diagonal positions in row-major order.
    One pass over GL_k(F_p) and r OR-convolutions, so r does not enter the
    enumeration cost.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    positions = _offdiag_positions(k)
    hist: dict[int, int] = defaultdict(int)
    for x in enum_group(f"GL{k}", p, budget):
        hist[_mask(x, positions)] += 1
    agg = {0: 1}
    for _ in range(r):
        nxt: dict[int, int] = defaultdict(int)
        for m1, c1 in agg.items():
            for m2, c2 in hist.items():
                nxt[m1 | m2] += c1 * c2
        agg = dict(nxt)
    return agg


def support_components(mask: int, k: int) -> int | None:
    """Weak components of a support pattern, None if its torus orbit is not closed."""
    return _weak_components_if_polystable(mask, k, _offdiag_positions(k))


def lambda_orbit_count(partition, p: int, r: int, budget: int = BUDGET) -> int:
    """F_p-points of the lambda-character variety of the free group F_r.

    ``partition`` is ``(1, 1)`` or ``(1, 1, 1)``: the diagonal torus acts by
    conjugation on r-tuples in GL_2 or GL_3.  A tuple has a closed orbit iff
    every edge of its off-diagonal support digraph lies on a directed cycle,
    and its stabilizer then has order (p-1)^c with c the number of weak
    components.  The torus is connected, so each closed orbit contributes
    exactly one F_p-point.
    """
    partition = tuple(partition)
    if partition not in ((1, 1), (1, 1, 1)):
        raise ValueError(f"unsupported partition {partition!r}")
    k = len(partition)
    total = 0
    for mask, count in support_histogram(k, p, r, budget).items():
        c = support_components(mask, k)
        if c is not None:
            # scalars act trivially, so orbits have size (p-1)^(k-c)
            total += count * (p - 1) ** (c - 1)
    numerator, rem = divmod(total, (p - 1) ** (k - 1))
    if rem:
        raise ArithmeticError("orbit count is not an integer")
    return numerator


def lambda_orbit_count_bruteforce(partition, p: int, r: int, budget: int = BUDGET) -> int:
    """Same count by listing closed torus orbits with union-find (small cases)."""
    partition = tuple(partition)
    k = len(partition)
    group = enum_group(f"GL{k}", p, budget)
    if len(group) ** r > budget:
        raise BudgetExceeded("too many tuples for brute force")
    positions = _offdiag_positions(k)
    closed = []
    for t in itertools.product(group, repeat=r):
        mask = 0
        for x in t:
            mask |= _mask(x, positions)
        if _weak_components_if_polystable(mask, k, positions) is not None:
            closed.append(t)
    pos = {t: i for i, t in enumerate(closed)}
    parent = list(range(len(closed)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    g0 = primitive_root(p)
    for slot in range(k - 1):
        entries = [1] * k
        entries[slot] = g0
        g = diag(entries, p)
        ginv = mat_inv(g, p)
        for i, t in enumerate(closed):
            j = pos[conjugate(t, g, ginv, p)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return len({find(i) for i in range(len(closed))})
