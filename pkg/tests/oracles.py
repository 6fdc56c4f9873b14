"""Independent reference computations used by the tests.

Nothing here calls the package's own algorithms: intersection numbers come
from an explicit numpy Gram matrix and kernels from sympy.
"""

from __future__ import annotations

import itertools
import math

import numpy as np
import sympy

GRAM = np.diag([1] + [-1] * 9).astype(np.int64)
K = np.array([-3] + [-1] * 9, dtype=np.int64)


def dot(a, b) -> int:
    return int(np.asarray(a) @ GRAM @ np.asarray(b))


def genus_times_two_minus_two(d) -> int:
    return dot(d, d) + dot(d, K)


def chi(d) -> int:
    v = dot(d, d) - dot(d, K)
    assert v % 2 == 0
    return 1 + v // 2


def sympy_null_vector(gram) -> list[int]:
    ns = sympy.Matrix(gram).nullspace()
    assert len(ns) == 1, f"nullity {len(ns)}"
    v = ns[0]
    den = math.lcm(*[int(x.q) for x in v])
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    return ints if ints[0] > 0 else [-x for x in ints]


def connected_subsets(adj: dict[int, set[int]], max_size: int) -> set[frozenset[int]]:
    """All connected vertex sets of size <= max_size, by level-wise growth."""
    level = {frozenset([v]) for v in adj}
    out = set(level)
    for _ in range(max_size - 1):
        nxt = set()
        for s in level:
            for v in s:
                for w in adj[v]:
                    if w not in s:
                        nxt.add(s | {w})
        nxt -= out
        out |= nxt
        level = nxt
    return out


def brute_force_conic_fibers(classes: list, max_size: int = 10, mults=(1, 2)):
    """Connected multisets over ``classes`` (coefficient vectors) with
    ``D.C = 0`` on the support and ``D.(-K) = 2``; returns
    ``(accepted, degree_two)`` as sets of sorted ``((index, mult), ...)``.
    ``degree_two`` holds every candidate with ``D.(-K) = 2``."""
    vecs = np.array(classes, dtype=np.int64)
    G = vecs @ GRAM @ vecs.T
    deg = -(vecs @ GRAM @ K)
    n = len(classes)
    adj = {i: {j for j in range(n) if j != i and G[i, j] > 0} for i in range(n)}
    accepted, degree_two = set(), set()
    grids: dict[int, np.ndarray] = {}
    lo, hi = min(mults), max(mults)
    for s in connected_subsets(adj, max_size):
        idx = sorted(s)
        base = int(deg[idx].sum())
        # D.(-K) ranges over [lo*base, hi*base]; skip subsets that cannot reach 2
        if not lo * base <= 2 <= hi * base:
            continue
        if len(idx) not in grids:
            grids[len(idx)] = np.array(list(itertools.product(mults, repeat=len(idx))), dtype=np.int64)
        M = grids[len(idx)]
        sub = G[np.ix_(idx, idx)]
        dd = M @ deg[idx]
        ok2 = dd == 2
        if not ok2.any():
            continue
        Mk = M[ok2]
        zero = np.all(Mk @ sub == 0, axis=1)
        sq = np.einsum("ij,jk,ik->i", Mk, sub, Mk)
        for row, z, q in zip(Mk, zero, sq):
            key = tuple(zip(idx, (int(x) for x in row)))
            degree_two.add(key)
            if z and q == 0:
                accepted.add(key)
    return accepted, degree_two
