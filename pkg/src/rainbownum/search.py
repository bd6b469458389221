"""Brute-force oracle: exhaustive search over exact colorings of Z_n.

A coloring is rainbow-free iff no edge of the solution hypergraph -- the
3-element sets {u, v, w} such that some ordering solves the equation --
receives three distinct colors.  Rainbow-freeness is invariant under
renaming colors, so the search enumerates set partitions of Z_n into
exactly r blocks, encoded as restricted-growth strings, instead of labeled
colorings (an r!-fold saving).

Elements are assigned in a deterministic greedy order that completes
hypergraph edges as early as possible, and a branch dies the moment a
completed edge is tricolored.  The ordering is what makes exhaustion
feasible: under the natural 0..n-1 order the first zero-sum edge closes
near the end of the string, while the greedy order closes one within the
first three assignments.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from . import modring
from .coloring import Coloring, find_rainbow
from .equation import Equation
from .errors import CapExceededError, ConsistencyError, ModulusMismatchError
from .formulas import PROV_BRUTE, RbResult


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exhaustive search.

    witness_policy picks which rainbow-free coloring is reported when one
    exists: "first-lexicographic" always returns the first hit of the
    deterministic enumeration, independent of thread count; "any" lets
    parallel workers race.  The rb value itself never depends on either.
    """

    n_cap: int = 20
    prune: bool = True
    parallel: bool = False
    threads: int | None = None
    witness_policy: str = "first-lexicographic"

    def __post_init__(self):
        if self.n_cap < 2:
            raise ValueError(f"n_cap must be >= 2, got {self.n_cap}")
        if self.witness_policy not in ("first-lexicographic", "any"):
            raise ValueError(f"unknown witness_policy {self.witness_policy!r}")


@dataclass(frozen=True)
class RainbowHypergraph:
    """Distinct-element solution sets of an equation, as sorted 3-tuples.

    A coloring of Z_n is rainbow-free for the equation iff no edge here is
    tricolored: three distinct colors force three distinct elements.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def is_rainbow_free(self, assign: Sequence[int]) -> bool:
        for u, v, w in self.edges:
            cu, cv, cw = assign[u], assign[v], assign[w]
            if cu != cv and cu != cw and cv != cw:
                return False
        return True


def build_hypergraph(eq: Equation) -> RainbowHypergraph:
    """All unordered {s1, s2, s3} with distinct entries solving eq in some order.

    Same pivot strategy as find_rainbow: n^2 pair enumeration when a unit
    coefficient exists (slots tried in order 3, 1, 2), n^3 otherwise;
    orderings are collapsed into unordered edges.
    """
    n = eq.n
    a1, a2, a3, b = eq.a1, eq.a2, eq.a3, eq.b
    edges = set()
    pivot = None
    for pos in (3, 1, 2):
        if gcd(eq.coeffs[pos - 1], n) == 1:
            pivot = pos
            break
    if pivot is None:
        for s1 in range(n):
            for s2 in range(n):
                for s3 in range(n):
                    if (a1 * s1 + a2 * s2 + a3 * s3 - b) % n == 0:
                        if s1 != s2 and s1 != s3 and s2 != s3:
                            edges.add(tuple(sorted((s1, s2, s3))))
    else:
        ainv = modring.try_inverse(eq.coeffs[pivot - 1], n)
        for u in range(n):
            for v in range(n):
                if pivot == 3:
                    t = (u, v, ainv * (b - a1 * u - a2 * v) % n)
                elif pivot == 1:
                    t = (ainv * (b - a2 * u - a3 * v) % n, u, v)
                else:
                    t = (u, ainv * (b - a1 * u - a3 * v) % n, v)
                if t[0] != t[1] and t[0] != t[2] and t[1] != t[2]:
                    edges.add(tuple(sorted(t)))
    return RainbowHypergraph(n, tuple(sorted(edges)))


def iter_exact_partitions(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of {0..n-1} into exactly r blocks, as color tuples.

    Restricted-growth encoding over the natural element order: every
    partition appears exactly once, so no two yields coincide up to color
    renaming.
    """
    if not 1 <= r <= n:
        return
    assign = [0] * n

    def rec(i: int, used: int):
        if used + (n - i) < r:
            return
        if i == n:
            if used == r:
                yield tuple(assign)
            return
        cap = used + 1 if used < r else r
        for col in range(cap):
            assign[i] = col
            yield from rec(i + 1, used + 1 if col == used else used)

    yield from rec(0, 0)


def _element_order(n: int, edges) -> list[int]:
    """Greedy assignment order: repeatedly pick the element that completes
    the most edges inside the prefix (ties: higher degree, then smaller
    value).  Deterministic."""
    incident: list[list] = [[] for _ in range(n)]
    for e in edges:
        for x in e:
            incident[x].append(e)
    order: list[int] = []
    in_prefix = [False] * n
    for _ in range(n):
        best, best_key = -1, None
        for x in range(n):
            if in_prefix[x]:
                continue
            completed = sum(
                all(y == x or in_prefix[y] for y in e) for e in incident[x]
            )
            key = (completed, len(incident[x]), -x)
            if best_key is None or key > best_key:
                best, best_key = x, key
        order.append(best)
        in_prefix[best] = True
    return order


def _pairs_by_position(n: int, edges, order: Sequence[int]):
    """For each position i in the assignment order, the position pairs of
    edges whose last element is assigned at step i."""
    pos = {x: i for i, x in enumerate(order)}
    by_pos: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in edges:
        ps = sorted(pos[x] for x in e)
        by_pos[ps[2]].append((ps[0], ps[1]))
    return tuple(tuple(p) for p in by_pos)


def _dfs_first(n, r, by_pos, prune, prefix=()):
    """First valid completion (colors by position) extending prefix, or None.

    With prune on, a color choice is rejected as soon as it tricolors an
    edge completed at this position; with prune off, full colorings are
    checked only at the leaves (used by the oracle-vs-oracle tests).
    """
    colors = list(prefix) + [0] * (n - len(prefix))
    used0 = max(prefix) + 1 if prefix else 0

    def rec(i: int, used: int) -> bool:
        if i == n:
            if used != r:
                return False
            if not prune:
                for k in range(n):
                    ck = colors[k]
                    for ju, jv in by_pos[k]:
                        cu, cv = colors[ju], colors[jv]
                        if cu != cv and cu != ck and cv != ck:
                            return False
            return True
        if used + (n - i) < r:
            return False
        cap = used + 1 if used < r else r
        pairs = by_pos[i] if prune else ()
        for col in range(cap):
            ok = True
            for ju, jv in pairs:
                cu, cv = colors[ju], colors[jv]
                if cu != cv and cu != col and cv != col:
                    ok = False
                    break
            if ok:
                colors[i] = col
                if rec(i + 1, used + 1 if col == used else used):
                    return True
        return False

    return colors if rec(len(prefix), used0) else None


def _prefixes(n, r, by_pos, prune, depth):
    """All valid restricted-growth prefixes of the given depth, in
    enumeration order (prune-checked, feasibility-checked)."""
    out: list[tuple[int, ...]] = []
    colors = [0] * depth

    def rec(i: int, used: int):
        if i == depth:
            out.append(tuple(colors))
            return
        if used + (n - i) < r:
            return
        cap = used + 1 if used < r else r
        pairs = by_pos[i] if prune else ()
        for col in range(cap):
            ok = True
            for ju, jv in pairs:
                cu, cv = colors[ju], colors[jv]
                if cu != cv and cu != col and cv != col:
                    ok = False
                    break
            if ok:
                colors[i] = col
                rec(i + 1, used + 1 if col == used else used)

    rec(0, 0)
    return out


def _search_task(args):
    n, r, by_pos, prune, prefix = args
    return _dfs_first(n, r, by_pos, prune, prefix)


def _parallel_first(n, r, by_pos, prune, policy, workers):
    """Split the search on restricted-growth prefixes and farm subtrees out
    to worker processes.  Under "first-lexicographic" results are merged in
    task order, which reproduces the sequential witness exactly."""
    depth = 2
    prefixes = _prefixes(n, r, by_pos, prune, depth)
    while depth < n - 1 and len(prefixes) < 4 * workers:
        depth += 1
        prefixes = _prefixes(n, r, by_pos, prune, depth)
    if len(prefixes) <= 1 or workers <= 1:
        return _dfs_first(n, r, by_pos, prune)
    tasks = [(n, r, by_pos, prune, p) for p in prefixes]
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        futures = [pool.submit(_search_task, t) for t in tasks]
        if policy == "first-lexicographic":
            for fut in futures:
                res = fut.result()
                if res is not None:
                    return res
            return None
        for fut in as_completed(futures):
            res = fut.result()
            if res is not None:
                return res
        return None
    finally:
        pool.shutdown(wait=True, cancel_futures=True)


def _exists_prepared(n, eq, r, cfg, order, by_pos):
    workers = cfg.threads or os.cpu_count() or 1
    if cfg.parallel and workers > 1:
        colors = _parallel_first(n, r, by_pos, cfg.prune, cfg.witness_policy, workers)
    else:
        colors = _dfs_first(n, r, by_pos, cfg.prune)
    if colors is None:
        return None
    assign = [0] * n
    for i, x in enumerate(order):
        assign[x] = colors[i]
    relabel: dict[int, int] = {}
    for c in assign:
        if c not in relabel:
            relabel[c] = len(relabel)
    witness = Coloring(tuple(relabel[c] for c in assign))
    if witness.r != r:
        raise ConsistencyError(f"search produced {witness.r} colors instead of {r}")
    if not find_rainbow(witness, eq).rainbow_free:
        raise ConsistencyError("search produced a coloring with a rainbow solution")
    return witness


def _prepare(n, eq, cfg):
    if eq.n != n:
        raise ModulusMismatchError(f"n = {n} but equation is mod {eq.n}")
    if n > cfg.n_cap:
        raise CapExceededError(f"n = {n} exceeds n_cap = {cfg.n_cap}")
    hg = build_hypergraph(eq)
    order = _element_order(n, hg.edges)
    return order, _pairs_by_position(n, hg.edges, order)


def exists_rainbow_free(
    n: int, eq: Equation, r: int, cfg: SearchConfig | None = None
) -> Coloring | None:
    """A rainbow-free exact r-coloring of Z_n for eq, or None if none exists.

    Enumeration covers every set partition into exactly r blocks; any
    coloring returned has been re-verified with find_rainbow (always on).
    """
    cfg = cfg or SearchConfig()
    if not 3 <= r <= n:
        raise ValueError(f"r must be in [3, {n}], got {r}")
    order, by_pos = _prepare(n, eq, cfg)
    return _exists_prepared(n, eq, r, cfg, order, by_pos)


def rainbow_number_brute(
    n: int, eq: Equation, cfg: SearchConfig | None = None
) -> RbResult:
    """rb(Z_n, eq) by the oracle: the least r in [3, n] admitting no
    rainbow-free exact r-coloring, or n + 1 when even the all-singletons
    coloring is rainbow-free.

    Attaches the rainbow-free coloring found at value - 1 colors as a
    lower-bound certificate (when value > 3).  For n <= 8 the downward
    closure of rainbow-freeness is verified empirically rather than
    assumed: every r above the answer is searched too, and a hit raises
    ConsistencyError.
    """
    cfg = cfg or SearchConfig()
    order, by_pos = _prepare(n, eq, cfg)
    value = n + 1
    last = None
    for r in range(3, n + 1):
        found = _exists_prepared(n, eq, r, cfg, order, by_pos)
        if found is None:
            value = r
            break
        last = found
    if n <= 8:
        for r in range(value + 1, n + 1):
            if _exists_prepared(n, eq, r, cfg, order, by_pos) is not None:
                raise ConsistencyError(
                    f"rainbow-free coloring exists at {r} colors but not at {value}"
                )
    witness = last if value > 3 else None
    return RbResult(value=value, provenance=PROV_BRUTE, witness=witness)
