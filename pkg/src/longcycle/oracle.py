"""Exhaustive ground truth for small graphs.

Nothing here shares code with the constructive algorithm beyond the graph
model: cycle validity, isolation and separators are re-derived directly
from adjacency so that the two routes can be compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .embed import EmbeddedGraph
from .errors import BudgetExceeded

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class OracleResult:
    circumference: int
    witness: tuple[int, ...]
    explored: int

    def to_json(self) -> dict:
        return {"circumference": self.circumference, "witness": list(self.witness), "explored": self.explored}


def cycle_is_valid(g: EmbeddedGraph, vertices: Sequence[int]) -> bool:
    vs = list(vertices)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if any(not 0 <= v < g.n for v in vs):
        return False
    return all(vs[(i + 1) % len(vs)] in g.adjacency[vs[i]] for i in range(len(vs)))


def cycle_is_isolating(g: EmbeddedGraph, vertices: Sequence[int]) -> bool:
    """Components of G - C by flood fill, each must be one degree-3 vertex."""
    on = set(vertices)
    seen: set[int] = set()
    for s in range(g.n):
        if s in on or s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w not in on and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        if len(comp) != 1 or len(g.adjacency[s]) != 3:
            return False
    return True


def canonical_cycle(vertices: Sequence[int]) -> tuple[int, ...]:
    vs = tuple(vertices)
    k = vs.index(min(vs))
    fwd = vs[k:] + vs[:k]
    back = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, back)


def _reach_count(adj: list[int], start: int, allowed: int) -> int:
    """Number of vertices of the bitmask ``allowed`` reachable from ``start`` inside it."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return bin(seen).count("1")


def circumference_bruteforce(g: EmbeddedGraph, node_budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Longest cycle by DFS; each cycle is rooted at its least vertex.

    A branch is cut when the vertices still reachable cannot beat the best
    cycle found so far.
    """
    n = g.n
    adj = [0] * n
    for v in range(n):
        for u in g.adjacency[v]:
            adj[v] |= 1 << u
    best_len = 0
    best: tuple[int, ...] = ()
    explored = 0
    full = (1 << n) - 1

    for s in range(n):
        if n - s <= best_len:
            break
        allowed_root = full & ~((1 << s) - 1)  # vertices >= s
        path = [s]

        def rec(v: int, used: int) -> None:
            nonlocal best_len, best, explored
            explored += 1
            if explored > node_budget:
                raise BudgetExceeded(f"circumference search exceeded {node_budget} nodes", explored)
            if len(path) >= 3 and adj[v] >> s & 1 and len(path) > best_len:
                best_len = len(path)
                best = tuple(path)
                if best_len == n - s:
                    return
            free = allowed_root & ~used
            # upper bound: current path plus whatever is reachable from v
            if len(path) - 1 + _reach_count(adj, v, free | (1 << v)) <= best_len:
                return
            cand = adj[v] & free
            while cand:
                low = cand & -cand
                w = low.bit_length() - 1
                cand ^= low
                path.append(w)
                rec(w, used | low)
                path.pop()
                if best_len == n - s:
                    return

        rec(s, 1 << s)
    return OracleResult(best_len, canonical_cycle(best) if best else (), explored)


def _simple_cycles(g: EmbeddedGraph, min_length: int = 3) -> Iterator[tuple[int, ...]]:
    """Every cycle once, rooted at its least vertex, second vertex below the last."""
    n = g.n
    adj = [sorted(g.adjacency[v]) for v in range(n)]
    for s in range(n):
        path = [s]
        used = {s}

        def rec(v: int) -> Iterator[tuple[int, ...]]:
            for w in adj[v]:
                if w == s and len(path) >= max(3, min_length) and path[1] < path[-1]:
                    yield tuple(path)
                if w <= s or w in used:
                    continue
                used.add(w)
                path.append(w)
                yield from rec(w)
                path.pop()
                used.discard(w)

        yield from rec(s)


def enumerate_isolating_cycles(
    g: EmbeddedGraph, max_count: int | None = None, min_length: int = 3
) -> list[tuple[int, ...]]:
    """Isolating cycles in canonical form, sorted, truncated to ``max_count``."""
    found = []
    for cyc in _simple_cycles(g, min_length):
        if cycle_is_isolating(g, cyc):
            found.append(canonical_cycle(cyc))
    found.sort()
    if max_count is not None:
        found = found[:max_count]
    return found


def three_separators_bruteforce(g: EmbeddedGraph) -> list[tuple[tuple[int, ...], list[frozenset[int]]]]:
    """Every vertex triple whose removal disconnects ``g``, with the components left."""
    out = []
    for trio in itertools.combinations(range(g.n), 3):
        gone = set(trio)
        comps = []
        seen: set[int] = set()
        for s in range(g.n):
            if s in gone or s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                v = stack.pop()
                for w in g.adjacency[v]:
                    if w not in gone and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        if len(comps) > 1:
            out.append((trio, comps))
    return out


def is_essentially_4_connected_bruteforce(g: EmbeddedGraph) -> bool:
    """3-connected by pair removal, and every separating triple leaves a singleton."""
    n = g.n
    if n < 4:
        return False
    for k in (1, 2):
        for gone in itertools.combinations(range(n), k):
            rest = [v for v in range(n) if v not in gone]
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                v = stack.pop()
                for w in g.adjacency[v]:
                    if w not in gone and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) != len(rest):
                return False
    return all(any(len(c) == 1 for c in comps) for _, comps in three_separators_bruteforce(g))
