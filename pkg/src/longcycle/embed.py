"""Plane graphs given as rotation systems.

A graph is stored as one clockwise neighbour list per vertex.  Faces are
traced with the usual next-dart rule: the dart following ``(u, v)`` on its
face is ``(v, w)`` where ``w`` comes right after ``u`` in the rotation of
``v``.  For a connected graph the rotation system describes a sphere
embedding exactly when Euler's formula ``n - m + f = 2`` holds.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import (
    AsymmetricAdjacency,
    BadHeader,
    Disconnected,
    EulerViolation,
    InternalError,
    MalformedInput,
    NotThreeConnected,
    TooSmall,
    TruncatedRecord,
)

Dart = tuple[int, int]

PLANAR_CODE_HEADER = b">>planar_code<<"


@dataclass(frozen=True)
class Face:
    """Closed boundary walk of a face, as the sequence of visited vertices."""

    walk: tuple[int, ...]

    @property
    def darts(self) -> list[Dart]:
        w = self.walk
        return [(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]

    def __len__(self) -> int:
        return len(self.walk)


class EmbeddedGraph:
    """A simple connected plane graph on vertices ``0..n-1``.

    Instances are validated on construction and never mutated afterwards.
    """

    def __init__(self, rotations: Sequence[Sequence[int]]) -> None:
        rot = tuple(tuple(int(u) for u in r) for r in rotations)
        n = len(rot)
        if n == 0:
            raise MalformedInput("graph has no vertices")
        for v, r in enumerate(rot):
            for u in r:
                if not 0 <= u < n:
                    raise MalformedInput(f"vertex {v}: neighbour {u} out of range 0..{n - 1}")
                if u == v:
                    raise MalformedInput(f"vertex {v}: loop")
            if len(set(r)) != len(r):
                raise MalformedInput(f"vertex {v}: parallel edges")
        adj = tuple(frozenset(r) for r in rot)
        for v, r in enumerate(rot):
            for u in r:
                if v not in adj[u]:
                    raise AsymmetricAdjacency(f"edge {v}-{u} is listed at {v} but not at {u}")
        self.rotations = rot
        self._adj = adj
        self._succ = tuple({r[i]: r[(i + 1) % len(r)] for i in range(len(r))} for r in rot)
        if not _is_connected(adj):
            raise Disconnected("graph is not connected")
        faces = self.faces
        if n - self.m + len(faces) != 2:
            raise EulerViolation(
                f"n - m + f = {n} - {self.m} + {len(faces)} != 2; rotations do not form a plane embedding"
            )

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotations)

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, r in enumerate(self.rotations) for v in sorted(r) if u < v)

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def next_dart(self, u: int, v: int) -> Dart:
        """Dart that follows ``(u, v)`` along its face."""
        return v, self._succ[v][u]

    # -- faces ---------------------------------------------------------------

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        if self.n == 1:
            return (Face((0,)),)
        seen: set[Dart] = set()
        out = []
        for u in range(self.n):
            for v in sorted(self.rotations[u]):
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = self.next_dart(a, b)
                if (a, b) != (u, v):
                    raise InternalError("face traversal did not close")
                out.append(Face(tuple(walk)))
        return tuple(out)

    @cached_property
    def _face_index(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f.darts}

    def face_of(self, u: int, v: int) -> int:
        """Index of the face containing dart ``(u, v)``."""
        return self._face_index[(u, v)]

    # -- derived graphs ------------------------------------------------------

    def mirrored(self) -> "EmbeddedGraph":
        """The same graph with every rotation reversed (reflected embedding)."""
        return EmbeddedGraph([tuple(reversed(r)) for r in self.rotations])

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "EmbeddedGraph":
        drop: dict[int, set[int]] = {}
        for u, v in removed:
            drop.setdefault(u, set()).add(v)
            drop.setdefault(v, set()).add(u)
        return EmbeddedGraph(
            [tuple(u for u in r if u not in drop.get(v, ())) for v, r in enumerate(self.rotations)]
        )

    # -- dunder ----------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EmbeddedGraph) and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash(self.rotations)

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m}, faces={len(self.faces)})"


def faces(g: EmbeddedGraph) -> list[Face]:
    return list(g.faces)


def from_faces(n: int, face_walks: Iterable[Sequence[int]]) -> EmbeddedGraph:
    """Build a graph from consistently oriented face boundaries.

    Every dart must occur in exactly one walk; the rotations are read off
    from consecutive darts ``(u, v), (v, w)`` which put ``w`` right after
    ``u`` around ``v``.
    """
    succ: list[dict[int, int]] = [{} for _ in range(n)]
    for walk in face_walks:
        k = len(walk)
        for i in range(k):
            u, v, w = walk[i], walk[(i + 1) % k], walk[(i + 2) % k]
            if u in succ[v]:
                raise MalformedInput(f"dart ({u}, {v}) occurs in two faces")
            succ[v][u] = w
    rotations = []
    for v in range(n):
        if not succ[v]:
            raise MalformedInput(f"vertex {v} lies on no face")
        start = min(succ[v])
        r = [start]
        while (nxt := succ[v][r[-1]]) != start:
            r.append(nxt)
            if len(r) > len(succ[v]):
                raise MalformedInput(f"faces around vertex {v} do not close up")
        if len(r) != len(succ[v]):
            raise MalformedInput(f"faces around vertex {v} form more than one fan")
        rotations.append(r)
    return EmbeddedGraph(rotations)


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------


def _is_connected(adj: Sequence[Iterable[int]]) -> bool:
    n = len(adj)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def components_without(g: EmbeddedGraph, removed: Iterable[int]) -> list[tuple[int, ...]]:
    """Connected components of ``g - removed``, each sorted, in order of least vertex."""
    n = g.n
    gone = [False] * n
    for v in removed:
        gone[v] = True
    comp = [-1] * n
    out = []
    for s in range(n):
        if gone[s] or comp[s] != -1:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not gone[w] and comp[w] == -1:
                    comp[w] = len(out)
                    members.append(w)
                    queue.append(w)
        out.append(tuple(sorted(members)))
    return out


def articulation_points(g: EmbeddedGraph, removed: Iterable[int] = ()) -> set[int]:
    """Cut vertices of ``g - removed`` (per component, iterative Tarjan)."""
    n = g.n
    adj = g.rotations
    gone = [False] * n
    for v in removed:
        gone[v] = True
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    clock = 0
    for root in range(n):
        if gone[root] or disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if gone[w]:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                cut.add(parent)
        if root_children >= 2:
            cut.add(root)
    return cut


def is_3_connected(g: EmbeddedGraph) -> bool:
    if g.n < 4:
        raise TooSmall(f"3-connectivity needs n >= 4, got n={g.n}")
    if is_triangulation(g):
        # simple plane triangulations on at least 4 vertices are 3-connected
        return True
    if articulation_points(g):
        return False
    for u in range(g.n):
        if len(components_without(g, (u,))) != 1 or articulation_points(g, (u,)):
            return False
    return True


@dataclass(frozen=True)
class Separator:
    vertices: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return any(len(c) == 1 for c in self.components)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "components": [list(c) for c in self.components]}


def _face_sharing_pairs(g: EmbeddedGraph) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for f in g.faces:
        for a, b in itertools.combinations(sorted(set(f.walk)), 2):
            pairs.add((a, b))
    return pairs


def _separating_triangles(g: EmbeddedGraph) -> list[tuple[int, int, int]]:
    """Non-facial triangles of a triangulation, sorted; these are its 3-separators."""
    facial = {frozenset(f.walk) for f in g.faces}
    adj = g.adjacency
    out = []
    for u, v in g.edges:
        for w in adj[u] & adj[v]:
            if w > v and frozenset((u, v, w)) not in facial:
                out.append((u, v, w))
    out.sort()
    return out


def _separator_triples(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    """Vertex triples of all 3-separators of a 3-connected plane graph, sorted.

    In a 3-connected plane graph every 3-separator is minimal, so a closed
    curve through its three vertices and three faces separates the graph;
    hence any two of its vertices share a face.  It therefore suffices to
    look for cut vertices of ``g - {a, b}`` over face-sharing pairs.
    """
    if g.n >= 4 and is_triangulation(g):
        return list(_separating_triangles(g))
    found: set[tuple[int, ...]] = set()
    for a, b in _face_sharing_pairs(g):
        for w in articulation_points(g, (a, b)):
            found.add(tuple(sorted((a, b, w))))
    return sorted(found)


def three_separators(g: EmbeddedGraph) -> list[Separator]:
    """All 3-separators of a 3-connected plane graph with their components, sorted."""
    return [Separator(s, tuple(components_without(g, s))) for s in _separator_triples(g)]


def _checked(g: EmbeddedGraph, triple: tuple[int, ...]) -> Separator:
    sep = Separator(triple, tuple(components_without(g, triple)))
    if len(sep.components) != 2:
        raise InternalError(
            f"3-separator {sep.vertices} leaves {len(sep.components)} components, expected 2"
        )
    return sep


def essential_4_connectivity(g: EmbeddedGraph) -> Separator | None:
    """Return ``None`` if ``g`` is essentially 4-connected, else a witness.

    The witness is the lexicographically least non-trivial 3-separator.
    On triangulations a separator is trivial exactly when it is the
    neighbourhood of a degree-3 vertex, which avoids a component search per
    separator.
    """
    if g.n < 4 or not is_3_connected(g):
        raise NotThreeConnected("graph is not 3-connected")
    triples = _separator_triples(g)
    if is_triangulation(g):
        stars = {frozenset(g.neighbors(v)) for v in range(g.n) if g.degree(v) == 3}
        for t in triples:
            if frozenset(t) not in stars:
                sep = _checked(g, t)
                if sep.is_trivial:
                    raise InternalError(f"separating triangle {t} has a singleton side but no star")
                return sep
        return None
    for t in triples:
        sep = _checked(g, t)
        if not sep.is_trivial:
            return sep
    return None


def is_essentially_4_connected(g: EmbeddedGraph) -> bool:
    try:
        return essential_4_connectivity(g) is None
    except (NotThreeConnected, TooSmall):
        return False


def is_triangulation(g: EmbeddedGraph) -> bool:
    return g.n >= 3 and all(len(f) == 3 for f in g.faces)


def is_4_connected_triangulation(g: EmbeddedGraph) -> bool:
    return g.n >= 6 and is_triangulation(g) and not _separating_triangles(g)


# ---------------------------------------------------------------------------
# Rotation-system text format
# ---------------------------------------------------------------------------


def parse_rotation_text(text: str) -> EmbeddedGraph:
    n: int | None = None
    rows: dict[int, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise MalformedInput(f"line {lineno}: expected 'n <count>', got {raw!r}")
            n = int(parts[1])
            if n < 1:
                raise MalformedInput(f"line {lineno}: vertex count must be positive")
            continue
        head, sep, tail = line.partition(":")
        if not sep or not head.strip().isdigit():
            raise MalformedInput(f"line {lineno}: expected '<v>: <u1> <u2> ...', got {raw!r}")
        v = int(head)
        if v >= n:
            raise MalformedInput(f"line {lineno}: vertex {v} out of range 0..{n - 1}")
        if v in rows:
            raise MalformedInput(f"line {lineno}: vertex {v} listed twice")
        try:
            rows[v] = [int(tok) for tok in tail.split()]
        except ValueError:
            raise MalformedInput(f"line {lineno}: non-integer neighbour in {raw!r}") from None
    if n is None:
        raise MalformedInput("missing 'n <count>' line")
    missing = [v for v in range(n) if v not in rows]
    if missing:
        raise MalformedInput(f"no rotation given for vertices {missing[:10]}")
    return EmbeddedGraph([rows[v] for v in range(n)])


def to_rotation_text(g: EmbeddedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    for v, r in enumerate(g.rotations):
        lines.append(f"{v}: {' '.join(map(str, r))}".rstrip())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# planar_code (one-byte variant)
# ---------------------------------------------------------------------------


def iter_planar_code(data: bytes) -> Iterator[EmbeddedGraph]:
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("planar_code input must start with '>>planar_code<<'")
    pos = len(PLANAR_CODE_HEADER)
    end = len(data)
    while pos < end:
        n = data[pos]
        pos += 1
        if n == 0:
            raise MalformedInput("two-byte planar_code records are not supported")
        rotations = []
        for v in range(n):
            r = []
            while True:
                if pos >= end:
                    raise TruncatedRecord(f"record ends inside the rotation of vertex {v + 1}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise MalformedInput(f"vertex {v + 1}: neighbour {b} exceeds n={n}")
                r.append(b - 1)
            rotations.append(r)
        yield EmbeddedGraph(rotations)


def parse_planar_code(data: bytes) -> list[EmbeddedGraph]:
    return list(iter_planar_code(data))


def write_planar_code(graphs: Iterable[EmbeddedGraph]) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER)
    for g in graphs:
        if g.n > 255:
            raise ValueError("one-byte planar_code holds at most 255 vertices")
        out.append(g.n)
        for r in g.rotations:
            out.extend(u + 1 for u in r)
            out.append(0)
    return bytes(out)


# ---------------------------------------------------------------------------
# Format sniffing
# ---------------------------------------------------------------------------


def load_graphs(data: bytes) -> list[EmbeddedGraph]:
    """Parse either format; planar_code is recognised by its header."""
    if data.startswith(b">>planar_code"):
        return parse_planar_code(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise MalformedInput("input is neither planar_code nor UTF-8 rotation text") from None
    return [parse_rotation_text(text)]


def read_graphs(path: str | Path) -> list[EmbeddedGraph]:
    return load_graphs(Path(path).read_bytes())
