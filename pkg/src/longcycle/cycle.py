"""Cycles on a plane graph and the face structure they induce.

The context built here is the chord-free subgraph ``h`` together with the
inside/outside split of the off-cycle vertices and a classification of the
faces of ``h`` by how many off-cycle vertices and cycle edges they touch.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .embed import EmbeddedGraph
from .errors import InternalError, MalformedInput, NotACycle

INSIDE = "inside"
OUTSIDE = "outside"

MINOR = "minor"
MAJOR = "major"
CYCLE_BOUNDED = "cycle-bounded"


@dataclass(frozen=True)
class Cycle:
    """Vertices ``v0 .. v(c-1)`` in traversal order; edges join cyclic neighbours."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def __contains__(self, v: object) -> bool:
        return v in self.vertex_set

    @property
    def length(self) -> int:
        return len(self.vertices)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def edge(self, i: int) -> tuple[int, int]:
        """The ``i``-th cycle edge, from ``v_i`` to ``v_(i+1)``."""
        return self[i], self[i + 1]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(zip(vs, vs[1:] + vs[:1]))

    def reversed(self) -> "Cycle":
        return Cycle(tuple(reversed(self.vertices)))

    def canonical(self) -> tuple[int, ...]:
        """Rotation starting at the least vertex, in the lexicographically smaller direction."""
        vs = self.vertices
        k = vs.index(min(vs))
        fwd = vs[k:] + vs[:k]
        back = (fwd[0],) + tuple(reversed(fwd[1:]))
        return min(fwd, back)

    def to_text(self) -> str:
        return "cycle: " + " ".join(map(str, self.vertices))

    @classmethod
    def from_text(cls, line: str) -> "Cycle":
        head, sep, tail = line.strip().partition(":")
        if not sep or head.strip() != "cycle":
            raise MalformedInput(f"expected 'cycle: v0 v1 ...', got {line!r}")
        try:
            return cls(tuple(int(t) for t in tail.split()))
        except ValueError:
            raise MalformedInput(f"non-integer vertex in {line!r}") from None


def validate_cycle(g: EmbeddedGraph, c: Cycle | Sequence[int]) -> Cycle:
    """Return ``c`` as a :class:`Cycle` after checking it is a cycle of ``g``."""
    if not isinstance(c, Cycle):
        c = Cycle(tuple(c))
    vs = c.vertices
    if len(vs) < 3:
        raise NotACycle(f"a cycle needs at least 3 vertices, got {len(vs)}")
    if len(set(vs)) != len(vs):
        raise NotACycle("cycle repeats a vertex")
    if min(vs) < 0 or max(vs) >= g.n:
        raise NotACycle(f"cycle leaves the vertex range 0..{g.n - 1}")
    adj = g.adjacency
    for x, y in c.edges:
        if y not in adj[x]:
            raise NotACycle(f"{x}-{y} is not an edge of the graph")
    return c


def is_isolating(g: EmbeddedGraph, c: Cycle | Sequence[int]) -> bool:
    """Every vertex off ``c`` has degree 3 and only cycle neighbours."""
    c = validate_cycle(g, c)
    on = c.vertex_set
    for v in range(g.n):
        if v in on:
            continue
        if g.degree(v) != 3 or not g.neighbors(v) <= on:
            return False
    return True


def extendable_edges(g: EmbeddedGraph, c: Cycle | Sequence[int]) -> list[tuple[tuple[int, int], int]]:
    """Cycle edges whose ends share an off-cycle neighbour, each with the least such neighbour."""
    c = validate_cycle(g, c)
    on = c.vertex_set
    out = []
    for x, y in c.edges:
        common = (g.neighbors(x) & g.neighbors(y)) - on
        if common:
            out.append(((x, y), min(common)))
    return out


def chords(g: EmbeddedGraph, c: Cycle) -> list[tuple[int, int]]:
    on = c.vertex_set
    cyc = {frozenset(e) for e in c.edges}
    return [(u, v) for u, v in g.edges if u in on and v in on and frozenset((u, v)) not in cyc]


# ---------------------------------------------------------------------------
# Context
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FaceInfo:
    id: int
    walk: tuple[int, ...]
    side: str | None
    kind: str
    c_edges: tuple[int, ...]  # cycle edge indices, contiguous runs in cycle order
    off_cycle: tuple[int, ...]
    lone_vertex: int | None

    @property
    def j(self) -> int:
        return len(self.c_edges)

    @property
    def is_minor(self) -> bool:
        return self.kind == MINOR

    @property
    def is_major(self) -> bool:
        return self.kind == MAJOR

    @property
    def middle_edge(self) -> int:
        if self.j != 3:
            raise InternalError(f"face {self.id} has {self.j} C-edges, middle edge needs 3")
        return self.c_edges[1]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "side": self.side,
            "class": self.kind,
            "j": self.j,
            "c_edges": list(self.c_edges),
            "lone_vertex": self.lone_vertex,
        }


@dataclass(frozen=True)
class CycleContext:
    base: EmbeddedGraph
    cycle: Cycle
    h: EmbeddedGraph
    chords: tuple[tuple[int, int], ...]
    v_minus: frozenset[int]
    v_plus: frozenset[int]
    faces: tuple[FaceInfo, ...]
    # edge i -> (inside face, outside face)
    edge_faces: tuple[tuple[int, int], ...]
    m: dict[tuple[int, int], int] = field(repr=False)

    @property
    def c(self) -> int:
        return len(self.cycle)

    def opposite(self, face: int, edge: int) -> int:
        a, b = self.edge_faces[edge]
        if face == a:
            return b
        if face == b:
            return a
        raise KeyError(f"edge {edge} is not a C-edge of face {face}")

    @cached_property
    def opposite_map(self) -> dict[tuple[int, int], int]:
        out = {}
        for e, (a, b) in enumerate(self.edge_faces):
            out[(a, e)] = b
            out[(b, e)] = a
        return out

    def opposites(self, face: int) -> list[tuple[int, int]]:
        """``(edge, opposite face)`` for every C-edge of ``face``, in the face's edge order."""
        return [(e, self.opposite(face, e)) for e in self.faces[face].c_edges]

    def m_between(self, f: int, g: int) -> int:
        return self.m.get((f, g), 0)

    def opposite_faces(self, face: int) -> list[int]:
        """Distinct opposite faces, in order of first shared edge."""
        seen: list[int] = []
        for _, o in self.opposites(face):
            if o not in seen:
                seen.append(o)
        return seen

    @property
    def minor_faces(self) -> list[FaceInfo]:
        return [f for f in self.faces if f.kind == MINOR]

    @property
    def both_sides_nonempty(self) -> bool:
        return bool(self.v_minus) and bool(self.v_plus)

    def to_json(self) -> dict:
        return {
            "cycle": list(self.cycle.vertices),
            "faces": [f.to_json() for f in self.faces],
            "v_minus": sorted(self.v_minus),
            "v_plus": sorted(self.v_plus),
            "m": [[f, g, k] for (f, g), k in sorted(self.m.items()) if f < g],
        }


def _inside_neighbours(h: EmbeddedGraph, c: Cycle, i: int) -> list[int]:
    """Neighbours of ``v_i`` strictly after ``v_(i-1)`` and before ``v_(i+1)`` in its rotation."""
    v, prev, nxt = c[i], c[i - 1], c[i + 1]
    rot = h.rotations[v]
    k = rot.index(prev)
    out = []
    for step in range(1, len(rot)):
        u = rot[(k + step) % len(rot)]
        if u == nxt:
            return out
        out.append(u)
    raise InternalError(f"cycle neighbour {nxt} missing around {v}")


def _order_cycle_edges(idx: Iterable[int], c: int) -> tuple[int, ...]:
    s = sorted(set(idx))
    if not s or len(s) == c:
        return tuple(s)
    present = set(s)
    # start right after the gap that precedes a run
    start = next(i for i in s if (i - 1) % c not in present)
    out = []
    k = start
    while len(out) < len(s):
        if k % c in present:
            out.append(k % c)
        k += 1
    return tuple(out)


def build_context(g: EmbeddedGraph, c: Cycle | Sequence[int]) -> CycleContext:
    """Derive ``h``, the side split and the face classification for cycle ``c``.

    The inside is the side that contains the faces traversing the cycle edges
    in cycle order, i.e. the faces holding darts ``(v_i, v_(i+1))``.
    """
    c = validate_cycle(g, c)
    on = c.vertex_set
    ch = chords(g, c)
    h = g.without_edges(ch) if ch else g

    # side of off-cycle vertices: seed from the cycle wedges, then flood
    side: dict[int, str] = {}
    queue: deque[int] = deque()

    def claim(u: int, s: str) -> None:
        old = side.get(u)
        if old is None:
            side[u] = s
            queue.append(u)
        elif old != s:
            raise InternalError(f"off-cycle vertex {u} is attached to both sides of the cycle")

    for i, v in enumerate(c.vertices):
        ins = _inside_neighbours(h, c, i)
        ins_set = set(ins)
        for u in h.rotations[v]:
            if u in on:
                continue
            claim(u, INSIDE if u in ins_set else OUTSIDE)
    while queue:
        u = queue.popleft()
        for w in h.adjacency[u]:
            if w not in on:
                claim(w, side[u])
    if len(side) != g.n - len(c):
        raise InternalError("some off-cycle vertex has no path to the cycle")

    # faces of h
    edge_index = {}
    for i, (x, y) in enumerate(c.edges):
        edge_index[(x, y)] = (i, INSIDE)
        edge_index[(y, x)] = (i, OUTSIDE)
    infos = []
    for fid, face in enumerate(h.faces):
        off = sorted(set(u for u in face.walk if u not in on))
        sides = {side[u] for u in off}
        cidx = []
        for d in face.darts:
            hit = edge_index.get(d)
            if hit is not None:
                cidx.append(hit[0])
                sides.add(hit[1])
        if len(sides) > 1:
            raise InternalError(f"face {fid} of h touches both sides of the cycle")
        fside = sides.pop() if sides else None
        kind = CYCLE_BOUNDED if not off else MINOR if len(off) == 1 else MAJOR
        infos.append(
            FaceInfo(
                id=fid,
                walk=face.walk,
                side=fside,
                kind=kind,
                c_edges=_order_cycle_edges(cidx, len(c)),
                off_cycle=tuple(off),
                lone_vertex=off[0] if kind == MINOR else None,
            )
        )

    edge_faces = tuple(
        (h.face_of(x, y), h.face_of(y, x)) for x, y in c.edges
    )
    m: dict[tuple[int, int], int] = {}
    for a, b in edge_faces:
        m[(a, b)] = m.get((a, b), 0) + 1
        if a != b:
            m[(b, a)] = m.get((b, a), 0) + 1

    return CycleContext(
        base=g,
        cycle=c,
        h=h,
        chords=tuple(ch),
        v_minus=frozenset(u for u, s in side.items() if s == INSIDE),
        v_plus=frozenset(u for u, s in side.items() if s == OUTSIDE),
        faces=tuple(infos),
        edge_faces=edge_faces,
        m=m,
    )
