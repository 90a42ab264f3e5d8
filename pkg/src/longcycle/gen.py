"""Instance corpus: catalog fixtures, kleetopes and filtered planar_code ingestion."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from .embed import (
    EmbeddedGraph,
    essential_4_connectivity,
    from_faces,
    is_3_connected,
    is_4_connected_triangulation,
    is_essentially_4_connected,
    is_triangulation,
    iter_planar_code,
)
from .errors import NotThreeConnected, NotTriangulation, PostCheckFailed, TooSmall, UnknownName

log = logging.getLogger(__name__)


def wheel(k: int) -> EmbeddedGraph:
    """Hub 0 joined to the rim cycle 1..k."""
    rim = list(range(1, k + 1))
    faces = [(0, rim[i], rim[(i + 1) % k]) for i in range(k)]
    faces.append(tuple(reversed(rim)))
    return from_faces(k + 1, faces)


def bipyramid(k: int) -> EmbeddedGraph:
    """Two apexes 0 and k+1 over the rim 1..k; 4-connected for k >= 4."""
    s = k + 1
    rim = list(range(1, k + 1))
    faces = []
    for i in range(k):
        a, b = rim[i], rim[(i + 1) % k]
        faces.append((0, a, b))
        faces.append((s, b, a))
    return from_faces(k + 2, faces)


def _icosahedron() -> EmbeddedGraph:
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        u, u1 = up[i], up[(i + 1) % 5]
        l, lp = lo[i], lo[(i - 1) % 5]
        faces.append((0, u, u1))
        faces.append((u, l, u1))
        faces.append((l, u, lp))
        faces.append((11, l, lp))
    return from_faces(12, faces)


_CATALOG: dict[str, Callable[[], EmbeddedGraph]] = {
    "triangle": lambda: from_faces(3, [(0, 1, 2), (0, 2, 1)]),
    "tetrahedron": lambda: from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)]),
    "W5": lambda: wheel(5),
    "W6": lambda: wheel(6),
    "cube": lambda: from_faces(
        8,
        [(0, 1, 2, 3), (4, 7, 6, 5), (0, 4, 5, 1), (1, 5, 6, 2), (2, 6, 7, 3), (3, 7, 4, 0)],
    ),
    "octahedron": lambda: bipyramid(4),
    "icosahedron": _icosahedron,
}

CATALOG_NAMES = tuple(_CATALOG)

# fixtures that deliberately fail essential 4-connectivity or 3-connectivity
NEGATIVE_FIXTURES = frozenset({"triangle", "W6"})


def catalog(name: str) -> EmbeddedGraph:
    try:
        return _CATALOG[name]()
    except KeyError:
        raise UnknownName(f"unknown catalog graph {name!r}; known: {', '.join(_CATALOG)}") from None


def kleetope(base: EmbeddedGraph) -> EmbeddedGraph:
    """Stack one degree-3 vertex into every face of a triangulation.

    New vertices are numbered ``base.n + i`` for face ``i``.  The result is
    checked for essential 4-connectivity before it is returned.
    """
    if not is_triangulation(base):
        raise NotTriangulation("kleetope needs a triangulation (every face a triangle)")
    n = base.n
    faces = []
    for i, f in enumerate(base.faces):
        a, b, c = f.walk
        t = n + i
        faces.extend([(a, b, t), (b, c, t), (c, a, t)])
    g = from_faces(n + len(base.faces), faces)
    try:
        witness = essential_4_connectivity(g)
    except (NotThreeConnected, TooSmall) as exc:
        raise PostCheckFailed(f"kleetope is not 3-connected: {exc}") from exc
    if witness is not None:
        raise PostCheckFailed(
            f"kleetope has non-trivial 3-separator {witness.vertices}", witness=witness
        )
    return g


# ---------------------------------------------------------------------------
# Ingestion
# ---------------------------------------------------------------------------


def _safe_3_connected(g: EmbeddedGraph) -> bool:
    return g.n >= 4 and is_3_connected(g)


PREDICATES: dict[str, Callable[[EmbeddedGraph], bool]] = {
    "essentially-4-connected": is_essentially_4_connected,
    "3-connected": _safe_3_connected,
    "4-connected-triangulation": is_4_connected_triangulation,
}
PREDICATE_ALIASES = {"e4c": "essentially-4-connected", "3c": "3-connected", "4ct": "4-connected-triangulation"}


def resolve_predicate(name: str) -> Callable[[EmbeddedGraph], bool]:
    key = PREDICATE_ALIASES.get(name, name)
    try:
        return PREDICATES[key]
    except KeyError:
        raise UnknownName(f"unknown filter {name!r}; known: {', '.join(PREDICATES)}") from None


@dataclass
class IngestResult:
    """Graphs that passed the filter, plus per-file counts."""

    path: str
    require: str
    graphs: list[EmbeddedGraph] = field(default_factory=list)
    read: int = 0

    @property
    def kept(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[EmbeddedGraph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]


def ingest_filtered(
    path: str | Path,
    require: str = "essentially-4-connected",
    *,
    sample: int | None = None,
    seed: int = 0,
) -> IngestResult:
    """Read a planar_code file and keep the graphs passing ``require``.

    With ``sample`` set, a seeded random subset of that many survivors is
    kept (file order is preserved).
    """
    pred = resolve_predicate(require)
    result = IngestResult(str(path), PREDICATE_ALIASES.get(require, require))
    for g in iter_planar_code(Path(path).read_bytes()):
        result.read += 1
        if pred(g):
            result.graphs.append(g)
    if sample is not None and sample < len(result.graphs):
        keep = sorted(random.Random(seed).sample(range(len(result.graphs)), sample))
        result.graphs = [result.graphs[i] for i in keep]
    log.info("%s: read %d graphs, kept %d (%s)", path, result.read, result.kept, result.require)
    return result


# ---------------------------------------------------------------------------
# Instance specs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InstanceSpec:
    name: str
    construction: str  # "catalog" | "kleetope" | "ingest"
    base: str | None = None
    path: str | None = None
    index: int = 0
    filter: str = "essentially-4-connected"
    seed: int = 0
    expected_n: int | None = None


def build_instance(inst: InstanceSpec) -> EmbeddedGraph:
    if inst.construction == "catalog":
        g = catalog(inst.base or inst.name)
    elif inst.construction == "kleetope":
        g = kleetope(catalog(inst.base) if inst.base else catalog(inst.name))
    elif inst.construction == "ingest":
        g = ingest_filtered(inst.path, inst.filter)[inst.index]
    else:
        raise UnknownName(f"unknown construction {inst.construction!r}")
    if inst.expected_n is not None and g.n != inst.expected_n:
        raise PostCheckFailed(f"{inst.name}: expected n={inst.expected_n}, got {g.n}")
    if inst.name not in NEGATIVE_FIXTURES and not is_essentially_4_connected(g):
        raise PostCheckFailed(f"{inst.name} is not essentially 4-connected")
    return g
