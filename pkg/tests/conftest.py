import functools
import sys
from pathlib import Path

import pytest

from longcycle.embed import parse_rotation_text, read_graphs
from longcycle.gen import catalog, ingest_filtered, kleetope

DATA = Path(__file__).parent / "data"
sys.path.insert(0, str(Path(__file__).parent))


@functools.lru_cache(maxsize=None)
def data_graphs(name: str):
    return tuple(read_graphs(DATA / name))


@functools.lru_cache(maxsize=None)
def e4c_triangulations(name: str):
    return tuple(ingest_filtered(DATA / name, "essentially-4-connected"))


@functools.lru_cache(maxsize=None)
def kleetope_corpus(max_base_n: int = 12):
    """Kleetopes of every 4-connected triangulation on 6..max_base_n vertices."""
    out = []
    for n in range(6, max_base_n + 1):
        for i, base in enumerate(data_graphs(f"tri4c_{n}.pc")):
            out.append((f"kleetope(tri4c_{n}#{i})", kleetope(base)))
    return tuple(out)


def text_graph(*rows: str, n: int | None = None):
    n = len(rows) if n is None else n
    return parse_rotation_text(f"n {n}\n" + "\n".join(f"{v}: {r}" for v, r in enumerate(rows)))


@pytest.fixture
def octahedron():
    return catalog("octahedron")


@pytest.fixture
def kleetope_octahedron():
    return kleetope(catalog("octahedron"))


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@functools.lru_cache(maxsize=None)
def isolating_pool():
    """(graph, isolating cycle) pairs: kleetope of the octahedron and some n=11 triangulations."""
    from longcycle.oracle import enumerate_isolating_cycles

    pool = []
    g = kleetope(catalog("octahedron"))
    pool += [(g, c) for c in enumerate_isolating_cycles(g, min_length=6)]
    for h in e4c_triangulations("tri_11.pc")[:30]:
        pool += [(h, c) for c in enumerate_isolating_cycles(h, min_length=6)[::5]]
    return tuple(pool)
