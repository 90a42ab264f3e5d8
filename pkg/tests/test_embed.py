import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import data_graphs, e4c_triangulations, kleetope_corpus, text_graph
from longcycle.embed import (
    PLANAR_CODE_HEADER,
    EmbeddedGraph,
    essential_4_connectivity,
    faces,
    is_3_connected,
    is_4_connected_triangulation,
    is_essentially_4_connected,
    is_triangulation,
    load_graphs,
    parse_planar_code,
    parse_rotation_text,
    three_separators,
    to_rotation_text,
    write_planar_code,
)
from longcycle.errors import (
    AsymmetricAdjacency,
    BadHeader,
    Disconnected,
    EulerViolation,
    MalformedInput,
    TooSmall,
    TruncatedRecord,
)
from longcycle.gen import catalog, kleetope
from longcycle.oracle import is_essentially_4_connected_bruteforce, three_separators_bruteforce

TRIANGLE_TEXT = "n 3\n0: 1 2\n1: 2 0\n2: 0 1\n"
OCTAHEDRON_TEXT = """\
# octahedron, poles 0 and 5
n 6
0: 1 4 3 2
1: 0 2 5 4
2: 0 3 5 1
3: 0 4 5 2
4: 0 1 5 3
5: 1 2 3 4
"""


def test_triangle_text():
    g = parse_rotation_text(TRIANGLE_TEXT)
    assert (g.n, g.m, len(g.faces)) == (3, 3, 2)
    assert [len(f) for f in faces(g)] == [3, 3]


def test_octahedron_text():
    g = parse_rotation_text(OCTAHEDRON_TEXT)
    assert (g.n, g.m, len(g.faces)) == (6, 12, 8)
    assert all(len(f) == 3 for f in g.faces)
    assert g == catalog("octahedron")


def test_cube_has_six_quadrilaterals():
    g = catalog("cube")
    assert (g.n, g.m) == (8, 12)
    assert sorted(len(f) for f in g.faces) == [4] * 6


def test_one_way_edge_is_asymmetric():
    with pytest.raises(AsymmetricAdjacency):
        parse_rotation_text("n 3\n0: 1 2\n1: 2\n2: 0 1\n")


def test_transposed_k4_breaks_euler():
    good = text_graph("1 2 3", "0 3 2", "0 1 3", "0 2 1")
    assert len(good.faces) == 4
    with pytest.raises(EulerViolation):
        text_graph("1 3 2", "0 3 2", "0 1 3", "0 2 1")


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        parse_rotation_text("n 4\n0: 1\n1: 0\n2: 3\n3: 2\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "m 3\n",
        "n 2\n0: 1\n",
        "n 2\n0: 1\n1: x\n",
        "n 2\n0: 0\n1:\n",
        "n 3\n0: 1 1\n1: 0\n2:\n",
        "n 2\n0: 5\n1: 0\n",
    ],
)
def test_malformed_text(text):
    with pytest.raises(MalformedInput):
        parse_rotation_text(text)


def test_rotation_text_round_trip():
    g = catalog("icosahedron")
    h = parse_rotation_text(to_rotation_text(g, comment="icosahedron"))
    assert h == g
    assert h.faces == g.faces


# -- planar_code -------------------------------------------------------------

TRIANGLE_RECORD = bytes([3, 2, 3, 0, 3, 1, 0, 1, 2, 0])


def test_planar_code_single_triangle():
    (g,) = parse_planar_code(PLANAR_CODE_HEADER + TRIANGLE_RECORD)
    assert (g.n, g.m, len(g.faces)) == (3, 3, 2)


def test_planar_code_two_records_in_order():
    data = write_planar_code([catalog("octahedron")])
    gs = parse_planar_code(PLANAR_CODE_HEADER + TRIANGLE_RECORD + data[len(PLANAR_CODE_HEADER):])
    assert [g.n for g in gs] == [3, 6]


def test_planar_code_bad_header():
    with pytest.raises(BadHeader):
        parse_planar_code(b">>planar_cod<<" + TRIANGLE_RECORD)


def test_planar_code_truncated():
    with pytest.raises(TruncatedRecord):
        parse_planar_code(PLANAR_CODE_HEADER + TRIANGLE_RECORD[:-2])


def test_planar_code_transposed_k4():
    # vertex 1 lists its neighbours in the opposite cyclic order
    rec = bytes([4, 2, 4, 3, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0])
    with pytest.raises(EulerViolation):
        parse_planar_code(PLANAR_CODE_HEADER + rec)


def test_planar_code_header_only_is_empty():
    assert parse_planar_code(PLANAR_CODE_HEADER) == []


def test_load_sniffs_both_formats():
    assert load_graphs(PLANAR_CODE_HEADER + TRIANGLE_RECORD)[0].n == 3
    assert load_graphs(OCTAHEDRON_TEXT.encode())[0].n == 6


def test_planar_code_round_trip_corpus():
    gs = data_graphs("tri_11.pc")
    assert list(parse_planar_code(write_planar_code(gs))) == list(gs)


# -- connectivity ------------------------------------------------------------


def test_octahedron_3_connected():
    assert is_3_connected(catalog("octahedron"))


def test_path_not_3_connected():
    assert not is_3_connected(text_graph("1", "0 2", "1 3", "2"))


def test_two_triangles_sharing_edge():
    g = text_graph("1 2", "0 3 2", "0 1 3", "1 2")
    assert not is_3_connected(g)


def test_too_small():
    with pytest.raises(TooSmall):
        is_3_connected(catalog("triangle"))


def test_w5_is_essentially_4_connected():
    assert essential_4_connectivity(catalog("W5")) is None


def test_w6_witness():
    w = essential_4_connectivity(catalog("W6"))
    assert w.vertices == (0, 1, 4)
    assert sorted(w.components) == [(2, 3), (5, 6)]


def test_w6_witness_matches_bruteforce():
    seps = dict(three_separators_bruteforce(catalog("W6")))
    assert sorted(map(sorted, seps[(0, 1, 4)])) == [[2, 3], [5, 6]]
    nontrivial = [t for t, comps in seps.items() if all(len(c) > 1 for c in comps)]
    assert nontrivial == [(0, 1, 4), (0, 2, 5), (0, 3, 6)]


def test_icosahedron_has_no_3_separators():
    g = catalog("icosahedron")
    assert three_separators(g) == []
    assert essential_4_connectivity(g) is None


def _small_corpus():
    for name in ("poly_6.pc", "poly_7.pc", "poly_8.pc", "tri_11.pc"):
        yield from data_graphs(name)[:150]
    yield from (g for _, g in kleetope_corpus(8))
    yield from (catalog(n) for n in ("W5", "W6", "cube", "octahedron", "icosahedron"))


def test_separators_match_bruteforce():
    checked = 0
    for g in _small_corpus():
        if g.n > 14:
            continue
        fast = sorted(s.vertices for s in three_separators(g))
        slow = sorted(t for t, _ in three_separators_bruteforce(g))
        assert fast == slow
        assert is_essentially_4_connected(g) == is_essentially_4_connected_bruteforce(g)
        checked += 1
    assert checked >= 300


def test_every_separator_has_two_components():
    for g in _small_corpus():
        for sep in three_separators(g):
            assert len(sep.components) == 2


def test_triangulation_route_agrees_with_general_route():
    from longcycle.embed import _face_sharing_pairs, articulation_points

    for g in list(data_graphs("tri_11.pc"))[:200]:
        general = set()
        for a, b in _face_sharing_pairs(g):
            for c in articulation_points(g, (a, b)):
                general.add(tuple(sorted((a, b, c))))
        assert sorted(general) == [s.vertices for s in three_separators(g)]


def test_kleetopes_are_e4c_but_not_4_connected():
    for _, g in kleetope_corpus(9):
        assert is_essentially_4_connected(g)
        assert is_triangulation(g)
        assert not is_4_connected_triangulation(g)


def test_ingested_e4c_members_pass_bruteforce():
    for g in e4c_triangulations("tri_11.pc")[:60]:
        assert is_essentially_4_connected_bruteforce(g)


# -- properties ----------------------------------------------------------------

corpus_graphs = st.sampled_from(list(data_graphs("poly_8.pc")) + list(data_graphs("tri_11.pc")[:300]))


@given(corpus_graphs)
@settings(max_examples=80, deadline=None)
def test_handshake_and_euler(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m
    assert g.n - g.m + len(g.faces) == 2


@given(corpus_graphs)
@settings(max_examples=80, deadline=None)
def test_faces_partition_darts(g):
    darts = [d for f in g.faces for d in f.darts]
    assert len(darts) == len(set(darts)) == 2 * g.m
    # each face starts at its least dart
    assert all(f.darts[0] == min(f.darts) for f in g.faces)


@given(corpus_graphs)
@settings(max_examples=60, deadline=None)
def test_reparse_reproduces_faces(g):
    h = parse_rotation_text(to_rotation_text(g))
    assert h.faces == g.faces


@given(corpus_graphs)
@settings(max_examples=60, deadline=None)
def test_mirror_preserves_connectivity_verdicts(g):
    m = g.mirrored()
    assert sorted(len(f) for f in m.faces) == sorted(len(f) for f in g.faces)
    assert is_essentially_4_connected(m) == is_essentially_4_connected(g)


@given(st.permutations(range(6)))
@settings(max_examples=40, deadline=None)
def test_relabelled_octahedron(perm):
    g = catalog("octahedron")
    inv = {old: new for new, old in enumerate(perm)}
    rot = [None] * 6
    for old, r in enumerate(g.rotations):
        rot[inv[old]] = [inv[u] for u in r]
    h = EmbeddedGraph(rot)
    assert (h.n, h.m, len(h.faces)) == (6, 12, 8)
    assert is_4_connected_triangulation(h)
