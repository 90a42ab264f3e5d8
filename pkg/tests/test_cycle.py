import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import isolating_pool
from drawings import two_two_faces
from longcycle.cycle import (
    CYCLE_BOUNDED,
    INSIDE,
    MINOR,
    OUTSIDE,
    Cycle,
    build_context,
    chords,
    extendable_edges,
    is_isolating,
    validate_cycle,
)
from longcycle.errors import MalformedInput, NotACycle
from longcycle.gen import catalog, kleetope
from longcycle.oracle import cycle_is_isolating

OCTA_HAM = (0, 1, 2, 5, 4, 3)


def test_cycle_text_round_trip():
    c = Cycle((3, 1, 4, 5))
    assert c.to_text() == "cycle: 3 1 4 5"
    assert Cycle.from_text(c.to_text()) == c
    with pytest.raises(MalformedInput):
        Cycle.from_text("loop: 1 2 3")


def test_canonical_form():
    assert Cycle((4, 2, 7, 1)).canonical() == (1, 4, 2, 7) or Cycle((4, 2, 7, 1)).canonical() == (1, 7, 2, 4)
    assert Cycle((4, 2, 7, 1)).canonical() == Cycle((1, 7, 2, 4)).canonical()


@pytest.mark.parametrize("bad", [(0, 1), (0, 1, 0, 2), (0, 5, 1), (0, 1, 99)])
def test_not_a_cycle(octahedron, bad):
    with pytest.raises(NotACycle):
        validate_cycle(octahedron, bad)


def test_hamiltonian_cycle_is_isolating(octahedron):
    assert is_isolating(octahedron, OCTA_HAM)
    assert extendable_edges(octahedron, OCTA_HAM) == []


def test_w5_rim_not_isolating():
    assert not is_isolating(catalog("W5"), (1, 2, 3, 4, 5))


def test_kleetope_original_hamiltonian_cycle_isolating(kleetope_octahedron):
    g = kleetope_octahedron
    assert is_isolating(g, OCTA_HAM)
    assert cycle_is_isolating(g, OCTA_HAM)
    # a Hamiltonian cycle of the base splits its 8 faces 4 and 4
    ctx = build_context(g, OCTA_HAM)
    assert len(ctx.v_minus) == len(ctx.v_plus) == 4


def test_kleetope_triangle_every_edge_extendable(kleetope_octahedron):
    g = kleetope_octahedron
    base = catalog("octahedron")
    tri = base.faces[0].walk
    found = extendable_edges(g, tri)
    assert len(found) == 3
    # the vertex inserted into face 0 is 6; base vertices off the triangle also qualify
    for (x, y), v in found:
        assert v not in tri
        assert {x, y} <= g.neighbors(6)


def test_two_two_faces_not_extendable_before_or_after():
    g, c, idx = two_two_faces()
    assert is_isolating(g, c)
    assert extendable_edges(g, c) == []
    x, y, z, u, a, b = (idx[k] for k in "x y z u a b".split())
    k = c.index(u)
    new = c[: c.index(x) + 1] + [a, z, y, b] + c[k:]
    assert len(new) == len(c) + 2
    assert is_isolating(g, new)
    for _, v in extendable_edges(g, new):
        assert v not in (a, b)


def test_hamiltonian_context_cycle_bounded(octahedron):
    ctx = build_context(octahedron, OCTA_HAM)
    assert not ctx.v_minus and not ctx.v_plus
    assert len(ctx.faces) == 2
    assert all(f.kind == CYCLE_BOUNDED for f in ctx.faces)
    assert ctx.minor_faces == []
    assert len(ctx.chords) == 6


def test_kleetope_context(kleetope_octahedron):
    # every base edge of the cycle bounds a base face on each side, so each cycle
    # edge is extendable and its minor faces are 1-faces
    g = kleetope_octahedron
    ctx = build_context(g, OCTA_HAM)
    assert len(extendable_edges(g, OCTA_HAM)) == 6
    assert sum(f.j for f in ctx.faces) == 2 * ctx.c == 12
    assert sorted(f.j for f in ctx.minor_faces) == [1] * 12
    assert all(f.j == 0 for f in ctx.faces if f.is_major)
    for f in ctx.faces:
        assert f.side in (INSIDE, OUTSIDE)
        assert set(f.off_cycle) <= (ctx.v_minus if f.side == INSIDE else ctx.v_plus)


def test_two_faces_context_after_extension():
    g, c, idx = two_two_faces()
    ctx = build_context(g, c)
    assert sorted((f.side, f.j) for f in ctx.minor_faces) == [
        (INSIDE, 2), (INSIDE, 3), (INSIDE, 3), (OUTSIDE, 2), (OUTSIDE, 3), (OUTSIDE, 3)
    ]
    assert ctx.v_minus == {idx["a"]} and ctx.v_plus == {idx["b"]}
    assert len(ctx.minor_faces) >= 2 + 2


def test_chord_free_h(kleetope_octahedron):
    g = kleetope_octahedron
    ctx = build_context(g, OCTA_HAM)
    on = set(OCTA_HAM)
    cyc = {frozenset(e) for e in ctx.cycle.edges}
    for u, v in ctx.h.edges:
        if u in on and v in on:
            assert frozenset((u, v)) in cyc


def test_context_json_keys(kleetope_octahedron):
    js = build_context(kleetope_octahedron, OCTA_HAM).to_json()
    assert set(js) == {"cycle", "faces", "v_minus", "v_plus", "m"}
    assert set(js["faces"][0]) == {"id", "side", "class", "j", "c_edges", "lone_vertex"}


# -- properties over isolating cycles ------------------------------------------

pairs = st.sampled_from(isolating_pool())


@given(pairs)
@settings(max_examples=200, deadline=None)
def test_isolating_agrees_with_flood_fill(pair):
    g, c = pair
    assert is_isolating(g, c) == cycle_is_isolating(g, c) is True


@given(pairs)
@settings(max_examples=200, deadline=None)
def test_context_invariants(pair):
    g, c = pair
    ctx = build_context(g, c)
    assert sum(f.j for f in ctx.faces) == 2 * ctx.c
    on = set(c)
    assert ctx.v_minus.isdisjoint(ctx.v_plus)
    assert ctx.v_minus | ctx.v_plus | on == set(range(g.n))
    for f in ctx.faces:
        assert sum(ctx.m_between(f.id, o) for o in ctx.opposite_faces(f.id)) == f.j
        for e, o in ctx.opposites(f.id):
            assert ctx.opposite(o, e) == f.id
            assert ctx.m_between(f.id, o) == ctx.m_between(o, f.id)
        if f.is_minor:
            assert len(f.off_cycle) == 1
            if not extendable_edges(g, c):
                assert f.j >= 2
        # a minor face's C-edges form one run along the cycle
        if f.is_minor and 0 < f.j < ctx.c:
            run = f.c_edges
            assert all((run[k] + 1) % ctx.c == run[k + 1] for k in range(len(run) - 1))


@given(pairs)
@settings(max_examples=150, deadline=None)
def test_h_plus_chords_rebuilds_g(pair):
    g, c = pair
    ctx = build_context(g, c)
    assert sorted(set(ctx.h.edges) | set(ctx.chords)) == sorted(g.edges)
    assert set(ctx.chords) == set(chords(g, Cycle(c)))


@given(pairs)
@settings(max_examples=150, deadline=None)
def test_lemma1_counting(pair):
    g, c = pair
    ctx = build_context(g, c)
    if ctx.both_sides_nonempty:
        assert len(ctx.minor_faces) >= len(ctx.v_minus | ctx.v_plus) + 2


@given(pairs)
@settings(max_examples=150, deadline=None)
def test_flip_swaps_sides(pair):
    g, c = pair
    a = build_context(g, c)
    b = build_context(g.mirrored(), c)
    assert a.v_minus == b.v_plus and a.v_plus == b.v_minus
    ka = sorted((f.kind, f.j) for f in a.faces)
    kb = sorted((f.kind, f.j) for f in b.faces)
    assert ka == kb


@given(pairs)
@settings(max_examples=150, deadline=None)
def test_reversed_cycle_swaps_sides(pair):
    g, c = pair
    a = build_context(g, c)
    b = build_context(g, tuple(reversed(c)))
    assert a.v_minus == b.v_plus
    for f in a.faces:
        assert f.side in (INSIDE, OUTSIDE, None)
