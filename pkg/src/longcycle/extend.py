"""Growing isolating cycles: basic extensions, recipe rewrites and the driver."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .catalog import LONE_LETTERS, RECIPE_BY_CASE, RECIPES, CaseRecipe, Template
from .cycle import Cycle, CycleContext, build_context, extendable_edges, is_isolating, validate_cycle
from .discharge import DischargeReport, check_inequality1, run_discharging
from .embed import EmbeddedGraph, components_without, essential_4_connectivity
from .errors import (
    ContradictionReached,
    InternalError,
    NotACycle,
    NotEssentially4Connected,
    NotExtendable,
    NotThreeConnected,
    SearchExhausted,
    TooSmall,
    Unmatched,
)

log = logging.getLogger(__name__)

SEARCH_RADIUS = 11
SLIDE_MARGIN = 12
BACKTRACK_LIMIT_N = 24


@dataclass(frozen=True)
class ExtensionStep:
    """Replace the cycle subpath ``removed_subpath`` (in cycle order) by ``replacement_path``."""

    case_id: str
    removed_subpath: tuple[int, ...]
    replacement_path: tuple[int, ...]
    absorbed: tuple[int, ...]
    face: int | None = None
    template: str | None = None
    tier: int | None = None  # 1 classified case, 2 same j, 3 slid template

    def apply(self, c: Cycle) -> Cycle:
        old, new = self.removed_subpath, self.replacement_path
        if old[0] != new[0] or old[-1] != new[-1]:
            raise InternalError("replacement changes the subpath ends")
        pos = c.position
        start = pos[old[0]]
        k = len(c)
        for i, v in enumerate(old):
            if c[start + i] != v:
                raise InternalError(f"{old} is not a subpath of the cycle in cycle order")
        rest = [c[start + i] for i in range(len(old), k)]
        return Cycle(tuple(new) + tuple(rest))

    def to_json(self) -> dict:
        out = {
            "case_id": self.case_id,
            "removed_subpath": list(self.removed_subpath),
            "replacement_path": list(self.replacement_path),
            "absorbed": list(self.absorbed),
        }
        if self.face is not None:
            out["face"] = self.face
        if self.template is not None:
            out["template"] = self.template
        if self.tier is not None:
            out["tier"] = self.tier
        return out


def checked_apply(g: EmbeddedGraph, c: Cycle, step: ExtensionStep, *, isolating: bool = True) -> Cycle:
    """Apply ``step`` and verify it grows the cycle without dropping vertices."""
    new = validate_cycle(g, step.apply(c))
    if len(new) <= len(c):
        raise InternalError(f"step {step.case_id} does not lengthen the cycle")
    if not c.vertex_set <= new.vertex_set:
        raise InternalError(f"step {step.case_id} drops cycle vertices")
    if isolating and not is_isolating(g, new):
        raise InternalError(f"step {step.case_id} yields a non-isolating cycle")
    return new


def extend_basic(g: EmbeddedGraph, c: Cycle | Sequence[int], e: tuple[int, int], v: int) -> Cycle:
    """Insert ``v`` between the ends of cycle edge ``e``."""
    c = validate_cycle(g, c)
    x, y = e
    if v in c:
        raise NotExtendable(f"{v} already lies on the cycle")
    if not (g.has_edge(x, v) and g.has_edge(y, v)):
        raise NotExtendable(f"{v} is not adjacent to both {x} and {y}")
    pos = c.position
    if x not in pos or y not in pos:
        raise NotExtendable(f"{x}-{y} is not a cycle edge")
    i, k = pos[x], len(c)
    if c[i + 1] == y:
        return Cycle(c.vertices[: i + 1] + (v,) + c.vertices[i + 1 :])
    if c[i - 1] == y:
        return Cycle(c.vertices[:i] + (v,) + c.vertices[i:]) if i > 0 else Cycle(c.vertices + (v,))
    raise NotExtendable(f"{x}-{y} is not a cycle edge")


def _absorb_extendable(g: EmbeddedGraph, c: Cycle, steps: list[ExtensionStep]) -> Cycle:
    """Apply basic extensions until no cycle edge is extendable.

    On an isolating cycle one sweep suffices: an absorbed vertex has all its
    neighbours on the cycle, so its two new edges are never extendable.
    """
    on = set(c.vertices)
    adj = g.adjacency
    while True:
        out: list[int] = []
        grown = False
        for x, y in c.edges:
            out.append(x)
            common = (adj[x] & adj[y]) - on
            if common:
                v = min(common)
                steps.append(ExtensionStep("basic", (x, y), (x, v, y), (v,)))
                out.append(v)
                on.add(v)
                grown = True
        if not grown:
            return c
        c = Cycle(tuple(out))


# ---------------------------------------------------------------------------
# Case classification
# ---------------------------------------------------------------------------


def _m2_twos(ctx: CycleContext, fid: int) -> list[frozenset[int]]:
    """Positions (within f's C-edges) shared with each opposite minor 2-face having m = 2."""
    f = ctx.faces[fid]
    out = []
    for o in ctx.opposite_faces(fid):
        of = ctx.faces[o]
        if of.is_minor and of.j == 2 and ctx.m_between(fid, o) == 2:
            out.append(frozenset(k for k, e in enumerate(f.c_edges) if ctx.opposite(fid, e) == o))
    return out


def classify(ctx: CycleContext, report: DischargeReport, fid: int) -> str | None:
    """Label of the case that describes violating minor face ``fid``, or None."""
    f = ctx.faces[fid]
    j = f.j
    faces = ctx.faces
    pos = {e: k for k, e in enumerate(f.c_edges)}
    sent = [t for t in report.transfers if t.source == fid]
    r3_mid = {pos[t.via_edges[0]] for t in sent if t.rule == "R3"}
    rules = {t.rule for t in sent}
    opp = [(k, ctx.opposite(fid, e)) for k, e in enumerate(f.c_edges)]

    if j == 2:
        for t in sent:
            if t.rule == "R2":
                return "2a" if ctx.m_between(fid, t.target) == 2 else "2b"
        if "R3" in rules:
            return "2c"
        return None
    if j == 3:
        ends = (opp[0][1], opp[2][1])
        if any(faces[o].is_minor and faces[o].j == 3 for o in ends):
            return "3b"
        return "3a"
    if j == 4:
        twos = [o for _, o in opp if faces[o].is_minor and faces[o].j == 2]
        if twos:
            m2 = _m2_twos(ctx, fid)
            if frozenset({1, 2}) in m2:
                return "4a"
            if not m2:
                return "4b"
            if any(faces[o].is_major for _, o in opp):
                return "4c"
            for shared in m2:
                nxt = 2 if shared == frozenset({0, 1}) else 1 if shared == frozenset({2, 3}) else None
                if nxt is not None:
                    of = faces[opp[nxt][1]]
                    if of.is_minor and of.j in (2, 3):
                        return "4d"
            return "4e"
        if r3_mid & {1, 2}:
            return "4f"
        if r3_mid & {0, 3}:
            has4 = any(faces[o].is_minor and faces[o].j == 4 for _, o in opp)
            return "4h" if has4 else "4g"
        return "4i"
    if j == 5:
        if "R5" in rules:
            return "5a"
        if "R4" in rules:
            return "5b"
        if 2 in r3_mid:
            return "5c"
        if r3_mid & {1, 3}:
            return "5d"
        if r3_mid & {0, 4}:
            return "5e"
        m2 = _m2_twos(ctx, fid)
        if frozenset({0, 1}) in m2 or frozenset({3, 4}) in m2:
            return "5f"
        if frozenset({1, 2}) in m2 or frozenset({2, 3}) in m2:
            return "5g"
        return None
    if j == 6:
        if "R5" in rules:
            return "6a"
        if "R4" in rules:
            return "6b"
        if r3_mid & {2, 3}:
            return "6c"
        if r3_mid & {1, 4}:
            return "6d"
        if r3_mid & {0, 5}:
            return "6e"
        covered = set().union(*_m2_twos(ctx, fid)) if _m2_twos(ctx, fid) else set()
        if {0, 1, 2, 3} <= covered or {2, 3, 4, 5} <= covered:
            return "6f"
        if {1, 2, 3, 4} <= covered:
            return "6g"
        return None
    if j == 7:
        if "R4" in rules:
            return "7a"
        if "R3" in rules:
            return "7b"
        return "7c"
    if j == 8:
        return "8a" if "R3" in rules else "8b"
    if j == 9:
        return "9"
    return None


# ---------------------------------------------------------------------------
# Template instantiation
# ---------------------------------------------------------------------------


def _bind(
    g: EmbeddedGraph,
    on: frozenset[int],
    new: Sequence[str],
    fixed: dict[str, int],
) -> Iterator[dict[str, int]]:
    """All ways to bind the lone letters of ``new`` to distinct off-cycle vertices."""
    slots = [k for k, x in enumerate(new) if x in LONE_LETTERS]

    def rec(i: int, env: dict[str, int], used: set[int]) -> Iterator[dict[str, int]]:
        if i == len(slots):
            yield env
            return
        k = slots[i]
        left, right = fixed[new[k - 1]], fixed[new[k + 1]]
        for v in sorted((g.neighbors(left) & g.neighbors(right)) - on - used):
            env2 = dict(env)
            env2[new[k]] = v
            yield from rec(i + 1, env2, used | {v})

    yield from rec(0, {}, set())


def _instantiate(
    ctx: CycleContext,
    tmpl: Template,
    letter_pos: dict[str, int],
    direction: int,
) -> ExtensionStep | None:
    """Try ``tmpl`` with window letter ``x`` placed at cycle position ``letter_pos[x]``."""
    g, c = ctx.base, ctx.cycle
    k = len(c)
    if len(tmpl.old) > k:
        return None
    fixed = {x: c[letter_pos[x]] for x in tmpl.old}
    if len(set(fixed.values())) != len(fixed):
        return None
    new = tmpl.new
    # cheap probes on cycle letters before binding lone ones
    for a, b in zip(new, new[1:]):
        if a in fixed and b in fixed and not g.has_edge(fixed[a], fixed[b]):
            return None
    for env in _bind(g, c.vertex_set, new, fixed):
        env.update(fixed)
        path = tuple(env[x] for x in new)
        old = tuple(fixed[x] for x in tmpl.old)
        if direction < 0:
            old, path = old[::-1], path[::-1]
        absorbed = tuple(env[x] for x in new if x in LONE_LETTERS)
        step = ExtensionStep("?", old, path, absorbed, template=str(tmpl))
        try:
            checked_apply(g, c, step)
        except (InternalError, NotACycle):
            continue
        return step
    return None


def _aligned(ctx: CycleContext, recipe: CaseRecipe, fid: int) -> Iterator[tuple[Template, dict[str, int], int]]:
    """Placements of ``recipe`` with its face letters on face ``fid``, forward then reversed."""
    f = ctx.faces[fid]
    s = f.c_edges[0]
    e = s + f.j
    off = recipe.f_offset
    for direction in (1, -1):
        anchor = s if direction > 0 else e
        pos = {x: anchor + direction * (i - off) for i, x in enumerate(recipe.letters)}
        for t in recipe.templates:
            yield t, pos, direction


def _sliding(ctx: CycleContext, fid: int) -> Iterator[tuple[str, Template, dict[str, int], int]]:
    f = ctx.faces[fid]
    s = f.c_edges[0]
    e = s + f.j
    for recipe in RECIPES:
        for t in recipe.templates:
            i0 = recipe.letters.index(t.old[0])
            for direction in (1, -1):
                for start in range(s - SLIDE_MARGIN, e + SLIDE_MARGIN + 1):
                    pos = {x: start + direction * (i - i0) for i, x in enumerate(recipe.letters)}
                    yield recipe.case_id, t, pos, direction


def _labelled(step: ExtensionStep, case_id: str, fid: int, tier: int) -> ExtensionStep:
    return ExtensionStep(
        case_id, step.removed_subpath, step.replacement_path, step.absorbed, fid, step.template, tier
    )


def match_case(ctx: CycleContext, f: int, report: DischargeReport | None = None) -> ExtensionStep:
    """Find a recipe rewrite for violating minor face ``f``.

    Placements are tried in three rounds: the classified case aligned on
    ``f`` in both orientations, then every recipe with the same ``j``, then
    every template slid along the cycle near ``f``.
    """
    if not ctx.minor_faces:
        raise Unmatched("context has no minor faces")
    face = ctx.faces[f]
    if not face.is_minor or face.j < 2:
        raise Unmatched(f"face {f} is not a minor face with at least two C-edges")
    if report is None:
        report = run_discharging(ctx)
    label = classify(ctx, report, f)

    if label is not None and label in RECIPE_BY_CASE:
        for t, pos, d in _aligned(ctx, RECIPE_BY_CASE[label], f):
            step = _instantiate(ctx, t, pos, d)
            if step is not None:
                return _labelled(step, label, f, 1)
    for recipe in RECIPES:
        if recipe.j != face.j or recipe.case_id == label:
            continue
        for t, pos, d in _aligned(ctx, recipe, f):
            step = _instantiate(ctx, t, pos, d)
            if step is not None:
                return _labelled(step, recipe.case_id, f, 2)
    for case_id, t, pos, d in _sliding(ctx, f):
        step = _instantiate(ctx, t, pos, d)
        if step is not None:
            return _labelled(step, case_id, f, 3)
    if label == "2a":
        raise ContradictionReached(
            f"face {f}: two minor 2-faces share both C-edges, impossible in a 3-connected graph"
        )
    raise Unmatched(f"no recipe applies to face {f} (classified as {label})")


# ---------------------------------------------------------------------------
# Local search
# ---------------------------------------------------------------------------


def _path_search(
    g: EmbeddedGraph,
    x: int,
    y: int,
    required: frozenset[int],
    extras: frozenset[int],
    budget: int,
) -> tuple[int, ...] | None:
    """A path from ``x`` to ``y`` through all of ``required``, using at least one extra.

    Interior vertices come from ``required`` and ``extras`` only.  Gives up
    after ``budget`` search nodes.
    """
    allowed = required | extras
    nodes = 0
    path = [x]
    used = {x}

    def rec(v: int, need: int, extra_used: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        for w in sorted(g.neighbors(v)):
            if w == y:
                if need == 0 and extra_used > 0:
                    path.append(y)
                    return True
                continue
            if w in used or w not in allowed:
                continue
            path.append(w)
            used.add(w)
            if rec(w, need - (w in required), extra_used + (w in extras)):
                return True
            path.pop()
            used.discard(w)
        return False

    try:
        if rec(x, len(required), 0):
            return tuple(path)
    except _Budget:
        return None
    return None


class _Budget(Exception):
    pass


def local_search_extension(
    ctx: CycleContext, f: int, radius: int = SEARCH_RADIUS, *, budget: int = 20000
) -> ExtensionStep | None:
    """Rewrite some cycle subpath of at most ``radius`` edges that shares an edge with ``f``.

    The new path keeps every vertex of the old one and adds off-cycle
    vertices with at least two neighbours in the window.
    """
    g, c = ctx.base, ctx.cycle
    k = len(c)
    face = ctx.faces[f]
    if not face.c_edges:
        return None
    s = face.c_edges[0]
    span = face.j
    on = c.vertex_set
    for length in range(1, min(radius, k - 1) + 1):
        for start in range(s - length + 1, s + span):
            window = [c[start + i] for i in range(length + 1)]
            wset = frozenset(window)
            cand = set()
            for v in wset:
                cand.update(u for u in g.neighbors(v) if u not in on)
            extras = frozenset(u for u in cand if len(g.neighbors(u) & wset) >= 2)
            if not extras:
                continue
            path = _path_search(g, window[0], window[-1], frozenset(window[1:-1]), extras, budget)
            if path is None:
                continue
            absorbed = tuple(u for u in path if u not in on)
            step = ExtensionStep("search", tuple(window), path, absorbed, f)
            try:
                checked_apply(g, c, step)
            except InternalError:
                continue
            return step
    return None


# ---------------------------------------------------------------------------
# Small graphs and the starting cycle
# ---------------------------------------------------------------------------


def hamiltonian_small(g: EmbeddedGraph) -> Cycle:
    """Hamiltonian cycle by backtracking; meant for graphs with at most 10 vertices."""
    n = g.n
    if n < 3:
        raise TooSmall(f"no cycle on {n} vertices")
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    path = [0]
    used = [False] * n
    used[0] = True

    def rec() -> bool:
        v = path[-1]
        if len(path) == n:
            return g.has_edge(v, 0)
        for w in adj[v]:
            if not used[w]:
                used[w] = True
                path.append(w)
                if rec():
                    return True
                path.pop()
                used[w] = False
        return False

    if not rec():
        raise InternalError(f"no Hamiltonian cycle found on {n} vertices")
    return Cycle(tuple(path))


def _bad_components(g: EmbeddedGraph, c: Cycle) -> list[tuple[int, ...]]:
    out = []
    for comp in components_without(g, c.vertices):
        if len(comp) > 1 or g.degree(comp[0]) != 3:
            out.append(comp)
    return out


def _ear(g: EmbeddedGraph, c: Cycle, comp: Sequence[int]) -> ExtensionStep | None:
    """Route a path through ``comp`` between the ends of some cycle edge."""
    cs = set(comp)
    best = None
    k = len(c)
    for i in range(k):
        x, y = c[i], c[i + 1]
        sx = [u for u in g.neighbors(x) if u in cs]
        if not sx:
            continue
        ty = {u for u in g.neighbors(y) if u in cs}
        if not ty:
            continue
        # BFS inside comp from x's neighbours to y's neighbours
        parent = {u: None for u in sx}
        frontier = sorted(sx)
        hit = next((u for u in frontier if u in ty), None)
        while hit is None and frontier:
            nxt = []
            for u in frontier:
                for w in sorted(g.neighbors(u)):
                    if w in cs and w not in parent:
                        parent[w] = u
                        nxt.append(w)
                        if w in ty and hit is None:
                            hit = w
            frontier = nxt
        if hit is None:
            continue
        inner = []
        u = hit
        while u is not None:
            inner.append(u)
            u = parent[u]
        inner.reverse()
        step = ExtensionStep("ear", (x, y), (x, *inner, y), tuple(inner))
        score = sum(g.degree(u) != 3 for u in inner)
        if best is None or score > best[0]:
            best = (score, step)
            if score == len(inner):
                break
    return best[1] if best else None


def _window_grow(g: EmbeddedGraph, c: Cycle, targets: set[int], max_len: int = 4) -> ExtensionStep | None:
    """Rewrite a short subpath so that it absorbs some vertex of ``targets``."""
    on = c.vertex_set
    k = len(c)
    for length in range(2, min(max_len, k - 1) + 1):
        for start in range(k):
            window = [c[start + i] for i in range(length + 1)]
            wset = frozenset(window)
            extras = set()
            for v in wset:
                extras.update(u for u in g.neighbors(v) if u not in on)
            extras = frozenset(u for u in extras if len(g.neighbors(u) & wset) >= 2)
            if not extras & targets:
                continue
            path = _path_search(g, window[0], window[-1], frozenset(window[1:-1]), extras, 5000)
            if path is None or not set(path) & targets:
                continue
            return ExtensionStep("grow", tuple(window), path, tuple(u for u in path if u not in on))
    return None


def _grow_once(g: EmbeddedGraph, c: Cycle) -> Cycle | None:
    bad = _bad_components(g, c)
    for comp in sorted(bad, key=lambda comp: -len(comp)):
        step = _ear(g, c, comp)
        if step is not None:
            return checked_apply(g, c, step, isolating=False)
    targets = {v for comp in bad for v in comp}
    if targets:
        step = _window_grow(g, c, targets)
        if step is not None:
            return checked_apply(g, c, step, isolating=False)
    ext = extendable_edges(g, c)
    if ext:
        return extend_basic(g, c, *ext[0])
    return None


def _backtrack_isolating(g: EmbeddedGraph, min_length: int) -> Cycle | None:
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    deg3 = [g.degree(v) == 3 for v in range(n)]
    must = [v for v in range(n) if not deg3[v]]
    for s in range(n):
        path = [s]
        used = {s}

        def ok() -> bool:
            for v in range(n):
                if v in used:
                    continue
                if not deg3[v] or any(u not in used for u in adj[v]):
                    return False
            return True

        def rec() -> Cycle | None:
            v = path[-1]
            if len(path) >= min_length and g.has_edge(v, s) and ok():
                return Cycle(tuple(path))
            for w in adj[v]:
                if w > s and w not in used:
                    used.add(w)
                    path.append(w)
                    got = rec()
                    if got is not None:
                        return got
                    path.pop()
                    used.discard(w)
            return None

        if any(v < s for v in must):
            break
        got = rec()
        if got is not None:
            return got
    return None


def initial_isolating_cycle(g: EmbeddedGraph, min_length: int = 8) -> Cycle:
    """An isolating cycle with at least ``min_length`` vertices.

    Starts from a largest face boundary and grows it by ears through the
    offending components and by short rewrites.  Small graphs where growth
    stalls fall back to exhaustive backtracking.
    """
    start = max(g.faces, key=len)
    c = validate_cycle(g, start.walk)
    while True:
        if len(c) >= min_length and is_isolating(g, c):
            return c
        nxt = _grow_once(g, c)
        if nxt is None:
            break
        c = nxt
    if g.n <= BACKTRACK_LIMIT_N:
        got = _backtrack_isolating(g, min_length)
        if got is not None:
            return got
    raise SearchExhausted(f"no isolating cycle of length >= {min_length} found (stalled at {len(c)})")


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


@dataclass
class Certificate:
    kind: str  # "hamiltonian" | "discharging" | "side-empty"
    cycle: Cycle
    report: DischargeReport | None = None
    steps: list[ExtensionStep] = field(default_factory=list)
    fallback_used: bool = False
    start_length: int = 0

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "cycle": list(self.cycle.vertices),
            "length": len(self.cycle),
            "steps": [s.to_json() for s in self.steps],
            "fallback_used": self.fallback_used,
        }
        if self.report is not None:
            out["report"] = self.report.to_json()
        return out


def _rotation_key(g: EmbeddedGraph) -> tuple[tuple[int, ...], ...]:
    key = []
    for r in g.rotations:
        k = r.index(min(r))
        key.append(r[k:] + r[:k])
    return tuple(key)


def canonical_orientation(g: EmbeddedGraph) -> EmbeddedGraph:
    """``g`` or its mirror image, whichever has the smaller normalised rotation system."""
    m = g.mirrored()
    return g if _rotation_key(g) <= _rotation_key(m) else m


def bound(n: int) -> int:
    """Least integer at least 5(n+2)/8."""
    return -(-5 * (n + 2) // 8)


def require_essentially_4_connected(g: EmbeddedGraph) -> None:
    try:
        witness = essential_4_connectivity(g)
    except (NotThreeConnected, TooSmall) as exc:
        raise NotEssentially4Connected(f"graph is not 3-connected: {exc}") from exc
    if witness is not None:
        raise NotEssentially4Connected(
            f"non-trivial 3-separator {list(witness.vertices)}", witness=witness
        )


AuditHook = Callable[[CycleContext, DischargeReport], None]
StepHook = Callable[[CycleContext, int, ExtensionStep], None]


def long_cycle(
    g: EmbeddedGraph,
    *,
    check_input: bool = True,
    on_audit: AuditHook | None = None,
    on_step: StepHook | None = None,
) -> tuple[Cycle, Certificate]:
    """A cycle of length at least 5(n+2)/8 together with the evidence for it."""
    if check_input:
        require_essentially_4_connected(g)
    n = g.n
    if n <= 10:
        c = hamiltonian_small(g)
        return c, Certificate("hamiltonian", c, start_length=n)
    # both reflections of an embedding run on the same one, so the result
    # does not depend on which reflection was supplied
    work = canonical_orientation(g)
    c = initial_isolating_cycle(work)
    return extend_to_fixpoint(work, c, on_audit=on_audit, on_step=on_step)


def extend_to_fixpoint(
    g: EmbeddedGraph,
    c: Cycle | Sequence[int],
    *,
    on_audit: AuditHook | None = None,
    on_step: StepHook | None = None,
) -> tuple[Cycle, Certificate]:
    """Grow the isolating cycle ``c`` until discharging leaves no violation."""
    c = validate_cycle(g, c)
    if not is_isolating(g, c):
        raise InternalError("extension must start from an isolating cycle")
    n = g.n
    cert = Certificate("discharging", c, start_length=len(c))
    for _ in range(n + 1):
        c = _absorb_extendable(g, c, cert.steps)
        ctx = build_context(g, c)
        if not ctx.both_sides_nonempty:
            cert.kind, cert.cycle = "side-empty", c
            return c, cert
        report = run_discharging(ctx, check_extendable=False)
        if on_audit is not None:
            on_audit(ctx, report)
        if not report.violations:
            check_inequality1(report, ctx)
            cert.cycle, cert.report = c, report
            return c, cert
        f = min(report.violations)
        try:
            step = match_case(ctx, f, report)
        except Unmatched as exc:
            log.warning("falling back to local search: %s", exc)
            step = local_search_extension(ctx, f, SEARCH_RADIUS)
            if step is None:
                raise InternalError(f"no extension found for violating face {f}") from exc
            cert.fallback_used = True
        if on_step is not None:
            on_step(ctx, f, step)
        c = checked_apply(g, c, step)
        cert.steps.append(step)
    raise InternalError("cycle grew more than n times")
