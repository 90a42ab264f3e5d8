"""Face weights and the five redistribution rules, in exact integer thirds.

Every j-face of ``h`` starts with ``3j`` thirds.  All rules fire once and
simultaneously: their premises are read off the context, never off
partially updated weights.  A minor face that ends below 10 thirds is a
violation; the driver turns violations into cycle extensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycle import CycleContext, MAJOR, MINOR
from .errors import EmptySide, ExtendableEdgePresent, InternalError, ViolationsPresent

THRESHOLD = 10  # 10/3 in thirds


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: int
    target: int
    amount: int  # thirds
    via_edges: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "rule": self.rule,
            "from": self.source,
            "to": self.target,
            "amount": self.amount,
            "via_edges": list(self.via_edges),
        }


@dataclass
class DischargeReport:
    c: int
    initial: dict[int, int]
    transfers: list[Transfer]
    final: dict[int, int]
    violations: list[int]
    minor_count: int
    off_cycle_count: int
    conservation_ok: bool
    lemma1_ok: bool
    inequality1_ok: bool
    sent: dict[int, int] = field(default_factory=dict, repr=False)
    received: dict[int, int] = field(default_factory=dict, repr=False)

    def transfers_from(self, face: int) -> list[Transfer]:
        return [t for t in self.transfers if t.source == face]

    def transfers_to(self, face: int) -> list[Transfer]:
        return [t for t in self.transfers if t.target == face]

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "initial": {str(k): v for k, v in sorted(self.initial.items())},
            "transfers": [t.to_json() for t in self.transfers],
            "final": {str(k): v for k, v in sorted(self.final.items())},
            "violations": list(self.violations),
            "minor_faces": self.minor_count,
            "off_cycle_vertices": self.off_cycle_count,
            "conservation_ok": self.conservation_ok,
            "lemma1_ok": self.lemma1_ok,
            "inequality1_ok": self.inequality1_ok,
        }


def _shared_edges(ctx: CycleContext, f: int, g: int) -> tuple[int, ...]:
    return tuple(e for e, o in ctx.opposites(f) if o == g)


def compute_transfers(ctx: CycleContext) -> list[Transfer]:
    """All rule applications on ``ctx``, grouped by rule, in face-id order."""
    faces = ctx.faces
    out: list[Transfer] = []

    def minor(fid: int) -> bool:
        return faces[fid].kind == MINOR

    # R1: major -> opposite minor, m per shared edge
    for f in faces:
        if f.kind != MAJOR:
            continue
        for o in ctx.opposite_faces(f.id):
            if o != f.id and minor(o):
                shared = _shared_edges(ctx, f.id, o)
                out.append(Transfer("R1", f.id, o, 3 * len(shared), shared))

    # R2: minor -> opposite minor 2-face, 2/3 per shared edge
    for f in faces:
        if f.kind != MINOR:
            continue
        for o in ctx.opposite_faces(f.id):
            if o != f.id and minor(o) and faces[o].j == 2:
                shared = _shared_edges(ctx, f.id, o)
                out.append(Transfer("R2", f.id, o, 2 * len(shared), shared))

    # R3: minor -> minor 3-face across that face's middle edge
    for f in faces:
        if f.kind != MINOR:
            continue
        for e, o in ctx.opposites(f.id):
            if o != f.id and minor(o) and faces[o].j == 3 and faces[o].middle_edge == e:
                out.append(Transfer("R3", f.id, o, 3, (e,)))

    # R4, R5: the premise concerns the receiver f1
    for f1 in faces:
        if f1.kind != MINOR or f1.j not in (4, 5):
            continue
        opp = [o for o in ctx.opposite_faces(f1.id) if o != f1.id and minor(o)]
        senders = [o for o in opp if faces[o].j >= 4 and ctx.m_between(f1.id, o) == 2]
        if not senders:
            continue
        if f1.j == 4:
            partner = any(
                faces[o].j in (2, 3) and ctx.m_between(f1.id, o) == 2 for o in opp
            )
            if partner:
                for s in senders:
                    out.append(Transfer("R4", s, f1.id, 2, _shared_edges(ctx, f1.id, s)))
        else:
            twos = [o for o in opp if faces[o].j == 2]
            if len(twos) >= 2:
                for s in senders:
                    out.append(Transfer("R5", s, f1.id, 1, _shared_edges(ctx, f1.id, s)))
    return out


def run_discharging(ctx: CycleContext, *, check_extendable: bool = True) -> DischargeReport:
    if not ctx.v_minus or not ctx.v_plus:
        raise EmptySide("discharging needs vertices on both sides of the cycle")
    if check_extendable:
        on = ctx.cycle.vertex_set
        g = ctx.base
        for x, y in ctx.cycle.edges:
            if (g.neighbors(x) & g.neighbors(y)) - on:
                raise ExtendableEdgePresent(f"cycle edge {x}-{y} is extendable")

    initial = {f.id: 3 * f.j for f in ctx.faces}
    transfers = compute_transfers(ctx)
    final = dict(initial)
    sent = {f.id: 0 for f in ctx.faces}
    received = {f.id: 0 for f in ctx.faces}
    for t in transfers:
        final[t.source] -= t.amount
        final[t.target] += t.amount
        sent[t.source] += t.amount
        received[t.target] += t.amount

    for f in ctx.faces:
        if f.kind == MAJOR and final[f.id] < 0:
            raise InternalError(f"major face {f.id} ends with negative weight {final[f.id]}/3")

    violations = [f.id for f in ctx.faces if f.kind == MINOR and final[f.id] < THRESHOLD]
    minor_count = len(ctx.minor_faces)
    off = len(ctx.v_minus) + len(ctx.v_plus)
    c = ctx.c
    total = sum(final.values())
    return DischargeReport(
        c=c,
        initial=initial,
        transfers=transfers,
        final=final,
        violations=violations,
        minor_count=minor_count,
        off_cycle_count=off,
        conservation_ok=total == 6 * c and sum(initial.values()) == 6 * c,
        lemma1_ok=minor_count >= off + 2,
        inequality1_ok=6 * c >= THRESHOLD * minor_count,
        sent=sent,
        received=received,
    )


def check_inequality1(report: DischargeReport, ctx: CycleContext) -> bool:
    """Check the counting chain that turns a violation-free report into a length bound.

    Each minor face holds at least 10 thirds and majors hold at least 0, so
    ``6c >= 10 |M|``.  Together with ``|M| >= n - c + 2`` this yields
    ``8c >= 5(n + 2)``.  Any broken link raises :class:`InternalError`.
    """
    if report.violations:
        raise ViolationsPresent(f"minor faces below 10/3: {report.violations}")
    n = ctx.base.n
    c = ctx.c
    mcount = report.minor_count
    if not report.inequality1_ok or 6 * c < THRESHOLD * mcount:
        raise InternalError(f"6c = {6 * c} < 10|M| = {THRESHOLD * mcount} without violations")
    if mcount < n - c + 2:
        raise InternalError(f"|M| = {mcount} < n - c + 2 = {n - c + 2}")
    if 6 * c < THRESHOLD * (n - c + 2) or 8 * c < 5 * (n + 2):
        raise InternalError(f"length {c} misses 5(n+2)/8 for n = {n}")
    return True
