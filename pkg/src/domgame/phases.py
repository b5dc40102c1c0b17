"""Four-phase bookkeeping for the greedy Dominator strategy.

Phase 1 lasts while some retained all-white path u-v-w survives whose
endpoint u is a leaf of the underlying graph; blues arising here are light.
Phase 2 lasts while some move still drops the weight sum f by at least 11.
When phase 2 ends, the cycle components of the white subgraph are frozen as
the X-cycle registry and play switches to the potential

    F = f - (open X-cycles) - (white/light-blue pairs) - 3 * (BWB components).

Phase 3 lasts while some move still drops F by at least 10; phase 4 is the
remainder. Phase boundaries are evaluated only before move 1 and after
even-numbered moves, and the predicates never re-activate a finished phase.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property

from .errors import ClaimViolationError
from .residual import (
    BLUE_SHADES,
    Color,
    ComponentKind,
    ResidualState,
    apply_move,
    f_decrease,
    legal_moves,
    white_degree,
)


class CycleStatus(Enum):
    CLOSED = "closed"
    OPEN = "open"
    FINISHED = "finished"
    OTHER = "other"


@dataclass(frozen=True)
class XCycleRegistry:
    """Cycle components of the white subgraph, frozen when phase 3 begins.

    Each entry lists its vertices in cyclic order; entries are pairwise
    disjoint and each had length >= 4 at freeze time.
    """

    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    @cached_property
    def member_mask(self) -> int:
        m = 0
        for cyc in self.cycles:
            for v in cyc:
                m |= 1 << v
        return m

    def cycle_edges(self, i: int) -> tuple[tuple[int, int], ...]:
        cyc = self.cycles[i]
        k = len(cyc)
        return tuple((cyc[j], cyc[(j + 1) % k]) for j in range(k))


@dataclass(frozen=True)
class PhaseContext:
    """Per-game phase machine state, advanced only at even boundaries.

    The registry and the f/F handoff pair exist exactly from the moment
    phase 3 begins (whatever earlier phases were skipped).
    """

    phase: int = 1
    moves_made: int = 0
    registry: XCycleRegistry | None = None
    f_at_phase2_end: int | None = None
    F_at_phase3_start: int | None = None


def phase1_active(s: ResidualState) -> bool:
    """True while a retained all-white path u-v-w exists with u a leaf of G.

    A white vertex keeps its full degree, so a still-white leaf of G can
    only sit at the end of such a path. On the all-white opening state this
    is exactly "some leaf lies in a component of order at least 3".
    """
    g, colors = s.graph, s.colors
    for u in range(g.n):
        if g.degree(u) == 1 and colors[u] is Color.WHITE:
            v = g.adjacency[u][0]
            if colors[v] is not Color.WHITE:
                continue
            if any(w != u and colors[w] is Color.WHITE for w in g.adjacency[v]):
                return True
    return False


def max_f_decrease(s: ResidualState) -> int:
    return max((f_decrease(s, v, Color.DARK_BLUE) for v in legal_moves(s)), default=0)


def phase2_active(s: ResidualState) -> bool:
    """True while some move still drops f by at least 11 (dark shading)."""
    return max_f_decrease(s) >= 11


def _end_of_phase2_violation(s: ResidualState) -> str | None:
    """Structure forced at a correct phase-2 end; returns a description or None.

    When no move drops f by 11 or more: white vertices have at most 2 white
    neighbors and blue ones at most 3; white-subgraph components are single
    vertices, single edges, or cycles of length >= 4; and no white vertex
    whose neighbors are all blue touches a blue vertex with 3 white neighbors.
    """
    g, colors = s.graph, s.colors
    for v in range(g.n):
        dw = white_degree(s, v)
        if colors[v] is Color.WHITE and dw > 2:
            return f"white vertex {v} has {dw} white neighbors"
        if colors[v] in BLUE_SHADES and dw > 3:
            return f"blue vertex {v} has {dw} white neighbors"
    seen: set[int] = set()
    for v in range(g.n):
        if colors[v] is not Color.WHITE or v in seen:
            continue
        members = _white_component(s, v)
        seen.update(members)
        if len(members) <= 2:
            continue
        if _white_cycle_order(s, members) is None:
            return f"white component {sorted(members)} is neither P1, P2, nor a cycle"
        if len(members) == 3:
            return f"white component {sorted(members)} is a 3-cycle"
    for v in range(g.n):
        if colors[v] is Color.WHITE and white_degree(s, v) == 0:
            for w in g.adjacency[v]:
                if colors[w] in BLUE_SHADES and white_degree(s, w) == 3:
                    return f"edge between all-blue-neighborhood white {v} and 3-white-degree blue {w}"
    return None


def _white_component(s: ResidualState, start: int) -> list[int]:
    g, colors = s.graph, s.colors
    members = [start]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen and colors[w] is Color.WHITE:
                seen.add(w)
                members.append(w)
                stack.append(w)
    return members


def _white_cycle_order(s: ResidualState, members: list[int]) -> tuple[int, ...] | None:
    """Cyclic vertex order if the white component is a cycle, else None."""
    nbrs = {v: [w for w in s.graph.adjacency[v] if s.colors[w] is Color.WHITE] for v in members}
    if any(len(ws) != 2 for ws in nbrs.values()):
        return None
    start = min(members)
    order = [start]
    prev, cur = start, nbrs[start][0]
    while cur != start:
        order.append(cur)
        nxt = nbrs[cur][0] if nbrs[cur][0] != prev else nbrs[cur][1]
        prev, cur = cur, nxt
    if len(order) != len(members):
        return None
    return tuple(order)


def freeze_registry(s: ResidualState) -> XCycleRegistry:
    """Collect the white subgraph's cycle components and audit the boundary.

    Raises ClaimViolationError (with the offending snapshot) if the state
    does not have the structure forced at a correct phase-2 end.
    """
    violation = _end_of_phase2_violation(s)
    if violation is not None:
        raise ClaimViolationError(f"phase-2 end structure violated: {violation}", s.snapshot())
    g, colors = s.graph, s.colors
    cycles = []
    seen: set[int] = set()
    for v in range(g.n):
        if colors[v] is not Color.WHITE or v in seen:
            continue
        members = _white_component(s, v)
        seen.update(members)
        if len(members) >= 3:
            cycles.append(_white_cycle_order(s, members))
    return XCycleRegistry(tuple(cycles))


def cycle_status(reg: XCycleRegistry, i: int, s: ResidualState) -> CycleStatus:
    """Closed: every cycle edge retained. Open: some member is a blue leaf in
    a component of order >= 4. Finished: every member is red or sits in a
    BWB component. Other: none of these."""
    cyc = reg.cycles[i]
    colors = s.colors
    if all(colors[u] is Color.WHITE or colors[w] is Color.WHITE for u, w in reg.cycle_edges(i)):
        return CycleStatus.CLOSED
    comps = s.components()
    idx = s.component_index()
    if any(colors[v] in BLUE_SHADES and white_degree(s, v) == 1 and comps[idx[v]].order >= 4
           for v in cyc):
        return CycleStatus.OPEN
    if all(colors[v] is Color.RED or comps[idx[v]].kind is ComponentKind.BWB for v in cyc):
        return CycleStatus.FINISHED
    return CycleStatus.OTHER


def open_cycle_count(s: ResidualState, reg: XCycleRegistry) -> int:
    return sum(1 for i in range(len(reg.cycles))
               if cycle_status(reg, i, s) is CycleStatus.OPEN)


def F_value(s: ResidualState, reg: XCycleRegistry) -> int:
    """f minus open X-cycles, minus WB+ components, minus 3x BWB components.

    Zero exactly on the all-red state.
    """
    c2 = c3 = 0
    for comp in s.components():
        if comp.kind is ComponentKind.WB_PLUS:
            c2 += 1
        elif comp.kind is ComponentKind.BWB:
            c3 += 1
    return s.f - open_cycle_count(s, reg) - c2 - 3 * c3


def F_decrease(s: ResidualState, reg: XCycleRegistry, v: int) -> int:
    return F_value(s, reg) - F_value(apply_move(s, v, Color.DARK_BLUE), reg)


def max_F_decrease(s: ResidualState, reg: XCycleRegistry) -> int:
    return max((F_decrease(s, reg, v) for v in legal_moves(s)), default=0)


def phase3_active(s: ResidualState, reg: XCycleRegistry) -> bool:
    """True while some move still drops F by at least 10."""
    return max_F_decrease(s, reg) >= 10


def maybe_advance(ctx: PhaseContext, s: ResidualState) -> PhaseContext:
    """Cascade the phase machine; call before move 1 and after even moves.

    Entering phase 3 freezes the X-cycle registry and records the f/F
    handoff pair used by the completion audit. Skipped phases get length 0.
    """
    phase, registry = ctx.phase, ctx.registry
    f2, f3 = ctx.f_at_phase2_end, ctx.F_at_phase3_start
    if phase == 1 and not phase1_active(s):
        phase = 2
    if phase == 2 and not phase2_active(s):
        registry = freeze_registry(s)
        f2 = s.f
        f3 = F_value(s, registry)
        phase = 3
    if phase == 3 and not phase3_active(s, registry):
        phase = 4
    if phase == ctx.phase:
        return ctx
    return replace(ctx, phase=phase, registry=registry,
                   f_at_phase2_end=f2, F_at_phase3_start=f3)


def shade_for_phase(phase: int) -> Color:
    return Color.LIGHT_BLUE if phase == 1 else Color.DARK_BLUE


def potential_kind(phase: int) -> str:
    return "f" if phase <= 2 else "F"


def potential_decrease(ctx: PhaseContext, s: ResidualState, v: int) -> int:
    """Decrease of the active potential (f in phases 1-2, F in 3-4) if v
    were played now."""
    if ctx.phase <= 2:
        return f_decrease(s, v, shade_for_phase(ctx.phase))
    return F_decrease(s, ctx.registry, v)
