"""Transcript audits and the corpus runner.

Every inequality of the greedy strategy's bookkeeping is re-checked here by
replaying a transcript's move sequence through the engine: per-move and
per-phase potential decreases, end-of-phase structure, X-cycle accounting,
the telescoped 5n budget, and the exact bounds against the minimax solver.
Recorded move data that disagrees with the replay is itself a failure, so
mutated transcripts are rejected with a replayable witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ConfigError
from .graph import (
    Graph,
    enumerate_labeled_graphs,
    gen_caterpillar,
    gen_cycle,
    gen_gnp_isolate_free,
    gen_path,
    gen_random_tree,
    gen_star,
    philox_rng,
    write_edge_list,
)
from .phases import (
    CycleStatus,
    PhaseContext,
    XCycleRegistry,
    _end_of_phase2_violation,
    cycle_status,
    F_value,
    max_F_decrease,
    maybe_advance,
    open_cycle_count,
    potential_kind,
    shade_for_phase,
)
from .residual import (
    BLUE_SHADES,
    Color,
    ComponentKind,
    ResidualState,
    apply_move,
    init_state,
    is_over,
    white_degree,
)
from .solver import DEFAULT_SOLVER_CAP, solve_game
from .strategy import (
    DEFAULT_WORST_CASE_CAP,
    Transcript,
    dominator_greedy,
    make_staller_random,
    play_game,
    staller_min_decrease,
    staller_worst_case,
)

CLAIM_IDS = (
    "PH1_MOVES", "AV1", "AV2", "END2_STRUCT", "LATER2", "XCYCLE_DROP",
    "PH2_LEAF", "XCYCLE_FINISH", "PH2_ST5_PAIR", "AV3", "END3_STRUCT",
    "PH4_MOVES", "AV4", "TOTAL_5N", "BOUND_5N8", "BOUND_STALLER_START",
    "GAP_GG_GGP", "LIGHTBLUE_STRUCT",
)
BOUND_CHECKS = ("BOUND_5N8", "BOUND_STALLER_START", "GAP_GG_GGP")
TRANSCRIPT_CHECKS = tuple(c for c in CLAIM_IDS if c not in BOUND_CHECKS)

PASS = "pass"
FAIL = "fail"
VACUOUS = "pass-vacuous"
SKIPPED = "skipped-exact"


@dataclass(frozen=True)
class Witness:
    """Everything needed to replay a failure."""

    graph_text: str
    move_index: int | None = None
    snapshot: str | None = None
    transcript_prefix: tuple = ()
    note: str = ""

    def to_json_dict(self) -> dict:
        return {"graph": self.graph_text, "move_index": self.move_index,
                "snapshot": self.snapshot,
                "transcript_prefix": list(self.transcript_prefix), "note": self.note}


@dataclass(frozen=True)
class ClaimReport:
    claim: str
    status: str
    detail: str = ""
    witness: Witness | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json_dict(self) -> dict:
        d = {"id": self.claim, "status": self.status, "detail": self.detail}
        if self.witness is not None:
            d["witness"] = self.witness.to_json_dict()
        return d


@dataclass
class _Move:
    index: int
    mover: str
    vertex: int
    phase: int
    kind: str
    decrease: int
    pre_state: ResidualState
    post_state: ResidualState
    x_before: int | None
    x_after: int | None
    ends_phase3: bool = False


@dataclass
class _Replay:
    moves: list[_Move]
    freeze_state: ResidualState | None
    freeze_after: int
    registry: XCycleRegistry | None
    f_star: int | None
    F_star: int | None


def _replay(g: Graph, t: Transcript) -> _Replay:
    """Ground-truth re-execution of the recorded move sequence.

    Structural problems (bad indices, illegal or missing moves) raise
    ValueError; semantic fields of the records are NOT trusted here and are
    compared by the individual checks.
    """
    if t.first_player not in ("D", "S"):
        raise ValueError(f"bad first player {t.first_player!r}")
    if not t.records:
        raise ValueError("empty transcript")
    state = init_state(g)
    ctx = PhaseContext()
    moves: list[_Move] = []
    recs = t.records
    pos = 0
    freeze_state: ResidualState | None = None
    freeze_after = -1

    def exec_move(idx: int) -> bool:
        nonlocal state, ctx, pos
        r = recs[pos]
        mover = "D" if idx % 2 == 1 else "S"
        if r.index != idx or r.mover != mover:
            raise ValueError(f"record {pos}: expected move {idx} by {mover}, "
                             f"got {r.index} by {r.mover}")
        if not 0 <= r.vertex < g.n or state.colors[r.vertex] is Color.RED:
            raise ValueError(f"record {pos}: vertex {r.vertex} is not playable")
        pre = state
        post = apply_move(state, r.vertex, shade_for_phase(ctx.phase))
        if ctx.phase <= 2:
            dec, xb, xa = pre.f - post.f, None, None
        else:
            xb = open_cycle_count(pre, ctx.registry)
            xa = open_cycle_count(post, ctx.registry)
            dec = F_value(pre, ctx.registry) - F_value(post, ctx.registry)
        moves.append(_Move(idx, mover, r.vertex, ctx.phase, potential_kind(ctx.phase),
                           dec, pre, post, xb, xa))
        state = post
        pos += 1
        return not is_over(state)

    def advance() -> None:
        nonlocal ctx, freeze_state, freeze_after
        new_ctx = maybe_advance(ctx, state)
        if new_ctx.registry is not None and ctx.registry is None:
            freeze_state = state
            freeze_after = pos
        ctx = new_ctx

    alive = True
    if t.first_player == "S":
        alive = exec_move(0)
    if alive:
        advance()
        idx = 1
        while pos < len(recs):
            alive = exec_move(idx)
            if not alive:
                break
            if idx % 2 == 0:
                advance()
            idx += 1
    if pos != len(recs):
        raise ValueError("transcript continues after the game ended")
    if not is_over(state):
        raise ValueError("transcript ends before the game is over")
    for i, m in enumerate(moves):
        m.ends_phase3 = m.phase == 3 and i + 1 < len(moves) and moves[i + 1].phase == 4
    return _Replay(moves, freeze_state, freeze_after, ctx.registry,
                   ctx.f_at_phase2_end, ctx.F_at_phase3_start)


def replay_states(g: Graph, t: Transcript) -> list[ResidualState]:
    """States along a transcript: initial state, then one per move."""
    rep = _replay(g, t)
    return [rep.moves[0].pre_state] + [m.post_state for m in rep.moves]


def _prefix(t: Transcript, upto: int) -> tuple:
    return tuple(r.to_json_dict() for r in t.records[:upto])


def _move_fail(claim: str, g: Graph, t: Transcript, i: int, m: _Move, note: str) -> ClaimReport:
    w = Witness(write_edge_list(g), move_index=m.index, snapshot=m.post_state.snapshot(),
                transcript_prefix=_prefix(t, i + 1), note=note)
    return ClaimReport(claim, FAIL, note, w)


def _state_fail(claim: str, g: Graph, t: Transcript, state: ResidualState,
                after: int, note: str) -> ClaimReport:
    w = Witness(write_edge_list(g), move_index=None, snapshot=state.snapshot(),
                transcript_prefix=_prefix(t, after), note=note)
    return ClaimReport(claim, FAIL, note, w)


def _permove_claim(phase: int) -> str:
    return "PH1_MOVES" if phase <= 2 else ("PH2_ST5_PAIR" if phase == 3 else "PH4_MOVES")


def _integrity_note(r, m: _Move) -> str | None:
    if (r.phase, r.kind, r.decrease) != (m.phase, m.kind, m.decrease):
        return (f"recorded (phase={r.phase}, kind={r.kind}, decrease={r.decrease}) "
                f"but replay gives (phase={m.phase}, kind={m.kind}, decrease={m.decrease})")
    if r.snapshot_hash != m.post_state.snapshot_hash():
        return "recorded snapshot hash disagrees with replay"
    return None


def _check_permove_f(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    """Phases 1-2: Dominator moves drop f by >= 11, Staller by >= 5 (the
    Staller-start pre-move by >= 6)."""
    picked = [(i, m) for i, m in enumerate(rep.moves) if m.phase <= 2]
    if not picked:
        return ClaimReport("PH1_MOVES", VACUOUS, "no phase-1/2 moves")
    for i, m in picked:
        note = _integrity_note(t.records[i], m)
        if note:
            return _move_fail("PH1_MOVES", g, t, i, m, note)
        bound = 11 if m.mover == "D" else (6 if m.index == 0 else 5)
        if m.decrease < bound:
            return _move_fail("PH1_MOVES", g, t, i, m,
                              f"move {m.index} ({m.mover}) dropped f by {m.decrease} < {bound}")
    return ClaimReport("PH1_MOVES", PASS, f"{len(picked)} moves checked")


def _check_phase_total(g: Graph, t: Transcript, rep: _Replay, phase: int,
                       claim: str) -> ClaimReport:
    decs = [m.decrease for m in rep.moves if m.phase == phase]
    if not decs:
        return ClaimReport(claim, VACUOUS, f"phase {phase} is empty")
    p = len(decs)
    if phase == 1 and t.first_player == "S":
        required = 6 + 8 * (p - 1)  # the pre-move only guarantees 6
    else:
        required = 8 * p
    got = sum(decs)
    if got < required:
        return _state_fail(claim, g, t, rep.moves[-1].post_state, len(rep.moves),
                           f"phase-{phase} total decrease {got} < {required} over {p} moves")
    return ClaimReport(claim, PASS, f"total {got} >= {required} over {p} moves")


def _check_end2(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    if rep.freeze_state is None:
        return ClaimReport("END2_STRUCT", VACUOUS, "game ended before the potential handoff")
    note = _end_of_phase2_violation(rep.freeze_state)
    if note:
        return _state_fail("END2_STRUCT", g, t, rep.freeze_state, rep.freeze_after, note)
    return ClaimReport("END2_STRUCT", PASS, "handoff state structure holds")


def _later_states(rep: _Replay) -> list[tuple[ResidualState, int]]:
    if rep.freeze_state is None:
        return []
    out = [(rep.freeze_state, rep.freeze_after)]
    out.extend((m.post_state, i + 1) for i, m in enumerate(rep.moves) if m.phase >= 3)
    return out


def _check_later2(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    states = _later_states(rep)
    if not states:
        return ClaimReport("LATER2", VACUOUS, "phases 3-4 never reached")
    for state, after in states:
        colors = state.colors
        for v in range(g.n):
            dw = white_degree(state, v)
            if colors[v] is Color.WHITE and dw > 2:
                return _state_fail("LATER2", g, t, state, after,
                                   f"white vertex {v} has {dw} white neighbors")
            if colors[v] in BLUE_SHADES and dw > 3:
                return _state_fail("LATER2", g, t, state, after,
                                   f"blue vertex {v} has {dw} white neighbors")
            if colors[v] is Color.WHITE and dw == 0:
                if not any(colors[w] in BLUE_SHADES and white_degree(state, w) in (1, 2)
                           for w in g.adjacency[v]):
                    return _state_fail("LATER2", g, t, state, after,
                                       f"vertex {v} has no blue neighbor of white-degree 1 or 2")
    return ClaimReport("LATER2", PASS, f"{len(states)} states checked")


def _check_xcycle_drop(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    picked = [(i, m) for i, m in enumerate(rep.moves) if m.phase >= 3]
    if not picked:
        return ClaimReport("XCYCLE_DROP", VACUOUS, "phases 3-4 never reached")
    mask = rep.registry.member_mask
    for i, m in picked:
        drop = m.x_before - m.x_after
        if m.pre_state.colors[m.vertex] is Color.WHITE or (mask >> m.vertex) & 1:
            bound = 1
        else:
            bound = white_degree(m.pre_state, m.vertex)
        if drop > bound:
            return _move_fail("XCYCLE_DROP", g, t, i, m,
                              f"move {m.index} closed {drop} open X-cycles, bound {bound}")
    return ClaimReport("XCYCLE_DROP", PASS, f"{len(picked)} moves checked")


def _nonspecial_blue_leaf(state: ResidualState) -> int | None:
    comps = state.components()
    idx = state.component_index()
    for v in range(state.graph.n):
        if state.colors[v] in BLUE_SHADES and white_degree(state, v) == 1:
            comp = comps[idx[v]]
            if comp.order != 2 and comp.kind is not ComponentKind.BWB:
                return v
    return None


def _check_ph2_leaf(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    """Wherever phase 3 still has a blue leaf in a non-special component,
    some move must drop F by at least 11."""
    states = [(m.pre_state, i) for i, m in enumerate(rep.moves) if m.phase == 3]
    for i, m in enumerate(rep.moves):
        if m.phase == 4:
            states.append((m.pre_state, i))
            break
    if not states:
        return ClaimReport("PH2_LEAF", VACUOUS, "phase 3 never reached")
    hits = 0
    for state, after in states:
        v = _nonspecial_blue_leaf(state)
        if v is not None:
            hits += 1
            if max_F_decrease(state, rep.registry) < 11:
                return _state_fail("PH2_LEAF", g, t, state, after,
                                   f"blue leaf {v} in a non-special component but no move drops F by 11")
    return ClaimReport("PH2_LEAF", PASS, f"{hits} of {len(states)} states exhibited the precondition")


def _check_xcycle_finish(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    picked = [(i, m) for i, m in enumerate(rep.moves) if m.phase >= 3]
    if not picked:
        return ClaimReport("XCYCLE_FINISH", VACUOUS, "phases 3-4 never reached")
    finishing = 0
    for i, m in picked:
        if m.x_before - m.x_after >= 1:
            finishing += 1
            need = 11 if m.mover == "D" else 6
            if m.decrease < need:
                return _move_fail("XCYCLE_FINISH", g, t, i, m,
                                  f"move {m.index} ({m.mover}) closed an open X-cycle with S={m.decrease} < {need}")
    return ClaimReport("XCYCLE_FINISH", PASS, f"{finishing} open-cycle-closing moves checked")


def _check_ph3_moves(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    """Phase 3: Dominator >= 10, Staller >= 5; any Staller move of exactly 5
    is answered by a Dominator move of >= 11; a Staller move ending the
    phase managed at least 6."""
    picked = [(i, m) for i, m in enumerate(rep.moves) if m.phase == 3]
    if not picked:
        return ClaimReport("PH2_ST5_PAIR", VACUOUS, "phase 3 is empty")
    for i, m in picked:
        note = _integrity_note(t.records[i], m)
        if note:
            return _move_fail("PH2_ST5_PAIR", g, t, i, m, note)
        if m.mover == "D":
            if m.decrease < 10:
                return _move_fail("PH2_ST5_PAIR", g, t, i, m,
                                  f"Dominator move {m.index} dropped F by {m.decrease} < 10")
            continue
        if m.decrease < 5:
            return _move_fail("PH2_ST5_PAIR", g, t, i, m,
                              f"Staller move {m.index} dropped F by {m.decrease} < 5")
        if m.decrease == 5:
            nxt = rep.moves[i + 1] if i + 1 < len(rep.moves) else None
            if nxt is None:
                return _move_fail("PH2_ST5_PAIR", g, t, i, m,
                                  f"game ended right after minimal Staller move {m.index}")
            if nxt.phase != 3 or nxt.mover != "D" or nxt.decrease < 11:
                return _move_fail("PH2_ST5_PAIR", g, t, i, m,
                                  f"Staller move {m.index} dropped F by 5 but the reply dropped {nxt.decrease} < 11")
        if m.ends_phase3 and m.decrease < 6:
            return _move_fail("PH2_ST5_PAIR", g, t, i, m,
                              f"phase-ending Staller move {m.index} dropped F by {m.decrease} < 6")
    return ClaimReport("PH2_ST5_PAIR", PASS, f"{len(picked)} moves checked")


_PHASE4_KINDS = (ComponentKind.WB_MINUS, ComponentKind.WB_PLUS,
                 ComponentKind.BWB, ComponentKind.ISOLATED_RED)


def _check_end3(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    state = after = None
    for i, m in enumerate(rep.moves):
        if m.phase == 4:
            state, after = m.pre_state, i
            break
    if state is None:
        return ClaimReport("END3_STRUCT", VACUOUS, "phase 4 never reached")
    reg = rep.registry
    for i in range(len(reg)):
        st = cycle_status(reg, i, state)
        if st is not CycleStatus.FINISHED:
            return _state_fail("END3_STRUCT", g, t, state, after,
                               f"X-cycle {i} is {st.value}, not finished, when phase 4 starts")
    colors = state.colors
    for v in range(g.n):
        dw = white_degree(state, v)
        if colors[v] is Color.WHITE and dw > 0:
            return _state_fail("END3_STRUCT", g, t, state, after,
                               f"white vertex {v} still has {dw} white neighbors")
        if colors[v] in BLUE_SHADES and dw >= 2:
            return _state_fail("END3_STRUCT", g, t, state, after,
                               f"blue vertex {v} still has {dw} white neighbors")
        if colors[v] is Color.WHITE:
            blues = sum(1 for w in g.adjacency[v] if colors[w] in BLUE_SHADES)
            if blues > 2:
                return _state_fail("END3_STRUCT", g, t, state, after,
                                   f"white vertex {v} has {blues} blue neighbors")
    for comp in state.components():
        if comp.kind not in _PHASE4_KINDS:
            return _state_fail("END3_STRUCT", g, t, state, after,
                               f"component {comp.vertices} of kind {comp.kind.value} at phase-4 start")
    return ClaimReport("END3_STRUCT", PASS, "phase-4 start structure holds")


def _check_ph4_moves(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    picked = [(i, m) for i, m in enumerate(rep.moves) if m.phase == 4]
    if not picked:
        return ClaimReport("PH4_MOVES", VACUOUS, "phase 4 is empty")
    for i, m in picked:
        note = _integrity_note(t.records[i], m)
        if note:
            return _move_fail("PH4_MOVES", g, t, i, m, note)
        if m.decrease < 8:
            return _move_fail("PH4_MOVES", g, t, i, m,
                              f"move {m.index} dropped F by {m.decrease} < 8")
        comps = m.pre_state.components()
        comp = comps[m.pre_state.component_index()[m.vertex]]
        members = set(comp.vertices)
        for u in range(g.n):
            if u in members:
                if m.post_state.colors[u] is not Color.RED:
                    return _move_fail("PH4_MOVES", g, t, i, m,
                                      f"move {m.index} left vertex {u} of its component non-red")
            elif m.post_state.colors[u] is not m.pre_state.colors[u]:
                return _move_fail("PH4_MOVES", g, t, i, m,
                                  f"move {m.index} recolored vertex {u} outside its component")
    return ClaimReport("PH4_MOVES", PASS, f"{len(picked)} moves checked")


def _check_total(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    n5 = 5 * g.n
    gap = 0 if rep.f_star is None else rep.f_star - rep.F_star
    total = sum(m.decrease for m in rep.moves)
    last = rep.moves[-1]
    if total != n5 - gap:
        return _move_fail("TOTAL_5N", g, t, len(rep.moves) - 1, last,
                          f"decreases sum to {total}, expected 5n - gap = {n5 - gap}")
    lengths = [0, 0, 0, 0]
    for m in rep.moves:
        lengths[m.phase - 1] += 1
    if tuple(lengths) != t.phase_lengths:
        return _move_fail("TOTAL_5N", g, t, len(rep.moves) - 1, last,
                          f"recorded phase lengths {t.phase_lengths} but replay gives {tuple(lengths)}")
    if (t.f_at_phase2_end, t.F_at_phase2_end) != (rep.f_star, rep.F_star):
        return _move_fail("TOTAL_5N", g, t, len(rep.moves) - 1, last,
                          "recorded potential handoff disagrees with replay")
    p1, p2, p3, p4 = lengths
    if t.first_player == "S":
        rhs = 6 + 8 * (p1 - 1) + 8 * (p2 + p3 + p4) + gap
    else:
        rhs = 8 * (p1 + p2 + p3 + p4) + gap
    if n5 < rhs:
        return _move_fail("TOTAL_5N", g, t, len(rep.moves) - 1, last,
                          f"budget violated: 5n={n5} < {rhs}")
    return ClaimReport("TOTAL_5N", PASS, f"5n={n5} >= {rhs}, gap={gap}")


def _check_lightblue(g: Graph, t: Transcript, rep: _Replay) -> ClaimReport:
    """From phase 2 on, every retained 3-path ending in a still-white leaf of
    G carries opening-phase evidence: the leaf's support u is light blue, or
    u is white with every other neighbor light blue, or u is dark blue with
    every other neighbor light blue or red.

    This is the invariant the opening phase's end condition establishes and
    color monotonicity preserves. The bare two-case reading (light support,
    or white support with all-light surround) is falsifiable: a white
    support can be dominated later through one of its light neighbors and
    turn dark while the leaf stays white.
    """
    idxs = [i for i, m in enumerate(rep.moves) if m.phase >= 2]
    if not idxs:
        return ClaimReport("LIGHTBLUE_STRUCT", VACUOUS, "game ended inside phase 1")
    states = [(rep.moves[idxs[0]].pre_state, idxs[0])]
    states.extend((rep.moves[i].post_state, i + 1) for i in idxs)
    for state, after in states:
        colors = state.colors
        for v in range(g.n):
            if g.degree(v) != 1 or colors[v] is not Color.WHITE:
                continue
            u = g.adjacency[v][0]
            if colors[u] is Color.LIGHT_BLUE:
                continue
            if colors[u] is Color.WHITE and all(
                    colors[w] is Color.LIGHT_BLUE for w in g.adjacency[u] if w != v):
                continue
            if colors[u] is Color.DARK_BLUE and all(
                    colors[w] in (Color.LIGHT_BLUE, Color.RED)
                    for w in g.adjacency[u] if w != v):
                continue
            return _state_fail("LIGHTBLUE_STRUCT", g, t, state, after,
                               f"white leaf {v}: support {u} is {colors[u].name} and some "
                               f"3-path through it lacks a light blue or red vertex")
    return ClaimReport("LIGHTBLUE_STRUCT", PASS, f"{len(states)} states checked")


def verify_transcript(g: Graph, t: Transcript) -> list[ClaimReport]:
    """One report per applicable bookkeeping claim, in canonical order.

    The transcript must come from the greedy Dominator (the claims
    presuppose his strategy) and must belong to the given graph.
    """
    if t.dominator_policy != "greedy":
        raise ValueError("claims presuppose the greedy dominator; transcript has "
                         f"dominator_policy={t.dominator_policy!r}")
    if t.graph_hash != g.graph_hash or t.n != g.n:
        raise ValueError("transcript does not belong to this graph")
    rep = _replay(g, t)
    return [
        _check_permove_f(g, t, rep),
        _check_phase_total(g, t, rep, 1, "AV1"),
        _check_phase_total(g, t, rep, 2, "AV2"),
        _check_end2(g, t, rep),
        _check_later2(g, t, rep),
        _check_xcycle_drop(g, t, rep),
        _check_ph2_leaf(g, t, rep),
        _check_xcycle_finish(g, t, rep),
        _check_ph3_moves(g, t, rep),
        _check_phase_total(g, t, rep, 3, "AV3"),
        _check_end3(g, t, rep),
        _check_ph4_moves(g, t, rep),
        _check_phase_total(g, t, rep, 4, "AV4"),
        _check_total(g, t, rep),
        _check_lightblue(g, t, rep),
    ]


def verify_bounds(g: Graph, solver_cap: int = DEFAULT_SOLVER_CAP,
                  worst_cap: int = DEFAULT_WORST_CASE_CAP) -> list[ClaimReport]:
    """Exact and greedy-worst-case length bounds plus the start-gap property."""
    bound_d = 5 * g.n // 8
    bound_s = (5 * g.n + 2) // 8
    gv = solve_game(g, solver_cap) if g.n <= solver_cap else None
    wc_d = wc_s = None
    if g.n <= worst_cap:
        wc_d = staller_worst_case(g, worst_cap, "D")
        wc_s = staller_worst_case(g, worst_cap, "S")
    gtext = write_edge_list(g)
    reports = []

    def fail(claim: str, note: str) -> ClaimReport:
        return ClaimReport(claim, FAIL, note, Witness(gtext, note=note))

    if gv is None and wc_d is None:
        reports.append(ClaimReport("BOUND_5N8", SKIPPED, f"n={g.n} exceeds both caps"))
    elif gv is not None and gv.gamma_g > bound_d:
        reports.append(fail("BOUND_5N8", f"gamma_g={gv.gamma_g} > {bound_d}"))
    elif wc_d is not None and wc_d[0] > bound_d:
        reports.append(fail("BOUND_5N8", f"greedy worst-case length {wc_d[0]} > {bound_d}"))
    elif gv is not None and wc_d is not None and gv.gamma_g > wc_d[0]:
        reports.append(fail("BOUND_5N8",
                            f"gamma_g={gv.gamma_g} exceeds greedy worst-case length {wc_d[0]}"))
    else:
        parts = []
        if gv is not None:
            parts.append(f"gamma_g={gv.gamma_g}")
        else:
            parts.append("exact skipped (cap)")
        if wc_d is not None:
            parts.append(f"worst={wc_d[0]}")
        else:
            parts.append("worst-case skipped (cap)")
        reports.append(ClaimReport("BOUND_5N8", PASS, f"{', '.join(parts)} <= {bound_d}"))

    if gv is None and wc_s is None:
        reports.append(ClaimReport("BOUND_STALLER_START", SKIPPED, f"n={g.n} exceeds both caps"))
    elif gv is not None and gv.gamma_g_prime > bound_s:
        reports.append(fail("BOUND_STALLER_START", f"gamma_g'={gv.gamma_g_prime} > {bound_s}"))
    elif wc_s is not None and wc_s[0] > bound_s:
        reports.append(fail("BOUND_STALLER_START",
                            f"greedy worst-case Staller-start length {wc_s[0]} > {bound_s}"))
    else:
        got = [] if gv is None else [f"gamma_g'={gv.gamma_g_prime}"]
        if wc_s is not None:
            got.append(f"worst={wc_s[0]}")
        reports.append(ClaimReport("BOUND_STALLER_START", PASS, f"{', '.join(got)} <= {bound_s}"))

    if gv is None:
        reports.append(ClaimReport("GAP_GG_GGP", SKIPPED, f"n={g.n} exceeds solver cap"))
    elif abs(gv.gamma_g - gv.gamma_g_prime) > 1:
        reports.append(fail("GAP_GG_GGP",
                            f"|{gv.gamma_g} - {gv.gamma_g_prime}| > 1"))
    else:
        reports.append(ClaimReport("GAP_GG_GGP", PASS,
                                   f"gamma_g={gv.gamma_g}, gamma_g'={gv.gamma_g_prime}"))
    return reports


# ---------------------------------------------------------------------------
# corpus specifications and the runner


@dataclass(frozen=True)
class Caps:
    solver_n: int = DEFAULT_SOLVER_CAP
    worst_case_n: int = DEFAULT_WORST_CASE_CAP


@dataclass
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)
    seeds: list = field(default_factory=lambda: [0])


@dataclass
class CorpusSpec:
    families: list
    checks: list
    caps: Caps = field(default_factory=Caps)


_CHECK_ALIASES = {"all": CLAIM_IDS, "bounds": BOUND_CHECKS, "transcript": TRANSCRIPT_CHECKS}


def _resolve_checks(raw) -> list[str]:
    if isinstance(raw, str):
        raw = [raw]
    out: list[str] = []
    for item in raw:
        if item in _CHECK_ALIASES:
            out.extend(_CHECK_ALIASES[item])
        elif item in CLAIM_IDS:
            out.append(item)
        else:
            raise ConfigError(f"unknown check id {item!r}")
    return [c for c in CLAIM_IDS if c in set(out)]


def spec_from_json(d: dict) -> CorpusSpec:
    if not isinstance(d, dict):
        raise ConfigError("corpus spec must be a JSON object")
    fam_list = d.get("families", [])
    families = []
    for f in fam_list:
        try:
            families.append(FamilySpec(f["name"], dict(f.get("params", {})),
                                       list(f.get("seeds", [0]))))
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"bad family entry {f!r}: {exc}") from None
    default_checks = ["all"] if families else []
    checks = _resolve_checks(d.get("checks", default_checks))
    if checks and not families:
        raise ConfigError("checks requested but no families given")
    caps_d = d.get("caps", {})
    caps = Caps(solver_n=int(caps_d.get("solver_n", DEFAULT_SOLVER_CAP)),
                worst_case_n=int(caps_d.get("worst_case_n", DEFAULT_WORST_CASE_CAP)))
    if caps.solver_n > DEFAULT_SOLVER_CAP or caps.worst_case_n > DEFAULT_WORST_CASE_CAP:
        raise ConfigError("caps may only lower the module limits "
                          f"(solver {DEFAULT_SOLVER_CAP}, worst-case {DEFAULT_WORST_CASE_CAP})")
    return CorpusSpec(families, checks, caps)


def builtin_spec(name: str) -> CorpusSpec:
    if name == "smoke":
        return spec_from_json({
            "families": [
                {"name": "paths", "params": {"n_min": 2, "n_max": 10}, "seeds": [0, 1]},
                {"name": "cycles", "params": {"n_min": 3, "n_max": 10}, "seeds": [0, 1]},
                {"name": "stars", "params": {"n_min": 2, "n_max": 10}, "seeds": [0, 1]},
            ],
            "checks": ["all"],
        })
    raise ConfigError(f"unknown builtin spec {name!r}")


def _range(params: dict, lo_key: str, hi_key: str, lo_default: int) -> range:
    lo = int(params.get(lo_key, lo_default))
    hi = int(params[hi_key])
    return range(lo, hi + 1)


def corpus_items(spec: CorpusSpec) -> list[tuple[str, Graph, tuple[int, ...]]]:
    """Deterministic (label, graph, seeds) list for a corpus specification."""
    items: list[tuple[str, Graph, tuple[int, ...]]] = []
    for fam in spec.families:
        p = fam.params
        seeds = tuple(fam.seeds)
        if fam.name == "paths":
            items.extend((f"path-{n}", gen_path(n), seeds)
                         for n in _range(p, "n_min", "n_max", 2))
        elif fam.name == "cycles":
            items.extend((f"cycle-{n}", gen_cycle(n), seeds)
                         for n in _range(p, "n_min", "n_max", 3))
        elif fam.name == "stars":
            items.extend((f"star-{n}", gen_star(n), seeds)
                         for n in _range(p, "n_min", "n_max", 2))
        elif fam.name == "caterpillars":
            max_legs = int(p.get("max_legs", 2))
            for seed in seeds:
                rng = philox_rng(seed)
                for spine in _range(p, "spine_min", "spine_max", 1):
                    legs = [int(rng.integers(0, max_legs + 1)) for _ in range(spine)]
                    if spine == 1 and legs[0] == 0:
                        legs[0] = 1
                    items.append((f"caterpillar-{spine}-s{seed}",
                                  gen_caterpillar(spine, legs), seeds))
        elif fam.name == "trees":
            for n in _range(p, "n_min", "n_max", 2):
                items.extend((f"tree-{n}-s{seed}", gen_random_tree(n, seed), (seed,))
                             for seed in seeds)
        elif fam.name == "gnp":
            prob = float(p.get("p", 0.3))
            for n in _range(p, "n_min", "n_max", 2):
                items.extend((f"gnp-{n}-p{prob}-s{seed}",
                              gen_gnp_isolate_free(n, prob, seed), (seed,))
                             for seed in seeds)
        elif fam.name == "all_labeled":
            for n in _range(p, "n_min", "n_max", 2):
                items.extend((f"all{n}-{i}", g, seeds)
                             for i, g in enumerate(enumerate_labeled_graphs(n)))
        else:
            raise ConfigError(f"unknown family name {fam.name!r}")
    return items


def _transcripts_for(g: Graph, seeds: tuple[int, ...], caps: Caps) -> list[Transcript]:
    ts: list[Transcript] = []
    if g.n <= caps.worst_case_n:
        ts.append(staller_worst_case(g, caps.worst_case_n, "D")[1])
        ts.append(staller_worst_case(g, caps.worst_case_n, "S")[1])
    for seed in seeds:
        ts.append(play_game(g, dominator_greedy, make_staller_random(seed), "D"))
        ts.append(play_game(g, dominator_greedy, make_staller_random(seed), "S"))
    ts.append(play_game(g, dominator_greedy, staller_min_decrease, "D"))
    ts.append(play_game(g, dominator_greedy, staller_min_decrease, "S"))
    return ts


@dataclass
class GraphReport:
    label: str
    n: int
    m: int
    graph_hash: str
    reports: tuple[ClaimReport, ...]
    ratio_d: float | None
    ratio_s: float | None
    transcripts_checked: int

    def to_json_dict(self) -> dict:
        return {"graph": {"label": self.label, "n": self.n, "m": self.m,
                          "hash": self.graph_hash},
                "checks": [r.to_json_dict() for r in self.reports],
                "ratios": {"dominator_start": self.ratio_d, "staller_start": self.ratio_s},
                "transcripts_checked": self.transcripts_checked}


_STATUS_RANK = {FAIL: 0, PASS: 1, VACUOUS: 2, SKIPPED: 3}


def _collapse(claim: str, reports: list[ClaimReport]) -> ClaimReport:
    best = min(reports, key=lambda r: _STATUS_RANK[r.status])
    if len(reports) == 1:
        return best
    tallies = {}
    for r in reports:
        tallies[r.status] = tallies.get(r.status, 0) + 1
    summary = ", ".join(f"{k}={v}" for k, v in sorted(tallies.items()))
    return ClaimReport(claim, best.status, f"{summary}; {best.detail}", best.witness)


def _verify_item(label: str, g: Graph, seeds: tuple[int, ...], checks: list[str],
                 caps: Caps) -> GraphReport:
    by_claim: dict[str, list[ClaimReport]] = {}
    ratio_d = ratio_s = None
    n_tr = 0
    if any(c in BOUND_CHECKS for c in checks):
        for r in verify_bounds(g, caps.solver_n, caps.worst_case_n):
            if r.claim in checks:
                by_claim.setdefault(r.claim, []).append(r)
    if any(c in TRANSCRIPT_CHECKS for c in checks):
        for t in _transcripts_for(g, seeds, caps):
            n_tr += 1
            ratio = t.total_moves / g.n
            if t.first_player == "D":
                ratio_d = ratio if ratio_d is None else max(ratio_d, ratio)
            else:
                ratio_s = ratio if ratio_s is None else max(ratio_s, ratio)
            for r in verify_transcript(g, t):
                if r.claim in checks:
                    by_claim.setdefault(r.claim, []).append(r)
    collapsed = tuple(_collapse(c, by_claim[c]) for c in CLAIM_IDS if c in by_claim)
    return GraphReport(label, g.n, g.edge_count, g.graph_hash, collapsed,
                       ratio_d, ratio_s, n_tr)


def _verify_item_payload(payload: tuple) -> GraphReport:
    from .graph import parse_edge_list

    label, graph_text, seeds, checks, caps = payload
    return _verify_item(label, parse_edge_list(graph_text), seeds, list(checks), caps)


@dataclass
class AggregateReport:
    checks: list[str]
    graphs: list[GraphReport]

    @property
    def failures(self) -> list[tuple[str, ClaimReport]]:
        return [(gr.label, r) for gr in self.graphs for r in gr.reports if r.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for gr in self.graphs:
            for r in gr.reports:
                slot = out.setdefault(r.claim, {})
                slot[r.status] = slot.get(r.status, 0) + 1
        return out

    def worst_ratio(self, first: str = "D") -> tuple[float, str] | None:
        best = None
        for gr in self.graphs:
            ratio = gr.ratio_d if first == "D" else gr.ratio_s
            if ratio is not None and (best is None or ratio > best[0]):
                best = (ratio, gr.label)
        return best

    def to_json_dict(self) -> dict:
        wd, ws = self.worst_ratio("D"), self.worst_ratio("S")
        return {
            "checks": list(self.checks),
            "graph_count": len(self.graphs),
            "counts": self.counts(),
            "worst_ratio_dominator_start": None if wd is None else {"ratio": wd[0], "graph": wd[1]},
            "worst_ratio_staller_start": None if ws is None else {"ratio": ws[0], "graph": ws[1]},
            "failures": [{"graph": label, **r.to_json_dict()} for label, r in self.failures],
            "graphs": [gr.to_json_dict() for gr in self.graphs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_csv(self) -> str:
        lines = ["label,n,m,hash,transcripts,ratio_d,ratio_s,pass,fail,vacuous,skipped,first_failure"]
        for gr in self.graphs:
            tally = {PASS: 0, FAIL: 0, VACUOUS: 0, SKIPPED: 0}
            first_fail = ""
            for r in gr.reports:
                tally[r.status] += 1
                if r.status == FAIL and not first_fail:
                    first_fail = r.claim
            rd = "" if gr.ratio_d is None else f"{gr.ratio_d:.4f}"
            rs = "" if gr.ratio_s is None else f"{gr.ratio_s:.4f}"
            lines.append(f"{gr.label},{gr.n},{gr.m},{gr.graph_hash},{gr.transcripts_checked},"
                         f"{rd},{rs},{tally[PASS]},{tally[FAIL]},{tally[VACUOUS]},"
                         f"{tally[SKIPPED]},{first_fail}")
        return "\n".join(lines) + "\n"


def run_corpus(spec: CorpusSpec, jobs: int = 1) -> AggregateReport:
    """Verify every corpus graph; deterministic for a fixed spec.

    Items are independent, so jobs > 1 fans them out to worker processes;
    the reducer keeps corpus order regardless.
    """
    items = corpus_items(spec)
    if jobs > 1 and len(items) > 1:
        import multiprocessing

        payloads = [(label, write_edge_list(g), seeds, tuple(spec.checks), spec.caps)
                    for label, g, seeds in items]
        with multiprocessing.Pool(jobs) as pool:
            graphs = pool.map(_verify_item_payload, payloads)
    else:
        graphs = [_verify_item(label, g, seeds, spec.checks, spec.caps)
                  for label, g, seeds in items]
    return AggregateReport(list(spec.checks), graphs)
