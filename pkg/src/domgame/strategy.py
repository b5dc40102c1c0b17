"""Move policies for both players and the game loop producing transcripts.

A policy is a callable ``policy(ctx, state) -> vertex`` carrying a
``policy_name`` attribute. The Dominator of record is the greedy rule;
Staller policies only need to return legal vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import IllegalMoveError, ResourceLimitError
from .graph import Graph, philox_rng
from .phases import (
    F_value,
    PhaseContext,
    maybe_advance,
    potential_decrease,
    potential_kind,
    shade_for_phase,
)
from .residual import Color, ResidualState, apply_move, init_state, is_over, legal_moves

DEFAULT_WORST_CASE_CAP = 12

Policy = Callable[[PhaseContext, ResidualState], int]


@dataclass(frozen=True)
class MoveRecord:
    index: int
    mover: str                # "D" or "S"
    vertex: int
    phase: int
    kind: str                 # "f" or "F"
    decrease: int
    snapshot_hash: str

    def to_json_dict(self) -> dict:
        return {"index": self.index, "mover": self.mover, "vertex": self.vertex,
                "phase": self.phase, "kind": self.kind, "decrease": self.decrease,
                "snapshot_hash": self.snapshot_hash}


@dataclass(frozen=True)
class Transcript:
    graph_hash: str
    n: int
    m: int
    first_player: str         # "D" or "S"
    dominator_policy: str
    staller_policy: str
    records: tuple[MoveRecord, ...]
    phase_lengths: tuple[int, int, int, int]
    f_at_phase2_end: int | None
    F_at_phase2_end: int | None

    @property
    def total_moves(self) -> int:
        return len(self.records)

    def to_text(self) -> str:
        lines = [f"{r.index} {r.mover} {r.vertex} {r.phase} {r.kind} {r.decrease}"
                 for r in self.records]
        p1, p2, p3, p4 = self.phase_lengths
        lines.append(f"# p1={p1} p2={p2} p3={p3} p4={p4} total={self.total_moves} final_potential=0")
        f2 = "-" if self.f_at_phase2_end is None else self.f_at_phase2_end
        F2 = "-" if self.F_at_phase2_end is None else self.F_at_phase2_end
        lines.append(f"# f_at_phase2_end={f2} F_at_phase2_end={F2}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "graph": {"hash": self.graph_hash, "n": self.n, "m": self.m},
            "first_player": self.first_player,
            "dominator_policy": self.dominator_policy,
            "staller_policy": self.staller_policy,
            "records": [r.to_json_dict() for r in self.records],
            "phase_lengths": list(self.phase_lengths),
            "total_moves": self.total_moves,
            "f_at_phase2_end": self.f_at_phase2_end,
            "F_at_phase2_end": self.F_at_phase2_end,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def dominator_greedy(ctx: PhaseContext, s: ResidualState) -> int:
    """Play a vertex maximizing the active potential decrease; ties go to
    the smallest vertex id."""
    best_v, best_dec = -1, -1
    for v in legal_moves(s):
        dec = potential_decrease(ctx, s, v)
        if dec > best_dec:
            best_v, best_dec = v, dec
    if best_v < 0:
        raise IllegalMoveError("no legal moves: the game is over")
    return best_v


dominator_greedy.policy_name = "greedy"


def staller_min_decrease(ctx: PhaseContext, s: ResidualState) -> int:
    """Adversarial probe: minimize the active potential decrease, ties to
    the smallest vertex id."""
    best_v, best_dec = -1, None
    for v in legal_moves(s):
        dec = potential_decrease(ctx, s, v)
        if best_dec is None or dec < best_dec:
            best_v, best_dec = v, dec
    if best_v < 0:
        raise IllegalMoveError("no legal moves: the game is over")
    return best_v


staller_min_decrease.policy_name = "min_decrease"


def make_staller_random(seed: int) -> Policy:
    """Uniformly random legal move under a Philox stream keyed by seed."""
    rng = philox_rng(seed)

    def staller_random(ctx: PhaseContext, s: ResidualState) -> int:
        moves = legal_moves(s)
        if not moves:
            raise IllegalMoveError("no legal moves: the game is over")
        return moves[int(rng.integers(0, len(moves)))]

    staller_random.policy_name = "random"
    return staller_random


def make_scripted_staller(moves: Sequence[int], name: str = "scripted") -> Policy:
    it = iter(moves)

    def staller_scripted(ctx: PhaseContext, s: ResidualState) -> int:
        return next(it)

    staller_scripted.policy_name = name
    return staller_scripted


def play_game(g: Graph, dominator: Policy, staller: Policy, first: str = "D") -> Transcript:
    """Run one full game and return its transcript.

    Dominator moves at odd indices. With first="S" the opening move has
    index 0, counts as phase 1, and shades its new blues light. Phase
    boundaries are evaluated before move 1 and after even moves.
    """
    if first not in ("D", "S"):
        raise ValueError("first must be 'D' or 'S'")
    state = init_state(g)
    ctx = PhaseContext()
    records: list[MoveRecord] = []

    def run_move(mover: str, policy: Policy, idx: int) -> bool:
        nonlocal state, ctx
        v = policy(ctx, state)
        if not isinstance(v, int) or not 0 <= v < g.n or state.colors[v] is Color.RED:
            name = getattr(policy, "policy_name", "policy")
            raise IllegalMoveError(f"policy {name!r} returned illegal vertex {v!r}")
        new_state = apply_move(state, v, shade_for_phase(ctx.phase))
        if ctx.phase <= 2:
            dec = state.f - new_state.f
        else:
            dec = F_value(state, ctx.registry) - F_value(new_state, ctx.registry)
        records.append(MoveRecord(idx, mover, v, ctx.phase, potential_kind(ctx.phase),
                                  dec, new_state.snapshot_hash()))
        state = new_state
        ctx = PhaseContext(ctx.phase, ctx.moves_made + 1, ctx.registry,
                           ctx.f_at_phase2_end, ctx.F_at_phase3_start)
        return not is_over(state)

    alive = True
    if first == "S":
        alive = run_move("S", staller, 0)
    if alive:
        ctx = maybe_advance(ctx, state)
        idx = 1
        while True:
            mover = "D" if idx % 2 == 1 else "S"
            alive = run_move(mover, dominator if mover == "D" else staller, idx)
            if not alive:
                break
            if idx % 2 == 0:
                ctx = maybe_advance(ctx, state)
            idx += 1

    lengths = [0, 0, 0, 0]
    for r in records:
        lengths[r.phase - 1] += 1
    return Transcript(
        graph_hash=g.graph_hash, n=g.n, m=g.edge_count, first_player=first,
        dominator_policy=getattr(dominator, "policy_name", "custom"),
        staller_policy=getattr(staller, "policy_name", "custom"),
        records=tuple(records), phase_lengths=tuple(lengths),
        f_at_phase2_end=ctx.f_at_phase2_end, F_at_phase2_end=ctx.F_at_phase3_start)


def staller_worst_case(g: Graph, cap: int = DEFAULT_WORST_CASE_CAP,
                       first: str = "D") -> tuple[int, Transcript]:
    """Longest game any Staller can force against the greedy Dominator.

    Exhaustive depth-first branching over Staller moves only (Dominator's
    replies are forced); no memoization, since shading and the frozen
    registry make states history-dependent. Returns (length, witness),
    the witness being the first maximizing line in ascending-id order.
    """
    if first not in ("D", "S"):
        raise ValueError("first must be 'D' or 'S'")
    if g.n > cap:
        raise ResourceLimitError(f"n={g.n} exceeds the worst-case search cap {cap}")
    full = (1 << g.n) - 1
    best_len = -1
    best_script: tuple[int, ...] = ()

    def search(state: ResidualState, ctx: PhaseContext, idx: int, made: int,
               script: tuple[int, ...]) -> None:
        nonlocal best_len, best_script
        # each move dominates at least one new (white) vertex
        if made + (full & ~state.dominated_mask).bit_count() <= best_len:
            return
        if idx % 2 == 1:
            options = [dominator_greedy(ctx, state)]
        else:
            options = legal_moves(state)
        for v in options:
            nxt = apply_move(state, v, shade_for_phase(ctx.phase))
            nscript = script + (v,) if idx % 2 == 0 else script
            if is_over(nxt):
                if made + 1 > best_len:
                    best_len, best_script = made + 1, nscript
                continue
            nctx = maybe_advance(ctx, nxt) if idx % 2 == 0 else ctx
            search(nxt, nctx, idx + 1, made + 1, nscript)

    state0 = init_state(g)
    ctx0 = PhaseContext()
    if first == "S":
        search(state0, ctx0, 0, 0, ())
    else:
        search(state0, maybe_advance(ctx0, state0), 1, 0, ())

    witness = play_game(g, dominator_greedy,
                        make_scripted_staller(best_script, name="worst_case"), first)
    assert witness.total_moves == best_len
    return best_len, witness
