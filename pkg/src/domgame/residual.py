"""Residual-graph state machine for the domination game.

A played set splits vertices into white (undominated), blue (dominated but
still playable: some neighbor is white), and red (unplayable). Blue vertices
carry a shade fixed when they turn blue: light (weight 4) during the opening
phase, dark (weight 3) afterwards. Only edges incident to at least one white
vertex are retained; legal moves, the weight sum f, and component shapes are
all read off this state.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum, IntEnum

from .errors import IllegalMoveError
from .graph import Graph


class Color(IntEnum):
    WHITE = 0
    LIGHT_BLUE = 1
    DARK_BLUE = 2
    RED = 3


WEIGHT = (5, 4, 3, 0)  # indexed by Color
COLOR_CODE = ("W", "LB", "DB", "R")
_CODE_TO_COLOR = {code: Color(i) for i, code in enumerate(COLOR_CODE)}
BLUE_SHADES = (Color.LIGHT_BLUE, Color.DARK_BLUE)


class ComponentKind(Enum):
    BWB = "BWB"            # one white between two blues
    WB_PLUS = "WB+"        # white + light blue pair
    WB_MINUS = "WB-"       # white + dark blue pair
    WW = "WW"              # two adjacent whites
    ISOLATED_RED = "red"
    OTHER = "other"


@dataclass(frozen=True)
class Component:
    vertices: tuple[int, ...]
    kind: ComponentKind
    white_count: int
    blue_count: int

    @property
    def order(self) -> int:
        return len(self.vertices)


class ResidualState:
    """Immutable snapshot of the game: per-vertex colors plus the played order.

    The dominated mask and weight sum are computed once at construction;
    components are computed on first use and memoized. Callers treat
    instances as values: apply_move returns a new state.
    """

    __slots__ = ("graph", "colors", "played", "dominated_mask", "f",
                 "_components", "_comp_index")

    def __init__(self, graph: Graph, colors: tuple[Color, ...], played: tuple[int, ...]):
        self.graph = graph
        self.colors = colors
        self.played = played
        dom = 0
        f = 0
        for v, c in enumerate(colors):
            if c is not Color.WHITE:
                dom |= 1 << v
            f += WEIGHT[c]
        self.dominated_mask = dom
        self.f = f
        self._components: tuple[Component, ...] | None = None
        self._comp_index: tuple[int, ...] | None = None

    def components(self) -> tuple[Component, ...]:
        if self._components is None:
            self._build_components()
        return self._components

    def component_index(self) -> tuple[int, ...]:
        """component_index()[v] is v's position in components()."""
        if self._comp_index is None:
            self._build_components()
        return self._comp_index

    def _build_components(self) -> None:
        g, colors = self.graph, self.colors
        comp_id = [-1] * g.n
        comps: list[Component] = []
        for start in range(g.n):
            if comp_id[start] >= 0:
                continue
            cid = len(comps)
            comp_id[start] = cid
            members = [start]
            stack = [start]
            while stack:
                u = stack.pop()
                u_white = colors[u] is Color.WHITE
                for w in g.adjacency[u]:
                    # only edges touching a white vertex are retained
                    if comp_id[w] < 0 and (u_white or colors[w] is Color.WHITE):
                        comp_id[w] = cid
                        members.append(w)
                        stack.append(w)
            members.sort()
            comps.append(self._make_component(tuple(members)))
        self._components = tuple(comps)
        self._comp_index = tuple(comp_id)

    def _make_component(self, vertices: tuple[int, ...]) -> Component:
        colors = self.colors
        wc = sum(1 for v in vertices if colors[v] is Color.WHITE)
        bc = sum(1 for v in vertices if colors[v] in BLUE_SHADES)
        order = len(vertices)
        if order == 1:
            kind = ComponentKind.ISOLATED_RED if colors[vertices[0]] is Color.RED else ComponentKind.OTHER
        elif order == 2 and wc == 2:
            kind = ComponentKind.WW
        elif order == 2 and wc == 1 and bc == 1:
            b = vertices[0] if colors[vertices[0]] in BLUE_SHADES else vertices[1]
            kind = ComponentKind.WB_PLUS if colors[b] is Color.LIGHT_BLUE else ComponentKind.WB_MINUS
        elif order == 3 and wc == 1 and bc == 2:
            kind = ComponentKind.BWB
        else:
            kind = ComponentKind.OTHER
        return Component(vertices, kind, wc, bc)

    def snapshot(self) -> str:
        """One line per vertex: "<id> <W|LB|DB|R>"."""
        return "\n".join(f"{v} {COLOR_CODE[c]}" for v, c in enumerate(self.colors)) + "\n"

    def snapshot_hash(self) -> str:
        return hashlib.sha256(self.snapshot().encode()).hexdigest()[:12]


def init_state(g: Graph) -> ResidualState:
    """All-white opening state; the weight sum starts at 5n."""
    if not g.is_isolate_free():
        raise ValueError("the game needs an isolate-free graph (min degree >= 1)")
    return ResidualState(g, (Color.WHITE,) * g.n, ())


def parse_snapshot(g: Graph, text: str) -> ResidualState:
    """Rebuild a state from its snapshot listing (played order is not stored)."""
    colors: list[Color | None] = [None] * g.n
    for ln in text.splitlines():
        if not ln.strip():
            continue
        v_str, code = ln.split(" ")
        colors[int(v_str)] = _CODE_TO_COLOR[code]
    if any(c is None for c in colors):
        raise ValueError("snapshot does not cover every vertex")
    return ResidualState(g, tuple(colors), ())


def legal_moves(s: ResidualState) -> list[int]:
    """Playable vertices in ascending order: exactly the non-red ones."""
    return [v for v in range(s.graph.n) if s.colors[v] is not Color.RED]


def is_over(s: ResidualState) -> bool:
    return s.f == 0  # weight 0 iff every vertex is red iff nothing is playable


def apply_move(s: ResidualState, v: int, shade: Color) -> ResidualState:
    """Play v: the dominated set grows by N[v], colors are recomputed.

    Vertices turning blue with this move take `shade`; already-blue vertices
    keep theirs. Colors only ever move forward (white -> blue -> red).
    """
    if shade not in BLUE_SHADES:
        raise ValueError("shade must be LIGHT_BLUE or DARK_BLUE")
    colors = s.colors
    if not 0 <= v < s.graph.n or colors[v] is Color.RED:
        raise IllegalMoveError(f"vertex {v} cannot be played")
    masks = s.graph.closed_masks
    new_dom = s.dominated_mask | masks[v]
    new_colors = []
    for u in range(s.graph.n):
        if not (new_dom >> u) & 1:
            new_colors.append(Color.WHITE)
        elif masks[u] & ~new_dom == 0:
            new_colors.append(Color.RED)
        elif colors[u] is Color.WHITE:
            new_colors.append(shade)
        else:
            new_colors.append(colors[u])
    return ResidualState(s.graph, tuple(new_colors), s.played + (v,))


def f_value(s: ResidualState) -> int:
    return s.f


def f_decrease(s: ResidualState, v: int, shade: Color) -> int:
    """Weight-sum drop if v were played now; strictly positive for legal v."""
    return s.f - apply_move(s, v, shade).f


def white_degree(s: ResidualState, v: int) -> int:
    colors = s.colors
    return sum(1 for w in s.graph.adjacency[v] if colors[w] is Color.WHITE)


def classify_components(s: ResidualState) -> tuple[Component, ...]:
    """Components over retained edges; red vertices come back as singletons."""
    return s.components()


def retained_edges(s: ResidualState) -> tuple[tuple[int, int], ...]:
    colors = s.colors
    return tuple((u, w) for u, w in s.graph.edges
                 if colors[u] is Color.WHITE or colors[w] is Color.WHITE)
