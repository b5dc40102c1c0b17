"""Immutable simple graphs, edge-list I/O, and deterministic corpus generators.

Vertex ids are dense integers 0..n-1; downstream bitmask encodings rely on
this. Every random generator draws from numpy's Philox counter-based bit
generator keyed by an explicit seed, so a corpus graph is reproducible from
(parameters, seed) alone.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import ParseError


def philox_rng(seed: int) -> np.random.Generator:
    """Seeded Philox (4x64 counter-based) generator; the package-wide PRNG."""
    if seed < 0:
        raise ValueError("seed must be non-negative")
    return np.random.Generator(np.random.Philox(key=seed))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    No self-loops or parallel edges; adjacency is symmetric. Instances are
    immutable and safe to share between concurrent workers.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for u, nbrs in enumerate(self.adjacency):
            if any(w < 0 or w >= self.n for w in nbrs):
                raise ValueError(f"vertex {u}: neighbor id out of range")
            if u in nbrs:
                raise ValueError(f"vertex {u}: self-loop")
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"vertex {u}: parallel edge")
            if tuple(sorted(nbrs)) != tuple(nbrs):
                raise ValueError(f"vertex {u}: adjacency not sorted")
            for w in nbrs:
                if u not in self.adjacency[w]:
                    raise ValueError(f"edge {u}-{w} is not symmetric")

    @staticmethod
    def from_edges(n: int, edges: Sequence[tuple[int, int]]) -> "Graph":
        nbrs: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v}: vertex out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {u}-{v}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        return Graph(n, tuple(tuple(sorted(a)) for a in nbrs))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.n))

    def is_isolate_free(self) -> bool:
        return self.min_degree >= 1

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """closed_masks[v] is the bitmask of v together with its neighbors."""
        masks = []
        for v in range(self.n):
            m = 1 << v
            for w in self.adjacency[v]:
                m |= 1 << w
            masks.append(m)
        return tuple(masks)

    @cached_property
    def graph_hash(self) -> str:
        return hashlib.sha256(write_edge_list(self).encode()).hexdigest()[:12]


def parse_edge_list(text: str) -> Graph:
    """Parse the package's edge-list format.

    Line 1 is a header ``n m``; the next m lines are edges ``u v`` with
    0 <= u,v < n and u != v, tokens separated by single spaces. Duplicate
    edges and self-loops are rejected. Raises ParseError naming the
    offending 1-based line.
    """
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError(1, "missing header")
    head = lines[0].split(" ")
    if len(head) != 2:
        raise ParseError(1, f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(1, f"header must be two integers, got {lines[0]!r}") from None
    if n < 1 or m < 0:
        raise ParseError(1, f"invalid sizes n={n} m={m}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for i in range(m):
        lineno = i + 2
        if i + 1 >= len(lines):
            raise ParseError(lineno, f"expected {m} edges, file ends after {i}")
        parts = lines[i + 1].split(" ")
        if len(parts) != 2:
            raise ParseError(lineno, f"edge line must be 'u v', got {lines[i + 1]!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"edge line must be two integers, got {lines[i + 1]!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range: {u} {v} (n={n})")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    for extra_no, ln in enumerate(lines[m + 1:], start=m + 2):
        if ln.strip():
            raise ParseError(extra_no, f"unexpected content after {m} edges: {ln!r}")
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list: UTF-8 text, LF line endings."""
    out = [f"{g.n} {g.edge_count}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def gen_path(n: int) -> Graph:
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_star(n: int) -> Graph:
    """Star on n vertices: center 0 with n-1 leaves."""
    if n < 2:
        raise ValueError("a star needs at least 2 vertices")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def gen_caterpillar(spine: int, legs_per_spine: Sequence[int]) -> Graph:
    """Path of `spine` vertices with legs_per_spine[i] pendant leaves on each."""
    if spine < 1:
        raise ValueError("spine must have at least one vertex")
    if len(legs_per_spine) != spine:
        raise ValueError("legs_per_spine length must equal spine")
    if any(k < 0 for k in legs_per_spine):
        raise ValueError("leg counts must be non-negative")
    if spine == 1 and legs_per_spine[0] == 0:
        raise ValueError("a single spine vertex with no legs is an isolated vertex")
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i, k in enumerate(legs_per_spine):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree via a random Pruefer sequence; fixed by (n, seed)."""
    if n < 2:
        raise ValueError("a tree needs at least 2 vertices")
    if n == 2:
        return gen_path(2)
    rng = philox_rng(seed)
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    return Graph.from_edges(n, _tree_edges_from_pruefer(seq, n))


def _tree_edges_from_pruefer(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        for j in range(n):
            if degree[j] == 1:
                edges.append((j, x))
                degree[j] -= 1
                degree[x] -= 1
                break
    u, v = (j for j in range(n) if degree[j] == 1)
    edges.append((u, v))
    return edges


def gen_gnp_isolate_free(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample; isolated vertices are repaired in ascending order
    by attaching one edge to a uniformly random other vertex."""
    if n < 2:
        raise ValueError("need at least 2 vertices for an isolate-free graph")
    if not 0 < p <= 1:
        raise ValueError("p must satisfy 0 < p <= 1")
    rng = philox_rng(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                nbrs[u].add(v)
                nbrs[v].add(u)
    for v in range(n):
        if not nbrs[v]:
            u = int(rng.integers(0, n - 1))
            if u >= v:
                u += 1
            nbrs[v].add(u)
            nbrs[u].add(v)
    edges = [(u, v) for u in range(n) for v in nbrs[u] if u < v]
    return Graph.from_edges(n, edges)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on n vertices with min degree >= 1, once each.

    Capped at n <= 6: the candidate pool is 2^(n choose 2) edge subsets.
    """
    if not 2 <= n <= 6:
        raise ValueError("exhaustive enumeration supports 2 <= n <= 6")
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        degree = [0] * n
        edges = []
        for i, (u, v) in enumerate(pairs):
            if (bits >> i) & 1:
                degree[u] += 1
                degree[v] += 1
                edges.append((u, v))
        if all(d >= 1 for d in degree):
            yield Graph.from_edges(n, edges)
