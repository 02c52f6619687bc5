"""Core graph type, generators, and distance queries.

Vertices are always the integers 0..n-1.  Graphs are simple, undirected,
and immutable once built; adjacency lists are kept sorted so that every
traversal in the package is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphError

VertexSet = frozenset[int]

UNREACHED = -1


class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1."""

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
            m += 1
        self.n = n
        self._m = m
        self._adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(ns)) for ns in adj
        )

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self._adj[u], self._adj[v]
        if len(b) < len(a):
            a, v = b, u
        return v in a

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class PathDecoration:
    """An ordered vertex list realizing a simple path in some host graph."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def check_in(self, g: Graph) -> None:
        vs = self.vertices
        if not vs:
            raise GraphError("empty path")
        if len(set(vs)) != len(vs):
            raise GraphError("path repeats a vertex")
        for v in vs:
            if not 0 <= v < g.n:
                raise GraphError(f"path vertex {v} outside host graph")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"path step {a}-{b} is not an edge")


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals, one per vertex id; overlap means adjacency."""

    intervals: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for i, (lo, hi) in enumerate(self.intervals):
            if lo > hi:
                raise GraphError(f"interval {i} has left {lo} > right {hi}")

    def __len__(self) -> int:
        return len(self.intervals)


# --- generators ---------------------------------------------------------


def build_path(n: int) -> Graph:
    """Path on n vertices: 0-1-...-(n-1)."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def build_grid(rows: int, cols: int) -> Graph:
    """rows x cols grid; cell (r, c) is vertex r*cols + c, 4-neighborhood."""
    if rows < 1 or cols < 1:
        raise GraphError(f"grid needs positive sides, got {rows}x{cols}")
    edges: list[tuple[int, int]] = []
    for r in range(rows):
        base = r * cols
        for c in range(cols):
            v = base + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def build_path_forest(lengths: Sequence[int]) -> Graph:
    """Disjoint union of paths with the given orders, ids consecutive."""
    if not lengths:
        raise GraphError("path forest needs at least one component")
    for t in lengths:
        if t < 1:
            raise GraphError(f"component order must be >= 1, got {t}")
    edges: list[tuple[int, int]] = []
    base = 0
    for t in lengths:
        edges.extend((base + i, base + i + 1) for i in range(t - 1))
        base += t
    return Graph(base, edges)


def build_comb(spine: int) -> Graph:
    """Path of the given order with one leaf on every interior vertex.

    Spine ids run 0..spine-1 in path order; leaf ids follow, attached to
    hosts 1, 2, ..., spine-2 in that order.
    """
    if spine < 1:
        raise GraphError(f"comb needs a positive spine, got {spine}")
    edges = [(i, i + 1) for i in range(spine - 1)]
    edges.extend((h, spine + h - 1) for h in range(1, spine - 1))
    return Graph(spine + max(0, spine - 2), edges)


def build_interval_graph(rep: IntervalRepresentation) -> Graph:
    """Intersection graph of closed intervals: edge iff the intervals meet."""
    n = len(rep)
    if n < 1:
        raise GraphError("interval representation is empty")
    order = sorted(range(n), key=lambda i: (rep.intervals[i][0], i))
    active: list[int] = []  # ids whose interval may still overlap later ones
    edges: list[tuple[int, int]] = []
    for i in order:
        lo, _ = rep.intervals[i]
        active = [j for j in active if rep.intervals[j][1] >= lo]
        edges.extend((j, i) for j in active)
        active.append(i)
    return Graph(n, edges)


def build_permutation_graph(size: int, perm: Sequence[int]) -> Graph:
    """Inversion graph of a permutation of 1..size.

    Vertex i-1 stands for value i; values i < j are adjacent exactly when
    j appears before i in the permutation.
    """
    if size < 1:
        raise GraphError(f"permutation graph needs size >= 1, got {size}")
    if len(perm) != size or sorted(perm) != list(range(1, size + 1)):
        raise GraphError(f"not a permutation of 1..{size}")
    pos = [0] * (size + 1)
    for idx, value in enumerate(perm):
        pos[value] = idx
    edges: list[tuple[int, int]] = []
    for i in range(1, size + 1):
        pi = pos[i]
        for j in range(i + 1, size + 1):
            if pos[j] < pi:
                edges.append((i - 1, j - 1))
    return Graph(size, edges)


# --- distance queries ---------------------------------------------------


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Distance from the nearest source, UNREACHED where disconnected."""
    dist = [UNREACHED] * g.n
    q: deque[int] = deque()
    for s in sources:
        if not 0 <= s < g.n:
            raise GraphError(f"source {s} out of range for n={g.n}")
        if dist[s] == UNREACHED:
            dist[s] = 0
            q.append(s)
    if not q:
        raise GraphError("no sources given")
    adj = g.adjacency
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHED:
                dist[w] = du
                q.append(w)
    return dist


def ball(g: Graph, around: Iterable[int], radius: int) -> VertexSet:
    """All vertices within the given hop distance of the seed set."""
    if radius < 0:
        raise GraphError(f"radius must be >= 0, got {radius}")
    seeds = list(around)
    if not seeds:
        raise GraphError("ball needs a nonempty seed set")
    dist = [UNREACHED] * g.n
    q: deque[int] = deque()
    for s in seeds:
        if not 0 <= s < g.n:
            raise GraphError(f"seed {s} out of range for n={g.n}")
        if dist[s] == UNREACHED:
            dist[s] = 0
            q.append(s)
    out = set(q)
    adj = g.adjacency
    while q:
        u = q.popleft()
        du = dist[u] + 1
        if du > radius:
            break
        for w in adj[u]:
            if dist[w] == UNREACHED:
                dist[w] = du
                out.add(w)
                q.append(w)
    return frozenset(out)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted id lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    q.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def radical_center(g: Graph) -> int:
    """Vertex of minimum eccentricity; smallest id wins ties."""
    if not is_connected(g):
        raise GraphError("radical center needs a connected graph")
    best_v = 0
    best_ecc = None
    for v in range(g.n):
        ecc = max(bfs_distances(g, (v,)))
        if best_ecc is None or ecc < best_ecc:
            best_v, best_ecc = v, ecc
    return best_v


def longest_shortest_path(g: Graph) -> PathDecoration:
    """A shortest path realizing the diameter.

    Deterministic choice: the endpoint with the smallest id among all
    diametral pairs starts the path, and among shortest paths from it the
    lexicographically smallest vertex list is returned.
    """
    if not is_connected(g):
        raise GraphError("diametral path needs a connected graph")
    diam = 0
    start = 0
    for v in range(g.n):
        ecc = max(bfs_distances(g, (v,)))
        if ecc > diam:
            diam, start = ecc, v
    # smallest endpoint id over all diametral pairs
    for v in range(start):
        if max(bfs_distances(g, (v,))) == diam:
            start = v
            break
    du = bfs_distances(g, (start,))
    # mark vertices that extend to a full-depth shortest path
    layers: list[list[int]] = [[] for _ in range(diam + 1)]
    for v in range(g.n):
        if 0 <= du[v] <= diam:
            layers[du[v]].append(v)
    good = [False] * g.n
    for v in layers[diam]:
        good[v] = True
    for depth in range(diam - 1, -1, -1):
        for v in layers[depth]:
            good[v] = any(du[w] == depth + 1 and good[w] for w in g.adjacency[v])
    path = [start]
    while du[path[-1]] < diam:
        here = path[-1]
        nxt = min(
            w for w in g.adjacency[here] if du[w] == du[here] + 1 and good[w]
        )
        path.append(nxt)
    return PathDecoration(tuple(path))


# --- text formats -------------------------------------------------------


def write_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("graph text must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"unparsable graph text: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header claims {m} edges, found {len(edges)}")
    for u, v in edges:
        if not u < v:
            raise GraphError(f"edge lines must have u < v, got {u} {v}")
    return Graph(n, edges)


def write_intervals(rep: IntervalRepresentation) -> str:
    lines = [
        f"{i} {lo} {hi}" for i, (lo, hi) in enumerate(rep.intervals)
    ]
    return "\n".join(lines) + "\n"


def read_intervals(text: str) -> IntervalRepresentation:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise GraphError("interval text is empty")
    spans: dict[int, tuple[int, int]] = {}
    try:
        for row in rows:
            ident, lo, hi = (int(x) for x in row)
            spans[ident] = (lo, hi)
    except ValueError as exc:
        raise GraphError(f"unparsable interval text: {exc}") from None
    n = len(rows)
    if sorted(spans) != list(range(n)):
        raise GraphError("interval ids must be exactly 0..n-1, once each")
    return IntervalRepresentation(tuple(spans[i] for i in range(n)))
