"""Core graph representation, standard families and constructions.

Graphs are labeled simple undirected graphs on vertices 0..n-1 with
1 <= n <= 10, stored as an immutable boolean adjacency matrix.  All
operations are pure; nothing here mutates a graph after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .bits import n_bits, pack_mask, pair_list, unpack_adj
from .errors import (
    BadParamsError,
    BadRootError,
    DisconnectedError,
    EmptySetError,
    OutOfRangeError,
    SelfLoopError,
    OrderTooLargeError,
)

MAX_ORDER = 10


class Graph:
    """Labeled simple undirected graph; equality and hashing are label-sensitive.

    `mask` packs the upper adjacency triangle in column-major pair order
    (the graph6 bit order); certificates and the codec work on it directly.
    """

    __slots__ = ("n", "adj", "_mask", "_cert")

    def __init__(self, adj: np.ndarray):
        adj = np.asarray(adj, dtype=bool).copy()
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise BadParamsError("adjacency matrix must be square")
        n = int(adj.shape[0])
        if n < 1 or n > MAX_ORDER:
            raise OrderTooLargeError(f"order {n} outside supported range 1..{MAX_ORDER}")
        if bool(adj.diagonal().any()):
            raise SelfLoopError("adjacency has a nonzero diagonal entry")
        if not np.array_equal(adj, adj.T):
            raise BadParamsError("adjacency matrix must be symmetric")
        adj.setflags(write=False)
        self.n = n
        self.adj = adj
        self._mask: int | None = None
        self._cert = None

    @property
    def mask(self) -> int:
        if self._mask is None:
            self._mask = pack_mask(self.adj)
        return self._mask

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adj)) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for (i, j) in pair_list(self.n) if self.adj[i, j]]

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=0).astype(np.int64)

    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency rows packed as integer bitsets."""
        weights = 1 << np.arange(self.n, dtype=np.int64)
        return tuple(int(x) for x in (self.adj @ weights))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if n < 1 or n > MAX_ORDER:
        raise OrderTooLargeError(f"order {n} outside supported range 1..{MAX_ORDER}")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        adj[u, v] = adj[v, u] = True
    return Graph(adj)


def from_mask(n: int, mask: int) -> Graph:
    if mask < 0 or mask >> n_bits(n):
        raise BadParamsError(f"mask {mask} does not fit order {n}")
    return Graph(unpack_adj(n, mask))


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Rename vertex i to perm[i]."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise BadParamsError("not a permutation of 0..n-1")
    inv = np.empty(g.n, dtype=np.int64)
    inv[p] = np.arange(g.n)
    return Graph(g.adj[np.ix_(inv, inv)])


def is_connected(g: Graph) -> bool:
    rows = g.neighbor_masks()
    reach, prev = 1, 0
    while reach != prev:
        prev = reach
        for i in range(g.n):
            if (reach >> i) & 1:
                reach |= rows[i]
    return reach == (1 << g.n) - 1


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    rows = g.neighbor_masks()
    comps = []
    todo = (1 << g.n) - 1
    while todo:
        start = (todo & -todo).bit_length() - 1
        reach, prev = 1 << start, 0
        while reach != prev:
            prev = reach
            for i in range(g.n):
                if (reach >> i) & 1:
                    reach |= rows[i]
        comps.append(tuple(i for i in range(g.n) if (reach >> i) & 1))
        todo &= ~reach
    return comps


def distance_matrix(g: Graph) -> np.ndarray:
    """Shortest-walk lengths between all vertex pairs (BFS per source)."""
    n = g.n
    rows = g.neighbor_masks()
    dist = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        seen = 1 << s
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for i in range(n):
                if (frontier >> i) & 1:
                    nxt |= rows[i]
            frontier = nxt & ~seen
            for i in range(n):
                if (frontier >> i) & 1:
                    dist[s, i] = d
            seen |= frontier
        if seen != (1 << n) - 1:
            raise DisconnectedError("distance matrix requires a connected graph")
    return dist


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())


# ---------------------------------------------------------------------------
# graph families


@dataclass(frozen=True)
class FamilySpec:
    """Tagged family description: kind plus integer parameters.

    Kinds: path(n), cycle(n), complete(n), star(m) [= K_{m,1}],
    multipartite(m1>=...>=mk), wedge(n, m) [K_n with an apex on m of its
    vertices], knp4(n) [K_n minus the three edges of a path on 4 vertices].
    """

    kind: str
    params: tuple[int, ...]

    _KINDS = ("path", "cycle", "complete", "star", "multipartite", "wedge", "knp4")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise BadParamsError(f"unknown family kind {self.kind!r}")
        p = tuple(int(x) for x in self.params)
        object.__setattr__(self, "params", p)
        if any(x < 1 for x in p):
            raise BadParamsError(f"{self.kind}: parameters must be positive")
        if self.kind in ("path", "complete", "star") and len(p) != 1:
            raise BadParamsError(f"{self.kind} takes a single parameter")
        if self.kind == "cycle" and (len(p) != 1 or p[0] < 3):
            raise BadParamsError("cycle needs one parameter >= 3")
        if self.kind == "multipartite":
            if len(p) < 2:
                raise BadParamsError("multipartite needs at least two parts")
            if list(p) != sorted(p, reverse=True):
                raise BadParamsError("multipartite parts must be sorted descending")
        if self.kind == "wedge":
            if len(p) != 2 or not 1 <= p[1] <= p[0]:
                raise BadParamsError("wedge needs parameters n, m with 1 <= m <= n")
        if self.kind == "knp4" and (len(p) != 1 or p[0] < 5):
            raise BadParamsError("knp4 needs one parameter >= 5")

    @property
    def order(self) -> int:
        if self.kind in ("path", "cycle", "complete", "knp4"):
            return self.params[0]
        if self.kind == "star":
            return self.params[0] + 1
        if self.kind == "wedge":
            return self.params[0] + 1
        return sum(self.params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse a compact spec like "path:6", "multipartite:3,2" or "wedge:5,2"."""
        kind, sep, rest = text.strip().partition(":")
        if not sep or not rest:
            raise BadParamsError(f"cannot parse family spec {text!r}")
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError as exc:
            raise BadParamsError(f"cannot parse family spec {text!r}") from exc
        return cls(kind.strip(), params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(str(x) for x in self.params)}"


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def star(m: int) -> FamilySpec:
    return FamilySpec("star", (m,))


def multipartite(*parts: int) -> FamilySpec:
    return FamilySpec("multipartite", tuple(parts))


def wedge(n: int, m: int) -> FamilySpec:
    return FamilySpec("wedge", (n, m))


def knp4(n: int) -> FamilySpec:
    return FamilySpec("knp4", (n,))


def build_family(spec: FamilySpec) -> Graph:
    """Canonical labeled realization of a family member.

    Labeling conventions (fixed so graph6 output is reproducible):
    multipartite parts occupy consecutive labels in the given order; the
    wedge apex is vertex n, glued to complete-graph vertices 0..m-1; knp4
    deletes the edges {0,1},{1,2},{2,3} of K_n.
    """
    kind, p = spec.kind, spec.params
    if kind == "path":
        return from_edges(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if kind == "cycle":
        return from_edges(p[0], [(i, (i + 1) % p[0]) for i in range(p[0])])
    if kind == "complete":
        n = p[0]
        return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == "star":
        m = p[0]
        return from_edges(m + 1, [(i, m) for i in range(m)])
    if kind == "multipartite":
        bounds = np.cumsum((0,) + p)
        part_of = np.zeros(bounds[-1], dtype=int)
        for k in range(len(p)):
            part_of[bounds[k]:bounds[k + 1]] = k
        n = int(bounds[-1])
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if part_of[i] != part_of[j]]
        return from_edges(n, edges)
    if kind == "wedge":
        n, m = p
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges += [(i, n) for i in range(m)]
        return from_edges(n + 1, edges)
    if kind == "knp4":
        n = p[0]
        deleted = {(0, 1), (1, 2), (2, 3)}
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in deleted]
        return from_edges(n, edges)
    raise BadParamsError(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------------------
# constructions


def compose(kind: str, g1: Graph, g2: Graph,
            roots: tuple[int, int] | None = None) -> Graph:
    """Cartesian product, star product (glue at roots) or graph join."""
    if kind == "cartesian":
        n1, n2 = g1.n, g2.n
        if n1 * n2 > MAX_ORDER:
            raise OrderTooLargeError(f"product has {n1 * n2} vertices (max {MAX_ORDER})")
        adj = np.zeros((n1 * n2, n1 * n2), dtype=bool)
        for x1 in range(n1):
            for y1 in range(n2):
                for x2 in range(n1):
                    for y2 in range(n2):
                        if (x1 == x2 and g2.adj[y1, y2]) or (g1.adj[x1, x2] and y1 == y2):
                            adj[x1 * n2 + y1, x2 * n2 + y2] = True
        return Graph(adj)
    if kind == "star":
        if roots is None:
            raise BadRootError("star product requires roots=(o1, o2)")
        o1, o2 = roots
        if not 0 <= o1 < g1.n:
            raise BadRootError(f"root {o1} not a vertex of the first factor")
        if not 0 <= o2 < g2.n:
            raise BadRootError(f"root {o2} not a vertex of the second factor")
        n = g1.n + g2.n - 1
        if n > MAX_ORDER:
            raise OrderTooLargeError(f"star product has {n} vertices (max {MAX_ORDER})")
        # g1 keeps its labels; g2's non-root vertices follow in order, o2 -> o1
        other = [v for v in range(g2.n) if v != o2]
        lift = {v: g1.n + k for k, v in enumerate(other)}
        lift[o2] = o1
        edges = g1.edges() + [(lift[u], lift[v]) for u, v in g2.edges()]
        return from_edges(n, edges)
    if kind == "join":
        n1, n2 = g1.n, g2.n
        if n1 + n2 > MAX_ORDER:
            raise OrderTooLargeError(f"join has {n1 + n2} vertices (max {MAX_ORDER})")
        edges = g1.edges() + [(n1 + u, n1 + v) for u, v in g2.edges()]
        edges += [(u, n1 + v) for u in range(n1) for v in range(n2)]
        return from_edges(n1 + n2, edges)
    raise BadParamsError(f"unknown composition kind {kind!r}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    if g1.n + g2.n > MAX_ORDER:
        raise OrderTooLargeError(f"union has {g1.n + g2.n} vertices (max {MAX_ORDER})")
    edges = g1.edges() + [(g1.n + u, g1.n + v) for u, v in g2.edges()]
    return from_edges(g1.n + g2.n, edges)


def complement(g: Graph) -> Graph:
    adj = ~g.adj.copy()
    np.fill_diagonal(adj, False)
    return Graph(adj)


def add_apex(g: Graph, attach: Iterable[int]) -> Graph:
    """New vertex n adjacent to exactly the given vertex set."""
    S = sorted(set(attach))
    if not S:
        raise EmptySetError("apex must attach to a non-empty vertex set")
    if S[0] < 0 or S[-1] >= g.n:
        raise OutOfRangeError(f"attach set {S} outside 0..{g.n - 1}")
    if g.n + 1 > MAX_ORDER:
        raise OrderTooLargeError(f"apex graph has {g.n + 1} vertices (max {MAX_ORDER})")
    return from_edges(g.n + 1, g.edges() + [(v, g.n) for v in S])


def induced_subgraph(g: Graph, subset: Iterable[int]) -> Graph:
    """Subgraph induced on the subset, relabeled 0..|S|-1 preserving order."""
    S = sorted(set(subset))
    if not S:
        raise EmptySetError("induced subgraph of an empty set")
    if S[0] < 0 or S[-1] >= g.n:
        raise OutOfRangeError(f"subset {S} outside 0..{g.n - 1}")
    idx = np.array(S, dtype=np.int64)
    return Graph(g.adj[np.ix_(idx, idx)])


def find_pendant_edge(g: Graph) -> tuple[int, int, int, int] | None:
    """Least witness (a, b, a', b') with a~a'~b'~b~a and deg(a') = deg(b') = 2."""
    deg = g.degrees()
    adj = g.adj
    n = g.n
    for a in range(n):
        for b in range(n):
            if b == a or not adj[a, b]:
                continue
            for ap in range(n):
                if ap in (a, b) or not adj[a, ap] or deg[ap] != 2:
                    continue
                for bp in range(n):
                    if bp in (a, b, ap) or deg[bp] != 2:
                        continue
                    if adj[ap, bp] and adj[bp, b]:
                        return (a, b, ap, bp)
    return None
