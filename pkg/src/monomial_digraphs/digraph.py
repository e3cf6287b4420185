"""Monomial digraphs on GF(q)^2 and the generic digraph algorithms.

Vertex (x1, x2) gets id x1 * q + x2.  There is an arc
(x1, x2) -> (y1, y2) exactly when x2 + y2 = x1^m * y1^n, so every vertex
has out-degree and in-degree q.
"""

import math
from dataclasses import dataclass

from .field import Field

DEFAULT_CYCLE_BUDGET = 10 ** 8


class BudgetExceededError(Exception):
    """A work budget ran out before the computation finished."""


@dataclass(frozen=True)
class MonomialParams:
    q: int
    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m <= self.q - 1 and 1 <= self.n <= self.q - 1):
            raise ValueError(
                f"require 1 <= m, n <= q-1, got (q, m, n) = "
                f"({self.q}, {self.m}, {self.n})")


class Digraph:
    """Materialized adjacency; immutable after construction.

    `field` and `params` are set for monomial digraphs and carried through
    reverse(), so invariant code can recover (q, m, n).
    """

    def __init__(self, adjacency, field=None, params=None):
        self.adj = [sorted(set(nbrs)) for nbrs in adjacency]
        self.n = len(self.adj)
        self.field = field
        self.params = params
        self._radj = None

    @property
    def radj(self):
        """In-neighbor lists, built on first use."""
        if self._radj is None:
            radj = [[] for _ in range(self.n)]
            for u, nbrs in enumerate(self.adj):
                for v in nbrs:
                    radj[v].append(u)
            self._radj = radj
        return self._radj

    def arc_count(self):
        return sum(len(nbrs) for nbrs in self.adj)

    def has_arc(self, u, v):
        nbrs = self.adj[u]
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def arcs(self):
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                yield u, v


def build_monomial(field: Field, m: int, n: int) -> Digraph:
    """Build D(q; m, n): arc (x1,x2)->(y1,y2) iff x2 + y2 = x1^m * y1^n."""
    q = field.q
    params = MonomialParams(q, m, n)
    xm = [field.pow(x, m) for x in range(q)]
    yn = [field.pow(y, n) for y in range(q)]
    adj = []
    for x1 in range(q):
        for x2 in range(q):
            row = []
            for y1 in range(q):
                y2 = field.sub(field.mul(xm[x1], yn[y1]), x2)
                row.append(y1 * q + y2)
            row.sort()
            adj.append(row)
    return Digraph(adj, field=field, params=params)


def reverse(D: Digraph) -> Digraph:
    params = None
    if D.params is not None:
        params = MonomialParams(D.params.q, D.params.n, D.params.m)
    return Digraph(D.radj, field=D.field, params=params)


@dataclass(frozen=True)
class BipartiteCover:
    """Two copies X, Y of the vertex set; x ~ y iff x -> y in D."""

    n: int                 # size of each class
    edges: tuple           # sorted (x, y) pairs, ids within each class

    def degree_x(self, x):
        return sum(1 for (u, _) in self.edges if u == x)

    def degree_y(self, y):
        return sum(1 for (_, v) in self.edges if v == y)


def bipartite_cover(D: Digraph) -> BipartiteCover:
    return BipartiteCover(n=D.n, edges=tuple(sorted(D.arcs())))


def strong_components(D: Digraph):
    """Strongly connected components, ordered by smallest member id.

    Iterative Tarjan; each component is a sorted list of vertex ids.
    """
    index = [-1] * D.n
    lowlink = [0] * D.n
    on_stack = [False] * D.n
    stack = []
    comps = []
    counter = 0

    for root in range(D.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = lowlink[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            nbrs = D.adj[v]
            while pi < len(nbrs):
                w = nbrs[pi]
                pi += 1
                if index[w] == -1:
                    work.append((v, pi))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    lowlink[v] = min(lowlink[v], index[w])
            if recurse:
                continue
            if lowlink[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
    comps.sort(key=lambda c: c[0])
    return comps


def _bfs_dists(D: Digraph, src: int):
    dist = [-1] * D.n
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            du = dist[u] + 1
            for v in D.adj[u]:
                if dist[v] == -1:
                    dist[v] = du
                    nxt.append(v)
        frontier = nxt
    return dist


def diameter(D: Digraph, restrict_to_component: bool = False):
    """Max over ordered vertex pairs of shortest-path length.

    Returns math.inf when some pair is unreachable and
    restrict_to_component is false; with the restriction, the max is taken
    within strong components only.
    """
    if restrict_to_component:
        comp_of = [0] * D.n
        for i, comp in enumerate(strong_components(D)):
            for v in comp:
                comp_of[v] = i
        best = 0
        for u in range(D.n):
            dist = _bfs_dists(D, u)
            for v in range(D.n):
                if comp_of[v] == comp_of[u] and dist[v] > best:
                    best = dist[v]
        return best
    best = 0
    for u in range(D.n):
        dist = _bfs_dists(D, u)
        for d in dist:
            if d == -1:
                return math.inf
            if d > best:
                best = d
    return best


def count_cycles_by_length(D: Digraph, L: int,
                           budget: int = DEFAULT_CYCLE_BUDGET):
    """Counts of directed cycles per length 1..L.

    Cycles are vertex sequences up to rotation (a cycle and its reverse are
    distinct unless identical).  Each cycle is counted once, at its minimal
    vertex.  Raises BudgetExceededError past `budget` extension steps.
    """
    if L < 1:
        raise ValueError("L must be >= 1")
    counts = [0] * L
    steps = 0
    in_path = [False] * D.n
    for root in range(D.n):
        # DFS over simple paths root -> ... using only vertices >= root
        path_len = 1
        in_path[root] = True
        stack = [iter(D.adj[root])]
        while stack:
            it = stack[-1]
            advanced = False
            for v in it:
                steps += 1
                if steps > budget:
                    raise BudgetExceededError(
                        f"cycle enumeration exceeded {budget} steps")
                if v == root:
                    counts[path_len - 1] += 1
                    continue
                if v < root or in_path[v] or path_len >= L:
                    continue
                in_path[v] = True
                path_len += 1
                stack.append(_FrameIter(D.adj[v], v))
                advanced = True
                break
            if not advanced:
                frame = stack.pop()
                if isinstance(frame, _FrameIter):
                    in_path[frame.vertex] = False
                    path_len -= 1
        in_path[root] = False
    return counts


class _FrameIter:
    """Iterator over a neighbor list that remembers its owning vertex."""

    __slots__ = ("vertex", "_it")

    def __init__(self, nbrs, vertex):
        self.vertex = vertex
        self._it = iter(nbrs)

    def __iter__(self):
        return self._it

    def __next__(self):
        return next(self._it)


def _vertex_label(vid: int, q: int):
    return vid // q, vid % q


def export(D: Digraph, fmt: str = "arcs-text") -> str:
    """Serialize a q^2-vertex digraph.

    arcs-text: one arc per line "x1,x2 -> y1,y2", sorted by (tail, head),
    LF endings.  dot: standard digraph with "(x1,x2)" vertex labels.
    """
    q = math.isqrt(D.n)
    if q * q != D.n:
        raise ValueError("export requires a q^2-vertex digraph")
    if fmt == "arcs-text":
        lines = []
        for u, v in D.arcs():
            x1, x2 = _vertex_label(u, q)
            y1, y2 = _vertex_label(v, q)
            lines.append(f"{x1},{x2} -> {y1},{y2}")
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        lines = ["digraph D {"]
        for vid in range(D.n):
            x1, x2 = _vertex_label(vid, q)
            lines.append(f'  v{vid} [label="({x1},{x2})"];')
        for u, v in D.arcs():
            lines.append(f"  v{u} -> v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}")
