"""Simple undirected graphs on dense integer labels, with the structural
transforms and classical connectivity parameters the rest of the package
builds on.

Vertices are 0..n-1. Adjacency is kept as one bitmask per vertex, so
neighborhood queries and set intersections are single word operations for
the graph sizes this package targets (n <= 64). Graphs are immutable.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class EdgeListParseError(ValueError):
    """Base class for edge-list document errors."""


class MalformedHeaderError(EdgeListParseError):
    pass


class VertexRangeError(EdgeListParseError):
    pass


class SelfLoopError(EdgeListParseError):
    pass


class DuplicateEdgeError(EdgeListParseError):
    pass


class Graph6Error(ValueError):
    """Raised for malformed or unsupported graph6 input."""


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the neighbor bitmask of vertex ``v`` (bit ``u`` set iff
    ``uv`` is an edge). Self-loops and multi-edges are rejected on
    construction; duplicate mentions of the same edge are idempotent here
    (the strict duplicate check lives in the parser, where it is a format
    violation).
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError(f"graph order must be at least 1, got {n}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(masks))
        object.__setattr__(self, "_hash", hash((n, self.adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- basic queries ------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.n))

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- structural helpers -------------------------------------------

    def is_connected(self) -> bool:
        return self.reachable_from(0) == self.full_mask()

    def reachable_from(self, start: int) -> int:
        seen = 1 << start
        frontier = seen
        adj = self.adj
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def connected_in(self, mask: int) -> bool:
        """True iff the subgraph induced by the vertex mask is connected.

        The empty mask counts as connected (vacuous).
        """
        if mask == 0:
            return True
        adj = self.adj
        comp = mask & -mask
        frontier = comp
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~comp
            comp |= frontier
        return comp == mask

    def is_complete(self) -> bool:
        return all(self.degree(v) == self.n - 1 for v in range(self.n))

    def complement(self) -> "Graph":
        """Graph on the same vertices whose edges are exactly the non-edges."""
        full = self.full_mask()
        g = Graph.__new__(Graph)
        masks = tuple((full & ~self.adj[v]) & ~(1 << v) for v in range(self.n))
        object.__setattr__(g, "n", self.n)
        object.__setattr__(g, "adj", masks)
        object.__setattr__(g, "_hash", hash((self.n, masks)))
        return g

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        es = [(a, b) for a, b in self.edges() if {a, b} != {u, v}]
        return Graph(self.n, es)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# -- parsing and serialization -----------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list document format.

    First non-comment line is ``n m``; then exactly ``m`` lines ``u v``.
    Lines starting with ``#`` are comments. Edges are normalized to
    ``u < v``; a repeated pair is a DuplicateEdgeError, ``u == v`` a
    SelfLoopError, ids outside ``0..n-1`` a VertexRangeError.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in lines if ln and not ln.startswith("#")]
    if not rows:
        raise MalformedHeaderError("empty document")
    head = rows[0].split()
    if len(head) != 2:
        raise MalformedHeaderError(f"expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise MalformedHeaderError(f"non-integer header {rows[0]!r}") from None
    if n < 1 or m < 0:
        raise MalformedHeaderError(f"invalid header values n={n} m={m}")
    body = rows[1:]
    if len(body) != m:
        raise MalformedHeaderError(f"header declares {m} edges, document has {len(body)}")
    seen = set()
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedHeaderError(f"expected edge line 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedHeaderError(f"non-integer edge line {ln!r}") from None
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex out of range in edge ({u}, {v}) for n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph in graph6 format (read-only corpus support).

    Only the short form (n <= 62) is accepted; longer encodings are
    rejected.
    """
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 line")
    first = ord(s[0]) - 63
    if first == 63:
        raise Graph6Error("graphs with more than 62 vertices are not supported")
    if not (0 <= first <= 62):
        raise Graph6Error(f"invalid graph6 size byte {s[0]!r}")
    n = first
    if n == 0:
        raise Graph6Error("graph6 encodes an empty vertex set")
    need = (n * (n - 1) // 2 + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise Graph6Error(f"graph6 body has {len(data)} bytes, expected {need}")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise Graph6Error(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    if any(bits[idx:]):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, edges)


def format_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("graphs with more than 62 vertices are not supported")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# -- transforms ---------------------------------------------------------


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph and the edge list that defines its vertex order.

    Vertex i of the result corresponds to edges()[i] of the input; two
    vertices are adjacent iff the underlying edges share an endpoint.
    """
    edges = g.edges()
    if not edges:
        raise ValueError("line graph requires at least one edge")
    m = len(edges)
    lg_edges = []
    for i in range(m):
        u1, v1 = edges[i]
        for j in range(i + 1, m):
            u2, v2 = edges[j]
            if u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2:
                lg_edges.append((i, j))
    return Graph(m, lg_edges), tuple(edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with row-major labels: (u, v) -> u * h.n + v."""
    n = g.n * h.n
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            a = u * h.n + v
            for v2 in h.neighbors(v):
                if v2 > v:
                    edges.append((a, u * h.n + v2))
            for u2 in g.neighbors(u):
                if u2 > u:
                    edges.append((a, u2 * h.n + v))
    return Graph(n, edges)


# -- classical connectivity ---------------------------------------------


def _max_flow_unit(n_nodes: int, arcs: dict[int, dict[int, int]], s: int, t: int) -> int:
    """Max flow with small integer capacities by BFS augmentation."""
    flow = 0
    while True:
        parent = {s: None}
        q = deque([s])
        while q and t not in parent:
            x = q.popleft()
            for y, cap in arcs[x].items():
                if cap > 0 and y not in parent:
                    parent[y] = x
                    q.append(y)
        if t not in parent:
            return flow
        y = t
        while parent[y] is not None:
            x = parent[y]
            arcs[x][y] -= 1
            arcs[y][x] = arcs[y].get(x, 0) + 1
            y = x
        flow += 1


def _vertex_split_network(g: Graph, s: int, t: int) -> tuple[int, dict[int, dict[int, int]]]:
    # node 2v = in-copy, 2v+1 = out-copy; internal capacity 1 except s, t;
    # each edge carries at most one path, so edge arcs have capacity 1 too
    big = g.n * g.n
    arcs: dict[int, dict[int, int]] = {i: {} for i in range(2 * g.n)}
    for v in range(g.n):
        arcs[2 * v][2 * v + 1] = big if v in (s, t) else 1
    for u, v in g.edges():
        arcs[2 * u + 1][2 * v] = 1
        arcs[2 * v + 1][2 * u] = 1
    return 2 * g.n, arcs


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (Menger)."""
    if s == t:
        raise ValueError("endpoints must differ")
    _, arcs = _vertex_split_network(g, s, t)
    return _max_flow_unit(2 * g.n, arcs, 2 * s + 1, 2 * t)


def _net_arcs(g: Graph, directed_flow: dict[tuple[int, int], int]) -> dict[int, list[int]]:
    """Cancel opposite flow on each undirected edge, keep net direction."""
    out_arcs: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges():
        f_uv = directed_flow.get((u, v), 0)
        f_vu = directed_flow.get((v, u), 0)
        if f_uv > f_vu:
            out_arcs[u].append(v)
        elif f_vu > f_uv:
            out_arcs[v].append(u)
    return out_arcs


def _walk_flow_paths(out_arcs: dict[int, list[int]], s: int, t: int,
                     count: int) -> list[list[tuple[int, int]]]:
    """Decompose net unit flow into simple s-t paths, erasing circulations."""
    paths = []
    for _ in range(count):
        walk = [s]
        pos = {s: 0}
        while walk[-1] != t:
            nxt = out_arcs[walk[-1]].pop(0)
            if nxt in pos:
                # consumed arcs formed a cycle; drop it from the walk
                p = pos[nxt]
                for x in walk[p + 1:]:
                    del pos[x]
                del walk[p + 1:]
            else:
                pos[nxt] = len(walk)
                walk.append(nxt)
        paths.append([(min(a, b), max(a, b)) for a, b in zip(walk, walk[1:])])
    return paths


def local_vertex_disjoint_paths(g: Graph, s: int, t: int) -> list[list[tuple[int, int]]]:
    """A maximum family of internally disjoint s-t paths, as edge lists."""
    _, arcs = _vertex_split_network(g, s, t)
    original = {x: dict(d) for x, d in arcs.items()}
    value = _max_flow_unit(2 * g.n, arcs, 2 * s + 1, 2 * t)
    # flow on arc x->y is original capacity minus residual, for real arcs
    directed: dict[tuple[int, int], int] = {}
    for x, d in original.items():
        for y, cap in d.items():
            f = cap - arcs[x].get(y, cap)
            if f > 0 and x % 2 == 1 and y % 2 == 0:
                directed[(x // 2, y // 2)] = f
    return _walk_flow_paths(_net_arcs(g, directed), s, t, value)


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of edge-disjoint s-t paths."""
    if s == t:
        raise ValueError("endpoints must differ")
    arcs: dict[int, dict[int, int]] = {i: {} for i in range(g.n)}
    for u, v in g.edges():
        arcs[u][v] = 1
        arcs[v][u] = 1
    return _max_flow_unit(g.n, arcs, s, t)


def local_edge_disjoint_paths(g: Graph, s: int, t: int) -> list[list[tuple[int, int]]]:
    """A maximum family of edge-disjoint s-t paths, as edge lists."""
    arcs: dict[int, dict[int, int]] = {i: {} for i in range(g.n)}
    for u, v in g.edges():
        arcs[u][v] = 1
        arcs[v][u] = 1
    value = _max_flow_unit(g.n, arcs, s, t)
    directed: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        directed[(u, v)] = 1 - arcs[u].get(v, 0)
        directed[(v, u)] = 1 - arcs[v].get(u, 0)
    return _walk_flow_paths(_net_arcs(g, directed), s, t, value)


def vertex_connectivity(g: Graph) -> int:
    """Classical connectivity: 0 iff disconnected, n-1 for complete graphs,
    otherwise the minimum over nonadjacent pairs of the disjoint path count.
    """
    if g.n == 1:
        return 0
    if not g.is_connected():
        return 0
    if g.is_complete():
        return g.n - 1
    best = g.n
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                best = min(best, local_vertex_connectivity(g, u, v))
    return best


def edge_connectivity(g: Graph) -> int:
    """Classical edge-connectivity via minimum cuts from a fixed source."""
    if g.n == 1:
        return 0
    if not g.is_connected():
        return 0
    return min(local_edge_connectivity(g, 0, t) for t in range(1, g.n))


# -- isomorphism --------------------------------------------------------


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree and neighbor-degree pruning.

    Intended for the desk scale this package works at (n <= 16 or so).
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    n = g.n
    dg = [g.degree(v) for v in range(n)]
    dh = [h.degree(v) for v in range(n)]
    if sorted(dg) != sorted(dh):
        return False
    sig_g = [tuple(sorted(dg[u] for u in g.neighbors(v))) for v in range(n)]
    sig_h = [tuple(sorted(dh[u] for u in h.neighbors(v))) for v in range(n)]
    if sorted(sig_g) != sorted(sig_h):
        return False
    # assign G-vertices in order of rarest signature first
    freq: dict[tuple, int] = {}
    for s in sig_g:
        freq[s] = freq.get(s, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[sig_g[v]], -dg[v], v))
    mapped = [-1] * n
    used = 0

    def backtrack(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used >> w & 1:
                continue
            if dh[w] != dg[v] or sig_h[w] != sig_g[v]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if g.has_edge(v, u) != h.has_edge(w, mapped[u]):
                    ok = False
                    break
            if ok:
                mapped[v] = w
                used |= 1 << w
                if backtrack(i + 1):
                    return True
                used &= ~(1 << w)
                mapped[v] = -1
        return False

    return backtrack(0)


# -- common families -----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Parts are {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return complete_bipartite_graph(1, leaves)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)
