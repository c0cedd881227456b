"""Pendant Steiner trees, tree packings, verification, and the plain-text
certificate format.

A pendant Steiner tree for a terminal set S is a tree inside the host graph
that contains S and in which every terminal has degree exactly one. A
packing is a list of such trees over a common terminal set, pairwise
disjoint in one of two modes:

* ``internal``: no shared edges, and shared vertices are exactly S;
* ``edge``: no shared edges (vertices outside S may be shared).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

MODE_INTERNAL = "internal"
MODE_EDGE = "edge"


class CertificateParseError(ValueError):
    """Raised for malformed packing certificate documents."""


def _norm_edge(e: Sequence[int]) -> tuple[int, int]:
    u, v = e
    return (u, v) if u < v else (v, u)


def _norm_edges(edges: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(_norm_edge(e) for e in edges))


def _norm_terminals(S: Iterable[int]) -> tuple[int, ...]:
    terms = tuple(sorted(S))
    if len(set(terms)) != len(terms):
        raise ValueError("terminal set has duplicate vertices")
    return terms


@dataclass(frozen=True)
class PendantSteinerTree:
    """Edge set of one tree plus the terminal set it serves."""

    terminals: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def make(S: Iterable[int], edges: Iterable[Sequence[int]]) -> "PendantSteinerTree":
        return PendantSteinerTree(_norm_terminals(S), _norm_edges(edges))

    def vertex_set(self) -> frozenset[int]:
        vs = set(self.terminals)
        for u, v in self.edges:
            vs.add(u)
            vs.add(v)
        return frozenset(vs)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class Packing:
    terminals: tuple[int, ...]
    mode: str
    trees: tuple[PendantSteinerTree, ...]

    @staticmethod
    def make(S: Iterable[int], mode: str,
             trees: Iterable[Iterable[Sequence[int]]]) -> "Packing":
        if mode not in (MODE_INTERNAL, MODE_EDGE):
            raise ValueError(f"unknown packing mode {mode!r}")
        terms = _norm_terminals(S)
        return Packing(terms, mode,
                       tuple(PendantSteinerTree.make(terms, t) for t in trees))

    def __len__(self) -> int:
        return len(self.trees)


def _tree_failure(g: Graph, terms: tuple[int, ...],
                  edges: tuple[tuple[int, int], ...]) -> str | None:
    """First violated tree invariant, or None if the tree is valid."""
    if len(terms) < 2:
        raise ValueError("terminal sets need at least two vertices")
    for t in terms:
        if not (0 <= t < g.n):
            raise ValueError(f"terminal {t} out of range for n={g.n}")
    if len(set(edges)) != len(edges):
        return "repeated edge inside one tree"
    deg: dict[int, int] = {}
    for u, v in edges:
        if u == v:
            return f"self-loop at {u}"
        if not (0 <= u < g.n and 0 <= v < g.n):
            return f"edge ({u}, {v}) out of range"
        if not g.has_edge(u, v):
            return f"edge ({u}, {v}) not in the host graph"
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    vs = set(deg)
    vs.update(terms)
    if len(edges) != len(vs) - 1:
        return "edge count is not vertex count minus one"
    # connectivity over the tree's own vertex set
    if vs:
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        adj: dict[int, list[int]] = {v: [] for v in vs}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != vs:
            return "edges do not form a connected tree over the terminals"
    for t in terms:
        if deg.get(t, 0) != 1:
            return f"terminal {t} has degree {deg.get(t, 0)}, expected 1"
    return None


def is_pendant_steiner_tree(g: Graph, S: Iterable[int],
                            edges: Iterable[Sequence[int]]) -> bool:
    """True iff the edge set is a tree containing S with every terminal
    of degree exactly one, using only host-graph edges."""
    terms = _norm_terminals(S)
    return _tree_failure(g, terms, _norm_edges(edges)) is None


def check_packing(g: Graph, S: Iterable[int], packing: Packing) -> str | None:
    """First failure diagnostic for a packing, or None when it verifies.

    Beyond the per-tree and pairwise-disjointness checks, every tree with
    k >= 3 terminals must send at least k edges across the terminal cut,
    one per terminal; a violation here would mean a malformed tree.
    """
    terms = _norm_terminals(S)
    if packing.terminals != terms:
        return f"packing terminals {packing.terminals} do not match {terms}"
    if packing.mode not in (MODE_INTERNAL, MODE_EDGE):
        return f"unknown packing mode {packing.mode!r}"
    k = len(terms)
    term_set = set(terms)
    for i, tree in enumerate(packing.trees):
        bad = _tree_failure(g, terms, tree.edges)
        if bad is not None:
            return f"tree {i}: {bad}"
        if k >= 3:
            crossing = sum(1 for u, v in tree.edges
                           if (u in term_set) != (v in term_set))
            if crossing < k:
                return (f"tree {i}: only {crossing} edges cross the terminal "
                        f"cut, expected at least {k}")
    for i in range(len(packing.trees)):
        ei = packing.trees[i].edge_set()
        vi = packing.trees[i].vertex_set()
        for j in range(i + 1, len(packing.trees)):
            if ei & packing.trees[j].edge_set():
                return f"trees {i} and {j} share an edge"
            if packing.mode == MODE_INTERNAL:
                shared = vi & packing.trees[j].vertex_set()
                if shared != term_set:
                    extra = sorted(shared - term_set)
                    return f"trees {i} and {j} share internal vertices {extra}"
    return None


def verify_packing(g: Graph, S: Iterable[int], packing: Packing) -> bool:
    return check_packing(g, S, packing) is None


# -- certificate documents ----------------------------------------------


def format_packing(packing: Packing) -> str:
    """Serialize to the plain-text certificate format.

    Line 1: ``S: v1 v2 ... vk``; line 2: ``mode: internal|edge``; then one
    ``T:`` line per tree with edges as ``u-v``. Round-trips bit-exactly.
    """
    lines = ["S: " + " ".join(str(v) for v in packing.terminals),
             f"mode: {packing.mode}"]
    for tree in packing.trees:
        lines.append("T: " + " ".join(f"{u}-{v}" for u, v in tree.edges))
    return "\n".join(lines) + "\n"


def parse_packing(text: str) -> Packing:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if len(rows) < 2:
        raise CertificateParseError("certificate needs an S: line and a mode: line")
    if not rows[0].startswith("S:"):
        raise CertificateParseError(f"expected 'S:' line, got {rows[0]!r}")
    try:
        terms = tuple(int(x) for x in rows[0][2:].split())
    except ValueError:
        raise CertificateParseError(f"bad terminal list {rows[0]!r}") from None
    if not rows[1].startswith("mode:"):
        raise CertificateParseError(f"expected 'mode:' line, got {rows[1]!r}")
    mode = rows[1][5:].strip()
    if mode not in (MODE_INTERNAL, MODE_EDGE):
        raise CertificateParseError(f"unknown mode {mode!r}")
    trees = []
    for ln in rows[2:]:
        if not ln.startswith("T:"):
            raise CertificateParseError(f"expected 'T:' line, got {ln!r}")
        edges = []
        for tok in ln[2:].split():
            parts = tok.split("-")
            if len(parts) != 2:
                raise CertificateParseError(f"bad edge token {tok!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise CertificateParseError(f"bad edge token {tok!r}") from None
        trees.append(edges)
    try:
        return Packing.make(terms, mode, trees)
    except ValueError as exc:
        raise CertificateParseError(str(exc)) from None
