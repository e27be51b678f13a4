"""Orientation certificates and searches.

Semi-transitive = acyclic + shortcut-free.  Shortcut detection uses the
reachability formulation: for every arc a->b, any two vertices lying on
directed a-to-b paths that are reachability-comparable must be adjacent.
On DAGs this is equivalent to the directed-path definition (concatenating
a~>u and u~>b paths yields a simple path); the exhaustive path enumerator
survives in the tests as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import _kernels
from .core import Graph, iter_mask


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of nodes: outcome is unknown, not 'none'."""


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of ``base``; succ[i] holds the out-arcs of i."""

    base: Graph
    succ: tuple[int, ...]

    def __post_init__(self):
        n = self.base.n
        if len(self.succ) != n:
            raise ValueError("succ size mismatch")
        for i in range(n):
            if self.succ[i] & ~self.base.adj[i]:
                raise ValueError("arc without a base edge")
        for i, j in self.base.edges():
            fwd = self.succ[i] >> j & 1
            bwd = self.succ[j] >> i & 1
            if fwd + bwd != 1:
                raise ValueError(
                    f"edge {self.base.labels[i]}-{self.base.labels[j]} "
                    f"{'unoriented' if fwd + bwd == 0 else 'oriented both ways'}"
                )

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[tuple[str, str]]) -> "Orientation":
        succ = [0] * base.n
        for u, v in arcs:
            i, j = base.idx(u), base.idx(v)
            if not base.has_edge(i, j):
                raise ValueError(f"arc ({u},{v}) has no base edge")
            if succ[i] >> j & 1 or succ[j] >> i & 1:
                raise ValueError(f"duplicate or conflicting arc on edge {u}-{v}")
            succ[i] |= 1 << j
        return cls(base, tuple(succ))

    def arcs(self) -> list[tuple[str, str]]:
        out = []
        for i in range(self.base.n):
            for j in iter_mask(self.succ[i]):
                out.append((self.base.labels[i], self.base.labels[j]))
        return out


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path v0..vk plus the shortcutting arc v0->vk, with a
    non-adjacent pair on the path breaking transitivity."""

    path: tuple[str, ...]
    missing: tuple[str, str]


def is_acyclic(D: Orientation) -> bool:
    return _kernels.is_dag(D.base.n, D.succ)


def _arc_path(D: Orientation, src: int, dst: int) -> list[int]:
    """Some directed path src ~> dst (BFS over arcs); src == dst allowed."""
    if src == dst:
        return [src]
    prev = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in iter_mask(D.succ[u]):
                if v not in prev:
                    prev[v] = u
                    if v == dst:
                        path = [dst]
                        while prev[path[-1]] is not None:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    nxt.append(v)
        frontier = nxt
    raise ValueError("no directed path")  # caller guarantees reachability


def find_shortcut(D: Orientation) -> Optional[ShortcutWitness]:
    """A shortcut witness, or None if the (acyclic) orientation has none."""
    if not is_acyclic(D):
        raise ValueError("orientation is cyclic")
    hit = _kernels.forced_shortcut_pair(D.base.n, D.succ, D.base.adj)
    if hit is None:
        return None
    a, b, u, w = hit
    p1 = _arc_path(D, a, u)
    p2 = _arc_path(D, u, w)
    p3 = _arc_path(D, w, b)
    path = p1 + p2[1:] + p3[1:]
    labels = D.base.labels
    return ShortcutWitness(tuple(labels[v] for v in path), (labels[u], labels[w]))


def is_semi_transitive(D: Orientation) -> bool:
    if not is_acyclic(D):
        return False
    return _kernels.forced_shortcut_pair(D.base.n, D.succ, D.base.adj) is None


def is_transitive(D: Orientation) -> bool:
    """Every composable arc pair u->v->z has its composite arc u->z."""
    for i in range(D.base.n):
        for j in iter_mask(D.succ[i]):
            if D.succ[j] & ~D.succ[i]:
                return False
    return True


def directed_paths_with_arcs(D: Orientation, num_arcs: int) -> list[tuple[str, ...]]:
    """All directed simple paths with exactly ``num_arcs`` arcs, sorted."""
    if num_arcs < 0:
        raise ValueError("arc count must be non-negative")
    if not is_acyclic(D):
        raise ValueError("orientation is cyclic")
    n = D.base.n
    out = []

    def extend(path: list[int]):
        if len(path) == num_arcs + 1:
            out.append(tuple(path))
            return
        for v in iter_mask(D.succ[path[-1]]):
            path.append(v)
            extend(path)
            path.pop()

    for start in range(n):
        extend([start])
    out.sort()
    return [tuple(D.base.labels[v] for v in p) for p in out]


def orient_by_coloring(G: Graph, coloring: dict[str, int]) -> Orientation:
    """Direct each edge from the lesser color to the larger one.

    With at most 3 colors the result is always semi-transitive.
    """
    colors = [coloring[lab] for lab in G.labels]  # KeyError -> caller bug
    succ = [0] * G.n
    for i, j in G.edges():
        if colors[i] == colors[j]:
            raise ValueError(
                f"coloring is not proper: {G.labels[i]} and {G.labels[j]} share a color"
            )
        if colors[i] < colors[j]:
            succ[i] |= 1 << j
        else:
            succ[j] |= 1 << i
    return Orientation(G, tuple(succ))


@dataclass
class _Budget:
    limit: Optional[int]
    used: int = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"node budget of {self.limit} exhausted")


def _edge_order(G: Graph) -> list[tuple[int, int]]:
    deg = [G.degree(i) for i in range(G.n)]
    return sorted(
        G.edges(),
        key=lambda e: (-max(deg[e[0]], deg[e[1]]), -min(deg[e[0]], deg[e[1]]), e),
    )


def search_semi_transitive(G: Graph, max_nodes: Optional[int] = None) -> Optional[Orientation]:
    """Backtracking search for a semi-transitive orientation.

    Returns None only after exhausting the search space, which by the
    semi-transitive characterization proves G non-word-representable.
    Branches deterministically: for the edge {u, v} with u < v the arc
    u->v is tried first.  ``max_nodes`` bounds the number of search nodes;
    exceeding it raises BudgetExceeded (outcome unknown).
    """
    edges = _edge_order(G)
    n = G.n
    succ = [0] * n
    budget = _Budget(max_nodes)

    def consistent(x: int, y: int) -> bool:
        # adding x->y: reject a directed cycle or a violation that no
        # orientation of the remaining edges can repair
        try:
            return _kernels.forced_shortcut_pair(n, succ, G.adj) is None
        except ValueError:  # cycle
            return False

    def rec(k: int) -> bool:
        budget.tick()
        if k == len(edges):
            return True
        u, v = edges[k]
        for x, y in ((u, v), (v, u)):
            succ[x] |= 1 << y
            if consistent(x, y) and rec(k + 1):
                return True
            succ[x] &= ~(1 << y)
        return False

    if rec(0):
        return Orientation(G, tuple(succ))
    return None


def search_transitive(G: Graph, max_nodes: Optional[int] = None) -> Optional[Orientation]:
    """Backtracking search for a transitive orientation.

    Uses forcing-closure propagation: once a->b and b->c are fixed, the arc
    a->c is forced (and a missing edge ac kills the branch).  Naive but
    sufficient at desk scale; no modular decomposition.
    """
    n = G.n
    edges = _edge_order(G)
    budget = _Budget(max_nodes)

    def closure(succ: list[int]) -> Optional[list[int]]:
        succ = succ[:]
        changed = True
        while changed:
            changed = False
            for a in range(n):
                for b in iter_mask(succ[a]):
                    need = succ[b] & ~succ[a] & ~(1 << a)
                    if not need:
                        continue
                    if need & ~G.adj[a]:
                        return None  # a->b->c with ac not an edge
                    for c in iter_mask(need):
                        if succ[c] >> a & 1:
                            return None  # would conflict with c->a
                    succ[a] |= need
                    changed = True
        for a in range(n):
            if succ[a] & (1 << a):
                return None
            for b in iter_mask(succ[a]):
                if succ[b] >> a & 1:
                    return None
        return succ

    def rec(succ: list[int], k: int) -> Optional[list[int]]:
        budget.tick()
        while k < len(edges):
            u, v = edges[k]
            if (succ[u] >> v | succ[v] >> u) & 1:
                k += 1
                continue
            break
        else:
            return succ
        u, v = edges[k]
        for x, y in ((u, v), (v, u)):
            trial = succ[:]
            trial[x] |= 1 << y
            closed = closure(trial)
            if closed is not None:
                got = rec(closed, k + 1)
                if got is not None:
                    return got
        return None

    got = rec([0] * n, 0)
    if got is None:
        return None
    D = Orientation(G, tuple(got))
    if not is_transitive(D):  # closure should guarantee this
        raise AssertionError("forcing closure produced a non-transitive orientation")
    return D
