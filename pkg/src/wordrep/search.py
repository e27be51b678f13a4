"""Exhaustive and backtracking search: representability decisions, word
witness search, non-isomorphic graph enumeration, and the small-graph
census of non-word-representable graphs.

Canonical forms are minimum adjacency bitstrings over orderings that
respect an iterated-degree (WL-style) vertex partition; no external
canonical-labeling dependency, acceptable because the built-in generator
stops at n = 8.  "Unknown" (budget exhausted) is a first-class outcome,
raised as BudgetExceeded and never conflated with "nonexistent".
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import _kernels
from .core import Graph, Word, iter_mask
from .orient import BudgetExceeded, Orientation, search_semi_transitive
from .verify import verify_k11


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_word_length: int = 30
    max_uniformity: int = 3

    def __post_init__(self):
        if min(self.max_nodes, self.max_word_length, self.max_uniformity) <= 0:
            raise ValueError("budget fields must be positive")


def is_word_representable(G: Graph) -> bool:
    """Exact decision via existence of a semi-transitive orientation."""
    return search_semi_transitive(G) is not None


# -- uniform representant search ---------------------------------------


class _NodeCounter:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("word-search node budget exhausted")


def _search_uniform_word(G: Graph, t: int, counter: _NodeCounter) -> Optional[Word]:
    """Backtracking search for a t-uniform 0-11-representant of G.

    Alternation pruning: a letter may never create an adjacent equal pair
    with a neighbour (a t-uniform pair subword without adjacent equals is
    automatically alternating), and a non-edge pair whose letters are both
    exhausted must already have its required 11.
    """
    n = G.n
    total = n * t
    remaining = [t] * n
    last = {}
    doubled = [[False] * n for _ in range(n)]
    word: list[int] = []

    def ok_to_place(a: int) -> bool:
        if remaining[a] == 0:
            return False
        for b in iter_mask(G.adj[a]):
            if last.get((min(a, b), max(a, b))) == a:
                return False
        if remaining[a] == 1:
            # last copy of a: every non-neighbour with no copies left must
            # already have its 11 with a
            for b in range(n):
                if b != a and not G.has_edge(a, b) and remaining[b] == 0 and not doubled[a][b]:
                    return False
        return True

    def place(a: int):
        remaining[a] -= 1
        word.append(a)
        undo = []
        for b in range(n):
            if b == a:
                continue
            key = (min(a, b), max(a, b))
            prev = last.get(key)
            undo.append((key, prev))
            if prev == a and not doubled[a][b]:
                doubled[a][b] = doubled[b][a] = True
                undo.append((key, "doubled"))
            last[key] = a
        return undo

    def unplace(a: int, undo):
        for key, prev in reversed(undo):
            if prev == "doubled":
                b = key[0] if key[1] == a else key[1]
                doubled[a][b] = doubled[b][a] = False
            elif prev is None:
                del last[key]
            else:
                last[key] = prev
        word.pop()
        remaining[a] += 1

    def rec() -> bool:
        counter.tick()
        if len(word) == total:
            return all(
                doubled[i][j]
                for i in range(n)
                for j in range(i + 1, n)
                if not G.has_edge(i, j)
            )
        for a in range(n):
            if not ok_to_place(a):
                continue
            undo = place(a)
            if rec():
                return True
            unplace(a, undo)
        return False

    if rec():
        w = Word(G.labels, tuple(word))
        if not verify_k11(w, G, 0):  # self-verification gate
            raise AssertionError("uniform search produced an invalid word")
        return w
    return None


def find_uniform_representant(G: Graph, budget: SearchBudget = SearchBudget()) -> Optional[Word]:
    """Smallest-t uniform 0-11-representant with t <= budget.max_uniformity.

    Returns None when provably none exists within that uniformity range
    (in particular whenever G is not word-representable at all); raises
    BudgetExceeded if the search space cannot be exhausted in time.
    """
    if not is_word_representable(G):
        return None
    counter = _NodeCounter(budget.max_nodes)
    for t in range(1, budget.max_uniformity + 1):
        w = _search_uniform_word(G, t, counter)
        if w is not None:
            return w
    return None


def find_k11_representant(
    G: Graph, k: int, budget: SearchBudget = SearchBudget()
) -> Optional[Word]:
    """Iterative-deepening search for a k-11-representant of bounded length.

    Edge pairs may accumulate at most k 11s (pruned immediately); at the
    leaf every vertex must occur and every non-edge pair must have at
    least k+1 of them.  Every returned word is re-verified.
    """
    n = G.n
    counter = _NodeCounter(budget.max_nodes)
    for length in range(n, budget.max_word_length + 1):
        got = _search_k11_word(G, k, length, counter)
        if got is not None:
            return got
    return None


def _search_k11_word(G: Graph, k: int, length: int, counter: _NodeCounter) -> Optional[Word]:
    n = G.n
    word: list[int] = []
    occ = [0] * n
    last = {}
    doubles = [[0] * n for _ in range(n)]

    def rec() -> bool:
        counter.tick()
        missing = sum(1 for c in occ if c == 0)
        slots = length - len(word)
        if missing > slots:
            return False
        if slots == 0:
            return all(
                doubles[i][j] >= k + 1
                for i in range(n)
                for j in range(i + 1, n)
                if not G.has_edge(i, j)
            )
        for a in range(n):
            bad = False
            bumped = []
            for b in range(n):
                if b == a:
                    continue
                if last.get((min(a, b), max(a, b))) == a:
                    if G.has_edge(a, b) and doubles[a][b] + 1 > k:
                        bad = True
                        break
                    bumped.append(b)
            if bad:
                continue
            undo = []
            for b in bumped:
                doubles[a][b] += 1
                doubles[b][a] += 1
            for b in range(n):
                if b == a:
                    continue
                key = (min(a, b), max(a, b))
                undo.append((key, last.get(key)))
                last[key] = a
            occ[a] += 1
            word.append(a)
            if rec():
                return True
            word.pop()
            occ[a] -= 1
            for key, prev in undo:
                if prev is None:
                    del last[key]
                else:
                    last[key] = prev
            for b in bumped:
                doubles[a][b] -= 1
                doubles[b][a] -= 1
        return False

    if rec():
        w = Word(G.labels, tuple(word))
        if not verify_k11(w, G, k):
            raise AssertionError("k-11 search produced an invalid word")
        return w
    return None


# -- non-isomorphic enumeration ----------------------------------------


def _refined_classes(G: Graph) -> list[list[int]]:
    """Ordered vertex partition by iterated neighbour-degree colors."""
    colors: list[tuple] = [(G.degree(i),) for i in range(G.n)]
    while True:
        new = [
            (colors[i], tuple(sorted(colors[j] for j in iter_mask(G.adj[i]))))
            for i in range(G.n)
        ]
        if len(set(new)) == len(set(colors)):
            break
        colors = new
    distinct = sorted(set(colors))
    classes: list[list[int]] = [[] for _ in distinct]
    rank = {c: r for r, c in enumerate(distinct)}
    for i, c in enumerate(colors):
        classes[rank[c]].append(i)
    return classes


def canonical_form(G: Graph) -> tuple[int, int]:
    """(n, bits) canonical key: equal exactly for isomorphic graphs."""
    bits = _kernels.canonical_min_bits(G.n, G.adj, _refined_classes(G))
    return (G.n, bits)


def graph_from_canonical_bits(n: int, bits: int) -> Graph:
    nbits = n * (n - 1) // 2
    pairs = []
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> (nbits - 1 - p) & 1:
                pairs.append((i, j))
            p += 1
    return Graph.from_index_edges(tuple(str(i + 1) for i in range(n)), pairs)


_BUILTIN_LIMIT = 8
_enum_cache: dict[int, list[int]] = {}


def _canonical_bits_upto(n: int) -> list[int]:
    if n in _enum_cache:
        return _enum_cache[n]
    if n == 1:
        forms = [0]
    else:
        forms_set = set()
        for bits in _canonical_bits_upto(n - 1):
            base = graph_from_canonical_bits(n - 1, bits)
            labels = tuple(str(i + 1) for i in range(n))
            base_pairs = base.edges()
            for nbh in range(1 << (n - 1)):
                pairs = base_pairs + [(i, n - 1) for i in iter_mask(nbh)]
                G = Graph.from_index_edges(labels, pairs)
                forms_set.add(canonical_form(G)[1])
        forms = sorted(forms_set)
    _enum_cache[n] = forms
    return forms


def enumerate_nonisomorphic(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class, deterministic canonical order."""
    if n < 1 or n > _BUILTIN_LIMIT:
        raise ValueError(f"built-in generator supports 1 <= n <= {_BUILTIN_LIMIT}")
    for bits in _canonical_bits_upto(n):
        G = graph_from_canonical_bits(n, bits)
        if connected_only and not G.is_connected():
            continue
        yield G


# -- census ------------------------------------------------------------


@dataclass(frozen=True)
class CensusResult:
    n: int
    examined: int
    non_word_representable: tuple[Graph, ...]


def _census_probe(args: tuple[int, int]) -> Optional[tuple[int, int]]:
    n, bits = args
    G = graph_from_canonical_bits(n, bits)
    return None if is_word_representable(G) else (n, bits)


def census_non_word_representable(n: int, jobs: int = 1) -> CensusResult:
    """Classify all connected graphs on n vertices by word-representability.

    Results are sorted by canonical form, so output is identical across
    worker counts.
    """
    if n > 7:
        raise ValueError("census supports n <= 7")
    graphs = list(enumerate_nonisomorphic(n, connected_only=True))
    work = [(n, canonical_form(G)[1]) for G in graphs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [h for h in pool.map(_census_probe, work, chunksize=16) if h]
    else:
        hits = [h for h in map(_census_probe, work) if h]
    hits.sort()
    bad = tuple(graph_from_canonical_bits(nn, bits) for nn, bits in hits)
    return CensusResult(n=n, examined=len(graphs), non_word_representable=bad)


def census_from_graph6(lines, jobs: int = 1) -> CensusResult:
    """Census over an externally supplied graph6 stream (deduplicated)."""
    from .graph6 import parse_graph6

    forms = set()
    n_seen = set()
    for line in lines:
        line = line.strip()
        if not line or line.startswith(">>"):
            continue
        G = parse_graph6(line)
        n_seen.add(G.n)
        forms.add(canonical_form(G))
    if len(n_seen) > 1:
        raise ValueError("graph6 stream mixes vertex counts")
    work = sorted(forms)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = [h for h in pool.map(_census_probe, work, chunksize=16) if h]
    else:
        hits = [h for h in map(_census_probe, work) if h]
    hits.sort()
    bad = tuple(graph_from_canonical_bits(nn, bits) for nn, bits in hits)
    n = next(iter(n_seen)) if n_seen else 0
    return CensusResult(n=n, examined=len(work), non_word_representable=bad)


# -- chromatic number --------------------------------------------------


def chromatic_number(G: Graph) -> int:
    """Exact minimum proper-coloring size (branch and bound, n <= 16)."""
    if G.n > 16:
        raise ValueError("chromatic_number supports n <= 16")
    if G.n == 0:
        return 0
    order = sorted(range(G.n), key=lambda i: -G.degree(i))

    def colorable(kc: int) -> bool:
        colors = [-1] * G.n

        def rec(pos: int) -> bool:
            if pos == G.n:
                return True
            v = order[pos]
            used = {colors[u] for u in iter_mask(G.adj[v]) if colors[u] >= 0}
            highest = max((colors[order[p]] for p in range(pos)), default=-1)
            for c in range(kc):
                if c in used:
                    continue
                colors[v] = c
                if rec(pos + 1):
                    return True
                colors[v] = -1
                if c > highest:  # fresh colors are interchangeable
                    break
            return False

        return rec(0)

    for kc in range(1, G.n + 1):
        if colorable(kc):
            return kc
    raise AssertionError("unreachable")
