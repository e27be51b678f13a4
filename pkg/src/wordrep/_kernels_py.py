"""Pure-Python implementations of the hot kernels.

These are the reference implementations; ``wordrep._ext`` (Cython) mirrors
them exactly for speed and is preferred at import time when available.
Pair indices use the upper-triangle convention ``pair_index(i, j, n)`` with
``i < j``.
"""

from __future__ import annotations

from itertools import permutations


def pair_index(i: int, j: int, n: int) -> int:
    if i > j:
        i, j = j, i
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def word_pair_counts(letters, n):
    """11-pattern counts for every unordered letter pair of a word.

    Returns a flat list of length n*(n-1)//2 indexed by ``pair_index``.
    Single left-to-right pass: seeing letter ``a`` creates one occurrence
    in pair (a, b) exactly when ``a`` was also the previous letter of that
    pair subword.
    """
    counts = [0] * (n * (n - 1) // 2)
    last = [[-1] * n for _ in range(n)]
    for a in letters:
        row = last[a]
        for b in range(n):
            if b == a:
                continue
            if row[b] == a:
                counts[pair_index(a, b, n)] += 1
            row[b] = a
            last[b][a] = a
    return counts


def descendants(n, succ):
    """Strict-descendant bitmasks of a DAG given successor bitmasks.

    Raises ValueError on a directed cycle.
    """
    indeg = [0] * n
    for i in range(n):
        m = succ[i]
        j = 0
        while m:
            if m & 1:
                indeg[j] += 1
            m >>= 1
            j += 1
    order = [i for i in range(n) if indeg[i] == 0]
    head = 0
    while head < len(order):
        i = order[head]
        head += 1
        m = succ[i]
        j = 0
        while m:
            if m & 1:
                indeg[j] -= 1
                if indeg[j] == 0:
                    order.append(j)
            m >>= 1
            j += 1
    if len(order) != n:
        raise ValueError("directed cycle")
    desc = [0] * n
    for i in reversed(order):
        d = succ[i]
        m = succ[i]
        j = 0
        while m:
            if m & 1:
                d |= desc[j]
            m >>= 1
            j += 1
        desc[i] = d
    return desc


def is_dag(n, succ):
    try:
        descendants(n, succ)
        return True
    except ValueError:
        return False


def forced_shortcut_pair(n, succ, adj):
    """Find a violation of semi-transitivity forced by the arcs in ``succ``.

    ``succ`` may be a partial orientation of the graph with adjacency
    ``adj``.  Looks for an arc a->b and a pair u, w inside the directed
    a-to-b interval with u reaching w but u, w non-adjacent in the graph:
    such a pair stays a shortcut witness no matter how the remaining edges
    get oriented.  Returns (a, b, u, w) or None.  Requires ``succ`` acyclic.
    """
    desc = descendants(n, succ)
    anc = [0] * n
    for i in range(n):
        m = desc[i]
        j = 0
        while m:
            if m & 1:
                anc[j] |= 1 << i
            m >>= 1
            j += 1
    for a in range(n):
        m = succ[a]
        b = 0
        while m:
            if m & 1:
                between = (desc[a] & anc[b]) | (1 << a) | (1 << b)
                mu = between
                u = 0
                while mu:
                    if mu & 1:
                        bad = desc[u] & between & ~adj[u] & ~(1 << u)
                        if bad:
                            # lowest such w, for determinism
                            w = (bad & -bad).bit_length() - 1
                            return (a, b, u, w)
                    mu >>= 1
                    u += 1
            m >>= 1
            b += 1
    return None


def canonical_min_bits(n, adj, classes):
    """Minimum upper-triangle adjacency bitstring over class-respecting orders.

    ``classes`` is an ordered partition of [0, n); candidate orderings place
    the vertices of classes[0] first (in any order), then classes[1], etc.
    The bitstring packs bit (i, j), i < j, at position pair_index(i, j, n),
    read as an integer with position 0 most significant.
    """
    nbits = n * (n - 1) // 2
    best = None
    class_perms = [list(permutations(c)) for c in classes]

    def rec(ci, ordering):
        nonlocal best
        if ci == len(class_perms):
            bits = 0
            pos = [0] * n
            for slot, v in enumerate(ordering):
                pos[v] = slot
            p = 0
            for a in range(n):
                va = ordering[a]
                row = adj[va]
                for b in range(a + 1, n):
                    if row >> ordering[b] & 1:
                        bits |= 1 << (nbits - 1 - p)
                    p += 1
            if best is None or bits < best:
                best = bits
            return
        for perm in class_perms[ci]:
            rec(ci + 1, ordering + list(perm))

    rec(0, [])
    return best
