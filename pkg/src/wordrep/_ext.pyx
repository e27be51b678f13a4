# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; must match wordrep._kernels_py exactly.

Bitmask kernels assume n <= 64 (the dispatcher guarantees it); the
canonical-form kernel additionally needs the packed bitstring to fit a
64-bit word, so n <= 11 there.
"""

from libc.stdlib cimport free, malloc


def word_pair_counts(list letters, int n):
    cdef int npairs = n * (n - 1) // 2
    cdef list counts = [0] * npairs
    cdef int *cnt = <int *> malloc(npairs * sizeof(int))
    cdef int *last = <int *> malloc(n * n * sizeof(int))
    if cnt == NULL or last == NULL:
        free(cnt)
        free(last)
        raise MemoryError()
    cdef int i, a, b, p, L = len(letters)
    for i in range(npairs):
        cnt[i] = 0
    for i in range(n * n):
        last[i] = -1
    for i in range(L):
        a = letters[i]
        for b in range(n):
            if b == a:
                continue
            if last[a * n + b] == a:
                if a < b:
                    p = a * n - a * (a + 1) // 2 + (b - a - 1)
                else:
                    p = b * n - b * (b + 1) // 2 + (a - b - 1)
                cnt[p] += 1
            last[a * n + b] = a
            last[b * n + a] = a
    for i in range(npairs):
        counts[i] = cnt[i]
    free(cnt)
    free(last)
    return counts


cdef int _topo_order(int n, unsigned long long *succ, int *order) noexcept:
    """Fills order with a topological order; returns 0 on a cycle."""
    cdef int indeg[64]
    cdef int i, j, head, count
    for i in range(n):
        indeg[i] = 0
    for i in range(n):
        for j in range(n):
            if succ[i] >> j & 1:
                indeg[j] += 1
    count = 0
    for i in range(n):
        if indeg[i] == 0:
            order[count] = i
            count += 1
    head = 0
    while head < count:
        i = order[head]
        head += 1
        for j in range(n):
            if succ[i] >> j & 1:
                indeg[j] -= 1
                if indeg[j] == 0:
                    order[count] = j
                    count += 1
    return count == n


cdef void _masks_from_list(list src, unsigned long long *dst, int n):
    cdef int i
    for i in range(n):
        dst[i] = <unsigned long long> src[i]


def is_dag(int n, list succ):
    cdef unsigned long long s[64]
    cdef int order[64]
    _masks_from_list(succ, s, n)
    return bool(_topo_order(n, s, order))


def descendants(int n, list succ):
    cdef unsigned long long s[64]
    cdef unsigned long long desc[64]
    cdef int order[64]
    cdef int i, j, k
    _masks_from_list(succ, s, n)
    if not _topo_order(n, s, order):
        raise ValueError("directed cycle")
    for i in range(n):
        desc[i] = 0
    for k in range(n - 1, -1, -1):
        i = order[k]
        desc[i] = s[i]
        for j in range(n):
            if s[i] >> j & 1:
                desc[i] |= desc[j]
    return [desc[i] for i in range(n)]


def forced_shortcut_pair(int n, list succ, list adj):
    cdef unsigned long long s[64]
    cdef unsigned long long a_[64]
    cdef unsigned long long desc[64]
    cdef unsigned long long anc[64]
    cdef int order[64]
    cdef int i, j, k, a, b, u, w
    cdef unsigned long long between, bad, mu
    _masks_from_list(succ, s, n)
    _masks_from_list(adj, a_, n)
    if not _topo_order(n, s, order):
        raise ValueError("directed cycle")
    for i in range(n):
        desc[i] = 0
        anc[i] = 0
    for k in range(n - 1, -1, -1):
        i = order[k]
        desc[i] = s[i]
        for j in range(n):
            if s[i] >> j & 1:
                desc[i] |= desc[j]
    for i in range(n):
        for j in range(n):
            if desc[i] >> j & 1:
                anc[j] |= 1ULL << i
    for a in range(n):
        for b in range(n):
            if not (s[a] >> b & 1):
                continue
            between = (desc[a] & anc[b]) | (1ULL << a) | (1ULL << b)
            mu = between
            u = 0
            while mu:
                if mu & 1:
                    bad = desc[u] & between & ~a_[u] & ~(1ULL << u)
                    if bad:
                        w = 0
                        while not (bad >> w & 1):
                            w += 1
                        return (a, b, u, w)
                mu >>= 1
                u += 1
    return None


def canonical_min_bits(int n, list adj, list classes):
    from itertools import permutations as _perms
    from itertools import product as _product

    cdef unsigned long long a_[64]
    cdef unsigned long long best = <unsigned long long> -1
    cdef unsigned long long bits
    cdef int nbits = n * (n - 1) // 2
    cdef int o[64]
    cdef int pos, v
    _masks_from_list(adj, a_, n)

    per_class = [list(_perms(cls)) for cls in classes]
    for combo in _product(*per_class):
        pos = 0
        for perm in combo:
            for v in perm:
                o[pos] = v
                pos += 1
        bits = _pack_bits(n, nbits, a_, o)
        if bits < best:
            best = bits
    return int(best)


cdef unsigned long long _pack_bits(int n, int nbits, unsigned long long *adj, int *o):
    cdef int a, b, p
    cdef unsigned long long bits = 0
    p = 0
    for a in range(n):
        for b in range(a + 1, n):
            if adj[o[a]] >> o[b] & 1:
                bits |= 1ULL << (nbits - 1 - p)
            p += 1
    return bits
