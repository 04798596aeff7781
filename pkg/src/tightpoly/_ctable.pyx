# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coset enumeration kernel.

Same HLT algorithm as ``_ptable`` (the pure-Python twin), with the coset
table, union-find and relators held in flat C arrays.  Results are identical
to the pure kernel for identical inputs; only the speed differs.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset


cdef struct Tables:
    int *table      # 3 columns per coset, -1 = undefined
    int *parent     # union-find
    int *queue      # pending dead cosets (ring buffer indices qh..qt)
    int allocated   # rows allocated
    int used        # rows defined so far
    int live
    int max_cosets
    int total_cap


cdef int _grow(Tables *t) noexcept:
    cdef int new_alloc = t.allocated * 2
    if new_alloc > t.total_cap:
        new_alloc = t.total_cap
    cdef int *nt = <int *> realloc(t.table, 3 * new_alloc * sizeof(int))
    if nt == NULL:
        return -1
    t.table = nt
    cdef int *np = <int *> realloc(t.parent, new_alloc * sizeof(int))
    if np == NULL:
        return -1
    t.parent = np
    cdef int *nq = <int *> realloc(t.queue, new_alloc * sizeof(int))
    if nq == NULL:
        return -1
    t.queue = nq
    t.allocated = new_alloc
    return 0


cdef inline int _find(Tables *t, int c) noexcept:
    cdef int root = c, tmp
    while t.parent[root] != root:
        root = t.parent[root]
    while t.parent[c] != root:
        tmp = t.parent[c]
        t.parent[c] = root
        c = tmp
    return root


cdef int _new_coset(Tables *t) noexcept:
    # returns new index, or -1 on bound/total-cap/memory failure
    cdef int idx = t.used
    if idx >= t.total_cap or t.live + 1 > t.max_cosets:
        return -1
    if idx >= t.allocated:
        if _grow(t) != 0:
            return -1
    t.parent[idx] = idx
    t.table[3 * idx] = -1
    t.table[3 * idx + 1] = -1
    t.table[3 * idx + 2] = -1
    t.used += 1
    t.live += 1
    return idx


cdef void _coincidence(Tables *t, int a, int b) noexcept:
    cdef int qh = 0, qt = 0
    cdef int dead, g, d, mu, nu
    # merge(a, b)
    a = _find(t, a)
    b = _find(t, b)
    if a == b:
        return
    if a > b:
        a, b = b, a
    t.parent[b] = a
    t.live -= 1
    t.queue[qt] = b
    qt += 1

    while qh < qt:
        dead = t.queue[qh]
        qh += 1
        for g in range(3):
            d = t.table[3 * dead + g]
            if d == -1:
                continue
            t.table[3 * dead + g] = -1
            if t.table[3 * d + g] == dead:
                t.table[3 * d + g] = -1
            mu = _find(t, dead)
            nu = _find(t, d)
            if t.table[3 * mu + g] != -1:
                # merge(nu, table[mu][g])
                a = nu
                b = _find(t, t.table[3 * mu + g])
                if a != b:
                    if a > b:
                        a, b = b, a
                    t.parent[b] = a
                    t.live -= 1
                    t.queue[qt] = b
                    qt += 1
            elif t.table[3 * nu + g] != -1:
                a = mu
                b = _find(t, t.table[3 * nu + g])
                if a != b:
                    if a > b:
                        a, b = b, a
                    t.parent[b] = a
                    t.live -= 1
                    t.queue[qt] = b
                    qt += 1
            else:
                t.table[3 * mu + g] = nu
                t.table[3 * nu + g] = mu


cdef int _scan_and_fill(Tables *t, int alpha, int *w, int wlen) noexcept:
    # returns 0 ok, -1 bound exceeded
    cdef int f = alpha, i = 0
    cdef int b = alpha, j = wlen - 1
    cdef int beta
    while True:
        while i <= j and t.table[3 * f + w[i]] != -1:
            f = t.table[3 * f + w[i]]
            i += 1
        if i > j:
            if f != b:
                _coincidence(t, f, b)
            return 0
        while j >= i and t.table[3 * b + w[j]] != -1:
            b = t.table[3 * b + w[j]]
            j -= 1
        if j < i:
            _coincidence(t, f, b)
            return 0
        if j == i:
            t.table[3 * f + w[i]] = b
            t.table[3 * b + w[i]] = f
            return 0
        beta = _new_coset(t)
        if beta < 0:
            return -1
        t.table[3 * f + w[i]] = beta
        t.table[3 * beta + w[i]] = f


def enumerate_table(relators, int max_cosets, int total_cap, int strategy=0):
    """Run the enumeration; return (n, gens) or None when the bound is hit.

    Mirrors ``_ptable.enumerate_table`` exactly, including the breadth-first
    renumbering of the result.
    """
    rels = [tuple(r) for r in relators if len(r) > 0]
    if strategy == 1:
        rels.reverse()

    # flatten relators into C arrays
    cdef int nrels = len(rels)
    cdef int *rlens = <int *> malloc(max(nrels, 1) * sizeof(int))
    cdef int total_len = 0
    cdef int ri, li
    for ri in range(nrels):
        rlens[ri] = len(rels[ri])
        total_len += rlens[ri]
    cdef int *rdata = <int *> malloc(max(total_len, 1) * sizeof(int))
    cdef int *roffs = <int *> malloc(max(nrels, 1) * sizeof(int))
    cdef int off = 0
    for ri in range(nrels):
        roffs[ri] = off
        for li in range(rlens[ri]):
            rdata[off] = rels[ri][li]
            off += 1

    cdef Tables t
    t.allocated = 1024
    if t.allocated > total_cap:
        t.allocated = total_cap
    t.table = <int *> malloc(3 * t.allocated * sizeof(int))
    t.parent = <int *> malloc(t.allocated * sizeof(int))
    t.queue = <int *> malloc(t.allocated * sizeof(int))
    t.used = 1
    t.live = 1
    t.max_cosets = max_cosets
    t.total_cap = total_cap
    t.parent[0] = 0
    t.table[0] = -1
    t.table[1] = -1
    t.table[2] = -1

    cdef int alpha = 0, bound = 0
    try:
        while alpha < t.used:
            if t.parent[alpha] == alpha:
                for ri in range(nrels):
                    if _scan_and_fill(&t, alpha, rdata + roffs[ri], rlens[ri]) != 0:
                        bound = 1
                        break
                    if t.parent[alpha] != alpha:
                        break
                if bound:
                    break
            alpha += 1

        if bound:
            return None
        return _compact(&t)
    finally:
        free(t.table)
        free(t.parent)
        free(t.queue)
        free(rdata)
        free(roffs)
        free(rlens)


cdef _compact(Tables *t):
    cdef int used = t.used
    cdef int *number = <int *> malloc(used * sizeof(int))
    cdef int *order = <int *> malloc(t.live * sizeof(int))
    if number == NULL or order == NULL:
        free(number)
        free(order)
        raise MemoryError
    memset(number, 0xff, used * sizeof(int))  # -1 fill
    cdef int n = 0, head = 0
    cdef int c, g, d
    number[0] = 0
    order[0] = 0
    n = 1
    try:
        while head < n:
            c = order[head]
            head += 1
            for g in range(3):
                d = t.table[3 * c + g]
                if d == -1:
                    raise AssertionError("incomplete coset table after enumeration")
                d = _find(t, d)
                if number[d] == -1:
                    if n >= t.live:
                        raise AssertionError("coset table action is not transitive")
                    number[d] = n
                    order[n] = d
                    n += 1
        if n != t.live:
            raise AssertionError("coset table action is not transitive")

        gens = [[0] * n for _ in range(3)]
        for g in range(3):
            col = gens[g]
            for head in range(n):
                c = order[head]
                col[head] = number[_find(t, t.table[3 * c + g])]
        return n, gens
    finally:
        free(number)
        free(order)
