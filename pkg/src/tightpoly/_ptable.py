"""Pure-Python coset enumeration kernel.

HLT-style Todd-Coxeter over the trivial subgroup for presentations on three
involutory generators.  The compiled twin in ``_ctable`` implements exactly
the same algorithm; both produce identical tables for identical inputs so the
backends are interchangeable.

The alphabet is involutory: each generator is its own inverse, so the coset
table has three columns and relator scans never need inverse letters.

Conventions:
  * cosets are ints, coset 0 is the trivial-subgroup coset (the identity);
  * ``table[3*c + g]`` is c*rho_g, or -1 while undefined;
  * coincidences are merged through a union-find in which the smaller coset
    index always survives, so coset 0 is live forever.
"""

from __future__ import annotations

from collections import deque

BOUND_EXCEEDED = None  # sentinel result


class _Bound(Exception):
    pass


def enumerate_table(relators, max_cosets, total_cap, strategy=0):
    """Run the enumeration; return (n, gens) or BOUND_EXCEEDED.

    ``gens`` is a list of three permutations (lists of length n), the right
    multiplication action of rho0, rho1, rho2 on the cosets after breadth
    first renumbering from coset 0 with generator order 0, 1, 2.

    ``strategy`` selects the coset-definition order: 0 scans relators in the
    order given, 1 in reversed order.  The renumbered result is identical for
    any strategy; the option exists so tests can confirm that.
    """
    rels = [list(r) for r in relators if len(r) > 0]
    if strategy == 1:
        rels.reverse()

    table = [-1, -1, -1]
    parent = [0]
    state = {"live": 1}

    def find(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def new_coset():
        idx = len(parent)
        if idx >= total_cap or state["live"] + 1 > max_cosets:
            raise _Bound
        parent.append(idx)
        table.extend((-1, -1, -1))
        state["live"] += 1
        return idx

    pending = deque()

    def merge(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        state["live"] -= 1
        pending.append(b)

    def coincidence(a, b):
        merge(a, b)
        while pending:
            dead = pending.popleft()
            base = 3 * dead
            for g in range(3):
                d = table[base + g]
                if d == -1:
                    continue
                table[base + g] = -1
                if table[3 * d + g] == dead:
                    table[3 * d + g] = -1
                mu = find(dead)
                nu = find(d)
                if table[3 * mu + g] != -1:
                    merge(nu, table[3 * mu + g])
                elif table[3 * nu + g] != -1:
                    merge(mu, table[3 * nu + g])
                else:
                    table[3 * mu + g] = nu
                    table[3 * nu + g] = mu

    def scan_and_fill(alpha, w):
        f, i = alpha, 0
        b, j = alpha, len(w) - 1
        while True:
            while i <= j and table[3 * f + w[i]] != -1:
                f = table[3 * f + w[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[3 * b + w[j]] != -1:
                b = table[3 * b + w[j]]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if j == i:
                table[3 * f + w[i]] = b
                table[3 * b + w[i]] = f
                return
            beta = new_coset()
            table[3 * f + w[i]] = beta
            table[3 * beta + w[i]] = f

    try:
        alpha = 0
        while alpha < len(parent):
            if parent[alpha] == alpha:
                for w in rels:
                    scan_and_fill(alpha, w)
                    if parent[alpha] != alpha:
                        break
            alpha += 1
    except _Bound:
        return BOUND_EXCEEDED

    return _compact(table, parent, find)


def _compact(table, parent, find):
    """Resolve dead entries, renumber live cosets breadth first from 0."""
    order = [0]
    number = {0: 0}
    for c in order:
        for g in range(3):
            d = table[3 * c + g]
            if d == -1:
                raise AssertionError("incomplete coset table after enumeration")
            d = find(d)
            if d not in number:
                number[d] = len(order)
                order.append(d)
    live = sum(1 for c in range(len(parent)) if parent[c] == c)
    if live != len(order):
        raise AssertionError("coset table action is not transitive")
    n = len(order)
    gens = [[0] * n for _ in range(3)]
    for new, c in enumerate(order):
        for g in range(3):
            gens[g][new] = number[find(table[3 * c + g])]
    return n, gens
