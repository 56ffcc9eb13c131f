"""Brute-force reference computations, independent of the package internals.

Words here are tuples of (name, sign) pairs; graphs are only queried for
vertex names and edges.
"""

from collections import deque
from itertools import combinations, permutations, product

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


def letters(g):
    return [(v, s) for v in g.vertices for s in (1, -1)]


def all_words(g, n):
    return product(letters(g), repeat=n)


def _commute(g, x, y):
    return x[0] != y[0] and g.has_edge(x[0], y[0])


def rewrite_moves(g, w):
    """Words one move away: swap adjacent commuting letters, or cancel x x^-1."""
    for k in range(len(w) - 1):
        x, y = w[k], w[k + 1]
        if x[0] == y[0] and x[1] == -y[1]:
            yield w[:k] + w[k + 2:]
        elif _commute(g, x, y):
            yield w[:k] + (y, x) + w[k + 2:]


def reachable(g, w):
    w = tuple(w)
    seen = {w}
    todo = deque([w])
    while todo:
        u = todo.popleft()
        for v in rewrite_moves(g, u):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def _key(g, w):
    order = {v: i for i, v in enumerate(g.vertices)}
    return tuple(2 * order[b] + (s < 0) for b, s in w)


def oracle_normal_form(g, w):
    """Shortlex least word among the shortest words reachable by rewriting."""
    r = reachable(g, w)
    m = min(len(u) for u in r)
    return min((u for u in r if len(u) == m), key=lambda u: _key(g, u))


def oracle_equal(g, u, v):
    ru = reachable(g, u)
    rv = reachable(g, v)
    mu = min(len(x) for x in ru)
    mv = min(len(x) for x in rv)
    return mu == mv and bool({x for x in ru if len(x) == mu} & {x for x in rv if len(x) == mv})


def oracle_trivial(g, w):
    return () in reachable(g, w)


def rewrite_components(g, max_len):
    """Component label for every word of length <= max_len in the rewriting graph.

    Words of length n over the A = 2|V| letters (letter index 2*i for x_i and
    2*i + 1 for its inverse) sit at offset sum(A**k, k < n) + base-A value.
    """
    A = 2 * len(g)
    comm = np.zeros((A, A), dtype=bool)
    for a in range(A):
        for b in range(A):
            va, vb = g.vertices[a >> 1], g.vertices[b >> 1]
            comm[a, b] = va != vb and g.has_edge(va, vb)
    offs = [0]
    for n in range(max_len + 1):
        offs.append(offs[-1] + A**n)
    rows, cols = [], []
    for n in range(2, max_len + 1):
        idx = np.arange(A**n, dtype=np.int64)
        for k in range(n - 1):
            p, q = A ** (n - 1 - k), A ** (n - 2 - k)
            a, b = (idx // p) % A, (idx // q) % A
            # each swap edge once, from the side where the larger letter is first
            m = comm[a, b] & (a > b)
            src = idx[m]
            rows.append(src + offs[n])
            cols.append(src + (b[m] - a[m]) * p + (a[m] - b[m]) * q + offs[n])
            m = (a ^ 1) == b
            src = idx[m]
            rows.append(src + offs[n])
            cols.append((src // (p * A)) * q + src % q + offs[n - 2])
    N = offs[-1]
    r = np.concatenate(rows) if rows else np.zeros(0, np.int64)
    c = np.concatenate(cols) if cols else np.zeros(0, np.int64)
    adj = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(N, N)).tocsr()
    return connected_components(adj, directed=False)[1]


def brute_induced(pattern, host):
    """All induced embeddings by trying every injection."""
    pv, hv = pattern.vertices, host.vertices
    out = []
    for img in permutations(hv, len(pv)):
        f = dict(zip(pv, img))
        if all(pattern.has_edge(u, v) == host.has_edge(f[u], f[v]) for u, v in combinations(pv, 2)):
            out.append(f)
    return out


def brute_isomorphic(g, h):
    return len(g) == len(h) and bool(brute_induced(g, h))


def count_reduced_free(n_gens, length):
    """Reduced words of the given length in a free group."""
    if length == 0:
        return 1
    return 2 * n_gens * (2 * n_gens - 1) ** (length - 1)


def graphs_up_to_iso(n):
    """One labelled representative per isomorphism class of graphs on n vertices."""
    from pcgroups.graph import CommutationGraph

    names = [f"x{i}" for i in range(n)]
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        canon = min(
            tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges)) for p in perms
        )
        if canon in seen:
            continue
        seen.add(canon)
        out.append(CommutationGraph(names, [(names[a], names[b]) for a, b in edges]))
    return out


def simulate_elimination(g, w, pairs):
    """Remove pairs greedily while one has only commuting live letters inside.

    Removing a pair never blocks another, so greedy removal succeeds iff
    some elimination order exists.  Returns True when the word empties.
    """
    w = list(w)
    cover = sorted(k for p in pairs for k in p)
    if cover != list(range(len(w))):
        return False
    for i, j in pairs:
        if not (i < j and w[i][0] == w[j][0] and w[i][1] == -w[j][1]):
            return False
    live = set(range(len(w)))
    todo = list(pairs)
    progress = True
    while todo and progress:
        progress = False
        for p in list(todo):
            i, j = p
            x = w[i][0]
            if all(w[k][0] != x and g.has_edge(x, w[k][0]) for k in range(i + 1, j) if k in live):
                live -= {i, j}
                todo.remove(p)
                progress = True
    return not todo
