"""Slow, independent reference computations used only by the tests."""

from itertools import combinations, product


def span_rank(matrix):
    """GF(2) rank as log2 of the number of distinct row combinations."""
    n = len(matrix)
    if n == 0:
        return 0
    rows = [tuple(r) for r in matrix]
    span = set()
    for coeffs in product((0, 1), repeat=n):
        vec = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % 2 for j in range(len(rows[0])))
        span.add(vec)
    return len(span).bit_length() - 1


def marked_matrix(n, edges, marks):
    a = [[0] * n for _ in range(n)]
    for u, v in edges:
        a[u][v] = a[v][u] = 1
    for v in marks:
        a[v][v] = 1
    return a


def corank_sum_poly(n, edges):
    """{degree: count} of n - corank over all mark subsets, by span_rank."""
    counts = {}
    for k in range(n + 1):
        for marks in combinations(range(n), k):
            r = span_rank(marked_matrix(n, edges, marks))
            counts[r] = counts.get(r, 0) + 1
    return counts


def interlaced_pairs(word):
    """Pairs of labels whose occurrences alternate, by direct position test."""
    pos = {}
    for i, x in enumerate(word):
        pos.setdefault(x, []).append(i)
    out = set()
    for x, y in combinations(sorted(pos), 2):
        a, b = pos[x]
        c, d = pos[y]
        if a < c < b < d or c < a < d < b:
            out.add((x, y))
    return out
