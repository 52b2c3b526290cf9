"""Naive per-vertex reference implementations for differential testing.

Everything here is deliberately simple and quadratic; the run-aware kernels
are validated against these on small inputs.
"""


def expand(vals, mults):
    out = []
    for v, m in zip(vals, mults):
        out.extend([v] * m)
    return out


def eg_graphical_naive(vals, mults):
    d = expand(vals, mults)
    n = len(d)
    if n == 0:
        return True
    if sum(d) % 2 or d[0] >= n:
        return False
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def split_point_naive(vals, mults):
    """First (p, q) in lexicographic order satisfying the cut equation."""
    d = expand(vals, mults)
    n = len(d)
    for p in range(n):
        for q in range(n - p):
            if p + q == 0:
                continue
            if sum(d[:p]) == p * (n - q - 1) + (sum(d[n - q :]) if q else 0):
                return p, q
    return None


def decompose_naive(vals, mults):
    """Per-vertex strip loop; returns (heads, tail) as degree lists."""
    d = expand(vals, mults)
    heads = []
    while True:
        n = len(d)
        cut = split_point_naive(
            *_runs(d)
        )
        if cut is None:
            return heads, d
        p, q = cut
        mid = n - p - q
        heads.append(([x - mid for x in d[:p]], d[n - q :] if q else []))
        d = [x - p for x in d[p : n - q]]


def _runs(degrees):
    vals, mults = [], []
    for x in sorted(degrees, reverse=True):
        if vals and vals[-1] == x:
            mults[-1] += 1
        else:
            vals.append(x)
            mults.append(1)
    return vals, mults
