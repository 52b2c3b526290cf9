"""Run-aware degree-sequence kernel, pure Python twin of the C extension.

Every function works on a run-length encoded degree sequence given as two
parallel lists: strictly decreasing run values and positive multiplicities.
Costs scale with the number of runs and emitted components, not with the
vertex count, so sequences with huge multiplicities stay cheap.

The decomposition routines search for "cut points" (p, q): indices splitting
the sorted sequence into a top block of p degrees, a bottom block of q
degrees, and a middle, such that

    sum(top p) == p * (N - q - 1) + sum(bottom q).

Cut points of one sequence form a chain (both coordinates non-decreasing
along it), and the lexicographically smallest cut strips exactly the first
component of the canonical decomposition. For a multi-vertex first component
both p and q land on run boundaries, while p <= 1 or q == 0 cuts are exactly
the isolated/dominant single-vertex strips; those two facts keep the search
run-granular.
"""

from bisect import bisect_left, bisect_right

IMPL_NAME = "python"


def normalize_runs(degrees):
    """Counting-sort a raw degree list into descending (values, mults) runs."""
    n = len(degrees)
    if n == 0:
        return [], []
    counts = [0] * n
    for d in degrees:
        if d < 0:
            raise ValueError("negative degree")
        if d >= n:
            raise ValueError("degree %d out of range for %d vertices" % (d, n))
        counts[d] += 1
    vals = []
    mults = []
    for d in range(n - 1, -1, -1):
        if counts[d]:
            vals.append(d)
            mults.append(counts[d])
    return vals, mults


def eg_graphical(vals, mults):
    """Erdos-Gallai test evaluated at run boundaries only.

    By Tripathi-Vijay the inequalities need only be checked at indices k
    with d_k > d_{k+1}, i.e. at run ends.
    """
    r = len(vals)
    if r == 0:
        return True
    ccnt, csum = _prefix(vals, mults)
    n = ccnt[r]
    if csum[r] % 2 or vals[0] >= n:
        return False
    neg = [-v for v in vals]  # ascending; makes bisect applicable
    for t in range(r):
        k = ccnt[t + 1]
        lhs = csum[t + 1]
        # suffix i > k: runs with value >= k contribute k each, smaller
        # values contribute themselves
        s = bisect_right(neg, -k, t + 1, r)  # first run with value < k
        rhs = k * (k - 1) + k * (ccnt[s] - ccnt[t + 1]) + (csum[r] - csum[s])
        if lhs > rhs:
            return False
    return True


def _prefix(vals, mults):
    r = len(vals)
    ccnt = [0] * (r + 1)
    csum = [0] * (r + 1)
    for t in range(r):
        ccnt[t + 1] = ccnt[t] + mults[t]
        csum[t + 1] = csum[t] + vals[t] * mults[t]
    return ccnt, csum


def _cut_search(neg, ccnt, csum, lo, hi, shift, n):
    """Lex-min cut with p >= 2, q >= 1 over run boundaries of [lo, hi).

    Returns (i, j, p, q) where the top i and bottom j window runs form the
    cut, or None. Assumes the isolated/dominant fast paths already failed,
    which confines any remaining cut to run boundaries.
    """
    base_cnt = ccnt[lo]
    nruns = hi - lo

    def bot_cnt(j):
        return ccnt[hi] - ccnt[hi - j]

    def h(j, p):
        # p*q - (effective sum of the bottom q degrees)
        cnt = ccnt[hi] - ccnt[hi - j]
        return p * cnt - (csum[hi] - csum[hi - j] - shift * cnt)

    for i in range(1, nruns - 1):
        p = ccnt[lo + i] - base_cnt
        if p < 2:
            continue
        jmax = nruns - i - 1
        top = csum[lo + i] - csum[lo] - shift * p
        gamma = p * (n - 1) - top  # > 0 once the dominant fast path failed
        # h rises strictly over bottom runs with value < p, is flat at
        # value == p, then falls strictly; zeros of the cut equation are
        # h == gamma crossings.
        first_lt = bisect_right(neg, -(p + shift), lo + i, hi)
        jr = min(hi - first_lt, jmax)
        if jr <= 0 or h(jr, p) < gamma:
            continue
        a, b = 1, jr
        while a < b:
            mid = (a + b) // 2
            if h(mid, p) >= gamma:
                b = mid
            else:
                a = mid + 1
        if h(a, p) == gamma:
            return i, a, p, bot_cnt(a)
        # the rising side jumped past gamma; the falling side may cross back
        first_le = bisect_left(neg, -(p + shift), lo + i, hi)
        jle = min(hi - first_le, jmax)
        if jle >= jmax:
            continue
        a, b = jle + 1, jmax
        while a < b:
            mid = (a + b) // 2
            if h(mid, p) <= gamma:
                b = mid
            else:
                a = mid + 1
        if h(a, p) == gamma:
            return i, a, p, bot_cnt(a)
    return None


def split_point(vals, mults):
    """Lexicographically smallest cut (p, q) of a graphical sequence."""
    r = len(vals)
    ccnt, csum = _prefix(vals, mults)
    n = ccnt[r]
    if n <= 1:
        return None
    if vals[-1] == 0:
        return 0, 1
    if vals[0] == n - 1:
        return 1, 0
    neg = [-v for v in vals]
    found = _cut_search(neg, ccnt, csum, 0, r, 0, n)
    if found is None:
        return None
    _, _, p, q = found
    return p, q


def decompose_runs(vals, mults):
    """Strip the canonical decomposition off a graphical run sequence.

    Returns a list of records, in head-first order:
      ('k1', count)  count consecutive dominant-vertex components (0; -)
      ('s1', count)  count consecutive isolated-vertex components (-; 0)
      ('head', kvals, kmults, svals, smults)  one multi-vertex split head
      ('tail', tvals, tmults)  the final indecomposable remainder (last)

    Dominant and isolated vertices strip one at a time under the
    lexicographic rule, and a maximal run of them always strips as that many
    consecutive single-vertex components, which keeps the loop run-granular.
    """
    records = []
    r = len(vals)
    ccnt, csum = _prefix(vals, mults)
    neg = [-v for v in vals]
    n = ccnt[r]
    lo, hi = 0, r
    shift = 0
    while True:
        if n == 0:
            records.append(("tail", [], []))
            break
        if n == 1:
            records.append(("tail", [vals[lo] - shift], [1]))
            break
        if vals[hi - 1] - shift == 0:
            m = mults[hi - 1]
            if m == n:
                records.append(("s1", n - 1))
                records.append(("tail", [0], [1]))
                break
            records.append(("s1", m))
            hi -= 1
            n -= m
            continue
        if vals[lo] - shift == n - 1:
            m = mults[lo]
            if m == n:
                records.append(("k1", n - 1))
                records.append(("tail", [0], [1]))
                break
            records.append(("k1", m))
            lo += 1
            shift += m
            n -= m
            continue
        found = _cut_search(neg, ccnt, csum, lo, hi, shift, n)
        if found is None:
            records.append(
                ("tail", [vals[t] - shift for t in range(lo, hi)], list(mults[lo:hi]))
            )
            break
        i, j, p, q = found
        mid = n - p - q
        kvals = [vals[t] - shift - mid for t in range(lo, lo + i)]
        kmults = list(mults[lo : lo + i])
        svals = [vals[t] - shift for t in range(hi - j, hi)]
        smults = list(mults[hi - j : hi])
        records.append(("head", kvals, kmults, svals, smults))
        lo += i
        hi -= j
        shift += p
        n = mid
    return records
