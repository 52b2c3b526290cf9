# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure kernel; the algorithm notes live in _pykernel.

Arithmetic stays in 64-bit C integers, which is safe while the vertex count
is below 2^31 (all intermediate products are bounded by n^2); larger inputs
are delegated to the pure kernel and its big ints.
"""

from libc.stdlib cimport free, malloc

IMPL_NAME = "c"

DEF GUARD = 2147483647  # 2^31 - 1


cdef inline object _fallback():
    from . import _pykernel
    return _pykernel


def normalize_runs(degrees):
    cdef Py_ssize_t n = len(degrees)
    if n == 0:
        return [], []
    if n > GUARD:
        m = _fallback()
        return m.normalize_runs(degrees)
    cdef long long *counts = <long long *> malloc(n * sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        counts[i] = 0
    cdef long long d
    try:
        for item in degrees:
            d = item
            if d < 0:
                raise ValueError("negative degree")
            if d >= n:
                raise ValueError(
                    "degree %d out of range for %d vertices" % (d, n)
                )
            counts[d] += 1
        vals = []
        mults = []
        for i in range(n - 1, -1, -1):
            if counts[i]:
                vals.append(i)
                mults.append(counts[i])
        return vals, mults
    finally:
        free(counts)


cdef struct RunArrays:
    long long *vals
    long long *ccnt
    long long *csum
    Py_ssize_t r


cdef int _load(object vals, object mults, RunArrays *ra) except -1:
    cdef Py_ssize_t r = len(vals)
    ra.r = r
    ra.vals = <long long *> malloc((r + 1) * sizeof(long long))
    ra.ccnt = <long long *> malloc((r + 1) * sizeof(long long))
    ra.csum = <long long *> malloc((r + 1) * sizeof(long long))
    if ra.vals == NULL or ra.ccnt == NULL or ra.csum == NULL:
        raise MemoryError()
    ra.ccnt[0] = 0
    ra.csum[0] = 0
    cdef Py_ssize_t t
    cdef long long v, m
    for t in range(r):
        v = vals[t]
        m = mults[t]
        ra.vals[t] = v
        ra.ccnt[t + 1] = ra.ccnt[t] + m
        ra.csum[t + 1] = ra.csum[t] + v * m
    return 0


cdef void _unload(RunArrays *ra):
    free(ra.vals)
    free(ra.ccnt)
    free(ra.csum)


cdef bint _too_big(object vals, object mults):
    cdef long long total = 0
    for m in mults:
        total += <long long> m
        if total > GUARD:
            return True
    if vals and <long long> vals[0] > GUARD:
        return True
    return False


def eg_graphical(vals, mults):
    if not vals:
        return True
    if _too_big(vals, mults):
        return _fallback().eg_graphical(vals, mults)
    cdef RunArrays ra
    _load(vals, mults, &ra)
    cdef Py_ssize_t r = ra.r
    cdef long long n = ra.ccnt[r]
    cdef Py_ssize_t t, a, b, mid
    cdef long long k, lhs, rhs
    try:
        if ra.csum[r] % 2 or ra.vals[0] >= n:
            return False
        for t in range(r):
            k = ra.ccnt[t + 1]
            lhs = ra.csum[t + 1]
            # first run index s > t with value < k
            a, b = t + 1, r
            while a < b:
                mid = (a + b) >> 1
                if ra.vals[mid] < k:
                    b = mid
                else:
                    a = mid + 1
            rhs = (
                k * (k - 1)
                + k * (ra.ccnt[a] - ra.ccnt[t + 1])
                + (ra.csum[r] - ra.csum[a])
            )
            if lhs > rhs:
                return False
        return True
    finally:
        _unload(&ra)


cdef long long _h(RunArrays *ra, Py_ssize_t hi, long long shift,
                  Py_ssize_t j, long long p):
    cdef long long cnt = ra.ccnt[hi] - ra.ccnt[hi - j]
    return p * cnt - (ra.csum[hi] - ra.csum[hi - j] - shift * cnt)


cdef int _cut_search(RunArrays *ra, Py_ssize_t lo, Py_ssize_t hi,
                     long long shift, long long n,
                     Py_ssize_t *out_i, Py_ssize_t *out_j,
                     long long *out_p, long long *out_q):
    cdef Py_ssize_t nruns = hi - lo
    cdef Py_ssize_t i, a, b, mid, jr, jle, jmax
    cdef long long p, top, gamma, thresh
    for i in range(1, nruns - 1):
        p = ra.ccnt[lo + i] - ra.ccnt[lo]
        if p < 2:
            continue
        jmax = nruns - i - 1
        top = ra.csum[lo + i] - ra.csum[lo] - shift * p
        gamma = p * (n - 1) - top
        thresh = p + shift
        # first run index >= lo+i with value < thresh
        a, b = lo + i, hi
        while a < b:
            mid = (a + b) >> 1
            if ra.vals[mid] < thresh:
                b = mid
            else:
                a = mid + 1
        jr = hi - a
        if jr > jmax:
            jr = jmax
        if jr <= 0 or _h(ra, hi, shift, jr, p) < gamma:
            continue
        a, b = 1, jr
        while a < b:
            mid = (a + b) >> 1
            if _h(ra, hi, shift, mid, p) >= gamma:
                b = mid
            else:
                a = mid + 1
        if _h(ra, hi, shift, a, p) == gamma:
            out_i[0] = i
            out_j[0] = a
            out_p[0] = p
            out_q[0] = ra.ccnt[hi] - ra.ccnt[hi - a]
            return 1
        # rising side jumped past gamma; try the falling side
        a, b = lo + i, hi
        while a < b:
            mid = (a + b) >> 1
            if ra.vals[mid] <= thresh:
                b = mid
            else:
                a = mid + 1
        jle = hi - a
        if jle > jmax:
            jle = jmax
        if jle >= jmax:
            continue
        a, b = jle + 1, jmax
        while a < b:
            mid = (a + b) >> 1
            if _h(ra, hi, shift, mid, p) <= gamma:
                b = mid
            else:
                a = mid + 1
        if _h(ra, hi, shift, a, p) == gamma:
            out_i[0] = i
            out_j[0] = a
            out_p[0] = p
            out_q[0] = ra.ccnt[hi] - ra.ccnt[hi - a]
            return 1
    return 0


def split_point(vals, mults):
    if _too_big(vals, mults):
        return _fallback().split_point(vals, mults)
    cdef RunArrays ra
    _load(vals, mults, &ra)
    cdef Py_ssize_t r = ra.r
    cdef long long n = ra.ccnt[r]
    cdef Py_ssize_t oi, oj
    cdef long long op, oq
    try:
        if n <= 1:
            return None
        if ra.vals[r - 1] == 0:
            return 0, 1
        if ra.vals[0] == n - 1:
            return 1, 0
        if _cut_search(&ra, 0, r, 0, n, &oi, &oj, &op, &oq):
            return op, oq
        return None
    finally:
        _unload(&ra)


def decompose_runs(vals, mults):
    if _too_big(vals, mults):
        return _fallback().decompose_runs(vals, mults)
    cdef RunArrays ra
    _load(vals, mults, &ra)
    cdef Py_ssize_t r = ra.r
    cdef long long n = ra.ccnt[r]
    cdef Py_ssize_t lo = 0, hi = r, t, oi, oj
    cdef long long shift = 0, m, op, oq, midn
    records = []
    try:
        while True:
            if n == 0:
                records.append(("tail", [], []))
                break
            if n == 1:
                records.append(("tail", [ra.vals[lo] - shift], [1]))
                break
            if ra.vals[hi - 1] - shift == 0:
                m = ra.ccnt[hi] - ra.ccnt[hi - 1]
                if m == n:
                    records.append(("s1", n - 1))
                    records.append(("tail", [0], [1]))
                    break
                records.append(("s1", m))
                hi -= 1
                n -= m
                continue
            if ra.vals[lo] - shift == n - 1:
                m = ra.ccnt[lo + 1] - ra.ccnt[lo]
                if m == n:
                    records.append(("k1", n - 1))
                    records.append(("tail", [0], [1]))
                    break
                records.append(("k1", m))
                lo += 1
                shift += m
                n -= m
                continue
            if not _cut_search(&ra, lo, hi, shift, n, &oi, &oj, &op, &oq):
                records.append(
                    (
                        "tail",
                        [ra.vals[t] - shift for t in range(lo, hi)],
                        [ra.ccnt[t + 1] - ra.ccnt[t] for t in range(lo, hi)],
                    )
                )
                break
            midn = n - op - oq
            records.append(
                (
                    "head",
                    [ra.vals[t] - shift - midn for t in range(lo, lo + oi)],
                    [ra.ccnt[t + 1] - ra.ccnt[t] for t in range(lo, lo + oi)],
                    [ra.vals[t] - shift for t in range(hi - oj, hi)],
                    [ra.ccnt[t + 1] - ra.ccnt[t] for t in range(hi - oj, hi)],
                )
            )
            lo += oi
            hi -= oj
            shift += op
            n = midn
        return records
    finally:
        _unload(&ra)
