"""Split-sequence recognition via the Hammer-Simeone equality.

With degrees sorted non-increasing and m the largest index with
d_m >= m - 1, the sequence is split iff

    sum_{i<=m} d_i == m(m-1) + sum_{i>m} min(d_i, m),

in which case the top m degrees form the clique side. Because m is maximal,
every later degree is below m, so the min() collapses to a plain suffix sum.
The partition has |K| equal to the clique number; it is the unique balanced
partition when d_m >= m and the K-max partition when d_m == m - 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .degseq import DegreeSequence, PairedDegreeSequence, is_graphical
from .errors import NotGraphical


class SplitKind(enum.Enum):
    BALANCED = "balanced"
    KMAX = "k-max"
    SMAX = "s-max"
    NOT_SPLIT = "not-split"


@dataclass(frozen=True)
class SplitClass:
    kind: SplitKind
    paired: PairedDegreeSequence | None


def durfee_index(s: DegreeSequence) -> int:
    """Largest i with d_i >= i - 1 (1-indexed); 0 for the empty sequence."""
    m = 0
    pos = 0
    for d, mult in s.runs:
        if d >= pos:  # first vertex of this run has index pos+1
            m = min(pos + mult, d + 1)
        pos += mult
        if d < pos:
            break
    return m


def _take_top(s: DegreeSequence, count: int) -> tuple[DegreeSequence, DegreeSequence]:
    """Split the runs after the first `count` degrees."""
    top: list[tuple[int, int]] = []
    rest: list[tuple[int, int]] = []
    left = count
    for d, mult in s.runs:
        if left >= mult:
            top.append((d, mult))
            left -= mult
        elif left > 0:
            top.append((d, left))
            rest.append((d, mult - left))
            left = 0
        else:
            rest.append((d, mult))
    return DegreeSequence(tuple(top)), DegreeSequence(tuple(rest))


def determine_split(s: DegreeSequence) -> SplitClass:
    """Classify a graphical sequence as balanced split, unbalanced split
    (the K-max partition is returned), or not split."""
    if not is_graphical(s):
        raise NotGraphical(f"{s} is not graphical")
    if s.n == 0:
        return SplitClass(SplitKind.NOT_SPLIT, None)
    m = durfee_index(s)
    top_sum = 0
    suffix_sum = 0
    pos = 0
    d_m = 0
    for d, mult in s.runs:
        take = max(0, min(mult, m - pos))
        top_sum += d * take
        suffix_sum += d * (mult - take)
        if take and pos < m <= pos + take:
            d_m = d
        pos += mult
    if top_sum != m * (m - 1) + suffix_sum:
        return SplitClass(SplitKind.NOT_SPLIT, None)
    kpart, spart = _take_top(s, m)
    paired = PairedDegreeSequence(kpart, spart)
    kind = SplitKind.BALANCED if d_m >= m else SplitKind.KMAX
    return SplitClass(kind, paired)


def smax_partition(sc: SplitClass) -> SplitClass:
    """Shift the swing vertex of a K-max partition to the stable side."""
    if sc.kind is not SplitKind.KMAX or sc.paired is None:
        raise ValueError("S-max shift applies to K-max classes only")
    ps = sc.paired
    kpart, swing = _take_top(ps.kpart, ps.p - 1)
    merged = list(ps.spart.runs)
    d = swing.runs[0][0]
    if merged and merged[0][0] == d:
        merged[0] = (d, merged[0][1] + 1)
    else:
        merged.insert(0, (d, 1))
    return SplitClass(
        SplitKind.SMAX,
        PairedDegreeSequence(kpart, DegreeSequence(tuple(merged))),
    )
