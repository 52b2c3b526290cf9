"""Degree sequences: canonical run-length form, graphicality, realization,
and the sequence-level transforms (complement, split inverse, composition).

A :class:`DegreeSequence` is a non-increasing multiset of vertex degrees
stored as strictly decreasing (degree, multiplicity) runs. Multiplicities
are plain Python ints, so synthetic sequences with millions of equal degrees
stay tiny. A :class:`PairedDegreeSequence` is a split component's sequence
with the clique-side and stable-side blocks kept apart.

Text format: comma-separated degrees with optional caret multiplicity
(``8^4,5^4,2^2``); a paired sequence joins its two parts with a single
semicolon and writes an empty part as ``-`` (``3,2;1^3``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from . import _kernel
from .errors import FormatError, NegativeDegree, NotGraphical

_RUN_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class DegreeSequence:
    """Run-length encoded, non-increasing degree multiset."""

    runs: tuple[tuple[int, int], ...]

    # Degrees may legitimately reach or exceed the run total when the
    # sequence is one part of a paired form, so only the run-length shape is
    # enforced here; standalone realizability is is_graphical's job.
    def __post_init__(self) -> None:
        prev = None
        for d, m in self.runs:
            if m < 1:
                raise ValueError("multiplicity must be positive")
            if d < 0:
                raise NegativeDegree(f"negative degree {d}")
            if prev is not None and d >= prev:
                raise ValueError("runs must be strictly decreasing")
            prev = d

    @cached_property
    def n(self) -> int:
        return sum(m for _, m in self.runs)

    @cached_property
    def degree_sum(self) -> int:
        return sum(d * m for d, m in self.runs)

    def values_mults(self) -> tuple[list[int], list[int]]:
        return [d for d, _ in self.runs], [m for _, m in self.runs]

    def degrees(self) -> Iterator[int]:
        """Yield individual degrees; avoid on huge multiplicities."""
        for d, m in self.runs:
            yield from (d,) * m

    def to_list(self) -> list[int]:
        return list(self.degrees())

    def to_text(self) -> str:
        if not self.runs:
            return "-"
        return ",".join(f"{d}^{m}" if m > 1 else str(d) for d, m in self.runs)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class PairedDegreeSequence:
    """Split component sequence with clique (K) and stable (S) blocks."""

    kpart: DegreeSequence
    spart: DegreeSequence

    @property
    def p(self) -> int:
        return self.kpart.n

    @property
    def q(self) -> int:
        return self.spart.n

    @property
    def order(self) -> int:
        return self.p + self.q

    def validate(self) -> None:
        """Check the split-structure bounds and merged graphicality."""
        p = self.p
        if self.kpart.runs and self.kpart.runs[-1][0] < p - 1:
            raise ValueError("clique-side degree below p-1")
        if self.spart.runs and self.spart.runs[0][0] > p:
            raise ValueError("stable-side degree above p")
        # cross edges are counted once from each side
        if self.kpart.degree_sum - p * (p - 1) != self.spart.degree_sum:
            raise ValueError("clique/stable cross-degree sums disagree")
        if not is_graphical(self.merged()):
            raise NotGraphical(f"merged sequence of {self} not graphical")

    def merged(self) -> DegreeSequence:
        return _merge_runs(self.kpart.runs, self.spart.runs)

    def to_text(self) -> str:
        return f"{self.kpart.to_text()};{self.spart.to_text()}"

    def __str__(self) -> str:
        return self.to_text()


def _merge_runs(*run_lists: tuple[tuple[int, int], ...]) -> DegreeSequence:
    """Merge descending run lists, combining equal-degree runs."""
    merged: list[list[int]] = []
    streams = [list(r) for r in run_lists if r]
    idx = [0] * len(streams)
    while True:
        best = -1
        for s, stream in enumerate(streams):
            if idx[s] < len(stream):
                if best < 0 or stream[idx[s]][0] > streams[best][idx[best]][0]:
                    best = s
        if best < 0:
            break
        d, m = streams[best][idx[best]]
        idx[best] += 1
        if merged and merged[-1][0] == d:
            merged[-1][1] += m
        else:
            merged.append([d, m])
    return DegreeSequence(tuple((d, m) for d, m in merged))


def _seq_from_lists(vals: list[int], mults: list[int]) -> DegreeSequence:
    return DegreeSequence(tuple(zip(vals, mults)))


def normalize(raw: list[int]) -> DegreeSequence:
    """Canonical run-length form of a raw degree list. Idempotent."""
    for d in raw:
        if d < 0:
            raise NegativeDegree(f"negative degree {d}")
    vals, mults = _kernel.normalize_runs(list(raw))
    return _seq_from_lists(vals, mults)


def is_graphical(s: DegreeSequence) -> bool:
    """Erdos-Gallai realizability test, evaluated at run boundaries."""
    vals, mults = s.values_mults()
    return _kernel.eg_graphical(vals, mults)


def complement_seq(s: DegreeSequence) -> DegreeSequence:
    """Degree sequence of the complement: d -> n-1-d. Involution."""
    n = s.n
    return DegreeSequence(tuple((n - 1 - d, m) for d, m in reversed(s.runs)))


def complement_paired(ps: PairedDegreeSequence) -> PairedDegreeSequence:
    """Paired complement: degrees complement within the whole component and
    the K and S parts swap roles."""
    n = ps.order
    new_k = tuple((n - 1 - d, m) for d, m in reversed(ps.spart.runs))
    new_s = tuple((n - 1 - d, m) for d, m in reversed(ps.kpart.runs))
    return PairedDegreeSequence(DegreeSequence(new_k), DegreeSequence(new_s))


def inverse_paired(ps: PairedDegreeSequence) -> PairedDegreeSequence:
    """Split inverse: clique edges dropped, stable side turned into a clique.

    K-part degrees lose p-1, S-part degrees gain q-1, and the parts swap
    roles. Involution.
    """
    p, q = ps.p, ps.q
    new_k = tuple((d + q - 1, m) for d, m in ps.spart.runs)
    new_s = tuple((d - (p - 1), m) for d, m in ps.kpart.runs)
    return PairedDegreeSequence(DegreeSequence(new_k), DegreeSequence(new_s))


def compose_seq(head: PairedDegreeSequence, tail: DegreeSequence) -> DegreeSequence:
    """Sequence of the composition: the head's clique side dominates the tail.

    K degrees gain |tail|, tail degrees gain p, S degrees are unchanged; the
    three blocks concatenate in non-increasing order.
    """
    p, t = head.p, tail.n
    top = tuple((d + t, m) for d, m in head.kpart.runs)
    mid = tuple((d + p, m) for d, m in tail.runs)
    return _merge_runs(top, mid, head.spart.runs)


def parse_sequence(text: str) -> DegreeSequence:
    """Parse the ``8^4,5^4,2^2`` text form (``-`` is the empty sequence)."""
    text = text.strip()
    if text in ("", "-"):
        return DegreeSequence(())
    degrees: list[tuple[int, int]] = []
    for part in text.split(","):
        m = _RUN_RE.match(part)
        if not m:
            raise FormatError(f"bad degree run {part!r}")
        degrees.append((int(m.group(1)), int(m.group(2) or 1)))
    raw_vals: dict[int, int] = {}
    for d, mult in degrees:
        if mult < 1:
            raise FormatError(f"bad multiplicity in {text!r}")
        raw_vals[d] = raw_vals.get(d, 0) + mult
    runs = tuple(sorted(raw_vals.items(), reverse=True))
    try:
        return DegreeSequence(runs)
    except (ValueError, NegativeDegree) as exc:
        raise FormatError(str(exc)) from exc


def parse_paired(text: str) -> PairedDegreeSequence:
    """Parse the ``3,2;1^3`` paired text form."""
    if text.count(";") != 1:
        raise FormatError("paired sequence needs exactly one ';'")
    k_text, s_text = text.split(";")
    kpart = parse_sequence(k_text)
    spart = parse_sequence(s_text)
    ps = PairedDegreeSequence(kpart, spart)
    try:
        ps.validate()
    except (ValueError, NotGraphical) as exc:
        raise FormatError(f"invalid paired sequence {text!r}: {exc}") from exc
    return ps


def realize(s: DegreeSequence):
    """Deterministic Havel-Hakimi realization.

    Vertices are numbered in non-increasing degree order; each round the
    highest-degree unfinished vertex (lowest id on ties) connects to the
    next-highest targets, again breaking ties by lower id.
    """
    from . import graphcore

    if not is_graphical(s):
        raise NotGraphical(f"{s} is not graphical")
    remaining = s.to_list()
    n = len(remaining)
    adj: list[list[int]] = [[] for _ in range(n)]
    active = [v for v in range(n) if remaining[v]]
    while active:
        active.sort(key=lambda v: (-remaining[v], v))
        u = active[0]
        need = remaining[u]
        targets = active[1 : need + 1]
        if len(targets) < need:
            raise NotGraphical(f"{s} is not graphical")
        remaining[u] = 0
        for v in targets:
            adj[u].append(v)
            adj[v].append(u)
            remaining[v] -= 1
        active = [v for v in active if remaining[v]]
    return graphcore.Graph.from_adjacency(adj)


EMPTY = DegreeSequence(())
