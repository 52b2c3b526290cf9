"""Canonical decomposition of a degree sequence into indecomposable
components, plus the compact form that merges single-vertex runs.

The head of each strip is the top p degrees (lowered by the middle size)
paired with the bottom q degrees; the middle, lowered by p, is what remains.
Strips repeat until the remainder admits no cut, and the tie-break is the
lexicographically smallest (p, q), which always peels exactly one
indecomposable component.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .degseq import (
    DegreeSequence,
    PairedDegreeSequence,
    compose_seq,
    is_graphical,
)
from .errors import NotGraphical

K1 = PairedDegreeSequence(DegreeSequence(((0, 1),)), DegreeSequence(()))
S1 = PairedDegreeSequence(DegreeSequence(()), DegreeSequence(((0, 1),)))


@dataclass(frozen=True)
class Decomposition:
    """Ordered components, outermost (G_k) first, and the indecomposable
    tail (G_0) as a plain sequence."""

    components: tuple[PairedDegreeSequence, ...]
    tail: DegreeSequence

    @property
    def n(self) -> int:
        return sum(c.order for c in self.components) + self.tail.n

    def to_report(self) -> dict:
        return {
            "components": [
                {"k": c.kpart.to_text(), "s": c.spart.to_text()}
                for c in self.components
            ],
            "tail": self.tail.to_text(),
        }


@dataclass(frozen=True)
class CompactDecomposition:
    """Canonical decomposition with maximal single-vertex runs merged into
    complete ((m-1)^m; -) or edgeless (-; 0^m) blocks.

    ``tail`` is None when the single-vertex G_0 was absorbed into a block;
    otherwise it is the multi-vertex tail sequence.
    """

    components: tuple[PairedDegreeSequence, ...]
    tail: DegreeSequence | None

    def to_report(self) -> dict:
        return {
            "components": [
                {"k": c.kpart.to_text(), "s": c.spart.to_text()}
                for c in self.components
            ],
            "tail": None if self.tail is None else self.tail.to_text(),
        }


def find_split_point(s: DegreeSequence) -> tuple[int, int] | None:
    """Lexicographically smallest (p, q) cut, or None if indecomposable."""
    vals, mults = s.values_mults()
    return _kernel.split_point(vals, mults)


def decompose(s: DegreeSequence) -> Decomposition:
    """Full canonical decomposition of a graphical sequence."""
    if not is_graphical(s):
        raise NotGraphical(f"{s} is not graphical")
    vals, mults = s.values_mults()
    records = _kernel.decompose_runs(vals, mults)
    components: list[PairedDegreeSequence] = []
    tail = DegreeSequence(())
    for rec in records:
        kind = rec[0]
        if kind == "k1":
            components.extend([K1] * rec[1])
        elif kind == "s1":
            components.extend([S1] * rec[1])
        elif kind == "head":
            _, kv, km, sv, sm = rec
            components.append(
                PairedDegreeSequence(
                    DegreeSequence(tuple(zip(kv, km))),
                    DegreeSequence(tuple(zip(sv, sm))),
                )
            )
        else:
            tv, tm = rec[1], rec[2]
            tail = DegreeSequence(tuple(zip(tv, tm)))
    return Decomposition(tuple(components), tail)


def compose_all(
    components: list[PairedDegreeSequence] | tuple[PairedDegreeSequence, ...],
    tail: DegreeSequence,
) -> DegreeSequence:
    """Right-fold of compose_seq; the inverse of decompose."""
    out = tail
    for head in reversed(list(components)):
        out = compose_seq(head, out)
    return out


def _block(kind: str, m: int) -> PairedDegreeSequence:
    if kind == "k":
        return PairedDegreeSequence(DegreeSequence(((m - 1, m),)), DegreeSequence(()))
    return PairedDegreeSequence(DegreeSequence(()), DegreeSequence(((0, m),)))


def compact(d: Decomposition) -> CompactDecomposition:
    """Merge maximal runs of same-type single-vertex components.

    A single-vertex tail takes the type of the preceding component when that
    component is itself a single vertex; after a multi-vertex component it
    stays a one-vertex block on the stable side, matching how the component
    list reports it, and with no preceding component at all it becomes a
    one-vertex complete block.
    """
    items: list[tuple[str, PairedDegreeSequence]] = []
    for c in d.components:
        if c == K1:
            items.append(("k", c))
        elif c == S1:
            items.append(("s", c))
        else:
            items.append(("big", c))
    tail: DegreeSequence | None = d.tail
    if d.tail.n == 1:
        if not items:
            items.append(("k", K1))
        elif items[-1][0] == "big":
            items.append(("s", S1))
        else:
            items.append((items[-1][0], _block(items[-1][0], 1)))
        tail = None
    out: list[PairedDegreeSequence] = []
    run_kind: str | None = None
    run_len = 0
    for kind, comp in items:
        if kind == "big":
            if run_len:
                out.append(_block(run_kind, run_len))
                run_kind, run_len = None, 0
            out.append(comp)
        elif kind == run_kind:
            run_len += 1
        else:
            if run_len:
                out.append(_block(run_kind, run_len))
            run_kind, run_len = kind, 1
    if run_len:
        out.append(_block(run_kind, run_len))
    return CompactDecomposition(tuple(out), tail)
