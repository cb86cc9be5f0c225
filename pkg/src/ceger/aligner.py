"""Word-level Levenshtein alignment, edit distance and WER."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .tokens import EditOp, OpKind, TokenSeq


class EmptyReference(ValueError):
    """WER is undefined for a non-empty hypothesis against an empty reference."""


@dataclass(frozen=True)
class Alignment:
    ops: tuple[EditOp, ...]
    hyp_len: int
    ref_len: int

    @property
    def distance(self) -> int:
        return sum(1 for op in self.ops if op.kind is not OpKind.MATCH)

    def replay(self) -> list[str]:
        out: list[str] = []
        for op in self.ops:
            out.extend(op.ref_words)
        return out


@dataclass(frozen=True)
class WerBreakdown:
    substitutions: int
    deletions: int
    insertions: int
    ref_len: int

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def ratio(self) -> Fraction:
        if self.ref_len == 0:
            return Fraction(0)
        return Fraction(self.errors, self.ref_len)

    @property
    def wer(self) -> float:
        return float(self.ratio)


def _cost_matrix(hyp: Sequence[str], ref: Sequence[str]) -> list[list[int]]:
    m, n = len(hyp), len(ref)
    d = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        d[i][0] = i
    for j in range(1, n + 1):
        d[0][j] = j
    for i in range(1, m + 1):
        row, prev = d[i], d[i - 1]
        h = hyp[i - 1]
        for j in range(1, n + 1):
            diag = prev[j - 1] + (h != ref[j - 1])
            row[j] = min(diag, prev[j] + 1, row[j - 1] + 1)
    return d


def align(hyp: Sequence[str], ref: Sequence[str]) -> Alignment:
    """Minimum-cost unit alignment of ``hyp`` onto ``ref``.

    Backtrace runs from the bottom-right cell and, among optimal moves,
    prefers Match, then Substitute, then Delete, then Insert.
    """
    hyp, ref = TokenSeq(hyp), TokenSeq(ref)
    d = _cost_matrix(hyp, ref)
    i, j = len(hyp), len(ref)
    ops: list[EditOp] = []
    while i > 0 or j > 0:
        cur = d[i][j]
        if i > 0 and j > 0:
            h, r = hyp[i - 1], ref[j - 1]
            if h == r and cur == d[i - 1][j - 1]:
                ops.append(EditOp(OpKind.MATCH, (h,), (r,)))
                i, j = i - 1, j - 1
                continue
            if h != r and cur == d[i - 1][j - 1] + 1:
                ops.append(EditOp(OpKind.SUBSTITUTE, (h,), (r,)))
                i, j = i - 1, j - 1
                continue
        if i > 0 and cur == d[i - 1][j] + 1:
            ops.append(EditOp(OpKind.DELETE, (hyp[i - 1],), ()))
            i -= 1
        else:
            ops.append(EditOp(OpKind.INSERT, (), (ref[j - 1],)))
            j -= 1
    ops.reverse()
    return Alignment(tuple(ops), len(hyp), len(ref))


def edit_distance(hyp: Sequence[str], ref: Sequence[str]) -> int:
    return _cost_matrix(hyp, ref)[len(hyp)][len(ref)]


def breakdown(alignment: Alignment) -> WerBreakdown:
    counts = {kind: 0 for kind in OpKind}
    for op in alignment.ops:
        counts[op.kind] += 1
    return WerBreakdown(
        substitutions=counts[OpKind.SUBSTITUTE],
        deletions=counts[OpKind.DELETE],
        insertions=counts[OpKind.INSERT],
        ref_len=alignment.ref_len,
    )


def wer(hyp: Sequence[str], ref: Sequence[str]) -> WerBreakdown:
    """S/D/I counts of ``hyp`` against ``ref``.

    Deletions are extra hypothesis words, insertions are missing reference
    words, following the hypothesis-centric naming of the edit commands.
    An empty pair scores 0.
    """
    if not ref and hyp:
        raise EmptyReference("reference is empty but hypothesis is not")
    return breakdown(align(hyp, ref))
