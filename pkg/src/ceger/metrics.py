"""Corpus-level WER, output length, and command distribution reports."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import grammar
from .aligner import align, breakdown
from .baselines import CEGER, Representation
from .corpus import CorpusRecord
from .engine import command_stats
from .tokens import CommandKind, tokenize

LENGTH_UNIT_NOTE = "avg_output_len counts whitespace-separated tokens of the serialized payload"


class EmptyCorpus(ValueError):
    pass


@dataclass(frozen=True)
class ErrorCounts:
    """Pooled error and reference-word totals; addition merges shards."""

    errors: int = 0
    ref_words: int = 0

    def __add__(self, other: "ErrorCounts") -> "ErrorCounts":
        return ErrorCounts(self.errors + other.errors, self.ref_words + other.ref_words)

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.errors, self.ref_words) if self.ref_words else Fraction(0)


def score_text(output: str, ref: str, lowercase: bool = False) -> ErrorCounts:
    hyp_tokens = tokenize(output, lowercase)
    ref_tokens = tokenize(ref, lowercase)
    b = breakdown(align(hyp_tokens, ref_tokens))
    return ErrorCounts(b.errors, b.ref_len)


def relative_reduction(asr_wer: float, method_wer: float) -> float:
    """Fractional WER reduction; 0 when the ASR is already error-free."""
    if asr_wer == 0:
        return 0.0
    return (asr_wer - method_wer) / asr_wer


@dataclass(frozen=True)
class MethodSummary:
    method: str
    corpus_wer: float
    avg_output_len: float
    relative_reduction: float
    failures: int
    records: int

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "wer": round(self.corpus_wer, 6),
            "reduction": round(self.relative_reduction, 6),
            "avg_output_len": round(self.avg_output_len, 6),
            "failures": self.failures,
        }


def asr_counts(records: Sequence[CorpusRecord], lowercase: bool = False) -> ErrorCounts:
    total = ErrorCounts()
    for rec in records:
        total += score_text(rec.asr, rec.ref, lowercase)
    return total


def summarize(records: Sequence[CorpusRecord], method: str, lowercase: bool = False) -> MethodSummary:
    """Pool errors over all records for one method.

    A record whose expansion failed, or that has no result for ``method``,
    is scored on its raw ASR text and counted as a failure.
    """
    if not records:
        raise EmptyCorpus("no records to summarize")
    base = ErrorCounts()
    scored = ErrorCounts()
    tokens = 0
    failures = 0
    for rec in records:
        base += score_text(rec.asr, rec.ref, lowercase)
        result = rec.results.get(method)
        if result is None or result.output is None:
            failures += 1
            output = rec.asr
        else:
            output = result.output
        if result is not None:
            tokens += Representation(method, result.payload).token_count
        scored += score_text(output, rec.ref, lowercase)
    asr_wer = float(base.ratio)
    method_wer = float(scored.ratio)
    return MethodSummary(
        method=method,
        corpus_wer=method_wer,
        avg_output_len=tokens / len(records),
        relative_reduction=relative_reduction(asr_wer, method_wer),
        failures=failures,
        records=len(records),
    )


@dataclass(frozen=True)
class DistributionSummary:
    counts: dict[CommandKind, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def percentages(self) -> dict[CommandKind, float]:
        total = self.total
        return {k: (100.0 * v / total if total else 0.0) for k, v in self.counts.items()}

    def modal(self) -> CommandKind | None:
        if not self.total:
            return None
        return max(CommandKind, key=lambda k: self.counts[k])

    def __add__(self, other: "DistributionSummary") -> "DistributionSummary":
        return DistributionSummary({k: self.counts[k] + other.counts[k] for k in CommandKind})


def distribution(records: Sequence[CorpusRecord]) -> DistributionSummary:
    """Command-kind counts over every parseable CEGER payload in the corpus."""
    if not records:
        raise EmptyCorpus("no records for distribution")
    counts = {k: 0 for k in CommandKind}
    for rec in records:
        result = rec.results.get(CEGER)
        if result is None:
            continue
        try:
            commands = grammar.parse(result.payload)
        except grammar.ParseError:
            continue
        for kind, n in command_stats(commands).items():
            counts[kind] += n
    return DistributionSummary(counts)


def _pct(x: float) -> str:
    return f"{100 * x:.2f}"


def emit_report(
    summaries: Iterable[MethodSummary],
    dist: DistributionSummary | None = None,
    fmt: str = "table",
    corpus: str = "",
    asr_wer: float | None = None,
) -> str:
    summaries = list(summaries)
    if fmt == "json":
        doc = {
            "corpus": corpus,
            "asr_wer": None if asr_wer is None else round(asr_wer, 6),
            "methods": [s.to_json() for s in summaries],
            "ceger_distribution": (
                {} if dist is None
                else {k.value: round(v, 6) for k, v in dist.percentages().items()}
            ),
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt != "table":
        raise ValueError(f"unknown report format {fmt!r}")

    lines = [f"# corpus: {corpus}", f"# {LENGTH_UNIT_NOTE}"]
    lines.append("method\twer_pct\treduction_pct\tavg_output_len\tfailures")
    if asr_wer is not None:
        lines.append(f"asr\t{_pct(asr_wer)}\t-\t-\t-")
    for s in summaries:
        lines.append(
            f"{s.method}\t{_pct(s.corpus_wer)}\t{-100 * s.relative_reduction + 0.0:+.1f}"
            f"\t{s.avg_output_len:.2f}\t{s.failures}"
        )
    if dist is not None:
        lines.append("")
        lines.append("command\tcount\tpct")
        pct = dist.percentages()
        for kind in CommandKind:
            lines.append(f"{kind.value}\t{dist.counts[kind]}\t{pct[kind]:.1f}")
    return "\n".join(lines) + "\n"
