"""Competing edit representations with the same compile/expand surface as CEGER.

Payload grammars (quoting and escapes as in :mod:`ceger.grammar`)::

    full rewrite   w1 w2 ...                       (the reference text)
    span           [SPAN start end 'words']        1-based, end exclusive
    phrase pair    [PAIR 'src' -> 'tgt']
    target only    [AT 'anchor' PUT 'words' SUB k] anchor ^ means sentence start

Span entries carry explicit positions and cannot be misapplied. Phrase
pairs and target-only entries are located by searching the hypothesis, so
a repeated word can make them land on the wrong occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import engine, grammar
from .aligner import Alignment
from .grammar import Scanner, quote
from .tokens import TokenSeq, detokenize, tokenize

CEGER = "ceger"
FULL = "full"
SPAN = "span"
PHRASE = "phrase"
TARGET = "target"
METHODS = (CEGER, FULL, SPAN, PHRASE, TARGET)

BOS = "^"

SPAN_OVERLAP = "SpanOverlap"
SPAN_OUT_OF_RANGE = "SpanOutOfRange"
PHRASE_NOT_FOUND = "PhraseNotFound"
ANCHOR_NOT_FOUND = "AnchorNotFound"
SUB_OUT_OF_RANGE = "SubOutOfRange"


class BaselineError(ValueError):
    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


@dataclass(frozen=True)
class Representation:
    method: str
    payload: str

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")

    @property
    def token_count(self) -> int:
        return len(self.payload.split())


@dataclass(frozen=True)
class _Region:
    start: int  # 1-based hypothesis position of the first consumed word
    hyp_words: tuple[str, ...]
    ref_words: tuple[str, ...]


def _edited_regions(alignment: Alignment) -> list[_Region]:
    out = []
    p = 1
    for is_match, run in engine.regions(alignment.ops):
        hyp_words = tuple(w for op in run for w in op.hyp_words)
        if not is_match:
            ref_words = tuple(w for op in run for w in op.ref_words)
            out.append(_Region(p, hyp_words, ref_words))
        p += len(hyp_words)
    return out


def _hyp_words(alignment: Alignment) -> tuple[str, ...]:
    return tuple(w for op in alignment.ops for w in op.hyp_words)


def _ref_words(alignment: Alignment) -> tuple[str, ...]:
    return tuple(w for op in alignment.ops for w in op.ref_words)


# -- full rewrite ----------------------------------------------------------

def compile_full_rewrite(alignment: Alignment) -> Representation:
    return Representation(FULL, detokenize(_ref_words(alignment)))


def expand_full_rewrite(hyp: Sequence[str], payload: str) -> TokenSeq:
    return tokenize(payload)


# -- CEGER -----------------------------------------------------------------

def compile_ceger(alignment: Alignment) -> Representation:
    return Representation(CEGER, grammar.serialize(engine.compile_commands(alignment)))


def expand_ceger(hyp: Sequence[str], payload: str, mode: str = engine.LENIENT) -> TokenSeq:
    return engine.expand(hyp, grammar.parse(payload), mode)


# -- span ------------------------------------------------------------------

def compile_span(alignment: Alignment) -> Representation:
    entries = [
        f"[SPAN {r.start} {r.start + len(r.hyp_words)} {quote(r.ref_words)}]"
        for r in _edited_regions(alignment)
    ]
    return Representation(SPAN, " ".join(entries))


def _parse_span(sc: Scanner) -> tuple[int, int, tuple[str, ...]]:
    sc.keyword(("SPAN",))
    start = sc.count()
    sc.expect(" ")
    end = sc.count()
    sc.expect(" ")
    words = sc.quoted(allow_empty=True)
    sc.expect("]")
    return start, end, words


def parse_span(payload: str) -> list[tuple[int, int, tuple[str, ...]]]:
    return Scanner(payload).entries(_parse_span)


def expand_span(hyp: Sequence[str], payload: str) -> TokenSeq:
    hyp = TokenSeq(hyp)
    m = len(hyp)
    out: list[str] = []
    prev_end = 1
    for start, end, words in parse_span(payload):
        if end < start or end > m + 1:
            raise BaselineError(SPAN_OUT_OF_RANGE, f"span {start}..{end} over {m} words")
        if start < prev_end:
            raise BaselineError(SPAN_OVERLAP, f"span {start}..{end} starts before {prev_end}")
        out.extend(hyp[prev_end - 1:start - 1])
        out.extend(words)
        prev_end = end
    out.extend(hyp[prev_end - 1:])
    return TokenSeq(out)


# -- phrase pair -----------------------------------------------------------

def compile_phrase_pair(alignment: Alignment) -> Representation:
    hyp = _hyp_words(alignment)
    pairs: list[tuple[tuple[str, ...], tuple[str, ...]]] = []
    consumed = 0  # hypothesis words covered by earlier pairs
    for r in _edited_regions(alignment):
        src, tgt = r.hyp_words, r.ref_words
        end = r.start - 1 + len(src)
        if not src:
            # pure insertion: anchor on the neighbouring word
            if r.start > 1 and r.start - 1 <= consumed:
                # left neighbour already rewritten by the previous pair
                prev_src, prev_tgt = pairs.pop()
                src, tgt, end = prev_src, prev_tgt + tgt, consumed
            elif r.start > 1:
                ctx = hyp[r.start - 2]
                src, tgt = (ctx,), (ctx,) + tgt
            elif hyp:
                ctx = hyp[0]
                src, tgt, end = (ctx,), tgt + (ctx,), 1
        pairs.append((src, tgt))
        consumed = end
    entries = [f"[PAIR {quote(src)} -> {quote(tgt)}]" for src, tgt in pairs]
    return Representation(PHRASE, " ".join(entries))


def _parse_pair(sc: Scanner) -> tuple[tuple[str, ...], tuple[str, ...]]:
    sc.keyword(("PAIR",))
    src = sc.quoted(allow_empty=True)
    sc.expect(" -> ")
    tgt = sc.quoted(allow_empty=True)
    sc.expect("]")
    return src, tgt


def parse_phrase_pair(payload: str) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    return Scanner(payload).entries(_parse_pair)


def _find(hyp: Sequence[str], needle: Sequence[str], start: int) -> int:
    k = len(needle)
    for i in range(start, len(hyp) - k + 1):
        if tuple(hyp[i:i + k]) == tuple(needle):
            return i
    return -1


def expand_phrase_pair(hyp: Sequence[str], payload: str) -> TokenSeq:
    """Rewrite the first unconsumed occurrence of each source phrase."""
    hyp = TokenSeq(hyp)
    out: list[str] = []
    cursor = 0
    for src, tgt in parse_phrase_pair(payload):
        idx = _find(hyp, src, cursor)
        if idx < 0:
            raise BaselineError(PHRASE_NOT_FOUND, f"{' '.join(src)!r} not found after word {cursor}")
        out.extend(hyp[cursor:idx])
        out.extend(tgt)
        cursor = idx + len(src)
    out.extend(hyp[cursor:])
    return TokenSeq(out)


# -- target only -----------------------------------------------------------

def compile_target_only(alignment: Alignment) -> Representation:
    """Anchor each edit on the preceding hypothesis word.

    Pure deletions have no target words and cannot be expressed; they are
    dropped, so the expansion keeps the extra words.
    """
    hyp = _hyp_words(alignment)
    entries = []
    for r in _edited_regions(alignment):
        if not r.ref_words:
            continue
        anchor = quote((hyp[r.start - 2],)) if r.start > 1 else BOS
        entries.append(f"[AT {anchor} PUT {quote(r.ref_words)} SUB {len(r.hyp_words)}]")
    return Representation(TARGET, " ".join(entries))


def _parse_target(sc: Scanner) -> tuple[str | None, tuple[str, ...], int]:
    sc.keyword(("AT",))
    if sc.startswith(BOS):
        sc.pos += len(BOS)
        anchor = None
    else:
        start = sc.pos
        words = sc.quoted()
        if len(words) != 1:
            raise sc.error(grammar.EMPTY_PAYLOAD, "anchor must be exactly one word", start)
        anchor = words[0]
    sc.expect(" PUT ")
    words = sc.quoted()
    sc.expect(" SUB ")
    k = sc.count(minimum=0)
    sc.expect("]")
    return anchor, words, k


def parse_target_only(payload: str) -> list[tuple[str | None, tuple[str, ...], int]]:
    """Entries as ``(anchor, words, sub_count)``; ``anchor`` is None for ``^``."""
    return Scanner(payload).entries(_parse_target)


def expand_target_only(hyp: Sequence[str], payload: str) -> TokenSeq:
    hyp = TokenSeq(hyp)
    out: list[str] = []
    cursor = 0
    for anchor, words, k in parse_target_only(payload):
        if anchor is None:
            if cursor != 0:
                raise BaselineError(ANCHOR_NOT_FOUND, "sentence-start anchor after other edits")
            after = 0
        else:
            idx = _find(hyp, (anchor,), cursor)
            if idx < 0:
                raise BaselineError(ANCHOR_NOT_FOUND, f"{anchor!r} not found after word {cursor}")
            after = idx + 1
        if after + k > len(hyp):
            raise BaselineError(SUB_OUT_OF_RANGE, f"SUB {k} past end of hypothesis")
        out.extend(hyp[cursor:after])
        out.extend(words)
        cursor = after + k
    out.extend(hyp[cursor:])
    return TokenSeq(out)


# -- dispatch --------------------------------------------------------------

_COMPILERS = {
    CEGER: compile_ceger,
    FULL: compile_full_rewrite,
    SPAN: compile_span,
    PHRASE: compile_phrase_pair,
    TARGET: compile_target_only,
}


def compile_representation(method: str, alignment: Alignment) -> Representation:
    try:
        return _COMPILERS[method](alignment)
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None


def expand_representation(
    hyp: Sequence[str], rep: Representation, mode: str = engine.LENIENT
) -> TokenSeq:
    """Expand any representation; ``mode`` only affects CEGER."""
    if rep.method == CEGER:
        return expand_ceger(hyp, rep.payload, mode)
    if rep.method == FULL:
        return expand_full_rewrite(hyp, rep.payload)
    if rep.method == SPAN:
        return expand_span(hyp, rep.payload)
    if rep.method == PHRASE:
        return expand_phrase_pair(hyp, rep.payload)
    return expand_target_only(hyp, rep.payload)
