"""Compile alignments into command sequences and expand them over a hypothesis."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .aligner import Alignment
from .tokens import (
    Command,
    CommandKind,
    Delete,
    EditOp,
    Insert,
    MoveForward,
    OpKind,
    Replace,
    TokenSeq,
)

STRICT = "strict"
LENIENT = "lenient"
MODES = (STRICT, LENIENT)

POINTER_OVERFLOW = "PointerOverflow"
UNCONSUMED_INPUT = "UnconsumedInput"


class ExpansionError(ValueError):
    """Expansion failed.

    ``command_index`` is the offending command, or ``len(commands)`` for
    unconsumed input; ``pointer`` is the 1-based hypothesis position at
    the time of failure.
    """

    def __init__(self, kind: str, command_index: int, pointer: int, hyp_len: int):
        super().__init__(
            f"{kind} at command {command_index}: pointer {pointer}, hypothesis length {hyp_len}"
        )
        self.kind = kind
        self.command_index = command_index
        self.pointer = pointer
        self.hyp_len = hyp_len


def regions(ops: Sequence[EditOp]) -> Iterator[tuple[bool, list[EditOp]]]:
    """Split ops into maximal runs of matches and of non-matches."""
    run: list[EditOp] = []
    for op in ops:
        is_match = op.kind is OpKind.MATCH
        if run and (run[0].kind is OpKind.MATCH) != is_match:
            yield run[0].kind is OpKind.MATCH, run
            run = []
        run.append(op)
    if run:
        yield run[0].kind is OpKind.MATCH, run


def _edit_commands(hyp_count: int, ref_words: list[str]) -> list[Command]:
    # One canonical form per edited region: a Replace over the overlap,
    # then the residual Delete or Insert.
    k = min(hyp_count, len(ref_words))
    out: list[Command] = []
    if k:
        out.append(Replace(k, tuple(ref_words[:k])))
    if hyp_count > k:
        out.append(Delete(hyp_count - k))
    elif len(ref_words) > k:
        out.append(Insert(tuple(ref_words[k:])))
    return out


def compile_commands(alignment: Alignment) -> list[Command]:
    """Coalesce an alignment into a canonical command list.

    Match runs become ``MoveForward``. Every maximal edited region, whatever
    mix of substitutions, deletions and insertions the backtrace chose,
    becomes ``Replace(min(h, r))`` followed by ``Delete`` or ``Insert`` for
    the remainder, where ``h`` and ``r`` are the hypothesis and reference
    word counts of the region. Adjacent commands therefore never share a kind.
    """
    commands: list[Command] = []
    for is_match, run in regions(alignment.ops):
        if is_match:
            commands.append(MoveForward(len(run)))
            continue
        hyp_count = sum(len(op.hyp_words) for op in run)
        ref_words = [w for op in run for w in op.ref_words]
        commands.extend(_edit_commands(hyp_count, ref_words))
    return commands


def expand(hyp: Sequence[str], commands: Iterable[Command], mode: str = LENIENT) -> TokenSeq:
    """Replay ``commands`` over ``hyp`` with a 1-based pointer.

    In lenient mode hypothesis words left after the last command are
    carried over; strict mode raises ``UnconsumedInput`` instead.
    """
    if mode not in MODES:
        raise ValueError(f"unknown expansion mode {mode!r}")
    hyp = TokenSeq(hyp)
    m = len(hyp)
    p = 1
    out: list[str] = []
    index = -1
    for index, cmd in enumerate(commands):
        if isinstance(cmd, Insert):
            out.extend(cmd.words)
            continue
        n = cmd.n
        if p + n - 1 > m:
            raise ExpansionError(POINTER_OVERFLOW, index, p, m)
        if isinstance(cmd, MoveForward):
            out.extend(hyp[p - 1:p - 1 + n])
        elif isinstance(cmd, Replace):
            out.extend(cmd.words)
        elif not isinstance(cmd, Delete):
            raise TypeError(f"not a command: {cmd!r}")
        p += n
    if p <= m:
        if mode == STRICT:
            raise ExpansionError(UNCONSUMED_INPUT, index + 1, p, m)
        out.extend(hyp[p - 1:])
    return TokenSeq(out)


def command_stats(commands: Iterable[Command]) -> dict[CommandKind, int]:
    stats = {kind: 0 for kind in CommandKind}
    for cmd in commands:
        stats[cmd.kind] += 1
    return stats
