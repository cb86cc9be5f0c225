"""Word-level edit representations for ASR post-editing.

Align an ASR hypothesis with its reference, compile the alignment into
``[MOVE_FORWARD n]`` / ``[DELETE n]`` / ``[INSERT '...']`` /
``[REPLACE n WITH '...']`` commands, and expand commands back into text.
Baseline representations and corpus scoring live alongside.
"""

from .aligner import Alignment, EmptyReference, WerBreakdown, align, edit_distance, wer
from .engine import ExpansionError, command_stats, compile_commands, expand
from .grammar import ParseError, parse, serialize
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
    detokenize,
    tokenize,
)

__all__ = [
    "Alignment",
    "Command",
    "CommandKind",
    "Delete",
    "EditOp",
    "EmptyReference",
    "ExpansionError",
    "Insert",
    "MoveForward",
    "OpKind",
    "ParseError",
    "Replace",
    "TokenSeq",
    "WerBreakdown",
    "align",
    "command_stats",
    "compile_commands",
    "detokenize",
    "edit_distance",
    "expand",
    "parse",
    "serialize",
    "tokenize",
    "wer",
]
