"""Word tokens and the shared edit/command value types."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union


def _check_word(word: str) -> None:
    if not isinstance(word, str):
        raise TypeError(f"token must be a str, got {type(word).__name__}")
    if not word:
        raise ValueError("empty token")
    if any(ch.isspace() for ch in word):
        raise ValueError(f"token contains whitespace: {word!r}")


class TokenSeq(tuple):
    """Immutable sequence of whitespace-free, non-empty words.

    Positions in the rest of the package are 1-based; indexing this tuple
    is ordinary 0-based Python indexing.
    """

    __slots__ = ()

    def __new__(cls, tokens: Iterable[str] = ()) -> "TokenSeq":
        if isinstance(tokens, TokenSeq):
            return tokens
        tokens = tuple(tokens)
        for tok in tokens:
            _check_word(tok)
        return super().__new__(cls, tokens)

    def __repr__(self) -> str:
        return f"TokenSeq({list(self)!r})"


def tokenize(text: str, normalize_case: bool = False) -> TokenSeq:
    """Split on runs of whitespace; punctuation stays attached to its word."""
    words = text.split()
    if normalize_case:
        words = [w.lower() for w in words]
    return TokenSeq(words)


def detokenize(seq: Iterable[str]) -> str:
    return " ".join(seq)


class OpKind(enum.Enum):
    MATCH = "Match"
    SUBSTITUTE = "Substitute"
    INSERT = "Insert"
    DELETE = "Delete"


@dataclass(frozen=True)
class EditOp:
    """One alignment step.

    ``Delete`` consumes hypothesis words and produces nothing; ``Insert``
    produces reference words without consuming any.
    """

    kind: OpKind
    hyp_words: tuple[str, ...] = ()
    ref_words: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "hyp_words", tuple(self.hyp_words))
        object.__setattr__(self, "ref_words", tuple(self.ref_words))
        hyp, ref = self.hyp_words, self.ref_words
        if self.kind is OpKind.MATCH:
            ok = bool(hyp) and hyp == ref
        elif self.kind is OpKind.SUBSTITUTE:
            ok = bool(hyp) and bool(ref)
        elif self.kind is OpKind.INSERT:
            ok = not hyp and bool(ref)
        else:
            ok = bool(hyp) and not ref
        if not ok:
            raise ValueError(f"inconsistent {self.kind.value} op: {hyp!r} -> {ref!r}")


class CommandKind(enum.Enum):
    MOVE_FORWARD = "MOVE_FORWARD"
    DELETE = "DELETE"
    INSERT = "INSERT"
    REPLACE = "REPLACE"


def _check_count(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"command count must be an integer >= 1, got {n!r}")


def _check_payload(words: tuple[str, ...]) -> None:
    if not words:
        raise ValueError("command payload must contain at least one word")
    for w in words:
        _check_word(w)


@dataclass(frozen=True)
class MoveForward:
    n: int
    kind = CommandKind.MOVE_FORWARD

    def __post_init__(self) -> None:
        _check_count(self.n)


@dataclass(frozen=True)
class Delete:
    n: int
    kind = CommandKind.DELETE

    def __post_init__(self) -> None:
        _check_count(self.n)


@dataclass(frozen=True)
class Insert:
    words: tuple[str, ...]
    kind = CommandKind.INSERT

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(self.words))
        _check_payload(self.words)


@dataclass(frozen=True)
class Replace:
    n: int
    words: tuple[str, ...]
    kind = CommandKind.REPLACE

    def __post_init__(self) -> None:
        object.__setattr__(self, "words", tuple(self.words))
        _check_count(self.n)
        _check_payload(self.words)


Command = Union[MoveForward, Delete, Insert, Replace]
