"""Textual command grammar: serializer and strict parser.

Surface forms::

    [MOVE_FORWARD n]  [DELETE n]  [INSERT 'w1 w2']  [REPLACE n WITH 'w1 w2']

Commands are separated by runs of whitespace. Quoted payloads hold words
joined by single spaces; inside quotes only ``\\'`` and ``\\\\`` escapes
are recognized. Counts are decimal integers without leading zeros, >= 1.

The :class:`Scanner` is shared with the baseline payload grammars.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .tokens import Command, Delete, Insert, MoveForward, Replace

UNKNOWN_COMMAND = "UnknownCommand"
BAD_COUNT = "BadCount"
UNTERMINATED_QUOTE = "UnterminatedQuote"
EMPTY_PAYLOAD = "EmptyPayload"
TRAILING_GARBAGE = "TrailingGarbage"
BAD_ESCAPE = "BadEscape"

ERROR_KINDS = (
    UNKNOWN_COMMAND,
    BAD_COUNT,
    UNTERMINATED_QUOTE,
    EMPTY_PAYLOAD,
    TRAILING_GARBAGE,
    BAD_ESCAPE,
)


class ParseError(ValueError):
    def __init__(self, position: int, kind: str, detail: str):
        super().__init__(f"{kind} at offset {position}: {detail}")
        self.position = position
        self.kind = kind
        self.detail = detail


def quote_word(word: str) -> str:
    return word.replace("\\", "\\\\").replace("'", "\\'")


def quote(words: Sequence[str]) -> str:
    return "'" + " ".join(quote_word(w) for w in words) + "'"


def serialize_command(cmd: Command) -> str:
    if isinstance(cmd, MoveForward):
        return f"[MOVE_FORWARD {cmd.n}]"
    if isinstance(cmd, Delete):
        return f"[DELETE {cmd.n}]"
    if isinstance(cmd, Insert):
        return f"[INSERT {quote(cmd.words)}]"
    if isinstance(cmd, Replace):
        return f"[REPLACE {cmd.n} WITH {quote(cmd.words)}]"
    raise TypeError(f"not a command: {cmd!r}")


def serialize(commands: Iterable[Command]) -> str:
    return " ".join(serialize_command(c) for c in commands)


class Scanner:
    """Cursor over a payload string with the grammar's lexical rules."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, kind: str, detail: str, pos: int | None = None) -> ParseError:
        pos = self.pos if pos is None else pos
        return ParseError(max(0, min(pos, len(self.text))), kind, detail)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.pos - start

    def startswith(self, literal: str) -> bool:
        return self.text.startswith(literal, self.pos)

    def expect(self, literal: str, kind: str = UNKNOWN_COMMAND) -> None:
        if not self.startswith(literal):
            found = self.text[self.pos:self.pos + len(literal)] or "end of input"
            raise self.error(kind, f"expected {literal!r}, found {found!r}")
        self.pos += len(literal)

    def keyword(self, keywords: Sequence[str]) -> str:
        """Consume ``[KEYWORD`` followed by one space, longest keyword first."""
        start = self.pos
        self.expect("[")
        for kw in sorted(keywords, key=len, reverse=True):
            if self.startswith(kw + " "):
                self.pos += len(kw) + 1
                return kw
        end = start + 1
        while end < len(self.text) and not self.text[end].isspace() and self.text[end] != "]":
            end += 1
        raise self.error(UNKNOWN_COMMAND, f"unknown command {self.text[start + 1:end]!r}", start)

    def count(self, minimum: int = 1) -> int:
        start = self.pos
        end = start
        while end < len(self.text) and not self.text[end].isspace() and self.text[end] != "]":
            end += 1
        tok = self.text[start:end]
        ok = tok.isascii() and tok.isdigit() and (tok == "0" or tok[0] != "0")
        try:
            ok = ok and int(tok) >= minimum
        except ValueError:  # digit strings past the int conversion limit
            ok = False
        if not ok:
            raise self.error(BAD_COUNT, f"bad count {tok!r} (need integer >= {minimum})", start)
        self.pos = end
        return int(tok)

    def quoted(self, allow_empty: bool = False) -> tuple[str, ...]:
        """Read ``'w1 w2 ...'``; words are single-space separated and non-empty."""
        open_pos = self.pos
        self.expect("'")
        words: list[str] = []
        cur: list[str] = []
        text = self.text
        while True:
            if self.pos >= len(text):
                raise self.error(UNTERMINATED_QUOTE, "missing closing quote", open_pos)
            ch = text[self.pos]
            if ch == "\\":
                nxt = text[self.pos + 1:self.pos + 2]
                if nxt not in ("'", "\\"):
                    raise self.error(BAD_ESCAPE, f"invalid escape \\{nxt}")
                cur.append(nxt)
                self.pos += 2
            elif ch == "'":
                self.pos += 1
                break
            elif ch == " ":
                if not cur:
                    raise self.error(EMPTY_PAYLOAD, "empty word in payload")
                words.append("".join(cur))
                cur = []
                self.pos += 1
            elif ch.isspace():
                raise self.error(EMPTY_PAYLOAD, f"whitespace {ch!r} inside payload word")
            else:
                cur.append(ch)
                self.pos += 1
        if cur:
            words.append("".join(cur))
        elif words:
            raise self.error(EMPTY_PAYLOAD, "trailing space in payload", self.pos - 2)
        elif not allow_empty:
            raise self.error(EMPTY_PAYLOAD, "payload has no words", open_pos)
        return tuple(words)

    def entries(self, parse_one) -> list:
        """Parse ``WS? (entry (WS entry)*)? WS?`` with ``parse_one(scanner)``."""
        out = []
        self.skip_ws()
        while not self.at_end():
            if self.peek() != "[":
                if out:
                    raise self.error(TRAILING_GARBAGE, f"unexpected {self.peek()!r} after last ']'")
                raise self.error(UNKNOWN_COMMAND, f"expected '[', found {self.peek()!r}")
            out.append(parse_one(self))
            if self.skip_ws() == 0 and not self.at_end():
                raise self.error(TRAILING_GARBAGE, "missing whitespace after ']'")
        return out


_KEYWORDS = ("MOVE_FORWARD", "DELETE", "INSERT", "REPLACE")


def _parse_command(sc: Scanner) -> Command:
    kw = sc.keyword(_KEYWORDS)
    if kw == "MOVE_FORWARD":
        cmd: Command = MoveForward(sc.count())
    elif kw == "DELETE":
        cmd = Delete(sc.count())
    elif kw == "INSERT":
        cmd = Insert(sc.quoted())
    else:
        n = sc.count()
        sc.expect(" WITH ")
        cmd = Replace(n, sc.quoted())
    sc.expect("]")
    return cmd


def parse(text: str) -> list[Command]:
    """Parse a serialized command sequence; raises :class:`ParseError`."""
    return Scanner(text).entries(_parse_command)
