"""JSONL corpora, synthetic ASR errors, and the noisy command generator."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .tokens import Command, Delete, Insert, MoveForward, Replace, detokenize, tokenize


class SchemaError(ValueError):
    def __init__(self, line: int, detail: str):
        super().__init__(f"line {line}: {detail}")
        self.line = line


class DuplicateId(ValueError):
    def __init__(self, line: int, record_id: str):
        super().__init__(f"line {line}: duplicate id {record_id!r}")
        self.line = line
        self.record_id = record_id


class BadRates(ValueError):
    pass


@dataclass(frozen=True)
class MethodResult:
    payload: str
    output: str | None = None
    error: str | None = None

    def to_json(self) -> dict:
        d: dict = {"payload": self.payload}
        if self.output is not None:
            d["output"] = self.output
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    asr: str
    ref: str
    results: Mapping[str, MethodResult] = field(default_factory=dict)

    def to_json(self) -> dict:
        d: dict = {"id": self.id, "asr": self.asr, "ref": self.ref}
        if self.results:
            d["results"] = {m: r.to_json() for m, r in self.results.items()}
        return d


def _record_from_json(obj, line: int) -> CorpusRecord:
    if not isinstance(obj, dict):
        raise SchemaError(line, "expected a JSON object")
    for key in ("id", "asr", "ref"):
        if key not in obj:
            raise SchemaError(line, f"missing key {key!r}")
        if not isinstance(obj[key], str):
            raise SchemaError(line, f"key {key!r} must be a string")
    results = {}
    raw = obj.get("results", {})
    if not isinstance(raw, dict):
        raise SchemaError(line, "'results' must be an object")
    for method, r in raw.items():
        if not isinstance(r, dict) or not isinstance(r.get("payload"), str):
            raise SchemaError(line, f"result for {method!r} needs a string 'payload'")
        output, error = r.get("output"), r.get("error")
        if output is not None and not isinstance(output, str):
            raise SchemaError(line, f"output for {method!r} must be a string")
        if error is not None and not isinstance(error, str):
            raise SchemaError(line, f"error for {method!r} must be a string")
        results[method] = MethodResult(r["payload"], output, error)
    return CorpusRecord(obj["id"], obj["asr"], obj["ref"], results)


def read_corpus(lines: Iterable[str]) -> list[CorpusRecord]:
    records = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise SchemaError(lineno, f"invalid JSON: {e.msg}") from None
        rec = _record_from_json(obj, lineno)
        if rec.id in seen:
            raise DuplicateId(lineno, rec.id)
        seen.add(rec.id)
        records.append(rec)
    return records


def load_corpus(path: str | Path) -> list[CorpusRecord]:
    with open(path, encoding="utf-8") as f:
        return read_corpus(f)


def dump_corpus(records: Iterable[CorpusRecord]) -> str:
    return "".join(json.dumps(r.to_json(), ensure_ascii=False) + "\n" for r in records)


def save_corpus(records: Iterable[CorpusRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dump_corpus(records))


# Small closed vocabulary for generated sentences and injected errors.
VOCABULARY = tuple(dict.fromkeys(
    """
    the of and to a in that he was it his i with as had for you her not at
    but be on is my him by she they all this said which so have from were me
    one there we no when an would them what if up their out been or could
    little man more into then upon some will now very do are your time its
    before any over than down like only well after old know again good made
    should way went great must came see may much our long who us two such
    first never go can might make come back thought life other day house
    through where how hand eyes own young away yet here these take whom
    those head last face heard still nothing shall every mind while under
    father night place without people mother found left love seemed nor
    things tell being himself once let always work asked room thing same
    many looked whole felt went water heart door half light going moment
    stood among because world voice almost king word ever turned told might
    """.split()
))

# Zipf-like weights so frequent words repeat within a sentence.
_WEIGHTS = tuple(1.0 / (rank + 1) for rank in range(len(VOCABULARY)))


def generate_sentences(count: int, seed: int, min_len: int = 8, max_len: int = 30) -> list[str]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_len, max_len)
        out.append(" ".join(rng.choices(VOCABULARY, weights=_WEIGHTS, k=n)))
    return out


def synthesize_corpus(
    source_texts: Sequence[str],
    error_rates: Mapping[str, float],
    seed: int,
    vocabulary: Sequence[str] = VOCABULARY,
) -> list[CorpusRecord]:
    """Make (asr, ref) pairs by corrupting each reference word by word.

    Rates are ASR-side: ``sub`` replaces the word with one absent from the
    reference, ``del`` drops it, ``ins`` keeps it and adds a spurious word
    after it.
    """
    sub = float(error_rates.get("sub", 0.0))
    ins = float(error_rates.get("ins", 0.0))
    dele = float(error_rates.get("del", 0.0))
    if min(sub, ins, dele) < 0 or sub + ins + dele > 1:
        raise BadRates(f"rates must be >= 0 and sum to <= 1: sub={sub} ins={ins} del={dele}")
    rng = random.Random(seed)
    records = []
    width = max(5, len(str(len(source_texts))))
    for k, text in enumerate(source_texts, 1):
        ref = tokenize(text)
        present = set(ref)
        foreign = [w for w in vocabulary if w not in present] or ["<unk>"]
        hyp: list[str] = []
        for word in ref:
            u = rng.random()
            if u < sub:
                hyp.append(rng.choice(foreign))
            elif u < sub + dele:
                pass
            elif u < sub + dele + ins:
                hyp.extend((word, rng.choice(foreign)))
            else:
                hyp.append(word)
        records.append(CorpusRecord(f"utt-{k:0{width}d}", detokenize(hyp), detokenize(ref)))
    return records


DROP = "drop"
COUNT = "count"
SWAP = "swap"
PERTURBATIONS = (DROP, COUNT, SWAP)


@dataclass(frozen=True)
class NoiseConfig:
    seed: int
    rate: float
    perturbations: tuple[str, ...] = PERTURBATIONS

    def __post_init__(self) -> None:
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"noise rate must be in [0, 1], got {self.rate}")
        if not self.perturbations or set(self.perturbations) - set(PERTURBATIONS):
            raise ValueError(f"perturbations must be a non-empty subset of {PERTURBATIONS}")

    def rng_for(self, record_id: str) -> random.Random:
        return random.Random(f"{self.seed}:{record_id}")


def _swapped(words: Sequence[str], where: float, word: str) -> tuple[str, ...]:
    out = list(words)
    i = int(where * len(out))
    out[i] = word if word != out[i] else word + word
    return tuple(out)


def perturb_commands(
    commands: Sequence[Command], config: NoiseConfig, rng: random.Random
) -> list[Command]:
    """Corrupt each command with probability ``config.rate``.

    Every command draws the same random numbers whatever the rate, so a
    higher rate under the same seed perturbs a superset of the commands a
    lower rate does, in the same way.
    """
    out: list[Command] = []
    for cmd in commands:
        u = rng.random()
        kind = config.perturbations[int(rng.random() * len(config.perturbations))]
        delta = 1 if rng.random() < 0.5 else -1
        where = rng.random()
        word = VOCABULARY[int(rng.random() * len(VOCABULARY))]
        if u >= config.rate:
            out.append(cmd)
            continue
        if kind == DROP:
            continue
        if isinstance(cmd, Insert):
            # swap, or the fallback for a count shift since Insert has no count
            out.append(Insert(_swapped(cmd.words, where, word)))
        elif kind == SWAP and isinstance(cmd, Replace):
            out.append(Replace(cmd.n, _swapped(cmd.words, where, word)))
        else:
            n = cmd.n + delta if cmd.n + delta >= 1 else cmd.n + 1
            if isinstance(cmd, MoveForward):
                out.append(MoveForward(n))
            elif isinstance(cmd, Delete):
                out.append(Delete(n))
            else:
                out.append(Replace(n, cmd.words))
    return out
