"""align -> compile -> [noise] -> serialize -> parse -> expand, per record."""

from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from typing import Sequence

from . import baselines, grammar
from .aligner import align
from .baselines import CEGER, Representation
from .corpus import CorpusRecord, MethodResult, NoiseConfig, perturb_commands
from .engine import LENIENT, compile_commands
from .tokens import detokenize, tokenize


def generate(record: CorpusRecord, method: str, noise: NoiseConfig | None = None,
             lowercase: bool = False) -> Representation:
    """Oracle payload for one record, optionally corrupted (CEGER only)."""
    alignment = align(tokenize(record.asr, lowercase), tokenize(record.ref, lowercase))
    if method == CEGER and noise is not None and noise.rate > 0:
        commands = perturb_commands(compile_commands(alignment), noise, noise.rng_for(record.id))
        return Representation(CEGER, grammar.serialize(commands))
    return baselines.compile_representation(method, alignment)


def expand_result(record: CorpusRecord, method: str, payload: str, mode: str = LENIENT,
                  lowercase: bool = False) -> MethodResult:
    """Expand a serialized payload; errors are captured, never raised."""
    hyp = tokenize(record.asr, lowercase)
    try:
        out = baselines.expand_representation(hyp, Representation(method, payload), mode)
    except ValueError as e:
        return MethodResult(payload, None, f"{type(e).__name__}: {e}")
    return MethodResult(payload, detokenize(out))


def process_record(record: CorpusRecord, methods: Sequence[str], noise: NoiseConfig | None,
                   mode: str, lowercase: bool) -> CorpusRecord:
    results = dict(record.results)
    for method in methods:
        # the payload only ever reaches the expander as text
        payload = generate(record, method, noise, lowercase).payload
        results[method] = expand_result(record, method, payload, mode, lowercase)
    return replace(record, results=results)


def run_pipeline(
    records: Sequence[CorpusRecord],
    methods: Sequence[str] = baselines.METHODS,
    noise: NoiseConfig | None = None,
    mode: str = LENIENT,
    lowercase: bool = False,
    jobs: int = 1,
) -> list[CorpusRecord]:
    """Annotate every record with each method's payload and expansion.

    Records are independent; with ``jobs > 1`` they are processed in a
    process pool and returned in input order.
    """
    work = functools.partial(process_record, methods=tuple(methods), noise=noise,
                             mode=mode, lowercase=lowercase)
    if jobs <= 1 or len(records) < 2:
        return [work(r) for r in records]
    chunk = max(1, len(records) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(work, records, chunksize=chunk))
