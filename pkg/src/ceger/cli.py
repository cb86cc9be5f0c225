"""Command-line entry point.

    ceger synthesize --count 1000 --seed 7 --output corpus.jsonl
    ceger report --input corpus.jsonl --format json --figures figs/
    ceger compile --input corpus.jsonl --output compiled.jsonl
    ceger expand --input compiled.jsonl --mode strict --output expanded.jsonl
    ceger score --input expanded.jsonl
    ceger expand --hyp asr.txt --commands commands.txt --mode strict

Exit status: 0 on success, 1 on usage errors, 2 on data errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import baselines, metrics
from .aligner import align, breakdown
from .baselines import CEGER, METHODS, Representation
from .corpus import (
    CorpusRecord,
    MethodResult,
    NoiseConfig,
    dump_corpus,
    generate_sentences,
    load_corpus,
    synthesize_corpus,
)
from .engine import LENIENT, MODES
from .pipeline import expand_result, generate, run_pipeline
from .tokens import detokenize, tokenize

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", metavar="PATH")
    p.add_argument("--output", metavar="PATH", help="default: standard output")
    p.add_argument("--method", choices=METHODS + ("all",), default="all")
    p.add_argument("--mode", choices=MODES, default=LENIENT)
    p.add_argument("--lowercase", action="store_true")
    p.add_argument("--noise-rate", type=float, default=0.0, metavar="F")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="ceger", description="Word-level edit representations for ASR post-editing.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("align", parents=[common], help="word alignment and WER counts per record")
    sub.add_parser("compile", parents=[common], help="oracle payloads per record and method")
    p = sub.add_parser("expand", parents=[common], help="expand payloads over the ASR text")
    p.add_argument("--hyp", metavar="PATH", help="plain-text hypothesis (with --commands)")
    p.add_argument("--commands", metavar="PATH", help="plain-text payload (with --hyp)")
    sub.add_parser("score", parents=[common], help="report over an expanded corpus")
    p = sub.add_parser("synthesize", parents=[common], help="generate a synthetic ASR corpus")
    p.add_argument("--count", type=int, default=1000, help="sentences to generate without --input")
    p.add_argument("--sub", type=float, default=0.05, help="substitution rate")
    p.add_argument("--ins", type=float, default=0.025, help="spurious-word rate")
    p.add_argument("--del", dest="dele", type=float, default=0.025, help="dropped-word rate")
    p = sub.add_parser("report", parents=[common], help="run the full pipeline and report")
    p.add_argument("--figures", metavar="DIR", help="write PNG figures to this directory")
    p.add_argument("--corpus-name", help="name shown in the report (default: input file stem)")
    return parser


def _methods(args) -> tuple[str, ...]:
    return METHODS if args.method == "all" else (args.method,)


def _noise(args) -> NoiseConfig | None:
    if args.noise_rate == 0:
        return None
    try:
        return NoiseConfig(args.seed, args.noise_rate)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _records(args) -> list[CorpusRecord]:
    if not args.input:
        raise UsageError("--input is required")
    return load_corpus(args.input)


def _write(args, text: str) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_align(args) -> None:
    lines = []
    for rec in _records(args):
        al = align(tokenize(rec.asr, args.lowercase), tokenize(rec.ref, args.lowercase))
        b = breakdown(al)
        lines.append(json.dumps({
            "id": rec.id,
            "ops": [[op.kind.value, list(op.hyp_words), list(op.ref_words)] for op in al.ops],
            "distance": al.distance,
            "substitutions": b.substitutions,
            "deletions": b.deletions,
            "insertions": b.insertions,
            "ref_len": b.ref_len,
            "wer": b.wer,
        }, ensure_ascii=False) + "\n")
    _write(args, "".join(lines))


def cmd_compile(args) -> None:
    noise = _noise(args)
    out = []
    for rec in _records(args):
        results = dict(rec.results)
        for method in _methods(args):
            results[method] = MethodResult(generate(rec, method, noise, args.lowercase).payload)
        out.append(replace(rec, results=results))
    _write(args, dump_corpus(out))


def cmd_expand(args) -> None:
    if args.hyp or args.commands:
        if not (args.hyp and args.commands):
            raise UsageError("--hyp and --commands must be given together")
        method = CEGER if args.method == "all" else args.method
        hyp = tokenize(Path(args.hyp).read_text(encoding="utf-8"), args.lowercase)
        payload = Path(args.commands).read_text(encoding="utf-8")
        out = baselines.expand_representation(hyp, Representation(method, payload), args.mode)
        _write(args, detokenize(out) + "\n")
        return
    out = []
    for rec in _records(args):
        results = dict(rec.results)
        for method, res in rec.results.items():
            if args.method in ("all", method):
                results[method] = expand_result(rec, method, res.payload, args.mode, args.lowercase)
        out.append(replace(rec, results=results))
    _write(args, dump_corpus(out))


def _report(args, records: list[CorpusRecord], methods, name: str) -> tuple[str, list, object, float]:
    summaries = [metrics.summarize(records, m, args.lowercase) for m in methods]
    dist = metrics.distribution(records) if CEGER in methods else None
    asr_wer = float(metrics.asr_counts(records, args.lowercase).ratio)
    text = metrics.emit_report(summaries, dist, args.format, name, asr_wer)
    return text, summaries, dist, asr_wer


def cmd_score(args) -> None:
    records = _records(args)
    if args.method == "all":
        present = {m for r in records for m in r.results}
        methods = tuple(m for m in METHODS if m in present)
    else:
        methods = (args.method,)
    text, *_ = _report(args, records, methods, Path(args.input).stem)
    _write(args, text)


def cmd_synthesize(args) -> None:
    if args.input:
        lines = Path(args.input).read_text(encoding="utf-8").splitlines()
        texts = [ln for ln in lines if ln.strip()]
    else:
        texts = generate_sentences(args.count, args.seed)
    rates = {"sub": args.sub, "ins": args.ins, "del": args.dele}
    _write(args, dump_corpus(synthesize_corpus(texts, rates, args.seed)))


def cmd_report(args) -> None:
    noise = _noise(args)
    records = _records(args)
    methods = _methods(args)
    annotated = run_pipeline(records, methods, noise, args.mode, args.lowercase, max(1, args.jobs))
    name = args.corpus_name or Path(args.input).stem
    text, summaries, dist, asr_wer = _report(args, annotated, methods, name)
    _write(args, text)
    if args.figures:
        from . import plotting

        figdir = Path(args.figures)
        figdir.mkdir(parents=True, exist_ok=True)
        plotting.plot_methods(summaries, figdir / "methods.png", asr_wer)
        if dist is not None:
            plotting.plot_distribution(dist, figdir / "command_distribution.png")


COMMANDS = {
    "align": cmd_align,
    "compile": cmd_compile,
    "expand": cmd_expand,
    "score": cmd_score,
    "synthesize": cmd_synthesize,
    "report": cmd_report,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        COMMANDS[args.command](args)
    except UsageError as e:
        print(f"ceger {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        print(f"ceger {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
