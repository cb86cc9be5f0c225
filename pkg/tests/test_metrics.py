import json
import random

import pytest

from ceger.baselines import CEGER, FULL
from ceger.corpus import CorpusRecord, MethodResult
from ceger.metrics import (
    DistributionSummary,
    EmptyCorpus,
    MethodSummary,
    asr_counts,
    distribution,
    emit_report,
    relative_reduction,
    score_text,
    summarize,
)
from ceger.pipeline import run_pipeline
from ceger.tokens import CommandKind

WORKED_CMDS = "[MOVE_FORWARD 4] [REPLACE 1 WITH 'market'] [MOVE_FORWARD 2] [INSERT 'red'] [MOVE_FORWARD 1]"


def rec(i, asr, ref, **results):
    return CorpusRecord(str(i), asr, ref, {m: MethodResult(*r) for m, r in results.items()})


def test_perfect_oracle_summary():
    records = [rec(1, "a b", "a c", ceger=("[MOVE_FORWARD 1] [REPLACE 1 WITH 'c']", "a c"))]
    s = summarize(records, CEGER)
    assert s.corpus_wer == 0.0 and s.relative_reduction == 1.0 and s.failures == 0
    assert s.avg_output_len == 6


def test_unchanged_output_summary():
    records = [rec(1, "a b", "a c", full=("a b", "a b"))]
    s = summarize(records, FULL)
    assert s.corpus_wer == 0.5
    assert s.relative_reduction == 0.0


def test_failures_fall_back_to_asr():
    records = [
        rec(1, "a b", "a c", ceger=("[MOVE_FORWARD 9]", None, "ExpansionError")),
        rec(2, "x", "x", ceger=("[MOVE_FORWARD 1]", "x")),
    ]
    s = summarize(records, CEGER)
    assert s.failures == 1
    assert s.corpus_wer == pytest.approx(1 / 3)


def test_reduction_formula_against_table_value():
    assert round(100 * relative_reduction(6.6, 2.6), 1) == 60.6
    assert round(100 * relative_reduction(11.4, 6.0), 1) == 47.4
    assert relative_reduction(0.0, 0.0) == 0.0


def test_pooled_not_averaged():
    records = [rec(1, "a", "b", full=("a", "a")), rec(2, "a b c d", "a b c d", full=("x", "a b c d"))]
    # pooled 1/5, per-utterance mean would be 0.5
    assert summarize(records, FULL).corpus_wer == pytest.approx(0.2)


def test_pooled_wer_invariant_under_order_and_sharding():
    rng = random.Random(4)
    words = "a b c d e".split()
    records = [
        CorpusRecord(str(i), " ".join(rng.choices(words, k=rng.randint(1, 8))),
                     " ".join(rng.choices(words, k=rng.randint(1, 8))))
        for i in range(60)
    ]
    whole = asr_counts(records)
    shuffled = records[:]
    rng.shuffle(shuffled)
    assert asr_counts(shuffled) == whole
    assert asr_counts(records[:25]) + asr_counts(records[25:]) == whole


def test_empty_corpus():
    with pytest.raises(EmptyCorpus):
        summarize([], CEGER)
    with pytest.raises(EmptyCorpus):
        distribution([])


def test_distribution_worked_example():
    d = distribution([rec(1, "x", "y", ceger=(WORKED_CMDS, None))])
    pct = d.percentages()
    assert pct[CommandKind.MOVE_FORWARD] == 60.0
    assert pct[CommandKind.REPLACE] == 20.0
    assert pct[CommandKind.INSERT] == 20.0
    assert pct[CommandKind.DELETE] == 0.0
    assert d.modal() is CommandKind.MOVE_FORWARD


def test_distribution_empty_payloads():
    d = distribution([rec(1, "", "", ceger=("", ""))])
    assert set(d.counts.values()) == {0}
    assert set(d.percentages().values()) == {0.0}
    assert d.modal() is None


def test_distribution_merges():
    a = DistributionSummary({k: 1 for k in CommandKind})
    assert (a + a).counts[CommandKind.DELETE] == 2


def test_full_rewrite_length_is_mean_reference_length():
    rng = random.Random(8)
    records = [CorpusRecord(str(i), "a b", " ".join(["w"] * rng.randint(0, 9))) for i in range(40)]
    out = run_pipeline(records, [FULL])
    mean_ref = sum(len(r.ref.split()) for r in records) / len(records)
    assert summarize(out, FULL).avg_output_len == mean_ref


def test_emit_table_shapes():
    header_only = emit_report([], None, "table")
    rows = [ln for ln in header_only.splitlines() if ln and not ln.startswith("#")]
    assert rows == ["method\twer_pct\treduction_pct\tavg_output_len\tfailures"]
    s = MethodSummary(CEGER, 0.026, 11.0, 0.606, 0, 10)
    table = emit_report([s], None, "table", asr_wer=0.066)
    rows = [ln for ln in table.splitlines() if ln and not ln.startswith("#")]
    assert rows[1] == "asr\t6.60\t-\t-\t-"
    assert rows[2] == "ceger\t2.60\t-60.6\t11.00\t0"
    assert len(rows) == 3


def test_emit_json_round_trip():
    s = MethodSummary(CEGER, 0.125, 3.5, 0.5, 2, 4)
    d = distribution([rec(1, "x", "y", ceger=(WORKED_CMDS, None))])
    text = emit_report([s], d, "json", corpus="dev", asr_wer=0.25)
    doc = json.loads(text)
    assert doc == {
        "corpus": "dev",
        "asr_wer": 0.25,
        "methods": [{"method": "ceger", "wer": 0.125, "reduction": 0.5, "avg_output_len": 3.5, "failures": 2}],
        "ceger_distribution": {"DELETE": 0.0, "INSERT": 20.0, "MOVE_FORWARD": 60.0, "REPLACE": 20.0},
    }
    assert emit_report([s], d, "json", corpus="dev", asr_wer=0.25) == text
    assert json.dumps(doc, sort_keys=True, indent=2) + "\n" == text


def test_score_text_lowercase():
    assert score_text("The cat", "the cat").errors == 1
    assert score_text("The cat", "the cat", lowercase=True).errors == 0
