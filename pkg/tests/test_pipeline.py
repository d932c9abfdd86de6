import json
from pathlib import Path

import pytest

from tokentasks import pipeline
from tokentasks.instances import GenSpec, TaskInstance, write_instances
from tokentasks.gen_token import gen_freq

GOLDEN = Path(__file__).parent / "data" / "golden"


@pytest.fixture(scope="module")
def golden_instances():
    return pipeline.load_dataset([GOLDEN / "dataset.jsonl"])


@pytest.fixture(scope="module")
def golden_runs():
    return pipeline.read_jsonl(GOLDEN / "run.jsonl")


def test_golden_verdicts_reproduce(golden_instances, golden_runs):
    expected = {row["case_id"]: row
                for row in pipeline.read_jsonl(GOLDEN / "expected.jsonl")}
    assert len(golden_runs) >= 60
    for record in golden_runs:
        rows, unmatched = pipeline.score_run(golden_instances, [record])
        assert not unmatched
        exp = expected[record["case_id"]]
        assert rows[0]["correct"] == exp["expect_correct"], exp["note"]


def test_score_run_reports_unmatched(golden_instances):
    rows, unmatched = pipeline.score_run(
        golden_instances,
        [{"instance_id": "freq_en_99999", "raw_output": "<answer>1</answer>"}])
    assert rows == [] and unmatched == ["freq_en_99999"]


def test_self_test_outputs_score_perfectly(bundle):
    spec = GenSpec(language="en", seed=11, per_count_cap=5)
    instances = {i.id: i for i in gen_freq(spec, bundle.corpora["en"])}
    records = [{"instance_id": i.id, "raw_output": pipeline.self_test_output(i)}
               for i in instances.values()]
    rows, _ = pipeline.score_run(instances, records)
    assert all(r["correct"] for r in rows)


def test_summarize_slices(golden_instances, golden_runs):
    rows, unmatched = pipeline.score_run(golden_instances, golden_runs)
    summary = pipeline.summarize(golden_instances, rows, model="golden",
                                 run_records=golden_runs, unmatched=unmatched)
    assert summary["n"] == len(golden_runs)
    assert summary["model"] == "golden"
    assert sum(s["n"] for s in summary["by_task"].values()) == summary["n"]
    assert sum(s["n"] for s in summary["by_language"].values()) == summary["n"]
    recognition = [p for p in summary["lenop_points"] if p[2] == "recognition"]
    generation = [p for p in summary["lenop_points"] if p[2] == "generation"]
    assert recognition and generation


def test_reward_run_rows(golden_instances, golden_runs):
    rows, unmatched = pipeline.reward_run("fine", golden_instances, golden_runs)
    assert not unmatched
    assert len(rows) == len(golden_runs)
    for row in rows:
        assert 0.0 <= row["reward"] <= 1.0
        assert row["mode"] == "fine"
        assert row["branch"] == golden_instances[row["instance_id"]].evaluation_type
    coarse, _ = pipeline.reward_run("coarse", golden_instances, golden_runs)
    assert all(r["reward"] in (0.0, 1.0) for r in coarse)


def test_jsonl_round_trip(tmp_path):
    rows = [{"a": 1, "text": "穴九"}, {"a": 2, "text": "쏠"}]
    path = tmp_path / "rows.jsonl"
    assert pipeline.write_jsonl(path, rows) == 2
    assert pipeline.read_jsonl(path) == rows


def test_load_dataset_rejects_duplicate_ids(tmp_path):
    inst = TaskInstance(id="freq_en_00000", task="freq", language="en",
                        evaluation_type="number", question="q?", label="1")
    write_instances(tmp_path / "a.jsonl", [inst])
    write_instances(tmp_path / "b.jsonl", [inst])
    with pytest.raises(ValueError):
        pipeline.load_dataset([tmp_path / "a.jsonl", tmp_path / "b.jsonl"])


def test_summary_is_json_stable(golden_instances, golden_runs):
    rows, _ = pipeline.score_run(golden_instances, golden_runs)
    summary = pipeline.summarize(golden_instances, rows, model="golden")
    text1 = json.dumps(summary, ensure_ascii=False, sort_keys=True)
    rows2, _ = pipeline.score_run(golden_instances, list(golden_runs))
    summary2 = pipeline.summarize(golden_instances, rows2, model="golden")
    assert text1 == json.dumps(summary2, ensure_ascii=False, sort_keys=True)


def test_correct_verdicts_survive_extra_reasoning_text(golden_instances, golden_runs):
    # monotone strictness: wrapping a correct output in more prose outside
    # the answer tags must not flip the verdict
    from tokentasks.scoring import evaluate_sample
    expected = {row["case_id"]: row
                for row in pipeline.read_jsonl(GOLDEN / "expected.jsonl")}
    checked = 0
    for record in golden_runs:
        exp = expected[record["case_id"]]
        if not exp["expect_correct"] or "<answer>" not in record["raw_output"]:
            continue
        wrapped = ("Let me think carefully about this problem first.\n"
                   + record["raw_output"]
                   + "\nThat is my final answer, stated above.")
        outcome = evaluate_sample(golden_instances[record["instance_id"]], wrapped)
        assert outcome.correct, exp["note"]
        checked += 1
    assert checked >= 20


def test_per_instance_scoring_errors_are_flagged_not_fatal():
    broken = TaskInstance(id="lenop_en_00000", task="lenop", language="en",
                          evaluation_type="length", question="no digits here",
                          label="5")  # no target metadata and unparseable question
    healthy = TaskInstance(id="freq_en_00000", task="freq", language="en",
                           evaluation_type="number", question="q?", label="2")
    instances = {i.id: i for i in (broken, healthy)}
    rows, _ = pipeline.score_run(instances, [
        {"instance_id": broken.id, "raw_output": "<answer>a b c d e</answer>"},
        {"instance_id": healthy.id, "raw_output": "<answer>2</answer>"},
    ])
    assert rows[0]["correct"] is False
    assert "scoring error" in rows[0]["detail"]
    assert rows[1]["correct"] is True
