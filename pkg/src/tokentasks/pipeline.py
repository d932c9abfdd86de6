"""Dataset/run/score file plumbing shared by the CLI and the tests.

Wire formats:
  dataset:  {task}_{language}.jsonl, one TaskInstance per line
  run:      JSONL RunRecord ({instance_id, prompt, raw_output, ...})
  outcomes: JSONL {instance_id, correct, extracted, detail}
  rewards:  JSONL {instance_id, reward, mode, branch}
  summary:  one JSON object with per-slice accuracy and analysis inputs
"""

from __future__ import annotations

import json
from collections import defaultdict
from pathlib import Path
from typing import Iterable

from .instances import TASKS, TaskInstance, read_instances
from .lang import LANGUAGES
from .rewards import reward_for_sample
from .scoring import evaluate_sample


def dataset_paths(dataset_dir: Path, tasks: Iterable[str] = TASKS,
                  languages: Iterable[str] = LANGUAGES) -> list[Path]:
    return [Path(dataset_dir) / f"{task}_{lang}.jsonl"
            for task in tasks for lang in languages]


def load_dataset(paths: Iterable[Path]) -> dict[str, TaskInstance]:
    instances: dict[str, TaskInstance] = {}
    for path in paths:
        for inst in read_instances(path):
            if inst.id in instances:
                raise ValueError(f"duplicate instance id {inst.id} in {path}")
            instances[inst.id] = inst
    return instances


def self_test_output(instance: TaskInstance) -> str:
    """The stored witness/label answer wrapped in answer tags."""
    etype = instance.evaluation_type
    if etype == "shuffle":
        witness = instance.metadata["witness"]
        answer = " ".join(witness) if instance.language == "en" else "".join(witness)
    elif etype == "length":
        answer = instance.metadata["witness"]
    elif etype == "split":
        answer = ", ".join(str(p) for p in instance.label[0])
    else:
        answer = str(instance.label)
    return f"<answer>{answer}</answer>"


def score_run(instances: dict[str, TaskInstance],
              run_records: Iterable[dict]) -> tuple[list[dict], list[str]]:
    """Outcome rows for every run record that joins to an instance.

    Returns (rows, unmatched_ids); unmatched records are reported, not fatal.
    """
    rows = []
    unmatched = []
    for record in run_records:
        instance = instances.get(record["instance_id"])
        if instance is None:
            unmatched.append(record["instance_id"])
            continue
        try:
            outcome = evaluate_sample(instance, record.get("raw_output", ""))
            row = {"correct": outcome.correct, "extracted": outcome.extracted,
                   "detail": outcome.detail}
        except ValueError as exc:
            # per-instance scoring defect (e.g. missing target metadata);
            # flagged rather than aborting the batch
            row = {"correct": False, "extracted": "", "detail": f"scoring error: {exc}"}
        rows.append({"instance_id": instance.id, **row})
    return rows, unmatched


def reward_run(mode: str, instances: dict[str, TaskInstance],
               run_records: Iterable[dict]) -> tuple[list[dict], list[str]]:
    rows = []
    unmatched = []
    for record in run_records:
        instance = instances.get(record["instance_id"])
        if instance is None:
            unmatched.append(record["instance_id"])
            continue
        value = reward_for_sample(mode, instance, record.get("raw_output", ""))
        rows.append({
            "instance_id": instance.id,
            "reward": value,
            "mode": mode,
            "branch": instance.evaluation_type,
        })
    return rows, unmatched


def _slice_stats(pairs: Iterable[tuple[str, bool]]) -> dict[str, dict]:
    stats: dict[str, list[int]] = defaultdict(lambda: [0, 0])
    for key, correct in pairs:
        stats[key][0] += 1
        stats[key][1] += 1 if correct else 0
    return {key: {"n": n, "correct": c, "accuracy": c / n}
            for key, (n, c) in sorted(stats.items())}


def summarize(instances: dict[str, TaskInstance], outcome_rows: list[dict],
              model: str = "", run_records: Iterable[dict] = (),
              unmatched: list[str] | None = None) -> dict:
    """Aggregate outcome rows into the summary record reports consume."""
    joined = [(instances[row["instance_id"]], row["correct"]) for row in outcome_rows]
    by_task = _slice_stats((inst.task, ok) for inst, ok in joined)
    by_language = _slice_stats((inst.language, ok) for inst, ok in joined)
    by_task_language = _slice_stats((f"{inst.task}:{inst.language}", ok)
                                    for inst, ok in joined)
    lenop_points = [[inst.metadata.get("target_length"), int(ok),
                     inst.metadata.get("variant", "")]
                    for inst, ok in joined
                    if inst.task == "lenop" and inst.metadata.get("target_length")]
    output_lengths = [rec["output_chars"] for rec in run_records
                      if rec.get("output_chars")]
    total = len(outcome_rows)
    correct = sum(1 for row in outcome_rows if row["correct"])
    return {
        "model": model,
        "n": total,
        "correct": correct,
        "accuracy": correct / total if total else 0.0,
        "task_average": (sum(s["accuracy"] for s in by_task.values()) / len(by_task)
                         if by_task else 0.0),
        "by_task": by_task,
        "by_language": by_language,
        "by_task_language": by_task_language,
        "lenop_points": lenop_points,
        "mean_output_chars": (sum(output_lengths) / len(output_lengths)
                              if output_lengths else None),
        "unmatched_run_ids": unmatched or [],
    }


def write_jsonl(path: Path, rows: Iterable[dict]) -> int:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False, sort_keys=True) + "\n")
            n += 1
    return n


def read_jsonl(path: Path) -> list[dict]:
    return [json.loads(line)
            for line in Path(path).read_text(encoding="utf-8").splitlines()
            if line.strip()]
