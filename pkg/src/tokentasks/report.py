"""Aggregation of score outcomes into analysis artifacts.

Pure computations over joined outcome rows: accuracy slices, per-language
advantage metrics, cross-language uniformity, length-bucketed accuracy
curves, output-length correlation, and sampled-vs-full validity statistics.
No plotting here; the figures module renders these series.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from scipy import stats as scipy_stats


@dataclass(frozen=True)
class AccuracyCell:
    model: str
    key: str
    n: int
    accuracy: float


@dataclass(frozen=True)
class AdvantageTriple:
    a_en: float
    a_zh: float
    a_ko: float
    ea: float
    ca: float
    ka: float


def accuracy_by(rows: Iterable[dict], dimension: str) -> list[AccuracyCell]:
    """Grouped accuracy over joined rows.

    Rows need "model", "correct", and the grouping fields ("task",
    "language"). Empty slices are simply absent, never fabricated zeros.
    """
    keyers = {
        "task": lambda r: r["task"],
        "language": lambda r: r["language"],
        "task_language": lambda r: f'{r["task"]}:{r["language"]}',
        "model": lambda r: r["model"],
    }
    if dimension not in keyers:
        raise ValueError(f"unknown slice dimension: {dimension!r}")
    keyer = keyers[dimension]
    counts: dict[tuple[str, str], list[int]] = defaultdict(lambda: [0, 0])
    for row in rows:
        cell = counts[(row.get("model", ""), keyer(row))]
        cell[0] += 1
        cell[1] += 1 if row["correct"] else 0
    return [AccuracyCell(model, key, n, correct / n)
            for (model, key), (n, correct) in sorted(counts.items())]


def overall_average(task_accuracies: Sequence[float]) -> float:
    """Unweighted mean of task-level accuracies (the leaderboard "Avg.")."""
    if not task_accuracies:
        raise ValueError("no task accuracies to average")
    return sum(task_accuracies) / len(task_accuracies)


def language_advantage(a_en: float, a_zh: float, a_ko: float) -> AdvantageTriple:
    """Per-language advantage: each accuracy minus the mean of the other two."""
    return AdvantageTriple(
        a_en=a_en, a_zh=a_zh, a_ko=a_ko,
        ea=a_en - (a_zh + a_ko) / 2,
        ca=a_zh - (a_en + a_ko) / 2,
        ka=a_ko - (a_en + a_zh) / 2,
    )


def uniformity(a_en: float, a_zh: float, a_ko: float) -> float:
    """Population standard deviation of the three per-language accuracies."""
    mean = (a_en + a_zh + a_ko) / 3
    return math.sqrt(sum((a - mean) ** 2 for a in (a_en, a_zh, a_ko)) / 3)


@dataclass(frozen=True)
class LengthBucket:
    start: int
    n: int
    accuracy: float


def length_curves(points: Iterable[tuple[int, bool]], bucket_width: int = 10,
                  smooth_window: int = 5) -> tuple[list[LengthBucket], list[float]]:
    """Accuracy per target-length bucket plus a centered moving average.

    Points are (target_length, correct). Buckets with no instances are
    omitted; the smoothed series aligns with the returned buckets.
    """
    if bucket_width < 1:
        raise ValueError("bucket width must be >= 1")
    counts: dict[int, list[int]] = defaultdict(lambda: [0, 0])
    for length, correct in points:
        bucket = (length // bucket_width) * bucket_width
        counts[bucket][0] += 1
        counts[bucket][1] += 1 if correct else 0
    buckets = [LengthBucket(start, n, correct / n)
               for start, (n, correct) in sorted(counts.items())]
    smoothed = []
    half = max(0, smooth_window // 2)
    for i in range(len(buckets)):
        window = buckets[max(0, i - half):i + half + 1]
        smoothed.append(sum(b.accuracy for b in window) / len(window))
    return buckets, smoothed


def pearson(xs: Sequence[float], ys: Sequence[float]) -> Optional[float]:
    """Pearson correlation; None when either variable has zero variance."""
    if len(xs) != len(ys) or len(xs) < 2:
        raise ValueError("need two equal-length samples of size >= 2")
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    vx = sum((x - mx) ** 2 for x in xs)
    vy = sum((y - my) ** 2 for y in ys)
    if vx == 0 or vy == 0:
        return None
    return cov / math.sqrt(vx * vy)


def length_accuracy_correlation(model_stats: Sequence[tuple[float, float]]) -> Optional[float]:
    """Pearson r over per-model (mean output character length, accuracy)."""
    if len(model_stats) < 2:
        raise ValueError("need at least two models")
    return pearson([s[0] for s in model_stats], [s[1] for s in model_stats])


def welch_p_value(sample_a: Sequence[float], sample_b: Sequence[float]) -> Optional[float]:
    """Two-sample Welch (unequal variance) t-test p-value.

    Equal means report p = 1.0 even under zero variance (identical
    outcome sets are maximally compatible); unequal means with zero
    pooled variance are undefined (None).
    """
    n_a, n_b = len(sample_a), len(sample_b)
    if n_a < 2 or n_b < 2:
        raise ValueError("Welch test needs at least two observations per sample")
    mean_a = sum(sample_a) / n_a
    mean_b = sum(sample_b) / n_b
    var_a = sum((x - mean_a) ** 2 for x in sample_a) / (n_a - 1)
    var_b = sum((x - mean_b) ** 2 for x in sample_b) / (n_b - 1)
    se_a, se_b = var_a / n_a, var_b / n_b
    if se_a + se_b == 0:
        return 1.0 if mean_a == mean_b else None
    if mean_a == mean_b:
        return 1.0
    t_stat = (mean_a - mean_b) / math.sqrt(se_a + se_b)
    df = (se_a + se_b) ** 2 / (se_a ** 2 / (n_a - 1) + se_b ** 2 / (n_b - 1))
    return float(2 * scipy_stats.t.sf(abs(t_stat), df))


def sample_validity(full_by_task: dict[str, Sequence[float]],
                    sample_by_task: dict[str, Sequence[float]]) -> dict:
    """Compare sampled evaluation against the full set, per task.

    Returns mean absolute accuracy error across tasks, Pearson r between
    the two per-task accuracy vectors, and a Welch p-value per task.
    """
    tasks = sorted(set(full_by_task) & set(sample_by_task))
    if not tasks:
        raise ValueError("no shared tasks between the two outcome sets")
    full_acc = [sum(full_by_task[t]) / len(full_by_task[t]) for t in tasks]
    sample_acc = [sum(sample_by_task[t]) / len(sample_by_task[t]) for t in tasks]
    mae = sum(abs(f - s) for f, s in zip(full_acc, sample_acc)) / len(tasks)
    r = pearson(full_acc, sample_acc) if len(tasks) >= 2 else None
    p_values = {t: welch_p_value(full_by_task[t], sample_by_task[t]) for t in tasks}
    return {"mae": mae, "pearson_r": r, "p_values": p_values,
            "tasks": tasks, "full_accuracy": full_acc, "sample_accuracy": sample_acc}
