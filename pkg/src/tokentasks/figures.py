"""Figure rendering for the report bundle.

Kept separate from the report computations so the core stays free of
plotting dependencies; only the CLI report path imports this module.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .instances import TASKS  # noqa: E402


def save_task_accuracy_bars(summaries: list[dict], path: Path) -> Path:
    """Grouped per-task accuracy bars, one group color per model."""
    fig, ax = plt.subplots(figsize=(11, 4.5))
    tasks = [t for t in TASKS if any(t in s["by_task"] for s in summaries)]
    width = 0.8 / max(1, len(summaries))
    for i, summary in enumerate(summaries):
        xs = [j + i * width for j in range(len(tasks))]
        ys = [100 * summary["by_task"].get(t, {}).get("accuracy", 0.0) for t in tasks]
        ax.bar(xs, ys, width=width, label=summary.get("model") or f"model-{i}")
    ax.set_xticks([j + 0.4 - width / 2 for j in range(len(tasks))])
    ax.set_xticklabels([t.upper() for t in tasks])
    ax.set_ylabel("accuracy (%)")
    ax.set_ylim(0, 100)
    ax.legend(fontsize=8)
    ax.set_title("Accuracy by task")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def save_language_advantage_bars(rows: list[dict], path: Path) -> Path:
    """EA/CA/KA bars per model; rows carry model, ea, ca, ka."""
    fig, ax = plt.subplots(figsize=(10, 4.5))
    models = [r["model"] for r in rows]
    xs = range(len(models))
    width = 0.27
    for offset, key, label in ((-width, "ea", "English adv."),
                               (0.0, "ca", "Chinese adv."),
                               (width, "ka", "Korean adv.")):
        ax.bar([x + offset for x in xs], [r[key] for r in rows], width=width, label=label)
    ax.axhline(0.0, color="black", linewidth=0.8)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(models, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("advantage (pp)")
    ax.legend(fontsize=8)
    ax.set_title("Per-language advantage")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def save_length_curves(series: dict[str, dict[str, list]], path: Path,
                       variant: str) -> Path:
    """Smoothed accuracy vs target length, one line per model."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    for model, data in series.items():
        ax.plot(data["starts"], [100 * a for a in data["smoothed"]], label=model)
    ax.set_xlabel("target length (bucket start)")
    ax.set_ylabel("smoothed accuracy (%)")
    ax.set_ylim(-2, 102)
    ax.legend(fontsize=8)
    ax.set_title(f"Length {variant}: accuracy vs target length")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)


def save_length_accuracy_scatter(points: list[tuple[str, float, float]],
                                 r_value, path: Path) -> Path:
    """Mean output length vs overall accuracy, annotated with Pearson r."""
    fig, ax = plt.subplots(figsize=(7, 5))
    for model, mean_len, accuracy in points:
        ax.scatter(mean_len, 100 * accuracy, s=28)
        ax.annotate(model, (mean_len, 100 * accuracy), fontsize=7,
                    textcoords="offset points", xytext=(4, 3))
    ax.set_xlabel("mean output length (characters)")
    ax.set_ylabel("overall accuracy (%)")
    title = "Output length vs accuracy"
    if r_value is not None:
        title += f" (Pearson r = {r_value:.4f})"
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return Path(path)
