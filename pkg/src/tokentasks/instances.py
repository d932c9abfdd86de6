"""Task instance model, generation spec, and JSONL dataset IO."""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from .lang import check_language

TASKS = ("freq", "lenop", "diff", "sort", "reord", "compc", "compm", "dot", "ridl", "var")
EVALUATION_TYPES = ("number", "length", "shuffle", "split", "diff", "match_answer")


class GenerationError(RuntimeError):
    """A generator cannot satisfy its construction constraints."""


@dataclass
class TaskInstance:
    id: str
    task: str
    language: str
    evaluation_type: str
    question: str
    label: str | list
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.task not in TASKS:
            raise ValueError(f"unknown task code: {self.task!r}")
        check_language(self.language)
        if self.evaluation_type not in EVALUATION_TYPES:
            raise ValueError(f"unknown evaluation_type: {self.evaluation_type!r}")
        if not self.question:
            raise ValueError("question must be non-empty")

    def to_json(self) -> str:
        return json.dumps(
            {
                "id": self.id,
                "task": self.task,
                "language": self.language,
                "evaluation_type": self.evaluation_type,
                "question": self.question,
                "label": self.label,
                "metadata": self.metadata,
            },
            ensure_ascii=False,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> "TaskInstance":
        rec = json.loads(line)
        return cls(
            id=rec["id"],
            task=rec["task"],
            language=rec["language"],
            evaluation_type=rec["evaluation_type"],
            question=rec["question"],
            label=rec["label"],
            metadata=rec.get("metadata", {}),
        )


@dataclass(frozen=True)
class GenSpec:
    """Everything a generator needs to be fully deterministic."""

    language: str
    seed: int = 0
    min_len: int = 5
    max_len: int = 254
    per_length_cap: int = 4
    per_count_cap: int = 100

    def __post_init__(self):
        check_language(self.language)
        if self.min_len < 1 or self.max_len < self.min_len:
            raise ValueError("invalid length range")

    def rng(self, *tags: object) -> random.Random:
        """Independent RNG stream derived from (seed, tags) by hashing."""
        key = ":".join([str(self.seed), self.language, *(str(t) for t in tags)])
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        return random.Random(int.from_bytes(digest, "big"))

    def lengths(self) -> range:
        return range(self.min_len, self.max_len + 1)


def make_id(task: str, language: str, index: int) -> str:
    return f"{task}_{language}_{index:05d}"


def write_instances(path: Path, instances: Iterable[TaskInstance]) -> int:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    n = 0
    with open(path, "w", encoding="utf-8") as fh:
        for inst in instances:
            fh.write(inst.to_json() + "\n")
            n += 1
    return n


def read_instances(path: Path) -> list[TaskInstance]:
    return [TaskInstance.from_json(line)
            for line in Path(path).read_text(encoding="utf-8").splitlines() if line.strip()]


def join_units(language: str, units: list[str]) -> str:
    """Render a unit sequence the way questions display it."""
    return " ".join(units) if language == "en" else "".join(units)
