"""Coarse (binary) and fine-grained (partial credit) reward signals.

The coarse reward is 1.0 exactly when the scorer marks the output correct.
The fine-grained reward dispatches on evaluation type:

    match_answer / diff: binary, via the scorer
    split:  max over label options of |parts found| / |option parts|
    shuffle: 1 - A/N when multisets match (A = kept adjacent pairs,
             N = len-1; N = 0 scores 1), else 0
    length: max(0, 1 - |Lp - Lt| / Lt) for Lt > 0, else (Lp == 0 ? 1 : 0)
    number: 1 / (1 + (Nl - Np)^2)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .instances import TaskInstance
from .lang import normalize_answer, tokenize_units
from .scoring import (
    adjacent_pairs,
    diff_judge,
    evaluate_sample,
    extract_answer,
    first_number,
    last_number,
    match_answer,
    parse_target_length,
)


@dataclass(frozen=True)
class RewardInput:
    """Every quantity the fine-grained formulas consume."""

    evaluation_type: str
    prediction: str
    label: str | list
    question: str
    language: str
    target_length: Optional[int] = None      # Lt
    predicted_length: Optional[int] = None   # Lp
    label_number: Optional[float] = None     # Nl
    predicted_number: Optional[float] = None  # Np
    original_tokens: Optional[list] = None   # T1
    predicted_tokens: Optional[list] = None  # T2
    label_options: Optional[list] = None     # Parts_o candidates
    instance: Optional[TaskInstance] = None

    @property
    def pair_denominator(self) -> Optional[int]:
        """N: one less than the original token count."""
        if self.original_tokens is None:
            return None
        return len(self.original_tokens) - 1

    @property
    def adjacent_pair_count(self) -> Optional[int]:
        """A: predicted adjacent value-pairs that were adjacent originally."""
        if self.original_tokens is None or self.predicted_tokens is None:
            return None
        banned = adjacent_pairs(self.original_tokens)
        return sum(1 for p in zip(self.predicted_tokens, self.predicted_tokens[1:])
                   if frozenset(p) in banned)


def coarse_reward(instance: TaskInstance, raw_output: str) -> float:
    """Binary: full credit only when the evaluation judges the output correct."""
    return 1.0 if evaluate_sample(instance, raw_output).correct else 0.0


def _split_reward(options: list, prediction: str) -> float:
    """Best overlap ratio over the label options (multiset intersection).

    Parts found in the prediction are counted by normalized-substring
    occurrences, capped at each option's multiplicity, so any output the
    scorer accepts earns the full ratio.
    """
    normalized = normalize_answer(prediction)
    best = 0.0
    for option in options:
        parts = [normalize_answer(str(p)) for p in option]
        if not parts:
            continue
        hit = 0
        for part in set(parts):
            if not part:
                continue
            available = normalized.count(part)
            hit += min(parts.count(part), available)
        best = max(best, hit / len(parts))
    return best


def _shuffle_reward(inp: "RewardInput") -> float:
    if sorted(inp.original_tokens) != sorted(inp.predicted_tokens):
        return 0.0
    n = inp.pair_denominator
    if n <= 0:
        return 1.0
    return 1.0 - inp.adjacent_pair_count / n


def _length_reward(target: int, predicted: int) -> float:
    if target > 0:
        return max(0.0, 1.0 - abs(predicted - target) / target)
    return 1.0 if predicted == 0 else 0.0


def _number_reward(label_number: float, predicted_number: float) -> float:
    return 1.0 / (1.0 + (label_number - predicted_number) ** 2)


def fine_reward(inp: RewardInput) -> float:
    """Fine-grained reward dispatch; always in [0, 1]."""
    etype = inp.evaluation_type
    if etype in ("match_answer", "diff"):
        if not inp.prediction:
            return 0.0
        if etype == "diff":
            if inp.instance is None:
                raise ValueError("diff reward needs the instance for the judge")
            return 1.0 if diff_judge(inp.instance, inp.prediction).correct else 0.0
        return 1.0 if match_answer(inp.label, inp.prediction).correct else 0.0
    if etype == "split":
        if not inp.prediction:
            return 0.0
        options = inp.label_options if inp.label_options is not None else inp.label
        return _split_reward(options, inp.prediction)
    if etype == "shuffle":
        if inp.original_tokens is None or inp.predicted_tokens is None:
            raise ValueError("shuffle reward needs original and predicted tokens")
        return _shuffle_reward(inp)
    if etype == "length":
        if inp.target_length is None or inp.predicted_length is None:
            raise ValueError("length reward needs target and predicted lengths")
        return _length_reward(inp.target_length, inp.predicted_length)
    if etype == "number":
        if inp.label_number is None:
            raise ValueError("number reward needs the label number")
        if inp.predicted_number is None:
            return 0.0  # no numeric literal in the prediction
        return _number_reward(inp.label_number, inp.predicted_number)
    raise ValueError(f"unknown evaluation_type: {etype!r}")


def build_reward_input(instance: TaskInstance, raw_output: str) -> RewardInput:
    """Derive every formula quantity from an instance and a raw output."""
    prediction = extract_answer(raw_output)
    etype = instance.evaluation_type
    target_length = predicted_length = None
    label_number = predicted_number = None
    original_tokens = predicted_tokens = None
    if etype == "length":
        target = instance.metadata.get("target_length")
        if target is None:
            target = parse_target_length(instance.question)
        if target is None:
            raise ValueError(f"instance {instance.id}: no target length available")
        target_length = int(target)
        predicted_length = len(tokenize_units(instance.language, prediction))
    elif etype == "number":
        label_number = first_number(str(instance.label))
        predicted_number = last_number(prediction) if prediction else None
    elif etype == "shuffle":
        original_tokens = instance.metadata.get("original")
        if original_tokens is None:
            raise ValueError(f"instance {instance.id}: shuffle reward needs metadata.original")
        predicted_tokens = tokenize_units(instance.language, prediction)
    return RewardInput(
        evaluation_type=etype,
        prediction=prediction,
        label=instance.label,
        question=instance.question,
        language=instance.language,
        target_length=target_length,
        predicted_length=predicted_length,
        label_number=label_number,
        predicted_number=predicted_number,
        original_tokens=original_tokens,
        predicted_tokens=predicted_tokens,
        label_options=instance.label if etype == "split" else None,
        instance=instance,
    )


def reward_for_sample(mode: str, instance: TaskInstance, raw_output: str) -> float:
    """Reward under the selected scheme; mode is "coarse" or "fine"."""
    if mode == "coarse":
        return coarse_reward(instance, raw_output)
    if mode == "fine":
        return fine_reward(build_reward_input(instance, raw_output))
    raise ValueError(f"unknown reward mode: {mode!r}")
