"""Answer extraction and per-task scoring.

The pipeline mirrors the dataset's evaluation contract: pull the final
answer out of the raw model output, then dispatch on the instance's
evaluation_type to one of six scoring functions. All functions are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .instances import TaskInstance
from .lang import EN, normalize_answer, tokenize_units

ANSWER_TAG_RE = re.compile(r"<answer>(.*?)</answer>", re.DOTALL | re.IGNORECASE)
BOLD_SPAN_RE = re.compile(r"\*\*(.+?)\*\*", re.DOTALL)
NUMBER_RE = re.compile(r"[-+]?\d+(?:\.\d+)?")

# Affirmatives accepted by the difference judge for the "no difference" case.
AFFIRMATIVES = {
    EN: ("yes",),
    "zh": ("yes", "是", "相同"),
    "ko": ("yes", "네", "예"),
}


@dataclass(frozen=True)
class ScoreOutcome:
    correct: bool
    extracted: str
    detail: str = ""

    def __post_init__(self):
        if not self.extracted and self.correct:
            raise ValueError("empty extraction cannot be correct")


def extract_answer(raw: str) -> str:
    """Final answer from a raw model output.

    The last well-formed <answer> pair wins (innermost content if pairs are
    nested); a double-asterisk span is the fallback; otherwise empty.
    """
    if not raw:
        return ""
    matches = ANSWER_TAG_RE.findall(raw)
    if matches:
        content = matches[-1]
        while "<answer>" in content:
            content = content.rsplit("<answer>", 1)[1]
        return content.strip()
    spans = BOLD_SPAN_RE.findall(raw)
    if spans:
        return spans[-1].strip()
    return ""


def first_number(text: str) -> float | None:
    m = NUMBER_RE.search(text)
    return float(m.group()) if m else None


def last_number(text: str) -> float | None:
    matches = NUMBER_RE.findall(text)
    return float(matches[-1]) if matches else None


def match_number(label: str, prediction: str) -> ScoreOutcome:
    """First numeric literal of the label vs the last one of the prediction."""
    want = first_number(str(label))
    if want is None:
        raise ValueError(f"label has no numeric literal: {label!r}")
    got = last_number(prediction)
    if got is None:
        return ScoreOutcome(False, prediction, "no numeric literal in prediction")
    return ScoreOutcome(got == want, prediction, f"label={want:g} predicted={got:g}")


def parse_target_length(question: str) -> int | None:
    """Target length from a generation prompt (metadata normally supplies it)."""
    for pattern in (r"exactly (\d+)", r"包含(\d+)个", r"(\d+)개"):
        m = re.search(pattern, question)
        if m:
            return int(m.group(1))
    return None


def sentence_length(instance: TaskInstance, prediction: str) -> ScoreOutcome:
    target = instance.metadata.get("target_length")
    if target is None:
        target = parse_target_length(instance.question)
    if target is None:
        raise ValueError(f"instance {instance.id}: no target length in metadata or question")
    count = len(tokenize_units(instance.language, prediction))
    return ScoreOutcome(count == int(target), prediction,
                        f"target={target} counted={count}")


def adjacent_pairs(units: list[str]) -> set[frozenset]:
    return {frozenset(p) for p in zip(units, units[1:])}


def shuffle_tokens(original: str | list[str], prediction: str, lang: str) -> ScoreOutcome:
    """Multiset equality plus zero original-adjacent pairs left adjacent."""
    units1 = original if isinstance(original, list) else tokenize_units(lang, original)
    units2 = tokenize_units(lang, prediction)
    if sorted(units1) != sorted(units2):
        return ScoreOutcome(False, prediction, "token multisets differ")
    banned = adjacent_pairs(units1)
    violations = [p for p in zip(units2, units2[1:]) if frozenset(p) in banned]
    if violations:
        return ScoreOutcome(False, prediction,
                            f"{len(violations)} adjacent pairs kept, e.g. {violations[0]}")
    return ScoreOutcome(True, prediction, "valid reordering")


def split_components(label_options: list, prediction: str) -> ScoreOutcome:
    """Every component of at least one option appears in the prediction.

    Components are matched as substrings of the normalized prediction;
    repeated components must occur at least as often as they repeat
    (a doubled radical needs two occurrences).
    """
    if not label_options:
        raise ValueError("split scoring needs at least one label option")
    normalized = normalize_answer(prediction)
    for option in label_options:
        parts = [normalize_answer(str(p)) for p in option]
        if not all(parts):
            continue
        if all(normalized.count(p) >= parts.count(p) for p in set(parts)):
            return ScoreOutcome(True, prediction, f"matched option {option}")
    return ScoreOutcome(False, prediction, "no option fully covered")


def _whole_unit_match(token: str, prediction: str, lang: str) -> bool:
    if lang == EN:
        return re.search(rf"\b{re.escape(token)}\b", prediction, re.IGNORECASE) is not None
    return token in prediction


def diff_judge(instance: TaskInstance, prediction: str) -> ScoreOutcome:
    """Either an affirmative (sequences match) or the differing token."""
    label = str(instance.label)
    if label == "yes":
        normalized = normalize_answer(prediction)
        for word in AFFIRMATIVES[instance.language]:
            if word == "yes":
                if re.search(r"\byes\b", prediction, re.IGNORECASE):
                    return ScoreOutcome(True, prediction, "affirmative found")
            elif word in normalized:
                return ScoreOutcome(True, prediction, "affirmative found")
        return ScoreOutcome(False, prediction, "no affirmative found")
    if _whole_unit_match(label, prediction, instance.language):
        return ScoreOutcome(True, prediction, f"differing token {label!r} found")
    return ScoreOutcome(False, prediction, f"differing token {label!r} not found")


def match_answer(label: str | list, prediction: str) -> ScoreOutcome:
    """Flexible substring match after normalization.

    Labels that normalize to nothing (punctuation-only, e.g. bitmap tasks
    over symbols) fall back to raw substring matching.
    """
    labels = label if isinstance(label, list) else [label]
    normalized_pred = normalize_answer(prediction)
    for option in labels:
        text = str(option)
        normalized = normalize_answer(text)
        if normalized:
            if normalized in normalized_pred:
                return ScoreOutcome(True, prediction, f"matched {text!r}")
        elif text and text in prediction:
            return ScoreOutcome(True, prediction, f"matched raw {text!r}")
    return ScoreOutcome(False, prediction, "no label contained in prediction")


def evaluate_sample(instance: TaskInstance, raw_output: str) -> ScoreOutcome:
    """Extract the answer and dispatch to the task's scoring function."""
    extracted = extract_answer(raw_output)
    if not extracted:
        return ScoreOutcome(False, "", "empty extraction")
    etype = instance.evaluation_type
    if etype == "number":
        return match_number(str(instance.label), extracted)
    if etype == "length":
        return sentence_length(instance, extracted)
    if etype == "shuffle":
        original = instance.metadata.get("original")
        if original is None:
            raise ValueError(f"instance {instance.id}: shuffle scoring needs metadata.original")
        return shuffle_tokens(original, extracted, instance.language)
    if etype == "split":
        return split_components(instance.label, extracted)
    if etype == "diff":
        return diff_judge(instance, extracted)
    if etype == "match_answer":
        return match_answer(instance.label, extracted)
    raise ValueError(f"unknown evaluation_type: {etype!r}")
