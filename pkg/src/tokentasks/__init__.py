"""tokentasks: multilingual token-level task engine.

Synthesizes ten families of token- and structure-level tasks across
English, Chinese, and Korean with construction-guaranteed labels, scores
model outputs, computes coarse and fine-grained reward signals, and
aggregates cross-lingual analysis reports.
"""

from .instances import EVALUATION_TYPES, TASKS, GenSpec, TaskInstance
from .lang import LANGUAGES, normalize_answer, tokenize_units
from .rewards import coarse_reward, fine_reward, reward_for_sample
from .scoring import ScoreOutcome, evaluate_sample, extract_answer

__version__ = "0.1.0"

__all__ = [
    "EVALUATION_TYPES",
    "GenSpec",
    "LANGUAGES",
    "ScoreOutcome",
    "TASKS",
    "TaskInstance",
    "coarse_reward",
    "evaluate_sample",
    "extract_answer",
    "fine_reward",
    "normalize_answer",
    "reward_for_sample",
    "tokenize_units",
    "__version__",
]
