"""Generators for the five token-sequence tasks: frequency counting,
length operations, difference spotting, length sorting, and reordering.

Every label is guaranteed by construction; metadata records the sampled
parameters needed to re-verify it independently.
"""

from __future__ import annotations

import random
from bisect import bisect_right

from .instances import GenerationError, GenSpec, TaskInstance, join_units, make_id
from .lang import EN
from .resources import Corpus

MAX_TEXT_CHARS = 500
TOKEN_FLOOR_FACTOR = 10

FREQ_TEMPLATES = {
    "en": 'How many times does "{target}" appear in the following text: {text}?',
    "zh": "在以下文本中，“{target}”出现了多少次？文本：{text}",
    "ko": '다음 문장에서 "{target}"는 몇 번 나타납니까? 문장: {text}',
}
LENOP_COUNT_TEMPLATES = {
    "en": "How many English words are in '{sent}'?",
    "zh": "‘{sent}’中有多少个汉字？",
    "ko": "‘{sent}’에는 한글 문자가 몇 개 있나요?",
}
LENOP_GEN_TEMPLATES = {
    "en": "Please generate an English sentence about {topic} that contains exactly {n} words.",
    "zh": "请生成一个主题为{topic}的中文句子，要求正好包含{n}个汉字。",
    "ko": "{topic} 주제로 정확히 {n}개의 한글 글자로 이루어진 문장을 생성해 주세요.",
}
DIFF_TEMPLATES = {
    "en": ("Are the words in seq1 and seq2 exactly matching one-to-one (ignoring order)? "
           "If yes, answer 'yes'. If not, which word is different? seq1: {s1} seq2: {s2}"),
    "zh": ("seq1和seq2中的字是否一一对应（忽略顺序）？如果是，请回答“yes”。"
           "如果不是，指出不同的那个字。seq1: {s1} seq2: {s2}"),
    "ko": ("seq1과 seq2의 글자가 순서를 무시하고 정확히 일치합니까? 일치하면 'yes'라고 답하세요. "
           "일치하지 않으면 다른 글자는 무엇입니까? seq1: {s1} seq2: {s2}"),
}
SORT_TEMPLATES = {
    "en": ("Sort the following sentences by word count from longest to shortest and answer "
           "with the three letters (e.g. CAB). A: {a} B: {b} C: {c}"),
    "zh": "根据汉字数从长到短排序，用三个字母作答（如CAB）。A: {a} B: {b} C: {c}",
    "ko": "글자 수가 많은 것부터 적은 것 순서로 정렬하고 세 글자로 답하세요 (예: CAB). A: {a} B: {b} C: {c}",
}
REORD_TEMPLATES = {
    "en": 'Shuffle "{sent}" so that each word does not stay adjacent to its original neighbors.',
    "zh": "完全打乱“{sent}”，确保每个字与其原邻居不相邻。",
    "ko": '"{sent}"을 섞어 주세요. 각 글자가 원래 이웃한 글자들과 더 이상 인접하지 않도록.',
}


def _consecutive_run(rng: random.Random, corpus: Corpus, n: int) -> list[str]:
    if len(corpus.items) < n:
        raise GenerationError(
            f"{corpus.language} corpus too small for runs of {n} (have {len(corpus.items)})")
    start = rng.randrange(0, len(corpus.items) - n + 1)
    return corpus.items[start:start + n]


def _pools_by_max_length(items: list[str]):
    """Sorted distinct lengths plus cumulative pools of items up to each length."""
    lengths = sorted({len(w) for w in items})
    pools: dict[int, list[str]] = {}
    acc: list[str] = []
    for length in lengths:
        acc = acc + [w for w in items if len(w) == length]
        pools[length] = acc
    return lengths, pools


def _fill_distractors(rng: random.Random, lengths, pools, target: str, need: int,
                      budget: int, sep: int, min_word: int) -> list[str] | None:
    """Distractors that fit the character budget; None when sampling stalls
    (the only feasible pool degenerates to the target itself)."""
    distractors: list[str] = []
    while len(distractors) < need:
        left_after = need - len(distractors) - 1
        max_len = budget - sep - left_after * (min_word + sep)
        feasible = bisect_right(lengths, max_len) - 1
        if feasible < 0:
            return None
        pool = pools[lengths[feasible]]
        for _ in range(30):
            cand = rng.choice(pool)
            if cand != target:
                break
        else:
            return None
        distractors.append(cand)
        budget -= len(cand) + sep
    return distractors


def gen_freq(spec: GenSpec, corpus: Corpus) -> list[TaskInstance]:
    """Target-token counting; the target's frequency is 1..10 by construction."""
    rng = spec.rng("freq")
    lang = spec.language
    sep = 1 if lang == EN else 0
    min_word = min(len(w) for w in corpus.items)
    lengths, pools = _pools_by_max_length(corpus.items)
    out = []
    for count in range(1, 11):
        for _ in range(spec.per_count_cap):
            floor = count * TOKEN_FLOOR_FACTOR
            need = floor - count
            for _attempt in range(200):
                target = rng.choice(corpus.items)
                if (len(target) + sep) * count + need * (min_word + sep) > MAX_TEXT_CHARS:
                    continue
                budget = MAX_TEXT_CHARS - (len(target) + sep) * count
                distractors = _fill_distractors(rng, lengths, pools, target, need,
                                                budget, sep, min_word)
                if distractors is not None:
                    break
            else:
                raise GenerationError(f"cannot fit target count {count} under "
                                      f"{MAX_TEXT_CHARS} chars for {lang}")
            budget -= sum(len(d) + sep for d in distractors)
            # spend leftover budget on extra distractors for variety
            extra_room = rng.randint(0, 30)
            while extra_room > 0 and budget >= min_word + sep:
                cand = rng.choice(corpus.items)
                if cand != target and len(cand) + sep <= budget:
                    distractors.append(cand)
                    budget -= len(cand) + sep
                extra_room -= 1
            units = distractors.copy()
            for pos in sorted(rng.sample(range(len(units) + count), count)):
                units.insert(pos, target)
            text = join_units(lang, units)
            assert len(text) <= MAX_TEXT_CHARS and len(units) >= floor
            out.append(TaskInstance(
                id=make_id("freq", lang, len(out)),
                task="freq", language=lang, evaluation_type="number",
                question=FREQ_TEMPLATES[lang].format(target=target, text=text),
                label=str(count),
                metadata={"target_token": target, "target_count": count, "text": text},
            ))
    return out


def gen_lenop(spec: GenSpec, corpus: Corpus, topics: list[dict[str, str]]) -> list[TaskInstance]:
    """Recognition (count the units) and generation (emit exactly n units)."""
    rng = spec.rng("lenop")
    lang = spec.language
    out = []
    for n in spec.lengths():
        for _ in range(spec.per_length_cap):
            units = _consecutive_run(rng, corpus, n)
            sent = join_units(lang, units)
            out.append(TaskInstance(
                id=make_id("lenop", lang, len(out)),
                task="lenop", language=lang, evaluation_type="number",
                question=LENOP_COUNT_TEMPLATES[lang].format(sent=sent),
                label=str(n),
                metadata={"variant": "recognition", "target_length": n, "sentence": sent},
            ))
    total_gen = len(spec.lengths()) * spec.per_length_cap
    if len(topics) < total_gen:
        raise GenerationError(f"topic pool exhausted: need {total_gen}, have {len(topics)}")
    topic_order = rng.sample(range(len(topics)), total_gen)
    pick = 0
    for n in spec.lengths():
        for _ in range(spec.per_length_cap):
            topic = topics[topic_order[pick]]
            pick += 1
            witness = join_units(lang, _consecutive_run(rng, corpus, n))
            out.append(TaskInstance(
                id=make_id("lenop", lang, len(out)),
                task="lenop", language=lang, evaluation_type="length",
                question=LENOP_GEN_TEMPLATES[lang].format(topic=topic[lang], n=n),
                label=str(n),
                metadata={"variant": "generation", "target_length": n,
                          "topic": topic[lang], "domain": topic["domain"],
                          "witness": witness},
            ))
    return out


DIFF_VARIANTS = ("unchanged", "add", "delete", "modify")


def gen_diff(spec: GenSpec, corpus: Corpus) -> list[TaskInstance]:
    """Two shuffled sequences differing by at most one token."""
    if len(set(corpus.items)) <= spec.max_len + 1:
        raise GenerationError("corpus distinct-token count must exceed max length + 1")
    rng = spec.rng("diff")
    lang = spec.language
    out = []
    for n in spec.lengths():
        for variant in DIFF_VARIANTS:
            base = _consecutive_run(rng, corpus, n)
            base_set = set(base)
            second = base.copy()
            metadata: dict = {"variant": variant, "seq1": None, "seq2": None}
            if variant == "unchanged":
                label = "yes"
            elif variant == "add":
                extra = _fresh_token(rng, corpus, base_set)
                second.append(extra)
                label = extra
            elif variant == "delete":
                removed = second.pop(rng.randrange(len(second)))
                label = removed
            else:
                pos = rng.randrange(len(second))
                replacement = _fresh_token(rng, corpus, base_set)
                metadata["removed"] = second[pos]
                second[pos] = replacement
                label = replacement
            seq1 = base.copy()
            rng.shuffle(seq1)
            rng.shuffle(second)
            metadata["seq1"] = join_units(lang, seq1)
            metadata["seq2"] = join_units(lang, second)
            out.append(TaskInstance(
                id=make_id("diff", lang, len(out)),
                task="diff", language=lang, evaluation_type="diff",
                question=DIFF_TEMPLATES[lang].format(s1=metadata["seq1"], s2=metadata["seq2"]),
                label=label,
                metadata=metadata,
            ))
    return out


def _fresh_token(rng: random.Random, corpus: Corpus, taken: set[str]) -> str:
    for _ in range(1000):
        cand = rng.choice(corpus.items)
        if cand not in taken:
            return cand
    raise GenerationError("cannot sample a token outside the base sequence")


def gen_sort(spec: GenSpec, corpus: Corpus) -> list[TaskInstance]:
    """Three labeled sequences sorted by unit count, descending."""
    rng = spec.rng("sort")
    lang = spec.language
    if lang == EN:
        pool = [w for w in corpus.items if w.isalpha()]
        corpus = Corpus(lang, pool, corpus.source_id)
    out = []
    for n in spec.lengths():
        for _ in range(spec.per_length_cap):
            lengths = _companion_lengths(rng, n, len(corpus.items))
            letters = ["A", "B", "C"]
            rng.shuffle(lengths)
            texts = {}
            by_letter = {}
            for letter, ln in zip(letters, lengths):
                texts[letter] = join_units(lang, _consecutive_run(rng, corpus, ln))
                by_letter[letter] = ln
            label = "".join(sorted(letters, key=lambda c: -by_letter[c]))
            out.append(TaskInstance(
                id=make_id("sort", lang, len(out)),
                task="sort", language=lang, evaluation_type="match_answer",
                question=SORT_TEMPLATES[lang].format(a=texts["A"], b=texts["B"], c=texts["C"]),
                label=label,
                metadata={"lengths": by_letter, "base_length": n},
            ))
    return out


def _companion_lengths(rng: random.Random, n: int, corpus_size: int) -> list[int]:
    longer = round(n * 1.1)
    shorter = round(n * 0.9)
    for nudge in (0, 1, 2):
        cand = [n, min(longer + nudge, corpus_size), max(shorter - nudge, 1)]
        if len(set(cand)) == 3:
            return cand
    raise GenerationError(f"cannot make three distinct lengths around {n}")


def adjacency_free_permutation(rng: random.Random, units: list[str],
                               tries: int = 500) -> list[str] | None:
    """A permutation where no adjacent value pair was adjacent in units."""
    banned = {frozenset(p) for p in zip(units, units[1:])}
    perm = units.copy()
    for _ in range(tries):
        rng.shuffle(perm)
        if all(frozenset(p) not in banned for p in zip(perm, perm[1:])):
            return perm.copy()
    return None


def gen_reord(spec: GenSpec, corpus: Corpus) -> list[TaskInstance]:
    """Reorder so no token keeps an original neighbor; a witness is stored."""
    rng = spec.rng("reord")
    lang = spec.language
    out = []
    for n in spec.lengths():
        for _ in range(spec.per_length_cap):
            witness = None
            while witness is None:
                units = _consecutive_run(rng, corpus, n)
                witness = adjacency_free_permutation(rng, units)
            sent = join_units(lang, units)
            out.append(TaskInstance(
                id=make_id("reord", lang, len(out)),
                task="reord", language=lang, evaluation_type="shuffle",
                question=REORD_TEMPLATES[lang].format(sent=sent),
                label=join_units(lang, witness),
                metadata={"original": units, "witness": witness},
            ))
    return out
