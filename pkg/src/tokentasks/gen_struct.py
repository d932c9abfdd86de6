"""Generators for the five sub-token structure tasks: component counting,
component manipulation (split/combine), bitmap classification, initial-
consonant riddles (Korean), and lookalike-variant restoration.
"""

from __future__ import annotations

import random
from collections import defaultdict

from . import hangul
from .bitmap import BITMAP_TEXT_FORMAT, FontStore, RenderFailure, classify_script, render
from .components import ComponentTable, count_component, enumerate_splits
from .instances import GenerationError, GenSpec, TaskInstance, join_units, make_id
from .lang import EN, KO, LANGUAGES, ZH
from .resources import Corpus, RiddleEntry, VariantMap

COMPC_TEMPLATES = {
    "en": 'How many times does the letter "{target}" appear in "{text}"?',
    "zh": "“{text}”的字形中有多少“{target}”存在？",
    "ko": '"{text}"에서 "{target}"는 몇 회 출현하였습니까?',
}
COMPM_SPLIT_TEMPLATES = {
    "en": 'Split "{word}" into {k} parts: {descriptors}.',
    "zh": "请将“{char}”拆分为可重新组合的基本部件。",
    "ko": "'{syllable}'의 초성, 중성, 종성은 무엇인가요?",
    "ko_no_final": "'{syllable}'의 초성과 중성은 무엇인가요?",
}
COMPM_COMBINE_TEMPLATES = {
    "en": "Combine {parts} into one word.",
    "zh": "使用“{parts}”可以组成哪个汉字？",
    "ko": "다음 자모를 조합하세요: {parts}",
}
DOT_CATEGORY_LIST = ("digit (0-9), latin (A-Z/a-z), greek (Greek letters), "
                     "hanzi (Chinese characters), hangul (Korean syllables), "
                     "kana (Japanese kana), symbol (punctuation or other symbols)")
DOT_CHAR_CLASS_TEMPLATE = ('Classify the script of "{ch}" into one of the following '
                           "categories: " + DOT_CATEGORY_LIST + ".")
DOT_BITMAP_CLASS_TEMPLATE = ("Please classify the following 16x16 bitmap into one of the "
                             "following categories: " + DOT_CATEGORY_LIST + ".\nbitmap:\n{bitmap}")
DOT_BITMAP_CHAR_TEMPLATE = ("The following 16x16 bitmap represents a single {category} "
                            "character. Identify the exact character.\nbitmap:\n{bitmap}")
RIDL_KO_TEMPLATE = "초성 퀴즈입니다! 주제: {theme}. 초성: {initials}"
VAR_TEMPLATES = {
    "en": "Recover the original word from visually confused characters: {distorted}",
    "zh": "以下是被扰动后的文本，请你还原出原始文本，不修改标点符号：{distorted}",
    "ko": "Recover the original number from visually confused number: {distorted}",
}

COMPC_MAX_UNITS = 6
COMPC_COUNT_RANGE = {EN: range(0, 10), ZH: range(0, 7), KO: range(0, 7)}


def _compc_index_en(corpus: Corpus) -> dict[str, dict[int, list[str]]]:
    """letter -> occurrence count -> words."""
    index: dict[str, dict[int, list[str]]] = defaultdict(lambda: defaultdict(list))
    for word in corpus.items:
        folded = word.casefold()
        for letter in set(folded):
            if letter.isalpha():
                index[letter][folded.count(letter)].append(word)
    return index


def _split_count(rng: random.Random, total: int, max_parts: int) -> list[int]:
    parts = rng.randint(1, min(max_parts, total))
    counts = [1] * parts
    for _ in range(total - parts):
        counts[rng.randrange(parts)] += 1
    return counts


def gen_compc(spec: GenSpec, corpus: Corpus, table: ComponentTable | None = None,
              total: int = 1000) -> list[TaskInstance]:
    """Count a sub-token component across a short unit sequence."""
    lang = spec.language
    rng = spec.rng("compc")
    if lang == EN:
        builder = _CompcEnglish(rng, corpus)
    elif lang == ZH:
        if table is None:
            raise GenerationError("zh component counting needs a component table")
        builder = _CompcChinese(rng, table)
    else:
        builder = _CompcKorean(rng, corpus)
    counts = COMPC_COUNT_RANGE[lang]
    out = []
    i = 0
    while len(out) < total:
        count = counts[i % len(counts)]
        i += 1
        target, units = builder.build(count)
        assert count_component(lang, target, units, table) == count
        text = join_units(lang, units) if lang == EN else "".join(units)
        out.append(TaskInstance(
            id=make_id("compc", lang, len(out)),
            task="compc", language=lang, evaluation_type="number",
            question=COMPC_TEMPLATES[lang].format(target=target, text=text),
            label=str(count),
            metadata={"target": target, "target_count": count, "units": units},
        ))
    return out


class _CompcEnglish:
    def __init__(self, rng: random.Random, corpus: Corpus):
        self.rng = rng
        self.index = _compc_index_en(corpus)
        self.words = corpus.items
        self.letters = sorted(self.index)

    def build(self, count: int) -> tuple[str, list[str]]:
        for _ in range(500):
            letter = self.rng.choice(self.letters)
            if count == 0:
                pool = [w for w in self.rng.sample(self.words, min(40, len(self.words)))
                        if letter not in w.casefold()]
                if len(pool) < 3:
                    continue
                units = pool[:self.rng.randint(1, 3)]
            else:
                per_word = _split_count(self.rng, count, 3)
                by_count = self.index[letter]
                if not all(by_count.get(p) for p in per_word):
                    continue
                units = [self.rng.choice(by_count[p]) for p in per_word]
            self.rng.shuffle(units)
            return letter, units
        raise GenerationError(f"cannot reach letter count {count} with this corpus")


class _CompcChinese:
    def __init__(self, rng: random.Random, table: ComponentTable):
        self.rng = rng
        self.table = table
        self.by_component: dict[str, list[tuple[str, int]]] = defaultdict(list)
        self.chars = sorted(table.entries)
        for char in self.chars:
            for comp in set(table.primary_parts(char)):
                self.by_component[comp].append((char, table.component_count(char, comp)))
        self.targets = sorted(c for c, chars in self.by_component.items() if len(chars) >= 3)

    def build(self, count: int) -> tuple[str, list[str]]:
        for _ in range(500):
            comp = self.rng.choice(self.targets)
            supply = self.by_component[comp].copy()
            units: list[str] = []
            remaining = count
            self.rng.shuffle(supply)
            for char, mult in supply:
                if remaining == 0 or len(units) == COMPC_MAX_UNITS:
                    break
                if mult <= remaining:
                    units.append(char)
                    remaining -= mult
            if remaining:
                continue
            zeros = [c for c in self.chars
                     if self.table.component_count(c, comp) == 0 and c not in units]
            room = COMPC_MAX_UNITS - len(units)
            pad = self.rng.randint(max(1 - len(units), 0), room) if room else 0
            units.extend(self.rng.sample(zeros, min(pad, len(zeros))))
            if not units:
                continue
            self.rng.shuffle(units)
            return comp, units
        raise GenerationError(f"cannot reach component count {count} with this table")


class _CompcKorean:
    def __init__(self, rng: random.Random, corpus: Corpus):
        self.rng = rng
        self.syllables = corpus.items
        self.by_jamo: dict[str, list[tuple[str, int]]] = defaultdict(list)
        for s in self.syllables:
            triple = hangul.decompose(s)
            for jamo in set(triple.parts()):
                self.by_jamo[jamo].append((s, hangul.jamo_count(s, jamo)))
        self.targets = sorted(j for j, entries in self.by_jamo.items() if len(entries) >= 3)

    def build(self, count: int) -> tuple[str, list[str]]:
        for _ in range(500):
            jamo = self.rng.choice(self.targets)
            supply = self.by_jamo[jamo]
            units: list[str] = []
            remaining = count
            for s, mult in self.rng.sample(supply, min(len(supply), 60)):
                if remaining == 0 or len(units) == COMPC_MAX_UNITS:
                    break
                if mult <= remaining:
                    units.append(s)
                    remaining -= mult
            if remaining:
                continue
            room = COMPC_MAX_UNITS - len(units)
            pad = self.rng.randint(max(1 - len(units), 0), room) if room else 0
            added = 0
            while added < pad:
                s = self.rng.choice(self.syllables)
                if hangul.jamo_count(s, jamo) == 0:
                    units.append(s)
                    added += 1
            if not units:
                continue
            self.rng.shuffle(units)
            return jamo, units
        raise GenerationError(f"cannot reach jamo count {count} with this corpus")


def gen_compm(spec: GenSpec, corpus: Corpus, table: ComponentTable | None = None,
              total_per_variant: int = 1000) -> list[TaskInstance]:
    """Split tokens into components and recombine shuffled components."""
    lang = spec.language
    rng = spec.rng("compm")
    out: list[TaskInstance] = []
    split_records = []

    if lang == EN:
        pool = [w for w in corpus.items if len(w) > 5 and w.isalpha()]
        if not pool:
            raise GenerationError("no en words longer than 5 characters")
        wordset = {w.casefold() for w in corpus.items}
        seen = set()
        attempts = 0
        while len(split_records) < total_per_variant:
            attempts += 1
            word = rng.choice(pool)
            options = enumerate_splits(word)
            split = options[rng.randrange(len(options))]
            key = (word, tuple(split))
            if key in seen and attempts < total_per_variant * 20:
                continue
            seen.add(key)
            descriptors = ", ".join(f"from {p[0]} to {p[-1]}" for p in split)
            matching = [opt for opt in options if len(opt) == len(split)
                        and all(a[0] == b[0] and a[-1] == b[-1] for a, b in zip(opt, split))]
            split_records.append((word, split, matching))
            out.append(TaskInstance(
                id=make_id("compm", lang, len(out)),
                task="compm", language=lang, evaluation_type="split",
                question=COMPM_SPLIT_TEMPLATES[lang].format(
                    word=word, k=len(split), descriptors=descriptors),
                label=[list(opt) for opt in matching],
                metadata={"variant": "split", "token": word, "chosen_split": list(split)},
            ))
        combos = 0
        attempts = 0
        while combos < total_per_variant:
            attempts += 1
            if attempts > total_per_variant * 50:
                raise GenerationError("cannot build enough unambiguous en combinations")
            word, split, _ = split_records[rng.randrange(len(split_records))]
            if not _unique_en_recombination(word, split, wordset):
                continue
            parts = list(split)
            rng.shuffle(parts)
            out.append(TaskInstance(
                id=make_id("compm", lang, len(out)),
                task="compm", language=lang, evaluation_type="match_answer",
                question=COMPM_COMBINE_TEMPLATES[lang].format(
                    parts=", ".join("{%s}" % p for p in parts)),
                label=word,
                metadata={"variant": "combine", "parts": parts},
            ))
            combos += 1

    elif lang == ZH:
        if table is None:
            raise GenerationError("zh component manipulation needs a component table")
        chars = sorted(table.entries)
        for i in range(total_per_variant):
            char = chars[i] if i < len(chars) else rng.choice(chars)
            options = [dec.parts for dec in table.decompositions(char)]
            out.append(TaskInstance(
                id=make_id("compm", lang, len(out)),
                task="compm", language=lang, evaluation_type="split",
                question=COMPM_SPLIT_TEMPLATES[lang].format(char=char),
                label=[list(opt) for opt in options],
                metadata={"variant": "split", "token": char},
            ))
        unique = [(char, dec.parts) for char in chars
                  for dec in table.decompositions(char)
                  if dec.recombinable and table.recombine(dec.parts) == [char]]
        if not unique:
            raise GenerationError("component table has no uniquely recombinable entries")
        for i in range(total_per_variant):
            char, parts = unique[i % len(unique)] if i < len(unique) else rng.choice(unique)
            shuffled = list(parts)
            rng.shuffle(shuffled)
            out.append(TaskInstance(
                id=make_id("compm", lang, len(out)),
                task="compm", language=lang, evaluation_type="match_answer",
                question=COMPM_COMBINE_TEMPLATES[lang].format(parts="".join(shuffled)),
                label=char,
                metadata={"variant": "combine", "parts": shuffled},
            ))

    else:
        corpus_set = set(corpus.items)
        for i in range(total_per_variant):
            syllable = rng.choice(corpus.items)
            parts = hangul.decompose(syllable).parts()
            template = COMPM_SPLIT_TEMPLATES["ko" if len(parts) == 3 else "ko_no_final"]
            out.append(TaskInstance(
                id=make_id("compm", lang, len(out)),
                task="compm", language=lang, evaluation_type="split",
                question=template.format(syllable=syllable),
                label=[parts],
                metadata={"variant": "split", "token": syllable},
            ))
        combos = 0
        attempts = 0
        while combos < total_per_variant:
            attempts += 1
            if attempts > total_per_variant * 200:
                raise GenerationError("cannot build enough unambiguous ko combinations")
            syllable = rng.choice(corpus.items)
            parts = hangul.decompose(syllable).parts()
            if _ko_recombinations(parts, corpus_set) != {syllable}:
                continue
            shuffled = list(parts)
            rng.shuffle(shuffled)
            out.append(TaskInstance(
                id=make_id("compm", lang, len(out)),
                task="compm", language=lang, evaluation_type="match_answer",
                question=COMPM_COMBINE_TEMPLATES[lang].format(parts=", ".join(shuffled)),
                label=syllable,
                metadata={"variant": "combine", "parts": shuffled},
            ))
            combos += 1
    return out


def _unique_en_recombination(word: str, split: tuple | list, wordset: set[str]) -> bool:
    """True when exactly one word results from permuting the fragments."""
    from itertools import permutations
    results = {"".join(p) for p in permutations(split)} & wordset
    return results == {word}


def _ko_recombinations(parts: list[str], corpus_set: set[str]) -> set[str]:
    """Corpus syllables composable from the jamo multiset."""
    from itertools import permutations
    found = set()
    for perm in set(permutations(parts)):
        ini, med = perm[0], perm[1]
        fin = perm[2] if len(perm) == 3 else None
        if ini not in hangul.INITIALS or med not in hangul.MEDIALS:
            continue
        if fin is not None and fin not in hangul.FINALS:
            continue
        try:
            syllable = hangul.compose(hangul.JamoTriple(ini, med, fin))
        except hangul.HangulError:
            continue
        if syllable in corpus_set:
            found.add(syllable)
    return found


DOT_VARIANTS = ("char_class", "bitmap_class", "bitmap_char")


def gen_dot(spec: GenSpec, store: FontStore, inventory: dict[str, str]) -> list[TaskInstance]:
    """Three bitmap-recognition variants rotated over the character inventory.

    Each language slot emits one instance per inventory character; the
    variant rotates with the slot so every (character, variant) pair
    appears exactly once across the three slots.
    """
    lang = spec.language
    slot = LANGUAGES.index(lang)
    charset = set(inventory)
    out = []
    failures = []
    for i, (ch, category) in enumerate(inventory.items()):
        assert classify_script(ch, charset) == category
        try:
            bitmap = render(store, ch)
        except RenderFailure:
            failures.append(ch)
            continue
        variant = DOT_VARIANTS[(i + slot) % 3]
        if variant == "char_class":
            question = DOT_CHAR_CLASS_TEMPLATE.format(ch=ch)
            label = category
        elif variant == "bitmap_class":
            question = DOT_BITMAP_CLASS_TEMPLATE.format(bitmap=bitmap.to_text())
            label = category
        else:
            question = DOT_BITMAP_CHAR_TEMPLATE.format(category=category,
                                                       bitmap=bitmap.to_text())
            label = ch
        out.append(TaskInstance(
            id=make_id("dot", lang, len(out)),
            task="dot", language=lang, evaluation_type="match_answer",
            question=question, label=label,
            metadata={"variant": variant, "char": ch, "category": category,
                      "bitmap_format": BITMAP_TEXT_FORMAT},
        ))
    if failures:
        raise GenerationError(
            f"{len(failures)} inventory characters failed to render: {failures[:10]!r}")
    return out


DEFAULT_RIDL_DISTRIBUTION = {1: 100, 2: 400, 3: 300, 4: 200}


def gen_ridl_ko(spec: GenSpec, entries: list[RiddleEntry],
                distribution: dict[int, int] | None = None) -> list[TaskInstance]:
    """Initial-consonant riddles from curated (word, gloss, theme) entries."""
    rng = spec.rng("ridl")
    distribution = distribution or DEFAULT_RIDL_DISTRIBUTION
    by_length: dict[int, list[RiddleEntry]] = defaultdict(list)
    for entry in entries:
        by_length[len(entry.word)].append(entry)
    shortages = {length: want for length, want in distribution.items()
                 if len(by_length.get(length, [])) < want}
    if shortages:
        raise GenerationError(f"riddle entries cannot cover length buckets: {shortages} "
                              f"(available: { {k: len(v) for k, v in sorted(by_length.items())} })")
    out = []
    for length in sorted(distribution):
        for entry in rng.sample(by_length[length], distribution[length]):
            initials = "".join(hangul.initial_of(c) for c in entry.word)
            out.append(TaskInstance(
                id=make_id("ridl", spec.language, len(out)),
                task="ridl", language=spec.language, evaluation_type="match_answer",
                question=RIDL_KO_TEMPLATE.format(theme=entry.theme, initials=initials),
                label=entry.word,
                metadata={"initials": initials, "theme": entry.theme, "gloss": entry.gloss},
            ))
    return out


def gen_ridl_external(spec: GenSpec, pairs: list[tuple[str, str]],
                      total: int = 1000) -> list[TaskInstance]:
    """Instances from an externally supplied riddle file (en/zh)."""
    rng = spec.rng("ridl")
    take = min(total, len(pairs))
    chosen = rng.sample(range(len(pairs)), take)
    out = []
    for idx in chosen:
        question, answer = pairs[idx]
        out.append(TaskInstance(
            id=make_id("ridl", spec.language, len(out)),
            task="ridl", language=spec.language, evaluation_type="match_answer",
            question=question, label=answer,
            metadata={"source_index": idx},
        ))
    return out


VAR_DIGIT_RANGE = (4, 13)


def gen_var(spec: GenSpec, maps: VariantMap, corpus: Corpus | None = None,
            total: int = 1000) -> list[TaskInstance]:
    """Lookalike distortion with the original string as label."""
    lang = spec.language
    rng = spec.rng("var")
    word_pool = None
    if lang == EN:
        word_pool = [w for w in corpus.items if len(w) >= 4]
        if not word_pool:
            raise GenerationError("en corpus has no words of length >= 4")
    out = []
    while len(out) < total:
        if lang == EN:
            original, distorted, positions = _var_word(rng, maps.en, word_pool)
        elif lang == ZH:
            original, distorted, positions = _var_sentence(rng, maps.zh, corpus)
        else:
            original, distorted, positions = _var_digits(rng, maps.digits)
        if distorted is None:
            continue
        out.append(TaskInstance(
            id=make_id("var", lang, len(out)),
            task="var", language=lang, evaluation_type="match_answer",
            question=VAR_TEMPLATES[lang].format(distorted=distorted),
            label=original,
            metadata={"distorted": distorted, "positions": positions},
        ))
    return out


def _distort(rng: random.Random, text: str, table, prob: float):
    chars = list(text)
    positions = []
    substitutable = [i for i, c in enumerate(chars) if c in table.variants]
    if not substitutable:
        return None, None
    for i in substitutable:
        if rng.random() < prob:
            chars[i] = table.substitute(chars[i], rng)
            positions.append(i)
    if not positions:
        i = rng.choice(substitutable)
        chars[i] = table.substitute(chars[i], rng)
        positions.append(i)
    return "".join(chars), sorted(positions)


def _var_word(rng, table, pool):
    word = rng.choice(pool)
    distorted, positions = _distort(rng, word, table, prob=0.5)
    return word, distorted, positions


def _var_sentence(rng, table, corpus):
    n = rng.randint(8, 20)
    chars = [rng.choice(corpus.items) for _ in range(n)]
    sentence = "".join(chars) + ("。" if rng.random() < 0.5 else "")
    distorted, positions = _distort(rng, sentence, table, prob=0.6)
    return sentence, distorted, positions


def _var_digits(rng, table):
    number = "".join(rng.choice("0123456789")
                     for _ in range(rng.randint(*VAR_DIGIT_RANGE)))
    distorted, positions = _distort(rng, number, table, prob=0.5)
    return number, distorted, positions
