"""Resource file loading and validation.

All resources are plain UTF-8 text (line lists, TSV, CSV, JSONL) or raw
binary font files, so they can be swapped without code changes. Loaders
validate the invariants the generators rely on and fail fast with the
full list of problems.
"""

from __future__ import annotations

import csv
import hashlib
import json
import warnings
from dataclasses import dataclass, field
from importlib import resources as importlib_resources
from pathlib import Path

from . import glyphart, hangul
from .bitmap import SCRIPT_CATEGORIES, FontStore
from .components import ComponentTable
from .lang import EN, KO, ZH, check_language, is_hangul_syllable, is_hanzi


class ResourceError(ValueError):
    """Raised when a resource file fails validation."""


def default_resource_path(name: str) -> Path:
    """Path of a resource shipped inside the package."""
    return Path(str(importlib_resources.files("tokentasks") / "resources" / name))


def sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    h.update(Path(path).read_bytes())
    return h.hexdigest()


def _data_lines(path: Path) -> list[str]:
    lines = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        lines.append(line)
    return lines


@dataclass
class Corpus:
    language: str
    items: list[str]
    source_id: str

    def __len__(self) -> int:
        return len(self.items)


def _valid_en_word(word: str) -> bool:
    if not word or word.strip("-'") != word:
        return False
    return all(c.isalpha() or c in "-'" for c in word)


def load_corpus(path: Path, language: str) -> Corpus:
    check_language(language)
    items = _data_lines(path)
    problems = []
    for item in items:
        if language == EN and not _valid_en_word(item):
            problems.append(item)
        elif language == ZH and not (len(item) == 1 and is_hanzi(item)):
            problems.append(item)
        elif language == KO and not (len(item) == 1 and is_hangul_syllable(item)):
            problems.append(item)
    if problems:
        raise ResourceError(f"{path}: {len(problems)} invalid {language} corpus items, "
                            f"e.g. {problems[:5]!r}")
    if not items:
        raise ResourceError(f"{path}: empty corpus")
    return Corpus(language, items, source_id=Path(path).name)


def load_component_table(path: Path) -> ComponentTable:
    table = ComponentTable()
    for line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 3:
            raise ResourceError(f"{path}: expected 3 tab-separated fields, got {line!r}")
        char, parts, flag = fields
        if flag not in ("0", "1"):
            raise ResourceError(f"{path}: recombinable flag must be 0 or 1 in {line!r}")
        table.add(char, parts.split(","), recombinable=flag == "1")
    # recombinable decompositions must recompose uniquely
    seen: dict[tuple[str, ...], str] = {}
    for char, decs in table.entries.items():
        for dec in decs:
            if not dec.recombinable:
                continue
            key = tuple(sorted(dec.parts))
            if key in seen and seen[key] != char:
                raise ResourceError(
                    f"{path}: recombinable collision between {char!r} and {seen[key]!r}")
            seen[key] = char
    return table


@dataclass
class HomoglyphTable:
    """source -> visually similar variants, with an inverted restore index."""

    variants: dict[str, list[str]] = field(default_factory=dict)
    restore: dict[str, str] = field(default_factory=dict)

    def substitute(self, ch: str, rng) -> str | None:
        options = self.variants.get(ch)
        return rng.choice(options) if options else None

    def restore_text(self, text: str) -> str:
        return "".join(self.restore.get(ch, ch) for ch in text)


def load_homoglyphs(path: Path) -> HomoglyphTable:
    table = HomoglyphTable()
    for line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ResourceError(f"{path}: expected source<TAB>variants, got {line!r}")
        source, variants = fields[0], [v for v in fields[1].split(",") if v]
        if not variants:
            raise ResourceError(f"{path}: no variants for {source!r}")
        for variant in variants:
            if variant == source:
                raise ResourceError(f"{path}: variant equals source: {source!r}")
            if variant in table.restore:
                raise ResourceError(f"{path}: variant {variant!r} maps to multiple sources")
            table.restore[variant] = source
        table.variants.setdefault(source, []).extend(variants)
    return table


@dataclass
class VariantMap:
    """Per-language substitution tables for the restoration task."""

    en: HomoglyphTable
    zh: HomoglyphTable
    digits: HomoglyphTable


@dataclass
class RiddleEntry:
    word: str
    gloss: str
    theme: str


def load_riddles_ko(path: Path) -> list[RiddleEntry]:
    entries = []
    with open(path, encoding="utf-8", newline="") as fh:
        for row in csv.reader(line for line in fh if not line.startswith("#")):
            if not row:
                continue
            if len(row) != 3:
                raise ResourceError(f"{path}: expected word,gloss,theme, got {row!r}")
            word, gloss, theme = row
            if not word or not all(is_hangul_syllable(c) for c in word):
                warnings.warn(f"skipping riddle entry with non-hangul word: {word!r}")
                continue
            if not theme:
                raise ResourceError(f"{path}: empty theme for {word!r}")
            entries.append(RiddleEntry(word, gloss, theme))
    return entries


def load_external_riddles(path: Path, language: str) -> list[tuple[str, str]]:
    """(question, answer) pairs from an externally supplied JSONL file."""
    pairs = []
    for i, line in enumerate(_data_lines(path), 1):
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ResourceError(f"{path}:{i}: invalid JSON: {exc}") from None
        if not isinstance(rec.get("question"), str) or not isinstance(rec.get("answer"), str):
            raise ResourceError(f"{path}:{i}: needs string 'question' and 'answer'")
        if not rec["question"] or not rec["answer"]:
            raise ResourceError(f"{path}:{i}: empty question or answer")
        if rec.get("language", language) != language:
            raise ResourceError(f"{path}:{i}: language {rec.get('language')!r} != {language!r}")
        pairs.append((rec["question"], rec["answer"]))
    return pairs


def load_inventory(path: Path | None = None) -> dict[str, str]:
    """Ordered char -> category mapping for the bitmap classification task."""
    if path is None:
        path = default_resource_path("dot_inventory.tsv")
    inventory: dict[str, str] = {}
    for line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ResourceError(f"{path}: expected category<TAB>characters, got {line!r}")
        category, chars = fields
        if category not in SCRIPT_CATEGORIES:
            raise ResourceError(f"{path}: unknown category {category!r}")
        for ch in chars:
            if ch in inventory:
                raise ResourceError(f"{path}: duplicate inventory character {ch!r}")
            inventory[ch] = category
    return inventory


def load_topics(path: Path) -> list[dict[str, str]]:
    topics = []
    for line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 4:
            raise ResourceError(f"{path}: expected en<TAB>zh<TAB>ko<TAB>domain, got {line!r}")
        topics.append({EN: fields[0], ZH: fields[1], KO: fields[2], "domain": fields[3]})
    return topics


def load_font_store(hzk_path: Path, asc_path: Path,
                    plugin=glyphart.hangul_glyph) -> FontStore:
    return FontStore(
        hanzi_bytes=Path(hzk_path).read_bytes(),
        ascii_bytes=Path(asc_path).read_bytes(),
        plugin=plugin,
    )


DEFAULT_RESOURCE_NAMES = {
    "corpus_en": "corpus_en.txt",
    "corpus_zh": "corpus_zh.txt",
    "corpus_ko": "corpus_ko.txt",
    "components_zh": "components_zh.tsv",
    "homoglyphs_en": "homoglyphs_en.tsv",
    "variants_zh": "variants_zh.tsv",
    "variants_digit": "variants_digit.tsv",
    "topics": "topics.tsv",
    "riddles_ko": "riddles_ko.csv",
    "riddles_en": "riddles_en.jsonl",
    "riddles_zh": "riddles_zh.jsonl",
    "dot_inventory": "dot_inventory.tsv",
    "font_hzk16": "fonts/hzk16.bin",
    "font_asc16": "fonts/asc16.bin",
}


@dataclass
class ResourceBundle:
    """Every loaded resource the generators need."""

    corpora: dict[str, Corpus]
    components_zh: ComponentTable
    variants: VariantMap
    topics: list[dict[str, str]]
    riddles_ko: list[RiddleEntry]
    external_riddles: dict[str, list[tuple[str, str]]]
    inventory: dict[str, str]
    fonts: FontStore
    paths: dict[str, Path]

    def checksums(self) -> dict[str, str]:
        return {key: sha256_file(path) for key, path in sorted(self.paths.items())}


def load_bundle(paths: dict[str, Path] | None = None) -> ResourceBundle:
    """Load and validate every resource; defaults come from the package."""
    resolved = {key: default_resource_path(name) for key, name in DEFAULT_RESOURCE_NAMES.items()}
    if paths:
        unknown = set(paths) - set(resolved)
        if unknown:
            raise ResourceError(f"unknown resource keys: {sorted(unknown)}")
        resolved.update({k: Path(v) for k, v in paths.items()})
    return ResourceBundle(
        corpora={lang: load_corpus(resolved[f"corpus_{lang}"], lang) for lang in (EN, ZH, KO)},
        components_zh=load_component_table(resolved["components_zh"]),
        variants=VariantMap(
            en=load_homoglyphs(resolved["homoglyphs_en"]),
            zh=load_homoglyphs(resolved["variants_zh"]),
            digits=load_homoglyphs(resolved["variants_digit"]),
        ),
        topics=load_topics(resolved["topics"]),
        riddles_ko=load_riddles_ko(resolved["riddles_ko"]),
        external_riddles={
            EN: load_external_riddles(resolved["riddles_en"], EN),
            ZH: load_external_riddles(resolved["riddles_zh"], ZH),
        },
        inventory=load_inventory(resolved["dot_inventory"]),
        fonts=load_font_store(resolved["font_hzk16"], resolved["font_asc16"]),
        paths=resolved,
    )
