"""Sub-token component lookup and counting.

Chinese characters map to component lists through a ComponentTable;
Korean syllables decompose into jamo; English words enumerate
contiguous letter splits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import hangul
from .lang import EN, KO, ZH, check_language


class ComponentError(ValueError):
    """Raised for tokens outside a table or below length preconditions."""


@dataclass
class Decomposition:
    parts: list[str]
    recombinable: bool = True


@dataclass
class ComponentTable:
    """character -> up to 4 alternate decompositions, each >= 2 components."""

    entries: dict[str, list[Decomposition]] = field(default_factory=dict)

    def add(self, char: str, parts: list[str], recombinable: bool = True) -> None:
        if len(parts) < 2:
            raise ComponentError(f"decomposition for {char!r} needs >=2 components, got {parts!r}")
        decs = self.entries.setdefault(char, [])
        if len(decs) >= 4:
            raise ComponentError(f"{char!r} already has 4 decompositions")
        decs.append(Decomposition(list(parts), recombinable))

    def __contains__(self, char: str) -> bool:
        return char in self.entries

    def decompositions(self, char: str) -> list[Decomposition]:
        try:
            return self.entries[char]
        except KeyError:
            raise ComponentError(f"character not in component table: {char!r}") from None

    def primary_parts(self, char: str) -> list[str]:
        return self.decompositions(char)[0].parts

    def component_count(self, char: str, component: str) -> int:
        """Multiplicity of component in the character's primary decomposition."""
        return self.primary_parts(char).count(component)

    def recombine(self, parts: list[str]) -> list[str]:
        """All table characters whose recombinable decompositions match the
        given component multiset (input order ignored)."""
        want = sorted(parts)
        hits = []
        for char, decs in self.entries.items():
            for dec in decs:
                if dec.recombinable and sorted(dec.parts) == want:
                    hits.append(char)
                    break
        return hits


def enumerate_splits(word: str, min_parts: int = 2, max_parts: int = 4,
                     min_len: int = 2) -> list[list[str]]:
    """All contiguous splits of word into min_parts..max_parts pieces,
    every piece at least min_len characters."""
    n = len(word)
    out: list[list[str]] = []

    def rec(start: int, parts: list[str]) -> None:
        if start == n:
            if min_parts <= len(parts) <= max_parts:
                out.append(parts.copy())
            return
        if len(parts) == max_parts:
            return
        for end in range(start + min_len, n + 1):
            if n - end != 0 and n - end < min_len:
                continue
            parts.append(word[start:end])
            rec(end, parts)
            parts.pop()

    rec(0, [])
    return out


def decompose_component(lang: str, token: str, table: ComponentTable | None = None):
    """Full decomposition options for one token.

    zh: table lookup (all stored options).
    ko: the syllable's jamo triple as a single option.
    en: enumeration of 2-4-part contiguous splits, parts >= 2 chars.
    """
    check_language(lang)
    if lang == ZH:
        if table is None:
            raise ComponentError("zh decomposition requires a component table")
        return [dec.parts for dec in table.decompositions(token)]
    if lang == KO:
        return [hangul.decompose(token).parts()]
    if len(token) <= 5:
        raise ComponentError(f"en token too short to split (need >5 chars): {token!r}")
    return enumerate_splits(token)


def count_component(lang: str, target: str, sequence: list[str],
                    table: ComponentTable | None = None) -> int:
    """Total occurrences of target across the sequence's units.

    en: case-insensitive letter occurrences within each word.
    ko: jamo occurrences across each syllable's triple.
    zh: per-character component multiplicity from the table.
    """
    check_language(lang)
    if lang == EN:
        t = target.casefold()
        return sum(unit.casefold().count(t) for unit in sequence)
    if lang == KO:
        return sum(hangul.jamo_count(unit, target) for unit in sequence)
    if table is None:
        raise ComponentError("zh component counting requires a component table")
    missing = [unit for unit in sequence if unit not in table]
    if missing:
        raise ComponentError(f"characters not in component table: {''.join(missing)}")
    return sum(table.component_count(unit, target) for unit in sequence)
