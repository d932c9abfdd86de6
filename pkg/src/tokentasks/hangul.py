"""Hangul syllable arithmetic over the precomposed block (U+AC00-U+D7A3).

Compatibility jamo (U+3131..) are used for all user-facing jamo so that
questions and answers show the familiar standalone forms.
"""

from __future__ import annotations

from dataclasses import dataclass

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3
SYLLABLE_COUNT = 11172

INITIALS = [
    "ㄱ", "ㄲ", "ㄴ", "ㄷ", "ㄸ", "ㄹ", "ㅁ", "ㅂ", "ㅃ", "ㅅ",
    "ㅆ", "ㅇ", "ㅈ", "ㅉ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
]
MEDIALS = [
    "ㅏ", "ㅐ", "ㅑ", "ㅒ", "ㅓ", "ㅔ", "ㅕ", "ㅖ", "ㅗ", "ㅘ",
    "ㅙ", "ㅚ", "ㅛ", "ㅜ", "ㅝ", "ㅞ", "ㅟ", "ㅠ", "ㅡ", "ㅢ", "ㅣ",
]
# Index 0 is "no final"; FINALS[1:] are the 27 trailing consonants.
FINALS = [
    "", "ㄱ", "ㄲ", "ㄳ", "ㄴ", "ㄵ", "ㄶ", "ㄷ", "ㄹ", "ㄺ",
    "ㄻ", "ㄼ", "ㄽ", "ㄾ", "ㄿ", "ㅀ", "ㅁ", "ㅂ", "ㅄ", "ㅅ",
    "ㅆ", "ㅇ", "ㅈ", "ㅊ", "ㅋ", "ㅌ", "ㅍ", "ㅎ",
]

_INITIAL_INDEX = {j: i for i, j in enumerate(INITIALS)}
_MEDIAL_INDEX = {j: i for i, j in enumerate(MEDIALS)}
_FINAL_INDEX = {j: i for i, j in enumerate(FINALS) if j}


class HangulError(ValueError):
    """Raised for inputs outside the precomposed syllable/jamo domain."""


@dataclass(frozen=True)
class JamoTriple:
    initial: str
    medial: str
    final: str | None = None

    def parts(self) -> list[str]:
        """Component list: [initial, medial] plus the final when present."""
        out = [self.initial, self.medial]
        if self.final:
            out.append(self.final)
        return out


def is_syllable(ch: str) -> bool:
    return len(ch) == 1 and SYLLABLE_BASE <= ord(ch) <= SYLLABLE_LAST


def decompose(syllable: str) -> JamoTriple:
    """Arithmetic decomposition of one precomposed syllable."""
    if not is_syllable(syllable):
        raise HangulError(
            f"not a precomposed hangul syllable: {syllable!r} (U+{ord(syllable[:1] or ' '):04X})"
            if syllable else "not a precomposed hangul syllable: empty string"
        )
    offset = ord(syllable) - SYLLABLE_BASE
    initial = offset // (21 * 28)
    medial = (offset % (21 * 28)) // 28
    final = offset % 28
    return JamoTriple(INITIALS[initial], MEDIALS[medial], FINALS[final] or None)


def compose(triple: JamoTriple) -> str:
    """Exact inverse of decompose."""
    try:
        ini = _INITIAL_INDEX[triple.initial]
        med = _MEDIAL_INDEX[triple.medial]
    except KeyError as exc:
        raise HangulError(f"invalid jamo: {exc.args[0]!r}") from None
    fin = 0
    if triple.final:
        if triple.final not in _FINAL_INDEX:
            raise HangulError(f"invalid final jamo: {triple.final!r}")
        fin = _FINAL_INDEX[triple.final]
    return chr(SYLLABLE_BASE + (ini * 21 + med) * 28 + fin)


def initial_of(syllable: str) -> str:
    return decompose(syllable).initial


def jamo_count(syllable: str, target: str) -> int:
    """Occurrences of target across the syllable's (initial, medial, final).

    Compound finals count only when the compound itself equals the target;
    they are never split into sub-jamo.
    """
    triple = decompose(syllable)
    return sum(1 for part in triple.parts() if part == target)
