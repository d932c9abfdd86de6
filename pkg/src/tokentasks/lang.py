"""Language codes, unit tokenization, and answer normalization.

A "unit" is the counting token used everywhere in this package:
a whitespace-delimited word for English, a single character for
Chinese and Korean.
"""

from __future__ import annotations

import unicodedata

EN = "en"
ZH = "zh"
KO = "ko"
LANGUAGES = (EN, ZH, KO)

# Punctuation stripped from the edges of English words. Internal
# hyphens/apostrophes are kept (corpora contain items like "rope-a-dope").
_EDGE_PUNCT = "".join(
    chr(cp) for cp in range(0x10000)
    if unicodedata.category(chr(cp)).startswith("P")
)


class LanguageError(ValueError):
    """Raised for an unknown language code."""


def check_language(lang: str) -> str:
    if lang not in LANGUAGES:
        raise LanguageError(f"unknown language code: {lang!r} (expected one of {LANGUAGES})")
    return lang


def is_hanzi(ch: str) -> bool:
    """CJK Unified Ideographs (base block + extension A)."""
    cp = ord(ch)
    return 0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF


def is_hangul_syllable(ch: str) -> bool:
    return 0xAC00 <= ord(ch) <= 0xD7A3


def is_kana(ch: str) -> bool:
    cp = ord(ch)
    return 0x3041 <= cp <= 0x3096 or 0x30A1 <= cp <= 0x30FA


def tokenize_units(lang: str, text: str) -> list[str]:
    """Split text into counting units.

    en: whitespace split, edge punctuation stripped per word.
    zh: one unit per hanzi code point (whitespace/punctuation skipped).
    ko: one unit per hangul syllable (whitespace/punctuation skipped).
    """
    check_language(lang)
    if lang == EN:
        units = []
        for raw in text.split():
            word = raw.strip(_EDGE_PUNCT)
            if word:
                units.append(word)
        return units
    pred = is_hanzi if lang == ZH else is_hangul_syllable
    return [ch for ch in text if pred(ch)]


def normalize_answer(text: str) -> str:
    """Lowercase and drop punctuation, symbols, and whitespace.

    Letters, digits, CJK, and hangul survive, so a label like "CAB"
    matches an answer formatted "C A B", and "穴 + 九" matches "穴九".
    """
    out = []
    for ch in text.casefold():
        if ch.isspace():
            continue
        if unicodedata.category(ch)[0] in "PS":
            continue
        out.append(ch)
    return "".join(out)
