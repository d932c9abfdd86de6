import random

import pytest

from tokentasks.lang import LanguageError, normalize_answer, tokenize_units


def test_en_whitespace_split():
    assert tokenize_units("en", "he good Although") == ["he", "good", "Although"]


def test_zh_unit_per_code_point():
    units = tokenize_units("zh", "分差控制在")
    assert units == list("分差控制在")
    assert len(units) == 5


def test_empty_text():
    assert tokenize_units("en", "") == []
    assert tokenize_units("zh", "") == []


def test_en_edge_punctuation_stripped():
    assert tokenize_units("en", "Hello, world!") == ["Hello", "world"]
    assert tokenize_units("en", '"quoted" (parens).') == ["quoted", "parens"]


def test_en_internal_hyphen_apostrophe_kept():
    assert tokenize_units("en", "rope-a-dope don't") == ["rope-a-dope", "don't"]


def test_zh_skips_whitespace_and_punctuation():
    assert tokenize_units("zh", "导演是电影中的幕后英雄。") == list("导演是电影中的幕后英雄")
    assert tokenize_units("zh", "你 好，世 界！") == list("你好世界")


def test_ko_counts_syllables_only():
    assert tokenize_units("ko", "러분들이참") == list("러분들이참")
    assert tokenize_units("ko", "안녕 하세요!") == list("안녕하세요")


def test_unknown_language_rejected():
    with pytest.raises(LanguageError):
        tokenize_units("fr", "bonjour")


def test_normalize_examples():
    assert normalize_answer("C, A, B") == "cab"
    assert normalize_answer("穴 + 九") == "穴九"
    assert normalize_answer("Answer: 42.") == "answer42"


def test_normalize_keeps_cjk_and_hangul():
    assert normalize_answer("쏠!") == "쏠"
    assert normalize_answer("도서관 (library)") == "도서관library"


def test_normalize_idempotent():
    rng = random.Random(11)
    pool = "Aa1! 穴九，。쏠ㅆ<answer>**x** -_café naïve"
    for _ in range(300):
        text = "".join(rng.choice(pool) for _ in range(rng.randint(0, 30)))
        once = normalize_answer(text)
        assert normalize_answer(once) == once
