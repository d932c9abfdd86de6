import random

import pytest

from tokentasks import hangul
from tokentasks.components import (
    ComponentError,
    ComponentTable,
    count_component,
    decompose_component,
    enumerate_splits,
)
from tokentasks.resources import default_resource_path, load_component_table


@pytest.fixture(scope="module")
def zh_table() -> ComponentTable:
    return load_component_table(default_resource_path("components_zh.tsv"))


def brute_letter_count(target: str, words: list[str]) -> int:
    return sum(w.casefold().count(target.casefold()) for w in words)


def brute_jamo_count(target: str, syllables: list[str]) -> int:
    total = 0
    for s in syllables:
        offset = ord(s) - 0xAC00
        parts = [hangul.INITIALS[offset // 588], hangul.MEDIALS[(offset % 588) // 28]]
        if offset % 28:
            parts.append(hangul.FINALS[offset % 28])
        total += sum(1 for p in parts if p == target)
    return total


def test_enumerate_splits_properties():
    word = "irritation"
    splits = enumerate_splits(word)
    assert ["irrit", "ati", "on"] in splits
    for parts in splits:
        assert "".join(parts) == word
        assert 2 <= len(parts) <= 4
        assert all(len(p) >= 2 for p in parts)
    assert len(set(tuple(s) for s in splits)) == len(splits)


def test_enumerate_splits_shortest():
    assert enumerate_splits("abcd") == [["ab", "cd"]]


def test_decompose_component_en():
    options = decompose_component("en", "irritation")
    assert ["irrit", "ati", "on"] in options
    with pytest.raises(ComponentError):
        decompose_component("en", "apple")  # needs > 5 chars


def test_decompose_component_ko():
    assert decompose_component("ko", "쏠") == [["ㅆ", "ㅗ", "ㄹ"]]


def test_decompose_component_zh(zh_table):
    assert [["穴", "九"]] == [d for d in decompose_component("zh", "究", zh_table)]
    with pytest.raises(ComponentError):
        decompose_component("zh", "罕", zh_table)  # not in the seed table


def test_count_component_en_paper_example():
    words = ["bursitis", "incendiary", "individualistic"]
    assert brute_letter_count("i", words) == 9
    assert count_component("en", "i", words) == 9


def test_count_component_en_absent_letter():
    assert count_component("en", "z", ["apple"]) == 0


def test_count_component_en_case_insensitive():
    assert count_component("en", "a", ["Although", "ART"]) == 2


def test_count_component_ko_compound_final():
    assert count_component("ko", "ㄾ", ["핥"]) == 1
    assert count_component("ko", "ㄹ", ["핥"]) == 0


def test_count_component_zh(zh_table):
    assert count_component("zh", "木", ["林", "森", "究"], zh_table) == 5
    assert count_component("zh", "合", ["盒", "答", "鸽", "拿"], zh_table) == 4


def test_count_component_zh_missing_char(zh_table):
    with pytest.raises(ComponentError) as exc:
        count_component("zh", "木", ["林", "罕"], zh_table)
    assert "罕" in str(exc.value)


def test_count_component_random_sweep_en():
    rng = random.Random(3)
    words = ["alpha", "banana", "Mississippi", "rope-a-dope", "individualistic",
             "zebra", "oak", "irritation", "less", "BUBBLE"]
    for _ in range(1000):
        seq = [rng.choice(words) for _ in range(rng.randint(1, 5))]
        target = rng.choice("abcdefghijklmnopqrstuvwxyz")
        assert count_component("en", target, seq) == brute_letter_count(target, seq)


def test_count_component_random_sweep_ko():
    rng = random.Random(4)
    syllables = [chr(rng.randrange(0xAC00, 0xD7A4)) for _ in range(400)]
    jamo_pool = hangul.INITIALS + hangul.MEDIALS + hangul.FINALS[1:]
    for _ in range(1000):
        seq = [rng.choice(syllables) for _ in range(rng.randint(1, 6))]
        target = rng.choice(jamo_pool)
        assert count_component("ko", target, seq) == brute_jamo_count(target, seq)


def test_count_component_random_sweep_zh(zh_table):
    rng = random.Random(5)
    chars = sorted(zh_table.entries)
    comps = sorted({c for ch in chars for c in zh_table.primary_parts(ch)})
    for _ in range(1000):
        seq = [rng.choice(chars) for _ in range(rng.randint(1, 6))]
        target = rng.choice(comps)
        brute = sum(zh_table.primary_parts(ch).count(target) for ch in seq)
        assert count_component("zh", target, seq, zh_table) == brute


def test_recombine_order_insensitive(zh_table):
    assert zh_table.recombine(["九", "穴"]) == ["究"]
    assert zh_table.recombine(["亻", "乍"]) == ["作"]


def test_recombinable_uniqueness_holds_for_whole_table(zh_table):
    for char, decs in zh_table.entries.items():
        for dec in decs:
            if dec.recombinable:
                assert zh_table.recombine(dec.parts) == [char]


def test_table_shape_invariants(zh_table):
    for char, decs in zh_table.entries.items():
        assert 1 <= len(decs) <= 4
        for dec in decs:
            assert len(dec.parts) >= 2
