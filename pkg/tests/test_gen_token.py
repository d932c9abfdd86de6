"""Construction-guarantee checks for the token-sequence generators.

Each label is re-verified with an independent oracle: raw token scans,
tokenizer counts, multiset differences, length sorts, and brute-force
adjacency checks.
"""

import itertools
import re
from collections import Counter

import pytest

from tokentasks import gen_token
from tokentasks.instances import GenSpec
from tokentasks.lang import tokenize_units

SMALL = dict(max_len=40, per_length_cap=2)


@pytest.fixture(scope="module", params=["en", "zh", "ko"])
def lang(request):
    return request.param


@pytest.fixture(scope="module")
def spec(lang):
    return GenSpec(language=lang, seed=1234, **SMALL)


@pytest.fixture(scope="module")
def freq_instances(bundle, lang):
    return gen_token.gen_freq(GenSpec(language=lang, seed=5, per_count_cap=20),
                              bundle.corpora[lang])


@pytest.fixture(scope="module")
def lenop_instances(bundle, spec, lang):
    return gen_token.gen_lenop(spec, bundle.corpora[lang], bundle.topics)


@pytest.fixture(scope="module")
def diff_instances(bundle, spec, lang):
    return gen_token.gen_diff(spec, bundle.corpora[lang])


@pytest.fixture(scope="module")
def sort_instances(bundle, spec, lang):
    return gen_token.gen_sort(spec, bundle.corpora[lang])


@pytest.fixture(scope="module")
def reord_instances(bundle, spec, lang):
    return gen_token.gen_reord(spec, bundle.corpora[lang])


class TestFreq:
    def test_counting_oracle(self, freq_instances, lang):
        for inst in freq_instances:
            units = tokenize_units(lang, inst.metadata["text"])
            target = inst.metadata["target_token"]
            assert units.count(target) == int(inst.label)

    def test_length_constraints(self, freq_instances, lang):
        for inst in freq_instances:
            text = inst.metadata["text"]
            assert len(text) <= gen_token.MAX_TEXT_CHARS
            units = tokenize_units(lang, text)
            assert len(units) >= int(inst.label) * gen_token.TOKEN_FLOOR_FACTOR

    def test_per_count_cap(self, freq_instances):
        by_count = Counter(int(i.label) for i in freq_instances)
        assert set(by_count) == set(range(1, 11))
        assert all(v == 20 for v in by_count.values())

    def test_target_in_question(self, freq_instances):
        for inst in freq_instances[:40]:
            assert inst.metadata["target_token"] in inst.question


class TestLenop:
    def test_split_between_variants(self, lenop_instances, spec):
        per_variant = len(spec.lengths()) * spec.per_length_cap
        recognition = [i for i in lenop_instances if i.metadata["variant"] == "recognition"]
        generation = [i for i in lenop_instances if i.metadata["variant"] == "generation"]
        assert len(recognition) == len(generation) == per_variant

    def test_recognition_label_matches_tokenizer(self, lenop_instances, lang):
        for inst in lenop_instances:
            if inst.metadata["variant"] != "recognition":
                continue
            assert inst.evaluation_type == "number"
            counted = len(tokenize_units(lang, inst.metadata["sentence"]))
            assert counted == int(inst.label)

    def test_generation_witness_has_target_length(self, lenop_instances, lang):
        for inst in lenop_instances:
            if inst.metadata["variant"] != "generation":
                continue
            assert inst.evaluation_type == "length"
            witness = inst.metadata["witness"]
            assert len(tokenize_units(lang, witness)) == inst.metadata["target_length"]

    def test_generation_topics_unique(self, lenop_instances):
        topics = [i.metadata["topic"] for i in lenop_instances
                  if i.metadata["variant"] == "generation"]
        assert len(set(topics)) == len(topics)

    def test_per_length_cap(self, lenop_instances, spec):
        by_length = Counter((i.metadata["variant"], i.metadata["target_length"])
                            for i in lenop_instances)
        assert all(v <= spec.per_length_cap for v in by_length.values())


class TestDiff:
    def test_multiset_difference_oracle(self, diff_instances, lang):
        for inst in diff_instances:
            seq1 = Counter(tokenize_units(lang, inst.metadata["seq1"]))
            seq2 = Counter(tokenize_units(lang, inst.metadata["seq2"]))
            variant = inst.metadata["variant"]
            diff = (seq1 - seq2) + (seq2 - seq1)
            if variant == "unchanged":
                assert inst.label == "yes"
                assert not diff
            elif variant == "add":
                assert dict(diff) == {inst.label: 1}
                assert seq2[inst.label] == 1 and seq1[inst.label] == 0
            elif variant == "delete":
                assert dict(diff) == {inst.label: 1}
                assert seq1[inst.label] == 1 and seq2[inst.label] == 0
            else:
                assert sum(diff.values()) == 2
                assert seq2[inst.label] == 1 and seq1[inst.label] == 0
                removed = inst.metadata["removed"]
                assert seq1[removed] == 1 and seq2[removed] == 0

    def test_variant_coverage(self, diff_instances):
        variants = Counter(i.metadata["variant"] for i in diff_instances)
        assert set(variants) == set(gen_token.DIFF_VARIANTS)


class TestSort:
    def test_label_matches_argsort_oracle(self, sort_instances, lang):
        for inst in sort_instances:
            parts = re.match(r".*A: (?P<a>.*) B: (?P<b>.*) C: (?P<c>.*)$", inst.question,
                             re.DOTALL)
            lengths = {letter: len(tokenize_units(lang, parts.group(letter.lower())))
                       for letter in "ABC"}
            expected = "".join(sorted("ABC", key=lambda c: -lengths[c]))
            assert inst.label == expected
            assert lengths == dict(inst.metadata["lengths"])

    def test_label_is_permutation(self, sort_instances):
        for inst in sort_instances:
            assert sorted(inst.label) == ["A", "B", "C"]

    def test_lengths_pairwise_distinct(self, sort_instances):
        for inst in sort_instances:
            values = list(inst.metadata["lengths"].values())
            assert len(set(values)) == 3


class TestReord:
    def test_witness_is_adjacency_free_permutation(self, reord_instances):
        for inst in reord_instances:
            original = inst.metadata["original"]
            witness = inst.metadata["witness"]
            assert sorted(original) == sorted(witness)
            banned = {frozenset(p) for p in zip(original, original[1:])}
            assert all(frozenset(p) not in banned for p in zip(witness, witness[1:]))

    def test_exhaustive_check_smallest_length(self, bundle, lang):
        spec = GenSpec(language=lang, seed=77, min_len=5, max_len=5, per_length_cap=4)
        for inst in gen_token.gen_reord(spec, bundle.corpora[lang]):
            original = inst.metadata["original"]
            banned = {frozenset(p) for p in zip(original, original[1:])}
            valid = [p for p in itertools.permutations(original)
                     if all(frozenset(q) not in banned for q in zip(p, p[1:]))]
            assert tuple(inst.metadata["witness"]) in valid


def test_determinism_identical_seed(bundle):
    spec = GenSpec(language="en", seed=99, **SMALL)
    a = gen_token.gen_diff(spec, bundle.corpora["en"])
    b = gen_token.gen_diff(spec, bundle.corpora["en"])
    assert [i.to_json() for i in a] == [i.to_json() for i in b]
    other = gen_token.gen_diff(GenSpec(language="en", seed=100, **SMALL),
                               bundle.corpora["en"])
    assert [i.to_json() for i in a] != [i.to_json() for i in other]
