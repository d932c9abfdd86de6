"""Construction-guarantee checks for the structure-task generators."""

from collections import Counter

import pytest

from tokentasks import gen_struct, hangul
from tokentasks.bitmap import Bitmap16, render
from tokentasks.components import count_component
from tokentasks.instances import GenSpec
from tokentasks.scoring import evaluate_sample


@pytest.fixture(scope="module", params=["en", "zh", "ko"])
def lang(request):
    return request.param


@pytest.fixture(scope="module")
def spec(lang):
    return GenSpec(language=lang, seed=2024)


@pytest.fixture(scope="module")
def compc_instances(bundle, spec, lang):
    return gen_struct.gen_compc(spec, bundle.corpora[lang], bundle.components_zh, total=210)


@pytest.fixture(scope="module")
def compm_instances(bundle, spec, lang):
    return gen_struct.gen_compm(spec, bundle.corpora[lang], bundle.components_zh,
                                total_per_variant=200)


@pytest.fixture(scope="module")
def dot_instances(bundle, spec):
    return gen_struct.gen_dot(spec, bundle.fonts, bundle.inventory)


@pytest.fixture(scope="module")
def var_instances(bundle, spec, lang):
    return gen_struct.gen_var(spec, bundle.variants, bundle.corpora[lang], total=200)


class TestCompc:
    def test_count_oracle(self, compc_instances, bundle, lang):
        for inst in compc_instances:
            units = inst.metadata["units"]
            target = inst.metadata["target"]
            brute = count_component(lang, target, units, bundle.components_zh)
            assert brute == int(inst.label)

    def test_sequence_bounds(self, compc_instances, lang):
        limit = 3 if lang == "en" else gen_struct.COMPC_MAX_UNITS
        for inst in compc_instances:
            assert 1 <= len(inst.metadata["units"]) <= limit

    def test_count_range_cycles(self, compc_instances, lang):
        counts = Counter(int(i.label) for i in compc_instances)
        assert set(counts) == set(gen_struct.COMPC_COUNT_RANGE[lang])

    def test_zero_count_means_no_unit_contains_target(self, compc_instances, bundle, lang):
        for inst in compc_instances:
            if int(inst.label) != 0:
                continue
            for unit in inst.metadata["units"]:
                assert count_component(lang, inst.metadata["target"], [unit],
                                       bundle.components_zh) == 0


class TestCompmSplit:
    def test_split_options_shape(self, compm_instances, lang):
        for inst in compm_instances:
            if inst.metadata["variant"] != "split":
                continue
            assert inst.evaluation_type == "split"
            assert inst.label, "at least one decomposition option"
            token = inst.metadata["token"]
            for option in inst.label:
                assert len(option) >= 2
                if lang == "en":
                    assert "".join(option) == token
                    assert all(len(p) >= 2 for p in option)
                    assert 2 <= len(option) <= 4

    def test_ko_split_is_jamo_triple(self, compm_instances, lang):
        if lang != "ko":
            return
        for inst in compm_instances:
            if inst.metadata["variant"] != "split":
                continue
            assert inst.label == [hangul.decompose(inst.metadata["token"]).parts()]

    def test_en_chosen_split_matches_descriptors(self, compm_instances, lang):
        if lang != "en":
            return
        for inst in compm_instances:
            if inst.metadata["variant"] != "split":
                continue
            chosen = inst.metadata["chosen_split"]
            assert chosen in inst.label
            # every offered option matches the prompt's first/last letters
            for option in inst.label:
                assert [(p[0], p[-1]) for p in option] == [(p[0], p[-1]) for p in chosen]


class TestCompmCombine:
    def test_round_trip_consistency(self, compm_instances, bundle, lang):
        corpus_set = set(bundle.corpora[lang].items)
        wordset = {w.casefold() for w in bundle.corpora["en"].items}
        for inst in compm_instances:
            if inst.metadata["variant"] != "combine":
                continue
            assert inst.evaluation_type == "match_answer"
            parts = inst.metadata["parts"]
            label = inst.label
            if lang == "en":
                assert gen_struct._unique_en_recombination(label, parts, wordset)
            elif lang == "zh":
                assert bundle.components_zh.recombine(parts) == [label]
            else:
                assert gen_struct._ko_recombinations(parts, corpus_set) == {label}

    def test_canonical_composition_pairs_supported(self, bundle):
        # canonical composition pairs stay uniquely recombinable
        assert bundle.components_zh.recombine(["亻", "乍"]) == ["作"]
        assert bundle.components_zh.recombine(["九", "穴"]) == ["究"]
        corpus_set = set(bundle.corpora["ko"].items)
        assert gen_struct._ko_recombinations(["ㄹ", "ㅆ", "ㅗ"], corpus_set) == {"쏠"}


class TestDot:
    def test_counts_and_rotation(self, dot_instances, bundle, spec):
        assert len(dot_instances) == len(bundle.inventory) == 976
        variants = Counter(i.metadata["variant"] for i in dot_instances)
        assert set(variants) == set(gen_struct.DOT_VARIANTS)
        assert max(variants.values()) - min(variants.values()) <= 1

    def test_each_char_once_per_slot(self, dot_instances, bundle):
        chars = [i.metadata["char"] for i in dot_instances]
        assert chars == list(bundle.inventory)

    def test_labels_by_variant(self, dot_instances, bundle):
        for inst in dot_instances:
            category = bundle.inventory[inst.metadata["char"]]
            if inst.metadata["variant"] in ("char_class", "bitmap_class"):
                assert inst.label == category
            else:
                assert inst.label == inst.metadata["char"]

    def test_bitmap_char_instances_embed_render(self, dot_instances, bundle):
        for inst in dot_instances:
            if inst.metadata["variant"] != "bitmap_char":
                continue
            embedded = Bitmap16.from_text(inst.question.split("bitmap:\n", 1)[1])
            assert embedded == render(bundle.fonts, inst.label)

    def test_variants_cover_every_char_across_slots(self, bundle):
        seen = Counter()
        for slot_lang in ("en", "zh", "ko"):
            slot_spec = GenSpec(language=slot_lang, seed=2024)
            for inst in gen_struct.gen_dot(slot_spec, bundle.fonts, bundle.inventory):
                seen[(inst.metadata["char"], inst.metadata["variant"])] += 1
        assert len(seen) == 976 * 3
        assert set(seen.values()) == {1}


class TestRidl:
    def test_ko_initials_rederive(self, bundle):
        spec = GenSpec(language="ko", seed=3)
        distribution = {1: 20, 2: 40, 3: 30, 4: 20}
        instances = gen_struct.gen_ridl_ko(spec, bundle.riddles_ko, distribution)
        assert len(instances) == 110
        for inst in instances:
            initials = "".join(hangul.initial_of(c) for c in inst.label)
            assert initials == inst.metadata["initials"]
            assert inst.metadata["initials"] in inst.question

    def test_ko_bucket_histogram(self, bundle):
        spec = GenSpec(language="ko", seed=3)
        distribution = {2: 25, 3: 10}
        instances = gen_struct.gen_ridl_ko(spec, bundle.riddles_ko, distribution)
        histogram = Counter(len(i.label) for i in instances)
        assert histogram == distribution

    def test_ko_insufficient_entries_error(self, bundle):
        spec = GenSpec(language="ko", seed=3)
        with pytest.raises(Exception) as exc:
            gen_struct.gen_ridl_ko(spec, bundle.riddles_ko, {9: 5})
        assert "bucket" in str(exc.value)

    def test_external_loader_en_zh(self, bundle):
        for lng in ("en", "zh"):
            spec = GenSpec(language=lng, seed=4)
            instances = gen_struct.gen_ridl_external(spec, bundle.external_riddles[lng],
                                                     total=50)
            assert len(instances) == 50
            for inst in instances:
                assert inst.evaluation_type == "match_answer"
                question, answer = bundle.external_riddles[lng][inst.metadata["source_index"]]
                assert inst.question == question and inst.label == answer

    def test_external_riddles_self_consistent(self, bundle):
        # every shipped seed riddle is solvable by its own answer
        for lng in ("en", "zh"):
            spec = GenSpec(language=lng, seed=4)
            for inst in gen_struct.gen_ridl_external(spec, bundle.external_riddles[lng],
                                                     total=200):
                raw = f"<answer>{inst.label}</answer>"
                assert evaluate_sample(inst, raw).correct


class TestVar:
    def test_restoration_recovers_label(self, var_instances, bundle, lang):
        table = {"en": bundle.variants.en, "zh": bundle.variants.zh,
                 "ko": bundle.variants.digits}[lang]
        for inst in var_instances:
            assert table.restore_text(inst.metadata["distorted"]) == inst.label

    def test_positions_match_diff_oracle(self, var_instances):
        for inst in var_instances:
            label, distorted = inst.label, inst.metadata["distorted"]
            assert len(label) == len(distorted)
            changed = [i for i, (a, b) in enumerate(zip(label, distorted)) if a != b]
            assert changed == inst.metadata["positions"]
            assert changed, "at least one substitution per instance"

    def test_ko_mode_digit_lengths(self, var_instances, lang):
        if lang != "ko":
            return
        for inst in var_instances:
            assert inst.label.isdigit()
            assert 4 <= len(inst.label) <= 13

    def test_zh_punctuation_untouched(self, var_instances, lang):
        if lang != "zh":
            return
        for inst in var_instances:
            if inst.label.endswith("。"):
                assert inst.metadata["distorted"].endswith("。")

    def test_en_case_preserved(self, var_instances, lang):
        if lang != "en":
            return
        for inst in var_instances:
            for pos in inst.metadata["positions"]:
                src = inst.label[pos]
                var = inst.metadata["distorted"][pos]
                if src.isupper():
                    assert not var.islower()


def test_variant_table_restores_reference_sentence(bundle):
    # the shipped zh variant table fully restores a reference distortion
    distorted = "导演湜電影狆哋幕後渶雄"
    assert bundle.variants.zh.restore_text(distorted) == "导演是电影中的幕后英雄"
