import itertools

import pytest

from tokentasks.instances import TaskInstance
from tokentasks.scoring import (
    ScoreOutcome,
    diff_judge,
    evaluate_sample,
    extract_answer,
    match_answer,
    match_number,
    sentence_length,
    shuffle_tokens,
    split_components,
)


def make_instance(etype="match_answer", label="x", lang="en", question="q?", **meta):
    return TaskInstance(id="t_en_00000", task="freq" if etype == "number" else "dot",
                        language=lang, evaluation_type=etype,
                        question=question, label=label, metadata=meta)


class TestExtractAnswer:
    def test_tagged(self):
        assert extract_answer("reasoning... <answer>5</answer>") == "5"

    def test_bold_fallback(self):
        assert extract_answer("the result is **cab**") == "cab"

    def test_no_markers(self):
        assert extract_answer("no tags anywhere") == ""
        assert extract_answer("") == ""

    def test_last_pair_wins(self):
        raw = "<answer>4</answer> wait, no. <answer>5</answer>"
        assert extract_answer(raw) == "5"

    def test_nested_innermost(self):
        raw = "<answer>outer <answer>inner</answer></answer>"
        assert extract_answer(raw) == "inner"

    def test_tags_preferred_over_bold(self):
        assert extract_answer("**bold** then <answer>tagged</answer>") == "tagged"

    def test_multiline_content(self):
        assert extract_answer("<answer>line one\nline two</answer>") == "line one\nline two"

    def test_whitespace_trimmed(self):
        assert extract_answer("<answer>  42  </answer>") == "42"


class TestMatchNumber:
    def test_last_number_rule(self):
        assert match_number("5", "4 or maybe 5").correct

    def test_wrong_count(self):
        assert not match_number("5", "6").correct

    def test_no_digits(self):
        outcome = match_number("3", "three")
        assert not outcome.correct
        assert "no numeric" in outcome.detail

    def test_numeric_not_textual_equality(self):
        assert match_number("5", "5.0").correct
        assert match_number("5.0", "5").correct

    def test_negative_and_decimal(self):
        assert match_number("-2", "the delta is -2").correct
        assert match_number("0.5", "0.5").correct

    def test_label_without_number_raises(self):
        with pytest.raises(ValueError):
            match_number("none", "5")


class TestSentenceLength:
    def test_exact_match(self):
        inst = make_instance("length", "5", question="exactly 5 words", target_length=5)
        assert sentence_length(inst, "one two three four five").correct

    def test_off_by_one(self):
        inst = make_instance("length", "37", target_length=37)
        pred = " ".join(["word"] * 36)
        assert not sentence_length(inst, pred).correct

    def test_zh_counts_characters(self):
        inst = make_instance("length", "4", lang="zh", target_length=4)
        assert sentence_length(inst, "我喜欢猫").correct
        assert not sentence_length(inst, "我喜欢小猫").correct

    def test_question_parse_fallback(self):
        inst = make_instance("length", "3",
                             question="Please write a sentence with exactly 3 words.")
        assert sentence_length(inst, "cats are great").correct
        zh = make_instance("length", "2", lang="zh", question="要求正好包含2个汉字。")
        assert sentence_length(zh, "小猫").correct
        ko = make_instance("length", "2", lang="ko", question="정확히 2개의 한글 글자")
        assert sentence_length(ko, "사랑").correct

    def test_missing_target_raises(self):
        inst = make_instance("length", "3", question="no digits here")
        with pytest.raises(ValueError):
            sentence_length(inst, "a b c")


def brute_force_valid(original: list[str], candidate: list[str]) -> bool:
    if sorted(original) != sorted(candidate):
        return False
    banned = {frozenset(p) for p in zip(original, original[1:])}
    return all(frozenset(p) not in banned for p in zip(candidate, candidate[1:]))


class TestShuffleTokens:
    def test_valid_reordering(self):
        assert shuffle_tokens(["a", "b", "c", "d"], "c a d b", "en").correct

    def test_adjacent_pair_kept(self):
        outcome = shuffle_tokens(["a", "b", "c", "d"], "b a c d", "en")
        assert not outcome.correct
        assert "adjacent" in outcome.detail

    def test_multiset_mismatch(self):
        assert not shuffle_tokens(["a", "b", "c", "d"], "c a d", "en").correct
        assert not shuffle_tokens(["a", "b", "c", "d"], "c a d b b", "en").correct

    def test_matches_brute_force_exhaustively(self):
        original = ["a", "b", "c", "d", "e"]
        for perm in itertools.permutations(original):
            got = shuffle_tokens(original, " ".join(perm), "en").correct
            assert got == brute_force_valid(original, list(perm))

    def test_value_based_adjacency_with_duplicates(self):
        # a and b are adjacent somewhere in the original, so any a-b contact fails
        original = ["a", "b", "x", "a"]
        assert not shuffle_tokens(original, "x a b a", "en").correct

    def test_zh_units(self):
        assert shuffle_tokens(list("分差控制在"), "控分在差制", "zh").correct


class TestSplitComponents:
    def test_zh_correct(self):
        assert split_components([["穴", "九"]], "穴 和 九").correct

    def test_en_containment(self):
        assert split_components([["irrit", "ati", "on"]], "irrit ... ati ... on").correct

    def test_wrong_components(self):
        assert not split_components([["穴", "九"]], "小, 糸").correct

    def test_any_option_suffices(self):
        options = [["ab", "cd"], ["a", "bcd"]]
        assert split_components(options, "parts: a bcd").correct

    def test_doubled_component_needs_two_occurrences(self):
        assert not split_components([["木", "木"]], "木").correct
        assert split_components([["木", "木"]], "木 和 木").correct

    def test_requires_options(self):
        with pytest.raises(ValueError):
            split_components([], "x")


class TestDiffJudge:
    def test_quoted_token(self):
        inst = make_instance("diff", "only")
        assert diff_judge(inst, 'the word "only" is different').correct

    def test_affirmative(self):
        inst = make_instance("diff", "yes")
        assert diff_judge(inst, "yes, they match").correct

    def test_word_boundary_blocks_substring(self):
        inst = make_instance("diff", "only")
        assert not diff_judge(inst, "onlyfans").correct

    def test_affirmative_not_inside_word(self):
        inst = make_instance("diff", "yes")
        assert not diff_judge(inst, "eyes everywhere").correct

    def test_language_affirmatives(self):
        zh = make_instance("diff", "yes", lang="zh")
        assert diff_judge(zh, "两个序列相同").correct
        ko = make_instance("diff", "yes", lang="ko")
        assert diff_judge(ko, "네, 같습니다").correct

    def test_zh_token_containment(self):
        inst = make_instance("diff", "谁", lang="zh")
        assert diff_judge(inst, "不同的字是谁").correct
        assert not diff_judge(inst, "完全一致").correct


class TestMatchAnswer:
    def test_normalized_containment(self):
        assert match_answer("CAB", "C A B").correct

    def test_hangul_answer(self):
        assert match_answer("쏠", "ㅆ + ㅗ + ㄹ = 쏠").correct

    def test_wrong_category(self):
        assert not match_answer("symbol", "latin").correct

    def test_label_list_any(self):
        assert match_answer(["alpha", "beta"], "it is beta").correct

    def test_punctuation_only_label_raw_fallback(self):
        assert match_answer("，", "the character is ，").correct
        assert not match_answer("，", "the character is 。").correct

    def test_substring_direction(self):
        # the label must appear inside the prediction, not the reverse
        assert not match_answer("homeland", "home").correct
        assert match_answer("home", "homeland answer").correct


class TestEvaluateSample:
    def test_number_dispatch(self):
        inst = make_instance("number", "3")
        assert evaluate_sample(inst, "<answer>3</answer>").correct
        assert not evaluate_sample(inst, "<answer>4</answer>").correct

    def test_empty_extraction_always_incorrect(self):
        inst = make_instance("number", "3")
        outcome = evaluate_sample(inst, "the answer is 3")  # unmarked
        assert not outcome.correct
        assert outcome.extracted == ""

    def test_shuffle_uses_metadata(self):
        inst = make_instance("shuffle", "c a d b", original=["a", "b", "c", "d"])
        assert evaluate_sample(inst, "<answer>c a d b</answer>").correct
        assert not evaluate_sample(inst, "<answer>a b c d</answer>").correct

    def test_wrapping_reasoning_preserves_verdict(self):
        inst = make_instance("number", "7")
        core = "<answer>7</answer>"
        wrapped = "Let me think. 6? no... " + core + " That is final."
        assert evaluate_sample(inst, core).correct
        assert evaluate_sample(inst, wrapped).correct

    def test_unknown_type_rejected_at_construction(self):
        with pytest.raises(ValueError):
            make_instance("fancy", "x")

    def test_outcome_invariant(self):
        with pytest.raises(ValueError):
            ScoreOutcome(correct=True, extracted="")
