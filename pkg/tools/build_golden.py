#!/usr/bin/env python3
"""Build the golden scoring fixture under tests/data/golden/.

Every record carries a hand-assigned expected verdict; the expectations
were written from the scoring rules, not from running the scorer, so the
fixture stays an independent oracle. Run from the repository root.
"""

from __future__ import annotations

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "data" / "golden"

BITMAP_EXCLAIM = "\n".join([
    "0000000000000000",
    "0000000000000000",
    "0001000000000000",
    "0001000000000000",
    "0001000000000000",
    "0001000000000000",
    "0001000000000000",
    "0001000000000000",
    "0001000000000000",
    "0000000000000000",
    "0000000000000000",
    "0001000000000000",
    "0001000000000000",
    "0000000000000000",
    "0000000000000000",
    "0000000000000000",
])


def inst(num, task, lang, etype, question, label, **metadata):
    return {
        "id": f"{task}_{lang}_9{num:04d}",
        "task": task,
        "language": lang,
        "evaluation_type": etype,
        "question": question,
        "label": label,
        "metadata": metadata,
    }


CASES: list[tuple[dict, str, bool, str]] = []


def case(instance, raw_output, expect_correct, note):
    CASES.append((instance, raw_output, expect_correct, note))


# --- documented model-output verdicts ---------------------------------------

split_jiu = inst(1, "compm", "zh", "split", "请将“究”拆分为可重新组合的基本部件。",
                 [["穴", "九"]], variant="split", token="究")
case(split_jiu, "“究” 可以拆分为以下基本部件：\n\n穴 + 九\n\n<answer>穴 + 九</answer>",
     True, "component split answered with both parts")
case(split_jiu,
     "“究”字的基本部件可以拆分为：\n\n1. **小**：表示“小”的意思。\n2. **糸**（米字旁）：表示与“丝”或“线”相关的事物。",
     False, "hallucinated components, bold-span fallback extraction")

diff_only = inst(2, "diff", "en", "diff",
                 "Are the words in seq1 and seq2 exactly matching one-to-one (ignoring "
                 "order)? If yes, answer 'yes'. If not, which word is different? "
                 "seq1: he good Although almost started "
                 "seq2: only almost he good started Although",
                 "only", variant="add",
                 seq1="he good Although almost started",
                 seq2="only almost he good started Although")
case(diff_only, '<answer>no, the word "only" is different</answer>', True,
     "differing token quoted inside a sentence")
case(diff_only,
     "1. seq1: he, good, Although, almost, started\n2. seq2 adds one word.\n"
     "The different word is \"only\".\n\n<answer>only</answer>", True,
     "step-by-step answer ending with the bare token")
case(diff_only, "<answer>yes</answer>", False, "claims the sequences match")
case(diff_only, "<answer>started</answer>", False, "wrong token")

dot_bang = inst(3, "dot", "en", "match_answer",
                "Please classify the following 16x16 bitmap into one of the following "
                "categories: digit (0-9), latin (A-Z/a-z), greek (Greek letters), hanzi "
                "(Chinese characters), hangul (Korean syllables), kana (Japanese kana), "
                "symbol (punctuation or other symbols).\nbitmap:\n" + BITMAP_EXCLAIM,
                "symbol", variant="bitmap_class", char="!")
case(dot_bang,
     "Looking at the bitmap pattern, I can see a straight vertical line in the top half "
     "and a small dot/period at the bottom. This pattern clearly represents an exclamation "
     "mark (!), which belongs in the symbol category.\n<answer>symbol</answer>",
     True, "bitmap classified as symbol")
case(dot_bang,
     "Looking at the bitmap pattern, I can see it shows a vertical line with a small "
     "filled rectangle at the bottom - this appears to be the lowercase letter 'i'. "
     "Therefore, this bitmap represents a Latin letter.\n<answer>latin</answer>",
     False, "bitmap misclassified as latin")

compc_p = inst(4, "compc", "en", "number",
               'How many times does the letter "p" appear in "rope-a-dope polyposis '
               'all-optical"?', "5", target="p",
               units=["rope-a-dope", "polyposis", "all-optical"], target_count=5)
case(compc_p, "<answer>6</answer>", False, "miscount rejected")
case(compc_p,
     "1. **rope-a-dope**: 2\n2. **polyposis**: 2\n3. **all-optical**: 1\n"
     "Total occurrences of \"p\": 2 + 2 + 1 = 5\n<answer>5</answer>", True,
     "worked count accepted")

combine_ssol = inst(5, "compm", "ko", "match_answer", "다음 자모를 조합하세요: ㅆ, ㅗ, ㄹ",
                    "쏠", variant="combine", parts=["ㅆ", "ㅗ", "ㄹ"])
case(combine_ssol,
     "주어진 자모 ㅆ, ㅗ, ㄹ을 조합하여 한글을 만들어보겠습니다.\n"
     "ㅆ (초성) + ㅗ (중성) + ㄹ (종성) = 쏠\n<answer>쏠</answer>", True,
     "jamo composed into the syllable")
case(combine_ssol,
     "<answer>실례합니다, ㅆ, ㅗ, ㄹ을 조합할 수 있는 자음과 모음의 조합은 없습니다. "
     "ㅆ는 자음이며, ㅗ와 ㄹ도 자음입니다.</answer>", False,
     "refusal that never names the syllable")

var_sentence = inst(6, "var", "zh", "match_answer",
                    "以下是被扰动后的文本，请你还原出原始文本，不修改标点符号：导湮湜電影狆哋募後渶雄",
                    "导演是电影中的幕后英雄", distorted="导湮湜電影狆哋募後渶雄")
case(var_sentence, "<answer>导演是电影中的幕后英雄</answer>", True, "full restoration")
case(var_sentence, "<answer>导入湜电影中的幕后功</answer>", False, "partial restoration")

reord_city = inst(7, "reord", "zh", "shuffle",
                  "完全打乱“除此之外的其他城市其”，确保每个字与其原邻居不相邻。",
                  "其外其之市的城除他此",
                  original=list("除此之外的其他城市其"),
                  witness=list("其外其之市的城除他此"))
case(reord_city, "<answer>城市之外的此其其他</answer>", False,
     "nine tokens returned for a ten-token sequence")
case(reord_city, "<answer>城其市之的其外他此</answer>", False,
     "also drops a token despite looking shuffled")
case(reord_city, "<answer>其外其之市的城除他此</answer>", True, "stored witness is valid")

# --- constructed coverage across every evaluation type ----------------------

freq_en = inst(8, "freq", "en", "number",
               'How many times does "sun" appear in the following text: sun day sun '
               'night sun?', "3", target_token="sun",
               text="sun day sun night sun", target_count=3)
case(freq_en, "<answer>3</answer>", True, "count as digits")
case(freq_en, "I count 2... actually <answer>3</answer>", True, "self-corrected count")
case(freq_en, "<answer>three</answer>", False, "no numeric literal")
case(freq_en, "3", False, "unmarked answer is empty after extraction")
case(freq_en, "**3**", True, "bold fallback")
case(freq_en, "maybe 3 <answer>2 or 3</answer>", True, "last number inside tags wins")
case(freq_en, "<answer>3.0</answer>", True, "numeric equality, not textual")
case(freq_en, "<answer>30</answer>", False, "30 is not 3")

lenop_gen = inst(9, "lenop", "en", "length",
                 "Please generate an English sentence about big mountain that contains "
                 "exactly 5 words.", "5", variant="generation", target_length=5,
                 topic="big mountain", witness="the mountain stands very tall")
case(lenop_gen, "<answer>the mountain stands very tall</answer>", True, "exactly five words")
case(lenop_gen, "<answer>the mountain is tall</answer>", False, "four words")
case(lenop_gen, "<answer>the big mountain is very tall</answer>", False, "six words")
case(lenop_gen, "<answer>Mountains; tower, over: valleys below!</answer>", True,
     "punctuation does not change the word count")

lenop_rec = inst(10, "lenop", "zh", "number", "‘山水相连处处有风光’中有多少个汉字？",
                 "9", variant="recognition", target_length=9, sentence="山水相连处处有风光")
case(lenop_rec, "<answer>9</answer>", True, "character count")
case(lenop_rec, "<answer>8</answer>", False, "off by one")

sort_en = inst(11, "sort", "en", "match_answer",
               "Sort the following sentences by word count from longest to shortest and "
               "answer with the three letters (e.g. CAB). A: one two three B: one two "
               "three four five C: one two", "BAC",
               lengths={"A": 3, "B": 5, "C": 2}, base_length=3)
case(sort_en, "<answer>BAC</answer>", True, "exact permutation")
case(sort_en, "<answer>B A C</answer>", True, "spaced permutation normalizes")
case(sort_en, "<answer>b, a, c</answer>", True, "case and commas normalize away")
case(sort_en, "<answer>CAB</answer>", False, "wrong order")
case(sort_en, "The order is **BAC**", True, "bold fallback with sort answer")

reord_en = inst(12, "reord", "en", "shuffle",
                'Shuffle "alpha beta gamma delta" so that each word does not stay '
                "adjacent to its original neighbors.", "gamma alpha delta beta",
                original=["alpha", "beta", "gamma", "delta"],
                witness=["gamma", "alpha", "delta", "beta"])
case(reord_en, "<answer>gamma alpha delta beta</answer>", True, "valid reordering")
case(reord_en, "<answer>beta alpha gamma delta</answer>", False,
     "alpha-beta stay adjacent (reversed)")
case(reord_en, "<answer>delta gamma beta alpha</answer>", False,
     "full reversal keeps every original pair")
case(reord_en, "<answer>gamma alpha delta</answer>", False, "missing token")

compc_ko = inst(13, "compc", "ko", "number", '"핥훑았다"에서 "ㄾ"는 몇 회 출현하였습니까?',
                "2", target="ㄾ", units=["핥", "훑", "았", "다"], target_count=2)
case(compc_ko, "<answer>2</answer>", True, "compound final counted as a unit")
case(compc_ko, "<answer>4</answer>", False, "overcount")

compc_zh = inst(14, "compc", "zh", "number", "“盒答鸽拿操”的字形中有多少“合”存在？",
                "4", target="合", units=["盒", "答", "鸽", "拿", "操"], target_count=4)
case(compc_zh, "<answer>4</answer>", True, "component multiplicity sum")
case(compc_zh, "<answer>5</answer>", False, "distractor counted by mistake")

split_en = inst(15, "compm", "en", "split",
                'Split "irritation" into 3 parts: from i to t, from a to i, from o to n.',
                [["irrit", "ati", "on"]],
                variant="split", token="irritation", chosen_split=["irrit", "ati", "on"])
case(split_en, "<answer>irrit, ati, on</answer>", True, "all parts present")
case(split_en, "<answer>irrit + ati + on</answer>", True, "separator style irrelevant")
case(split_en, "<answer>irrit and on</answer>", False, "one part missing")
case(split_en, "<answer>irritation = irrit/ati/on</answer>", True,
     "full word plus parts still contains every part")

split_ko = inst(16, "compm", "ko", "split", "'쇽'의 초성, 중성, 종성은 무엇인가요?",
                [["ㅅ", "ㅛ", "ㄱ"]], variant="split", token="쇽")
case(split_ko, "<answer>ㅅ, ㅛ, ㄱ</answer>", True, "jamo listed")
case(split_ko, "<answer>초성 ㅅ, 중성 ㅛ, 종성 ㄱ</answer>", True, "labeled jamo")
case(split_ko, "<answer>ㅅ, ㅛ</answer>", False, "final missing")

combine_zuo = inst(17, "compm", "zh", "match_answer", "使用“亻乍”可以组成哪个汉字？",
                   "作", variant="combine", parts=["亻", "乍"])
case(combine_zuo, "<answer>作</answer>", True, "composed character")
case(combine_zuo, "这个字是 **作**", True, "bold fallback on the character")
case(combine_zuo, "<answer>借</answer>", False, "wrong character")

combine_en = inst(18, "compm", "en", "match_answer",
                  "Combine {irrit}, {on}, {ati} into one word.", "irritation",
                  variant="combine", parts=["irrit", "on", "ati"])
case(combine_en, "<answer>irritation</answer>", True, "reassembled word")
case(combine_en, "<answer>Irritation.</answer>", True, "case and period normalize away")
case(combine_en, "<answer>irritating</answer>", False, "different word")

dot_char = inst(19, "dot", "zh", "match_answer",
                'Classify the script of "~" into one of the following categories: digit '
                "(0-9), latin (A-Z/a-z), greek (Greek letters), hanzi (Chinese "
                "characters), hangul (Korean syllables), kana (Japanese kana), symbol "
                "(punctuation or other symbols).", "symbol",
                variant="char_class", char="~")
case(dot_char, "<answer>symbol</answer>", True, "tilde is a symbol")
case(dot_char, "<answer>It is a symbol (punctuation).</answer>", True,
     "category inside a sentence")
case(dot_char, "<answer>hanzi</answer>", False, "wrong category")

dot_char_v3 = inst(20, "dot", "ko", "match_answer",
                   "The following 16x16 bitmap represents a single symbol character. "
                   "Identify the exact character.\nbitmap:\n" + BITMAP_EXCLAIM, "!",
                   variant="bitmap_char", char="!")
case(dot_char_v3, "<answer>!</answer>", True,
     "punctuation label matches through the raw-text fallback")
case(dot_char_v3, "<answer>?</answer>", False, "wrong punctuation character")

ridl_ko = inst(21, "ridl", "ko", "match_answer", "초성 퀴즈입니다! 주제: Education. 초성: ㅅㅎ",
               "수학", initials="ㅅㅎ", theme="Education")
case(ridl_ko, "<answer>수학</answer>", True, "riddle word")
case(ridl_ko, "<answer>사회</answer>", False, "initials match but word differs")

var_digits = inst(22, "var", "ko", "match_answer",
                  "Recover the original number from visually confused number: 4O8l2",
                  "40812", distorted="4O8l2")
case(var_digits, "<answer>40812</answer>", True, "digits restored")
case(var_digits, "<answer>40813</answer>", False, "last digit wrong")

var_en = inst(23, "var", "en", "match_answer",
              "Recover the original word from visually confused characters: аpplе",
              "apple", distorted="аpplе")
case(var_en, "<answer>apple</answer>", True, "homoglyphs restored")
case(var_en, "The word is **apple**", True, "bold fallback")
case(var_en, "<answer>аpplе</answer>", False,
     "echoing the distorted lookalikes is not a restoration")

diff_yes = inst(24, "diff", "ko", "diff",
                "seq1과 seq2의 글자가 순서를 무시하고 정확히 일치합니까? 일치하면 'yes'라고 "
                "답하세요. 일치하지 않으면 다른 글자는 무엇입니까? seq1: 가나다 seq2: 다나가",
                "yes", variant="unchanged", seq1="가나다", seq2="다나가")
case(diff_yes, "<answer>yes</answer>", True, "plain affirmative")
case(diff_yes, "<answer>네, 일치합니다</answer>", True, "korean affirmative")
case(diff_yes, "<answer>가</answer>", False, "names a token when none differs")

diff_zh = inst(25, "diff", "zh", "diff",
               "seq1和seq2中的字是否一一对应（忽略顺序）？如果是，请回答“yes”。"
               "如果不是，指出不同的那个字。seq1: 谁都无论是 seq2: 谁都论是无",
               "yes", variant="unchanged", seq1="谁都无论是", seq2="谁都论是无")
case(diff_zh, "<answer>两个序列相同</answer>", True, "chinese affirmative")
case(diff_zh, "<answer>无</answer>", False, "token named for matching sequences")

no_answer = inst(26, "sort", "zh", "match_answer",
                 "根据汉字数从长到短排序，用三个字母作答（如CAB）。A: 一二三 B: 一二 C: 一二三四",
                 "CAB", lengths={"A": 3, "B": 2, "C": 4}, base_length=3)
case(no_answer, "C > A > B", False, "no extraction markers at all")
case(no_answer, "<answer>CAB</answer>", True, "direct answer")
case(no_answer, "<answer>cab</answer>", True, "lowercase normalizes")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    seen = {}
    dataset_lines = []
    run_lines = []
    expected_lines = []
    for i, (instance, raw, expect, note) in enumerate(CASES):
        if instance["id"] not in seen:
            seen[instance["id"]] = instance
            dataset_lines.append(json.dumps(instance, ensure_ascii=False, sort_keys=True))
        run_id = f"{instance['id']}#{i:03d}"
        run_lines.append(json.dumps({"instance_id": instance["id"], "case_id": run_id,
                                     "raw_output": raw}, ensure_ascii=False,
                                    sort_keys=True))
        expected_lines.append(json.dumps({"case_id": run_id, "instance_id": instance["id"],
                                          "expect_correct": expect, "note": note},
                                         ensure_ascii=False, sort_keys=True))
    (OUT / "dataset.jsonl").write_text("\n".join(dataset_lines) + "\n", encoding="utf-8")
    (OUT / "run.jsonl").write_text("\n".join(run_lines) + "\n", encoding="utf-8")
    (OUT / "expected.jsonl").write_text("\n".join(expected_lines) + "\n", encoding="utf-8")
    print(f"wrote {len(CASES)} golden cases over {len(seen)} instances")


if __name__ == "__main__":
    main()
