"""Procedural 16x16 glyph drawing.

Provides the hangul renderer used as the default FontStore plug-in
(hangul is not GB2312-addressable, so the bitmap stores cannot cover it),
hand-drawn strokes for simple hanzi and full-width punctuation, and
deterministic placeholder glyphs for characters without stroke data.
Strokes are described in a 0..100 unit space (x right, y down) and
rasterized into pixel boxes.
"""

from __future__ import annotations

import math
import random

from . import hangul
from .bitmap import Bitmap16

# Stroke ops: ("l", x1, y1, x2, y2) line, ("c", cx, cy, r) circle outline,
# ("r", x1, y1, x2, y2) rectangle outline, ("d", x, y) dot.

CONSONANT_STROKES = {
    "ㄱ": [("l", 10, 12, 88, 12), ("l", 88, 12, 88, 95)],
    "ㄴ": [("l", 12, 5, 12, 88), ("l", 12, 88, 92, 88)],
    "ㄷ": [("l", 88, 12, 12, 12), ("l", 12, 12, 12, 88), ("l", 12, 88, 88, 88)],
    "ㄹ": [("l", 10, 8, 88, 8), ("l", 88, 8, 88, 46), ("l", 88, 46, 12, 46),
           ("l", 12, 46, 12, 88), ("l", 12, 88, 90, 88)],
    "ㅁ": [("r", 12, 10, 88, 90)],
    "ㅂ": [("l", 14, 5, 14, 92), ("l", 86, 5, 86, 92), ("l", 14, 48, 86, 48),
           ("l", 14, 92, 86, 92)],
    "ㅅ": [("l", 50, 8, 14, 92), ("l", 50, 8, 86, 92)],
    "ㅇ": [("c", 50, 52, 38)],
    "ㅈ": [("l", 8, 10, 92, 10), ("l", 50, 10, 12, 92), ("l", 50, 10, 88, 92)],
    "ㅊ": [("l", 32, 0, 68, 0), ("l", 8, 22, 92, 22), ("l", 50, 22, 14, 95),
           ("l", 50, 22, 86, 95)],
    "ㅋ": [("l", 10, 10, 88, 10), ("l", 88, 10, 88, 95), ("l", 10, 52, 88, 52)],
    "ㅌ": [("l", 88, 8, 12, 8), ("l", 12, 8, 12, 90), ("l", 12, 90, 88, 90),
           ("l", 12, 49, 88, 49)],
    "ㅍ": [("l", 8, 8, 92, 8), ("l", 30, 8, 30, 92), ("l", 70, 8, 70, 92),
           ("l", 8, 92, 92, 92)],
    "ㅎ": [("l", 35, 0, 65, 0), ("l", 10, 20, 90, 20), ("c", 50, 64, 30)],
}

_DOUBLES = {"ㄲ": "ㄱ", "ㄸ": "ㄷ", "ㅃ": "ㅂ", "ㅆ": "ㅅ", "ㅉ": "ㅈ"}
_COMPOUND_FINALS = {
    "ㄳ": ("ㄱ", "ㅅ"), "ㄵ": ("ㄴ", "ㅈ"), "ㄶ": ("ㄴ", "ㅎ"), "ㄺ": ("ㄹ", "ㄱ"),
    "ㄻ": ("ㄹ", "ㅁ"), "ㄼ": ("ㄹ", "ㅂ"), "ㄽ": ("ㄹ", "ㅅ"), "ㄾ": ("ㄹ", "ㅌ"),
    "ㄿ": ("ㄹ", "ㅍ"), "ㅀ": ("ㄹ", "ㅎ"), "ㅄ": ("ㅂ", "ㅅ"),
}

# Vertical vowels sit right of the initial; horizontal vowels sit below it;
# mixed vowels split into a horizontal and a vertical part.
VOWEL_STROKES = {
    "ㅣ": [("l", 50, 2, 50, 98)],
    "ㅏ": [("l", 30, 2, 30, 98), ("l", 30, 50, 85, 50)],
    "ㅑ": [("l", 30, 2, 30, 98), ("l", 30, 35, 85, 35), ("l", 30, 65, 85, 65)],
    "ㅓ": [("l", 70, 2, 70, 98), ("l", 15, 50, 70, 50)],
    "ㅕ": [("l", 70, 2, 70, 98), ("l", 15, 35, 70, 35), ("l", 15, 65, 70, 65)],
    "ㅐ": [("l", 28, 2, 28, 98), ("l", 28, 50, 72, 50), ("l", 72, 2, 72, 98)],
    "ㅒ": [("l", 22, 2, 22, 98), ("l", 22, 35, 64, 35), ("l", 22, 65, 64, 65),
           ("l", 78, 2, 78, 98)],
    "ㅔ": [("l", 48, 2, 48, 98), ("l", 10, 50, 48, 50), ("l", 84, 2, 84, 98)],
    "ㅖ": [("l", 44, 2, 44, 98), ("l", 8, 33, 44, 33), ("l", 8, 66, 44, 66),
           ("l", 82, 2, 82, 98)],
    "ㅡ": [("l", 2, 55, 98, 55)],
    "ㅗ": [("l", 2, 70, 98, 70), ("l", 50, 15, 50, 70)],
    "ㅛ": [("l", 2, 72, 98, 72), ("l", 33, 18, 33, 72), ("l", 67, 18, 67, 72)],
    "ㅜ": [("l", 2, 30, 98, 30), ("l", 50, 30, 50, 90)],
    "ㅠ": [("l", 2, 28, 98, 28), ("l", 33, 28, 33, 88), ("l", 67, 28, 67, 88)],
}

_VERTICAL_VOWELS = set("ㅏㅐㅑㅒㅓㅔㅕㅖㅣ")
_HORIZONTAL_VOWELS = set("ㅗㅛㅜㅠㅡ")
_MIXED_VOWELS = {
    "ㅘ": ("ㅗ", "ㅏ"), "ㅙ": ("ㅗ", "ㅐ"), "ㅚ": ("ㅗ", "ㅣ"),
    "ㅝ": ("ㅜ", "ㅓ"), "ㅞ": ("ㅜ", "ㅔ"), "ㅟ": ("ㅜ", "ㅣ"), "ㅢ": ("ㅡ", "ㅣ"),
}

HANZI_STROKES = {
    "一": [("l", 4, 50, 96, 50)],
    "二": [("l", 10, 30, 90, 30), ("l", 5, 72, 95, 72)],
    "三": [("l", 12, 20, 88, 20), ("l", 16, 50, 84, 50), ("l", 5, 82, 95, 82)],
    "十": [("l", 8, 50, 92, 50), ("l", 50, 8, 50, 92)],
    "中": [("r", 15, 25, 85, 65), ("l", 50, 4, 50, 96)],
    "口": [("r", 15, 15, 85, 85)],
    "日": [("r", 20, 8, 80, 92), ("l", 20, 50, 80, 50)],
    "田": [("r", 10, 12, 90, 88), ("l", 50, 12, 50, 88), ("l", 10, 50, 90, 50)],
    "王": [("l", 12, 15, 88, 15), ("l", 16, 50, 84, 50), ("l", 8, 85, 92, 85),
           ("l", 50, 15, 50, 85)],
    "土": [("l", 50, 10, 50, 82), ("l", 18, 45, 82, 45), ("l", 6, 82, 94, 82)],
    "工": [("l", 12, 15, 88, 15), ("l", 50, 15, 50, 85), ("l", 8, 85, 92, 85)],
    "人": [("l", 50, 8, 22, 92), ("l", 50, 8, 82, 92)],
    "八": [("l", 42, 15, 15, 90), ("l", 58, 15, 88, 90)],
    "大": [("l", 8, 45, 92, 45), ("l", 50, 8, 50, 45), ("l", 50, 45, 18, 95),
           ("l", 50, 45, 85, 95)],
    "小": [("l", 50, 5, 50, 85), ("l", 30, 35, 14, 75), ("l", 70, 35, 86, 75)],
    "山": [("l", 50, 8, 50, 80), ("l", 12, 35, 12, 80), ("l", 88, 35, 88, 80),
           ("l", 12, 80, 88, 80)],
    "川": [("l", 18, 12, 12, 88), ("l", 50, 8, 50, 92), ("l", 85, 8, 85, 92)],
    "木": [("l", 8, 35, 92, 35), ("l", 50, 5, 50, 95), ("l", 50, 40, 18, 90),
           ("l", 50, 40, 82, 90)],
    "上": [("l", 42, 8, 42, 78), ("l", 42, 40, 80, 40), ("l", 8, 78, 92, 78)],
    "下": [("l", 8, 18, 92, 18), ("l", 50, 18, 50, 88), ("l", 50, 48, 76, 66)],
}

PUNCT_STROKES = {
    "。": [("c", 25, 78, 14)],
    "、": [("l", 30, 58, 48, 85)],
    "·": [("d", 48, 48), ("d", 52, 48), ("d", 48, 52), ("d", 52, 52)],
    "【": [("l", 62, 8, 32, 8), ("l", 32, 8, 32, 92), ("l", 32, 92, 62, 92)],
    "】": [("l", 38, 8, 68, 8), ("l", 68, 8, 68, 92), ("l", 68, 92, 38, 92)],
    "￥": [("l", 30, 8, 50, 38), ("l", 70, 8, 50, 38), ("l", 50, 38, 50, 90),
           ("l", 30, 52, 70, 52), ("l", 30, 68, 70, 68)],
    "—": [("l", 4, 50, 96, 50)],
    "…": [("d", 18, 80), ("d", 50, 80), ("d", 82, 80)],
    "‘": [("l", 52, 12, 44, 30), ("d", 50, 32)],
    "’": [("l", 44, 32, 52, 14), ("d", 46, 12)],
    "“": [("l", 42, 12, 34, 30), ("d", 40, 32), ("l", 64, 12, 56, 30), ("d", 62, 32)],
    "”": [("l", 34, 32, 42, 14), ("d", 36, 12), ("l", 56, 32, 64, 14), ("d", 58, 12)],
    "，": [("d", 28, 70), ("d", 32, 70), ("l", 32, 74, 24, 90)],
}


class _Grid:
    def __init__(self):
        self.cells = [[0] * 16 for _ in range(16)]

    def set(self, col: int, row: int) -> None:
        if 0 <= row < 16 and 0 <= col < 16:
            self.cells[row][col] = 1

    def line(self, x1: int, y1: int, x2: int, y2: int) -> None:
        dx, dy = abs(x2 - x1), abs(y2 - y1)
        sx = 1 if x1 < x2 else -1
        sy = 1 if y1 < y2 else -1
        err = dx - dy
        x, y = x1, y1
        while True:
            self.set(x, y)
            if x == x2 and y == y2:
                return
            e2 = 2 * err
            if e2 > -dy:
                err -= dy
                x += sx
            if e2 < dx:
                err += dx
                y += sy

    def bitmap(self) -> Bitmap16:
        return Bitmap16.from_matrix(self.cells)


def _scale(value: float, lo: int, hi: int) -> int:
    return lo + round(value / 100.0 * (hi - lo))


def draw_strokes(grid: _Grid, strokes, box: tuple[int, int, int, int]) -> None:
    """Rasterize unit-space strokes into an inclusive (r0, c0, r1, c1) box."""
    r0, c0, r1, c1 = box

    def px(x: float, y: float) -> tuple[int, int]:
        return _scale(x, c0, c1), _scale(y, r0, r1)

    for op in strokes:
        kind = op[0]
        if kind == "l":
            (x1, y1), (x2, y2) = px(op[1], op[2]), px(op[3], op[4])
            grid.line(x1, y1, x2, y2)
        elif kind == "r":
            (x1, y1), (x2, y2) = px(op[1], op[2]), px(op[3], op[4])
            grid.line(x1, y1, x2, y1)
            grid.line(x2, y1, x2, y2)
            grid.line(x2, y2, x1, y2)
            grid.line(x1, y2, x1, y1)
        elif kind == "c":
            cx, cy = px(op[1], op[2])
            rx = max(1, round(op[3] / 100.0 * (c1 - c0) / 1.0))
            ry = max(1, round(op[3] / 100.0 * (r1 - r0) / 1.0))
            steps = 24
            pts = []
            for i in range(steps):
                ang = 2 * math.pi * i / steps
                pts.append((cx + round(rx * math.cos(ang)), cy + round(ry * math.sin(ang))))
            for (xa, ya), (xb, yb) in zip(pts, pts[1:] + pts[:1]):
                grid.line(xa, ya, xb, yb)
        elif kind == "d":
            x, y = px(op[1], op[2])
            grid.set(x, y)


def stroke_glyph(strokes, box: tuple[int, int, int, int] = (1, 1, 14, 14)) -> Bitmap16:
    grid = _Grid()
    draw_strokes(grid, strokes, box)
    return grid.bitmap()


def _consonant_strokes(jamo: str):
    if jamo in CONSONANT_STROKES:
        return [("one", CONSONANT_STROKES[jamo])]
    if jamo in _DOUBLES:
        base = CONSONANT_STROKES[_DOUBLES[jamo]]
        return [("pair", base, base)]
    if jamo in _COMPOUND_FINALS:
        a, b = _COMPOUND_FINALS[jamo]
        return [("pair", CONSONANT_STROKES[a], CONSONANT_STROKES[b])]
    raise KeyError(jamo)


def _draw_consonant(grid: _Grid, jamo: str, box: tuple[int, int, int, int]) -> None:
    (layout,) = _consonant_strokes(jamo)
    r0, c0, r1, c1 = box
    if layout[0] == "one":
        draw_strokes(grid, layout[1], box)
    else:
        mid = (c0 + c1) // 2
        draw_strokes(grid, layout[1], (r0, c0, r1, mid - 1))
        draw_strokes(grid, layout[2], (r0, mid + 1, r1, c1))


def hangul_glyph(ch: str) -> Bitmap16 | None:
    """Compose a syllable glyph from its jamo; None for non-hangul input.

    Suitable as the FontStore plug-in renderer.
    """
    if len(ch) != 1 or not hangul.is_syllable(ch):
        return None
    triple = hangul.decompose(ch)
    grid = _Grid()
    vow = triple.medial
    has_final = triple.final is not None

    if vow in _VERTICAL_VOWELS:
        if has_final:
            ini_box, vow_box = (0, 1, 8, 7), (0, 9, 9, 14)
        else:
            ini_box, vow_box = (2, 1, 13, 7), (0, 9, 15, 14)
        _draw_consonant(grid, triple.initial, ini_box)
        draw_strokes(grid, VOWEL_STROKES[vow], vow_box)
    elif vow in _HORIZONTAL_VOWELS:
        if has_final:
            ini_box, vow_box = (0, 3, 5, 12), (6, 0, 10, 15)
        else:
            ini_box, vow_box = (0, 3, 8, 12), (9, 0, 15, 15)
        _draw_consonant(grid, triple.initial, ini_box)
        draw_strokes(grid, VOWEL_STROKES[vow], vow_box)
    else:
        hpart, vpart = _MIXED_VOWELS[vow]
        if has_final:
            ini_box, h_box, v_box = (0, 1, 5, 6), (6, 0, 9, 8), (0, 10, 9, 15)
        else:
            ini_box, h_box, v_box = (0, 1, 7, 7), (8, 0, 12, 8), (0, 10, 15, 15)
        _draw_consonant(grid, triple.initial, ini_box)
        draw_strokes(grid, VOWEL_STROKES[hpart], h_box)
        draw_strokes(grid, VOWEL_STROKES[vpart], v_box)

    if has_final:
        _draw_consonant(grid, triple.final, (11, 2, 15, 13))
    return grid.bitmap()


def pseudo_glyph(ch: str) -> Bitmap16:
    """Deterministic placeholder glyph for characters without stroke data.

    Not a faithful rendering; used to keep fixture fonts total over the
    character inventory. Swap in real font files for faithful prompts.
    """
    rng = random.Random(f"glyph:{ord(ch)}")
    grid = _Grid()
    for _ in range(rng.randint(3, 5)):
        kind = rng.choice("hvdb")
        if kind == "h":
            y = rng.randint(2, 13)
            x1 = rng.randint(1, 5)
            grid.line(x1, y, rng.randint(10, 14), y)
        elif kind == "v":
            x = rng.randint(2, 13)
            y1 = rng.randint(1, 5)
            grid.line(x, y1, x, rng.randint(10, 14))
        elif kind == "d":
            grid.line(rng.randint(1, 6), rng.randint(1, 6),
                      rng.randint(9, 14), rng.randint(9, 14))
        else:
            r0, c0 = rng.randint(2, 7), rng.randint(2, 7)
            grid.line(c0, r0, c0 + 5, r0)
            grid.line(c0 + 5, r0, c0 + 5, r0 + 5)
            grid.line(c0 + 5, r0 + 5, c0, r0 + 5)
            grid.line(c0, r0 + 5, c0, r0)
    bmp = grid.bitmap()
    assert not bmp.is_blank()
    return bmp


def hanzi_glyph(ch: str) -> Bitmap16:
    """Hand-drawn strokes where available, placeholder otherwise."""
    if ch in HANZI_STROKES:
        return stroke_glyph(HANZI_STROKES[ch])
    return pseudo_glyph(ch)


def punct_glyph(ch: str) -> Bitmap16 | None:
    if ch in PUNCT_STROKES:
        return stroke_glyph(PUNCT_STROKES[ch], box=(0, 0, 15, 15))
    return None
