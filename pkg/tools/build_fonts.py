#!/usr/bin/env python3
"""Build the bitmap font fixtures shipped under src/tokentasks/resources/fonts/.

ASC16 (2048 bytes): ASCII glyphs rasterized from DejaVu Sans Mono.
HZK16 (282752 bytes, full 94x94 GB2312 grid): greek from DejaVu Sans,
full-width punctuation from strokes or recentered ASCII glyphs, hand-drawn
strokes for simple hanzi, deterministic placeholder patterns for the rest.

Real HZK16/ASC16 files are drop-in compatible; these fixtures only make the
shipped package self-contained. Run from the repository root:

    python tools/build_fonts.py
"""

from __future__ import annotations

import sys
from pathlib import Path

from PIL import Image, ImageDraw, ImageFont

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from tokentasks import glyphart  # noqa: E402
from tokentasks.bitmap import Bitmap16, FontStore, gb2312_zone_position, render  # noqa: E402
from tokentasks.resources import load_inventory  # noqa: E402

FONT_DIR = ROOT / "src" / "tokentasks" / "resources" / "fonts"
DEJAVU_MONO = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"
DEJAVU_SANS = "/usr/share/fonts/truetype/dejavu/DejaVuSans.ttf"

FULLWIDTH_TO_ASCII = {"！": "!", "（": "(", "）": ")", "；": ";", "：": ":", "？": "?"}


def raster(ch: str, font, width: int, dx: int = 0, dy: int = 0) -> list[list[int]]:
    img = Image.new("L", (width, 16), 0)
    ImageDraw.Draw(img).text((dx, dy), ch, fill=255, font=font)
    px = img.load()
    return [[1 if px[x, y] > 100 else 0 for x in range(width)] for y in range(16)]


def ascii_glyph(ch: str, font) -> Bitmap16:
    cells = raster(ch, font, 8)
    return Bitmap16.from_matrix([row + [0] * 8 for row in cells])


def wide_glyph(ch: str, font, dx: int = 3) -> Bitmap16:
    return Bitmap16.from_matrix(raster(ch, font, 16, dx=dx))


def recenter(asc: Bitmap16) -> Bitmap16:
    """Shift an 8-wide ASCII glyph into the middle of the 16-column cell."""
    return Bitmap16(tuple(mask >> 4 for mask in asc.rows))


def build_asc16() -> bytes:
    font = ImageFont.truetype(DEJAVU_MONO, 13)
    blob = bytearray(128 * 16)
    for code in range(0x20, 0x7F):
        glyph = ascii_glyph(chr(code), font)
        blob[code * 16:(code + 1) * 16] = glyph.to_asc_bytes()
    return bytes(blob)


def build_hzk16(asc_blob: bytes, inventory: dict[str, str]) -> bytes:
    sans = ImageFont.truetype(DEJAVU_SANS, 13)
    blob = bytearray(94 * 94 * 32)

    def put(ch: str, glyph: Bitmap16) -> None:
        qu, wei = gb2312_zone_position(ch)
        offset = (94 * (qu - 1) + (wei - 1)) * 32
        blob[offset:offset + 32] = glyph.to_hzk_bytes()

    for ch, category in inventory.items():
        if ord(ch) <= 0x7F:
            continue  # ASC16 path
        if category == "hangul":
            continue  # plug-in renderer path
        if category == "greek":
            put(ch, wide_glyph(ch, sans))
        elif category == "hanzi":
            put(ch, glyphart.hanzi_glyph(ch))
        elif category == "kana":
            put(ch, glyphart.pseudo_glyph(ch))
        else:
            stroke = glyphart.punct_glyph(ch)
            if stroke is not None:
                put(ch, stroke)
            elif ch in FULLWIDTH_TO_ASCII:
                code = ord(FULLWIDTH_TO_ASCII[ch])
                put(ch, recenter(Bitmap16.from_asc_bytes(asc_blob[code * 16:code * 16 + 16])))
            else:
                put(ch, glyphart.pseudo_glyph(ch))
    return bytes(blob)


def main() -> None:
    inventory = load_inventory()
    asc_blob = build_asc16()
    hzk_blob = build_hzk16(asc_blob, inventory)
    FONT_DIR.mkdir(parents=True, exist_ok=True)
    (FONT_DIR / "asc16.bin").write_bytes(asc_blob)
    (FONT_DIR / "hzk16.bin").write_bytes(hzk_blob)
    print(f"wrote asc16.bin ({len(asc_blob)} bytes), hzk16.bin ({len(hzk_blob)} bytes)")

    store = FontStore(hanzi_bytes=hzk_blob, ascii_bytes=asc_blob, plugin=glyphart.hangul_glyph)
    blank = [ch for ch in inventory if render(store, ch).is_blank()]
    if blank:
        raise SystemExit(f"blank glyphs for inventory characters: {blank!r}")
    print(f"verified non-blank renders for all {len(inventory)} inventory characters")


if __name__ == "__main__":
    main()
