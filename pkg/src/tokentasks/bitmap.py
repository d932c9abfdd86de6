"""16x16 bitmap font decoding and script classification.

Two fixed-cell binary layouts are supported:
  HZK16: 32 bytes per glyph, addressed by GB2312 zone/position.
  ASC16: 16 bytes per glyph, addressed by ASCII code point.

Glyphs decode bit-exactly; re-encoding a decoded bitmap reproduces the
source bytes. A configurable plug-in renderer (character -> 16x16 matrix)
backs characters neither store covers.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .lang import is_hangul_syllable, is_hanzi, is_kana

ROWS = 16
COLS = 16

# Pinned text serialization of bitmaps inside prompts (version recorded in
# instance metadata so fixtures stay comparable if the format ever changes).
BITMAP_TEXT_FORMAT = "rows01-v1"

SCRIPT_CATEGORIES = ("digit", "latin", "greek", "hanzi", "hangul", "kana", "symbol")


class GlyphMiss(LookupError):
    """A font store has no glyph for the character (triggers fallback)."""


class RenderFailure(RuntimeError):
    """Every source missed or produced a blank glyph."""


class ScriptError(ValueError):
    """Character outside the classification inventory."""


@dataclass(frozen=True)
class Bitmap16:
    """16 rows of 16 cells; each row is an int bitmask, bit 15 = left column."""

    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != ROWS or any(not 0 <= r <= 0xFFFF for r in self.rows):
            raise ValueError("Bitmap16 requires 16 row masks in 0..0xFFFF")

    @classmethod
    def from_matrix(cls, matrix: Iterable[Iterable[int]]) -> "Bitmap16":
        rows = []
        for row in matrix:
            cells = list(row)
            if len(cells) != COLS:
                raise ValueError("matrix rows must have 16 cells")
            mask = 0
            for cell in cells:
                mask = (mask << 1) | (1 if cell else 0)
            rows.append(mask)
        return cls(tuple(rows))

    @classmethod
    def from_hzk_bytes(cls, raw: bytes) -> "Bitmap16":
        if len(raw) != 32:
            raise ValueError(f"HZK16 glyph must be 32 bytes, got {len(raw)}")
        return cls(tuple((raw[2 * i] << 8) | raw[2 * i + 1] for i in range(ROWS)))

    @classmethod
    def from_asc_bytes(cls, raw: bytes) -> "Bitmap16":
        if len(raw) != 16:
            raise ValueError(f"ASC16 glyph must be 16 bytes, got {len(raw)}")
        # 8-wide glyph left-aligned in the 16-column grid, zero padding right.
        return cls(tuple(b << 8 for b in raw))

    def to_hzk_bytes(self) -> bytes:
        out = bytearray()
        for mask in self.rows:
            out.append(mask >> 8)
            out.append(mask & 0xFF)
        return bytes(out)

    def to_asc_bytes(self) -> bytes:
        if any(mask & 0xFF for mask in self.rows):
            raise ValueError("bitmap has cells right of column 7; not an ASC16 glyph")
        return bytes(mask >> 8 for mask in self.rows)

    def get(self, row: int, col: int) -> int:
        return (self.rows[row] >> (COLS - 1 - col)) & 1

    def set_count(self) -> int:
        return sum(bin(mask).count("1") for mask in self.rows)

    def is_blank(self) -> bool:
        return all(mask == 0 for mask in self.rows)

    def to_text(self) -> str:
        """Rows of 0/1 characters separated by newlines (BITMAP_TEXT_FORMAT)."""
        return "\n".join(format(mask, "016b") for mask in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "Bitmap16":
        lines = [line for line in text.strip().splitlines() if line.strip()]
        if len(lines) != ROWS:
            raise ValueError(f"expected 16 bitmap rows, got {len(lines)}")
        return cls(tuple(int(line.strip(), 2) for line in lines))


def gb2312_zone_position(ch: str) -> tuple[int, int]:
    """GB2312 zone/position (qu, wei) of a character, or GlyphMiss.

    Encodes through the gbk superset and accepts only byte pairs inside the
    GB2312 double-byte range (lead 0xA1-0xF7, trail 0xA1-0xFE).
    """
    try:
        raw = ch.encode("gbk")
    except UnicodeEncodeError:
        raise GlyphMiss(f"not GB2312-encodable: {ch!r}") from None
    if len(raw) != 2 or not (0xA1 <= raw[0] <= 0xF7 and 0xA1 <= raw[1] <= 0xFE):
        raise GlyphMiss(f"outside GB2312 double-byte range: {ch!r}")
    return raw[0] - 0xA0, raw[1] - 0xA0


PluginRenderer = Callable[[str], Optional[Bitmap16]]


@dataclass
class FontStore:
    """Byte stores for both layouts plus an optional plug-in renderer.

    Immutable after load except the render cache, which is lock-protected
    for concurrent use.
    """

    hanzi_bytes: bytes = b""
    ascii_bytes: bytes = b""
    plugin: PluginRenderer | None = None
    _cache: dict[str, Bitmap16] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self):
        if len(self.hanzi_bytes) % 32:
            raise ValueError("HZK16 store length must be a multiple of 32 bytes")
        if len(self.ascii_bytes) % 16:
            raise ValueError("ASC16 store length must be a multiple of 16 bytes")


def hzk16_lookup(store: FontStore, ch: str) -> Bitmap16:
    """Decode one glyph from the HZK16 store; GlyphMiss when not addressable."""
    qu, wei = gb2312_zone_position(ch)
    offset = (94 * (qu - 1) + (wei - 1)) * 32
    if offset + 32 > len(store.hanzi_bytes):
        raise GlyphMiss(f"offset {offset} past end of HZK16 store for {ch!r}")
    return Bitmap16.from_hzk_bytes(store.hanzi_bytes[offset:offset + 32])


def asc16_lookup(store: FontStore, ch: str) -> Bitmap16:
    """Decode one glyph from the ASC16 store; GlyphMiss when not addressable."""
    code = ord(ch)
    if code > 0x7F:
        raise GlyphMiss(f"not ASCII: {ch!r}")
    offset = code * 16
    if offset + 16 > len(store.ascii_bytes):
        raise GlyphMiss(f"offset {offset} past end of ASC16 store for {ch!r}")
    return Bitmap16.from_asc_bytes(store.ascii_bytes[offset:offset + 16])


def render(store: FontStore, ch: str) -> Bitmap16:
    """Render a character through the priority chain, caching results.

    ASCII goes through the ASC16 store, everything else through HZK16;
    a miss or blank result falls back to the plug-in renderer. Blank
    results are treated as misses everywhere.
    """
    with store._lock:
        cached = store._cache.get(ch)
    if cached is not None:
        return cached

    bitmap: Bitmap16 | None = None
    try:
        bitmap = asc16_lookup(store, ch) if ord(ch) <= 0x7F else hzk16_lookup(store, ch)
    except GlyphMiss:
        bitmap = None
    if bitmap is not None and bitmap.is_blank():
        bitmap = None
    if bitmap is None and store.plugin is not None:
        bitmap = store.plugin(ch)
        if bitmap is not None and bitmap.is_blank():
            bitmap = None
    if bitmap is None:
        raise RenderFailure(f"no source produced a non-blank glyph for {ch!r}")

    with store._lock:
        store._cache[ch] = bitmap
    return bitmap


def classify_script(ch: str, inventory: set[str] | None = None) -> str:
    """Script category of one character.

    When an inventory is given, characters outside it are a domain error;
    anything in the inventory not matching a specific script is a symbol.
    """
    if len(ch) != 1:
        raise ScriptError(f"expected a single character, got {ch!r}")
    if inventory is not None and ch not in inventory:
        raise ScriptError(f"character outside the classification inventory: {ch!r}")
    cp = ord(ch)
    if "0" <= ch <= "9":
        return "digit"
    if "A" <= ch <= "Z" or "a" <= ch <= "z":
        return "latin"
    if 0x0391 <= cp <= 0x03C9:
        return "greek"
    if is_hanzi(ch):
        return "hanzi"
    if is_hangul_syllable(ch):
        return "hangul"
    if is_kana(ch):
        return "kana"
    return "symbol"
