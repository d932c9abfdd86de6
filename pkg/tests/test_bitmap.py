import random

import pytest

from tokentasks import glyphart
from tokentasks.bitmap import (
    Bitmap16,
    FontStore,
    GlyphMiss,
    RenderFailure,
    ScriptError,
    asc16_lookup,
    classify_script,
    gb2312_zone_position,
    hzk16_lookup,
    render,
)
from tokentasks.resources import default_resource_path, load_font_store, load_inventory


@pytest.fixture(scope="module")
def store() -> FontStore:
    return load_font_store(default_resource_path("fonts/hzk16.bin"),
                           default_resource_path("fonts/asc16.bin"))


@pytest.fixture(scope="module")
def inventory() -> dict[str, str]:
    return load_inventory()


def test_hzk_bytes_round_trip_random():
    rng = random.Random(1)
    for _ in range(200):
        raw = bytes(rng.randrange(256) for _ in range(32))
        assert Bitmap16.from_hzk_bytes(raw).to_hzk_bytes() == raw


def test_asc_bytes_round_trip_random():
    rng = random.Random(2)
    for _ in range(200):
        raw = bytes(rng.randrange(256) for _ in range(16))
        glyph = Bitmap16.from_asc_bytes(raw)
        assert glyph.to_asc_bytes() == raw
        assert all(mask & 0xFF == 0 for mask in glyph.rows)  # right-padded


def test_text_round_trip():
    rng = random.Random(3)
    raw = bytes(rng.randrange(256) for _ in range(32))
    glyph = Bitmap16.from_hzk_bytes(raw)
    assert Bitmap16.from_text(glyph.to_text()) == glyph


def test_gb2312_zone_position():
    qu, wei = gb2312_zone_position("啊")  # first level-1 hanzi: 0xB0A1
    assert (qu, wei) == (16, 1)
    with pytest.raises(GlyphMiss):
        gb2312_zone_position("A")  # single-byte
    with pytest.raises(GlyphMiss):
        gb2312_zone_position("가")  # not GB2312-encodable


def test_hzk16_yi_is_horizontal_band(store):
    glyph = hzk16_lookup(store, "一")
    rows_with_cells = [i for i, mask in enumerate(glyph.rows) if mask]
    assert rows_with_cells, "一 must not be blank"
    assert max(rows_with_cells) - min(rows_with_cells) <= 2
    widest = max(bin(mask).count("1") for mask in glyph.rows)
    assert widest >= 10


def test_hzk16_zhong_has_center_stroke(store):
    glyph = hzk16_lookup(store, "中")
    assert not glyph.is_blank()
    center_rows = sum(1 for r in range(16) if glyph.get(r, 7) or glyph.get(r, 8))
    assert center_rows >= 10


def test_hzk16_misses_ascii(store):
    with pytest.raises(GlyphMiss):
        hzk16_lookup(store, "A")


def test_asc16_exclamation_shape(store):
    glyph = asc16_lookup(store, "!")
    col_rows = [r for r in range(16) if glyph.rows[r]]
    bar = [r for r in col_rows if r <= 9]
    dot = [r for r in col_rows if r >= 10]
    assert len(bar) >= 4 and dot, "vertical bar in the upper rows, dot below"
    gap = set(range(min(dot) - 2, min(dot))) - set(col_rows)
    assert gap, "dot is separated from the bar"


def test_asc16_space_blank_and_digit_not(store):
    assert asc16_lookup(store, " ").is_blank()
    assert not asc16_lookup(store, "1").is_blank()


def test_asc16_rejects_non_ascii(store):
    with pytest.raises(GlyphMiss):
        asc16_lookup(store, "中")


def test_store_round_trips_bit_exact(store):
    hzk = store.hanzi_bytes
    for offset in range(0, len(hzk), 32):
        chunk = hzk[offset:offset + 32]
        assert Bitmap16.from_hzk_bytes(chunk).to_hzk_bytes() == chunk
    asc = store.ascii_bytes
    for offset in range(0, len(asc), 16):
        chunk = asc[offset:offset + 16]
        assert Bitmap16.from_asc_bytes(chunk).to_asc_bytes() == chunk


def test_render_priority_and_cache(store):
    fresh = FontStore(hanzi_bytes=store.hanzi_bytes, ascii_bytes=store.ascii_bytes,
                      plugin=glyphart.hangul_glyph)
    first = render(fresh, "中")
    assert first == hzk16_lookup(fresh, "中")
    assert render(fresh, "中") is first  # cached object
    assert render(fresh, "쏠") == glyphart.hangul_glyph("쏠")  # plug-in fallback


def test_render_failure_without_sources():
    empty = FontStore(hanzi_bytes=b"", ascii_bytes=b"")
    with pytest.raises(RenderFailure):
        render(empty, "中")


def test_render_blank_treated_as_miss():
    blank_plugin_calls = []

    def plugin(ch):
        blank_plugin_calls.append(ch)
        return glyphart.pseudo_glyph(ch)

    empty = FontStore(hanzi_bytes=bytes(32 * 94 * 94), ascii_bytes=bytes(16 * 128),
                      plugin=plugin)
    glyph = render(empty, "中")  # store holds only zeros -> blank -> plug-in
    assert not glyph.is_blank()
    assert blank_plugin_calls == ["中"]


def test_store_length_validation():
    with pytest.raises(ValueError):
        FontStore(hanzi_bytes=b"123")
    with pytest.raises(ValueError):
        FontStore(ascii_bytes=b"123")


def test_classify_script_examples():
    assert classify_script("~") == "symbol"
    assert classify_script("7") == "digit"
    assert classify_script("あ") == "kana"
    assert classify_script("中") == "hanzi"
    assert classify_script("가") == "hangul"
    assert classify_script("α") == "greek"
    assert classify_script("A") == "latin"
    assert classify_script("。") == "symbol"


def test_classify_script_total_over_inventory(inventory):
    assert len(inventory) == 976
    charset = set(inventory)
    for ch, category in inventory.items():
        assert classify_script(ch, charset) == category


def test_classify_script_rejects_outside_inventory(inventory):
    with pytest.raises(ScriptError):
        classify_script("€", set(inventory))


def test_inventory_renders_non_blank(store, inventory):
    fresh = FontStore(hanzi_bytes=store.hanzi_bytes, ascii_bytes=store.ascii_bytes,
                      plugin=glyphart.hangul_glyph)
    for ch in inventory:
        assert not render(fresh, ch).is_blank()


def test_render_deterministic_across_stores(store, inventory):
    a = FontStore(hanzi_bytes=store.hanzi_bytes, ascii_bytes=store.ascii_bytes,
                  plugin=glyphart.hangul_glyph)
    b = FontStore(hanzi_bytes=store.hanzi_bytes, ascii_bytes=store.ascii_bytes,
                  plugin=glyphart.hangul_glyph)
    for ch in list(inventory)[::37]:
        assert render(a, ch) == render(b, ch)


def test_render_cache_thread_safe(store):
    import threading

    fresh = FontStore(hanzi_bytes=store.hanzi_bytes, ascii_bytes=store.ascii_bytes,
                      plugin=glyphart.hangul_glyph)
    chars = list("中一!A1가쏠あ～帅")[:8]
    results = {}
    errors = []

    def worker(tag):
        try:
            results[tag] = [render(fresh, ch).rows for ch in chars * 20]
        except Exception as exc:  # surfacing thread crashes
            errors.append(exc)

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    baseline = results[0]
    assert all(results[i] == baseline for i in results)
