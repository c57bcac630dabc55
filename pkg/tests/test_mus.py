import io
import math
import random

import pytest

from muskit import (
    EmptyText,
    MusInterval,
    MusSet,
    PositionOutOfRange,
    Text,
    build_index,
    check_bounds,
    compute_mus,
    gen_lower,
    max_stab,
    mus_stab,
    occurrence_count,
    rle_size,
    stab_bound,
)
from muskit.mus import write_mus_csv

from conftest import mus_of, random_text


def ivs(ms):
    return [(iv.start, iv.end) for iv in ms]


class TestComputeMus:
    def test_banana(self):
        assert ivs(mus_of(b"banana")) == [(1, 1), (3, 5)]

    def test_distinct_characters(self):
        assert ivs(mus_of(b"abc")) == [(1, 1), (2, 2), (3, 3)]

    def test_abaab(self):
        assert ivs(mus_of(b"abaab")) == [(2, 3), (3, 4)]

    def test_unary(self):
        assert ivs(mus_of(b"aaaa")) == [(1, 4)]

    def test_empty_rejected(self):
        with pytest.raises(EmptyText):
            rle_size(Text(b""))

    def test_non_nesting_and_minimality(self):
        rng = random.Random(5)
        for _ in range(50):
            t = random_text(rng, b"ab", 80)
            idx = build_index(t)
            ms = compute_mus(idx)
            prev = None
            for iv in ms:
                if prev is not None:
                    assert iv.start > prev.start and iv.end > prev.end
                prev = iv
                w = t.sub(iv.start, iv.end)
                assert occurrence_count(idx, w) == 1
                # empty proper substrings count as repeats (n+1 occurrences)
                assert len(w) == 1 or occurrence_count(idx, w[:-1]) >= 2
                assert len(w) == 1 or occurrence_count(idx, w[1:]) >= 2


class TestMusStab:
    def test_banana(self):
        ms = mus_of(b"banana")
        assert ivs(mus_stab(ms, 4)) == [(3, 5)]
        assert mus_stab(ms, 2) == []

    def test_lower_bound_family_m5(self):
        inst = gen_lower(5)
        ms = compute_mus(build_index(inst.text))
        stab = set(ivs(mus_stab(ms, 14)))
        assert {(8, 19), (9, 20), (10, 21)} <= stab

    def test_position_out_of_range(self):
        ms = mus_of(b"banana")
        with pytest.raises(PositionOutOfRange):
            mus_stab(ms, 0)
        with pytest.raises(PositionOutOfRange):
            mus_stab(ms, 7, n=6)

    def test_binary_search_equals_linear_scan(self):
        rng = random.Random(9)
        for _ in range(40):
            t = random_text(rng, b"ab", 100)
            ms = mus_of(t.data)
            for pos in range(1, t.n + 1):
                linear = [iv for iv in ms if iv.contains(pos)]
                assert mus_stab(ms, pos) == linear


class TestMaxStab:
    def test_disjoint_mus_tie_breaks_low(self):
        assert max_stab(mus_of(b"banana")) == (1, 1)
        assert max_stab(mus_of(b"abc")) == (1, 1)

    def test_empty_set(self):
        assert max_stab(MusSet([])) == (1, 0)

    def test_lower_bound_family(self):
        inst = gen_lower(5)
        ms = compute_mus(build_index(inst.text))
        pos, count = max_stab(ms)
        assert count >= 3
        assert count == len(mus_stab(ms, pos))

    def test_matches_full_scan(self):
        rng = random.Random(13)
        for _ in range(40):
            t = random_text(rng, b"ab", 60)
            ms = mus_of(t.data)
            counts = [len(mus_stab(ms, pos)) for pos in range(1, t.n + 1)]
            best = max(counts)
            pos, count = max_stab(ms)
            assert count == best
            assert pos == counts.index(best) + 1


class TestRleSize:
    def test_examples(self):
        assert rle_size(Text(b"aaaa")) == 1
        assert rle_size(Text(b"banana")) == 6

    @pytest.mark.parametrize("m", [3, 5, 9])
    def test_family_has_4m_runs(self, m):
        assert rle_size(gen_lower(m).text) == 4 * m


class TestCheckBounds:
    def test_banana(self):
        t = Text(b"banana")
        r = check_bounds(t, mus_of(t.data))
        assert r.mus_count == 2 and r.n == 6 and r.rle_size == 6
        assert r.max_stab_count == 1
        assert r.sqrt_bound == pytest.approx(math.sqrt(90) - 2)
        assert r.all_ok

    def test_single_character(self):
        t = Text(b"a")
        r = check_bounds(t, mus_of(t.data))
        assert r.mus_count == 1 and r.rle_size == 1
        assert r.sqrt_bound == pytest.approx(math.sqrt(30) - 2)
        assert r.all_ok

    def test_family_m5(self):
        inst = gen_lower(5)
        r = check_bounds(inst.text, compute_mus(build_index(inst.text)))
        assert r.n == 72
        assert r.max_stab_count >= 3
        assert r.sqrt_bound == pytest.approx(math.sqrt(882) - 2)
        assert r.all_ok

    def test_stab_bound_value(self):
        assert stab_bound(6) == pytest.approx(math.sqrt(90) - 2)


class TestCsvEmission:
    def test_plain(self):
        out = io.StringIO()
        write_mus_csv(mus_of(b"banana"), Text(b"banana"), out)
        assert out.getvalue() == "start,end,length\n1,1,1\n3,5,3\n"

    def test_with_strings(self):
        out = io.StringIO()
        write_mus_csv(mus_of(b"banana"), Text(b"banana"), out, show_strings=True)
        assert out.getvalue() == "start,end,length,substring\n1,1,1,b\n3,5,3,nan\n"

    def test_nonprintable_escaping(self):
        data = b"\x01\x01"
        out = io.StringIO()
        write_mus_csv(mus_of(data), Text(data), out, show_strings=True)
        assert "\\x01\\x01" in out.getvalue()

    def test_quoting_of_commas(self):
        data = b"x,y"
        out = io.StringIO()
        write_mus_csv(mus_of(data), Text(data), out, show_strings=True)
        assert '"' in out.getvalue()


def test_interval_helpers():
    iv = MusInterval(3, 5)
    assert iv.length == 3
    assert iv.contains(3) and iv.contains(5) and not iv.contains(6)
