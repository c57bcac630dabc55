import random

import pytest

from muskit import (
    EditOp,
    PositionOutOfRange,
    ResultEmpty,
    Text,
    apply_edit,
    brute_mus,
    build_index,
    compute_mus,
    sensitivity,
    sensitivity_scan,
    stab_bound,
)

from conftest import random_text


class TestApplyEdit:
    def test_substitute(self):
        assert apply_edit(Text(b"abc"), EditOp("substitute", 2, ord("a"))).data == b"aac"

    def test_insert_append(self):
        assert apply_edit(Text(b"abc"), EditOp("insert", 4, ord("d"))).data == b"abcd"

    def test_insert_front(self):
        assert apply_edit(Text(b"abc"), EditOp("insert", 1, ord("x"))).data == b"xabc"

    def test_delete(self):
        assert apply_edit(Text(b"abc"), EditOp("delete", 1)).data == b"bc"

    def test_position_out_of_range(self):
        with pytest.raises(PositionOutOfRange):
            apply_edit(Text(b"abc"), EditOp("substitute", 4, ord("a")))
        with pytest.raises(PositionOutOfRange):
            apply_edit(Text(b"abc"), EditOp("insert", 5, ord("a")))

    def test_delete_to_empty(self):
        with pytest.raises(ResultEmpty):
            apply_edit(Text(b"a"), EditOp("delete", 1))


class TestSensitivity:
    def test_abc_substitution(self):
        r = sensitivity(Text(b"abc"), EditOp("substitute", 2, ord("a")))
        assert (r.pre_count, r.post_count, r.additive) == (3, 2, -1)

    def test_aaaa_substitution(self):
        r = sensitivity(Text(b"aaaa"), EditOp("substitute", 1, ord("b")))
        assert (r.pre_count, r.post_count, r.additive) == (1, 2, 1)

    def test_identity_substitution(self):
        t = Text(b"mississippi")
        for pos in range(1, t.n + 1):
            r = sensitivity(t, EditOp("substitute", pos, t.char(pos)))
            assert r.additive == 0
            assert r.new_at_edit == 0 and r.new_elsewhere == 0
            assert r.surviving == r.post_count

    def test_partition_identity(self):
        rng = random.Random(31)
        for _ in range(40):
            t = random_text(rng, b"abc", 50)
            pos = rng.randint(1, t.n)
            kind = rng.choice(["substitute", "insert", "delete"])
            if kind == "delete" and t.n == 1:
                continue
            sym = None if kind == "delete" else rng.choice(b"abcd")
            r = sensitivity(t, EditOp(kind, pos, sym))
            assert r.new_at_edit + r.new_elsewhere + r.surviving == r.post_count

    def test_post_set_matches_brute(self):
        rng = random.Random(37)
        for _ in range(30):
            t = random_text(rng, b"ab", 60)
            pos = rng.randint(1, t.n)
            post = apply_edit(t, EditOp("substitute", pos, rng.choice(b"abc")))
            assert compute_mus(build_index(post)) == brute_mus(post)

    def test_multiplicative(self):
        r = sensitivity(Text(b"aaaa"), EditOp("substitute", 1, ord("b")))
        assert r.multiplicative == pytest.approx(2.0)


class TestSensitivityScan:
    def test_abc_substitution_scan(self):
        records, best_add, _ = sensitivity_scan(
            Text(b"abc"), kinds=("substitute",), alphabet=b"abc"
        )
        assert len(records) == 9
        identity = [r for r in records if r.additive == 0 and r.surviving == r.pre_count]
        assert len(identity) >= 3
        assert best_add.additive == max(r.additive for r in records)

    def test_scan_ordering_deterministic(self):
        a, _, _ = sensitivity_scan(Text(b"abab"), kinds=("substitute", "delete"))
        b, _, _ = sensitivity_scan(Text(b"abab"), kinds=("substitute", "delete"))
        assert [r.edit for r in a] == [r.edit for r in b]
        keys = [
            (r.edit.pos, r.edit.kind, -1 if r.edit.symbol is None else r.edit.symbol)
            for r in a
        ]
        assert keys == sorted(keys, key=lambda k: (k[0], ("substitute", "insert", "delete").index(k[1]), k[2]))

    def test_scan_single_delete_rejected(self):
        records, best_add, best_mul = sensitivity_scan(Text(b"a"), kinds=("delete",))
        assert len(records) == 1
        assert records[0].error is not None
        assert best_add is None and best_mul is None

    def test_new_at_edit_respects_stab_bound(self):
        rng = random.Random(41)
        for _ in range(10):
            t = random_text(rng, b"ab", 40)
            records, _, _ = sensitivity_scan(t, kinds=("substitute",), alphabet=b"ab")
            for r in records:
                post_n = t.n  # substitutions keep the length
                assert r.new_at_edit <= stab_bound(post_n)
