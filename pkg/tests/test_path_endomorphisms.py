import itertools

import oracles
import pytest
from conftest import transformations, weak_endomorphisms
from hypothesis import given

from pathmonoid import (
    NotAWeakEndomorphism,
    NotRegular,
    PathTransformation,
    WEndEncoding,
    all_transformations,
    classify,
    compose,
    compositions,
    count_idempotents,
    count_wend,
    count_wend_closed_form,
    decode,
    encode,
    enumerate_wend,
    identity,
    image_set,
    is_automorphism,
    is_endomorphism,
    is_idempotent,
    is_interval,
    is_order_preserving,
    is_regular,
    is_strong_endomorphism,
    is_strong_weak_endomorphism,
    is_weak_endomorphism,
    is_weak_endomorphism_by_characterization,
    pseudo_inverse,
    regular_normal_form,
    structure_census,
)

T = PathTransformation

# n: (|wEnd|, idempotents), copied from the published table.
TABLE = {
    1: (1, 1), 2: (3, 3), 3: (8, 6), 4: (20, 10),
    5: (48, 15), 6: (112, 21), 7: (256, 28), 8: (576, 36),
    9: (1280, 45), 10: (2816, 55), 11: (6144, 66), 12: (13312, 78),
    13: (28672, 91), 14: (61440, 105), 15: (131072, 120), 16: (278528, 136),
}


class TestMembership:
    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_identity_is_in_every_class(self, n):
        e = identity(n)
        assert is_weak_endomorphism(e)
        assert is_endomorphism(e)
        assert is_strong_endomorphism(e)
        assert is_strong_weak_endomorphism(e)
        assert is_automorphism(e)

    def test_weak_examples(self):
        assert is_weak_endomorphism(T((1, 2, 2, 3)))
        assert not is_weak_endomorphism(T((2, 1)))

    @pytest.mark.parametrize(
        "f,expected", [((1, 1, 3), False), ((1, 2, 2), True), ((2, 1, 2), False)]
    )
    def test_characterization_examples(self, f, expected):
        assert is_weak_endomorphism_by_characterization(T(f)) is expected

    def test_constant_map(self):
        c = T((2, 2, 2))
        assert not is_endomorphism(c)
        assert is_strong_weak_endomorphism(c)

    def test_collapse_then_step(self):
        f = T((1, 1, 2))
        assert not is_endomorphism(f)
        assert is_weak_endomorphism(f)
        # (1, 3) is not an edge, yet 1 -> 1 and 3 -> 2 is one
        assert not is_strong_weak_endomorphism(f)

    @given(transformations())
    def test_fast_predicates_match_pair_scans(self, f):
        t = f.images
        assert is_weak_endomorphism(f) == oracles.literal_wend(t)
        assert is_weak_endomorphism_by_characterization(f) == oracles.literal_wend(t)
        assert is_endomorphism(f) == oracles.literal_end(t)
        assert is_strong_endomorphism(f) == oracles.literal_send(t)
        assert is_strong_weak_endomorphism(f) == oracles.literal_swend(t)
        assert is_automorphism(f) == oracles.literal_aut(t)

    @given(transformations(max_n=10))
    def test_weak_implies_order_preserving_with_interval_image(self, f):
        if is_weak_endomorphism(f):
            assert is_order_preserving(f)
            assert is_interval(image_set(f))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_structure_census_matches_oracle(self, n):
        census = structure_census(n)
        assert census.total == n**n
        by_filter = {T(t) for t in oracles.wend_by_filter(n)}
        assert census.wend == census.wend_by_characterization == by_filter
        assert census.end == census.send == census.aut == {identity(n)}
        constants = {T((c,) * n) for c in range(1, n + 1)}
        assert census.swend == constants | {identity(n)}

    def test_census_gated(self):
        with pytest.raises(ValueError):
            structure_census(7)


class TestEncoding:
    @pytest.mark.parametrize(
        "f,j,comp",
        [((2, 2, 3), 1, (2, 1)), ((4, 4, 4, 4), 3, (4,)), ((1, 2, 3), 0, (1, 1, 1))],
    )
    def test_encode(self, f, j, comp):
        assert encode(T(f)) == WEndEncoding(len(f), j, comp)

    @pytest.mark.parametrize(
        "n,j,comp,f",
        [(4, 0, (2, 1, 1), (1, 1, 2, 3)), (4, 3, (4,), (4, 4, 4, 4)), (3, 0, (1, 1, 1), (1, 2, 3))],
    )
    def test_decode(self, n, j, comp, f):
        assert decode(WEndEncoding(n, j, comp)) == T(f)

    def test_encode_rejects_non_members(self):
        with pytest.raises(NotAWeakEndomorphism):
            encode(T((1, 1, 3)))

    @pytest.mark.parametrize(
        "n,j,comp",
        [(4, 0, (2, 1)), (4, 2, (2, 1, 1)), (3, -1, (3,)), (3, 0, (3, 0)), (3, 0, ())],
    )
    def test_encoding_invariants(self, n, j, comp):
        with pytest.raises(ValueError):
            WEndEncoding(n, j, comp)

    @given(weak_endomorphisms())
    def test_decode_encode(self, f):
        assert decode(encode(f)) == f

    def test_encode_decode_on_all_encodings(self):
        for n in range(1, 8):
            for k in range(1, n + 1):
                for cuts in itertools.combinations(range(1, n), k - 1):
                    bounds = (0,) + cuts + (n,)
                    comp = tuple(b - a for a, b in zip(bounds, bounds[1:]))
                    for j in range(n - k + 1):
                        e = WEndEncoding(n, j, comp)
                        f = decode(e)
                        assert is_weak_endomorphism(f)
                        assert encode(f) == e


class TestEnumeration:
    def test_small_cases(self):
        assert list(enumerate_wend(1)) == [T((1,))]
        assert set(enumerate_wend(2)) == {T((1, 1)), T((1, 2)), T((2, 2))}
        assert len(list(enumerate_wend(3))) == 8

    def test_order(self):
        got = [f.images for f in enumerate_wend(3)]
        assert got == [
            (1, 1, 1), (2, 2, 2), (3, 3, 3),
            (1, 1, 2), (1, 2, 2), (2, 2, 3), (2, 3, 3),
            (1, 2, 3),
        ]

    def test_compositions_colex(self):
        assert list(compositions(4, 2)) == [(3, 1), (2, 2), (1, 3)]
        assert list(compositions(5, 3)) == [
            (3, 1, 1), (2, 2, 1), (1, 3, 1), (2, 1, 2), (1, 2, 2), (1, 1, 3),
        ]
        assert list(compositions(2, 3)) == []

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force_filter(self, n):
        produced = [f.images for f in enumerate_wend(n)]
        assert len(produced) == len(set(produced))
        assert set(produced) == oracles.wend_by_filter(n)

    def test_size_matches_count(self, wend_sets):
        for n in range(1, 13):
            assert len(wend_sets[n]) == len(set(wend_sets[n])) == count_wend(n)

    def test_slices_partition_the_stream(self):
        n = 6
        whole = list(enumerate_wend(n))
        pieces = [
            f for k in range(1, n + 1) for j in range(n - k + 1) for f in enumerate_wend(n, k=k, j=j)
        ]
        assert pieces == whole
        assert list(enumerate_wend(n, k=2, j=9)) == []


class TestCounting:
    @pytest.mark.parametrize("n", sorted(TABLE))
    def test_table(self, n):
        size, idem = TABLE[n]
        assert count_wend(n) == size
        assert count_idempotents(n) == idem

    def test_sum_matches_independent_count(self):
        for n in range(1, 17):
            assert count_wend(n) == oracles.wend_size_by_sum(n)

    def test_closed_form(self):
        for n in range(1, 200):
            assert count_wend_closed_form(n) == count_wend(n)

    def test_large_n_is_exact(self):
        assert count_wend(200) == 201 * 2**198

    def test_rejects_zero(self):
        for fn in (count_wend, count_idempotents, count_wend_closed_form):
            with pytest.raises(ValueError):
                fn(0)


class TestIdempotentsAndRegularity:
    def test_idempotent_examples(self):
        assert is_idempotent(identity(4))
        # i = 1, k = 2 in the idempotent normal form
        assert is_idempotent(T((1, 2, 3, 3)))
        assert not is_idempotent(T((2, 3, 3)))
        # 2 is in the image but is sent to 1
        assert not is_idempotent(T((1, 1, 2, 3)))
        assert T((1, 1, 2, 3)) * T((1, 1, 2, 3)) == T((1, 1, 1, 2))

    @given(transformations())
    def test_idempotent_iff_square(self, f):
        assert is_idempotent(f) == (compose(f, f) == f)

    def test_idempotent_census(self, wend_sets):
        for n in range(1, 9):
            assert sum(1 for f in wend_sets[n] if is_idempotent(f)) == count_idempotents(n)

    def test_regular_examples(self):
        assert not is_regular(T((1, 2, 2, 3)))
        assert is_regular(T((1, 1, 2, 3)))
        for n in (1, 2, 3):
            assert all(is_regular(f) for f in enumerate_wend(n))

    def test_regular_rejects_non_members(self):
        with pytest.raises(NotAWeakEndomorphism):
            is_regular(T((2, 1)))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_regular_matches_exhaustive_search(self, n, wend_sets):
        pool = [f.images for f in wend_sets[n]]
        for f in wend_sets[n]:
            assert is_regular(f) == oracles.is_regular_by_search(f.images, pool)

    def test_monoid_regular_iff_small(self):
        for n in range(1, 9):
            assert all(is_regular(f) for f in enumerate_wend(n)) == (n <= 3)

    def test_non_regular_witness(self):
        for n in range(4, 9):
            witness = T((1, 2, 2) + tuple(range(3, n)))
            assert is_weak_endomorphism(witness)
            assert not is_regular(witness)


class TestPseudoInverse:
    def test_identity(self):
        assert pseudo_inverse(identity(5)) == identity(5)

    def test_two_two_three(self):
        f = T((2, 2, 3))
        b = pseudo_inverse(f)
        assert b == T((2, 2, 3))
        assert f * b * f == f
        # the only inner inverses in wEnd, found by exhaustive search
        pool = [g.images for g in enumerate_wend(3)]
        assert set(oracles.inner_inverses(f.images, pool)) == {(1, 2, 3), (2, 2, 3)}
        assert f * T((1, 2, 2)) * f != f

    def test_constant(self):
        f = T((4, 4, 4, 4))
        assert pseudo_inverse(f) == T((4, 4, 4, 4))
        assert f * T((1, 1, 1, 1)) * f == f

    def test_normal_form(self):
        assert regular_normal_form(T((2, 2, 3, 4, 4))) == (2, 2, 2)
        assert regular_normal_form(T((3, 3, 3))) == (3, 3, 0)

    def test_rejects_non_regular(self):
        with pytest.raises(NotRegular):
            pseudo_inverse(T((1, 2, 2, 3)))

    def test_contract(self, wend_sets):
        for n in range(1, 8):
            for f in wend_sets[n]:
                if is_regular(f):
                    b = pseudo_inverse(f)
                    assert is_weak_endomorphism(b)
                    assert f * b * f == f


class TestClassify:
    def test_identity(self):
        r = classify(identity(3))
        assert r.is_end and r.is_wend and r.is_send and r.is_swend and r.is_aut
        assert r.is_idempotent and r.is_regular and r.rank == 3

    def test_constant(self):
        r = classify(T((2, 2, 2)))
        assert r.is_wend and r.is_swend and not r.is_end and r.is_idempotent
        assert (r.image_min, r.image_max, r.rank) == (2, 2, 1)

    def test_non_regular_witness(self):
        r = classify(T((1, 2, 2, 3)))
        assert r.is_wend and not r.is_end and not r.is_regular and r.rank == 3

    def test_non_member_idempotent_is_not_flagged(self):
        r = classify(T((1, 1, 3)))
        assert not r.is_wend and not r.is_idempotent and not r.is_regular
        assert not r.image_is_interval

    @given(transformations())
    def test_report_invariants(self, f):
        r = classify(f)
        assert not r.is_aut or r.is_send
        assert not r.is_send or r.is_end
        assert not r.is_end or r.is_wend
        assert not r.is_swend or r.is_wend
        assert not r.is_idempotent or r.is_regular
        if r.is_wend:
            assert r.image_max - r.image_min + 1 == r.rank
        assert r.is_wend == is_weak_endomorphism(f)
        assert r.rank == len(set(f.images))


def test_all_maps_order_matches_oracle():
    assert [f.images for f in all_transformations(3)] == oracles.all_maps(3)
