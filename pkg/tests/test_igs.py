from __future__ import annotations

import random

import pytest

import helpers
import polygauss as pg
from polygauss import INFINITE, Cardinal


def _subgroup_igs(pres, gens):
    return pg.igs_by_generators(pres, gens)


def test_add_identity_is_noop(d8):
    empty = pg.PartialIgs.empty(d8)
    result, changes = pg.add_gen_to_pigs(empty, pg.identity(d8))
    assert result == empty
    assert changes == {}


def test_add_gen_free_abelian_gcd(z2):
    # rows (2,0) and (3,0) combine to the gcd row (1,0); slot 2 stays empty
    state = pg.PartialIgs.empty(z2)
    state, _ = pg.add_gen_to_pigs(state, pg.Element(z2, (2, 0)))
    state, changes = pg.add_gen_to_pigs(state, pg.Element(z2, (3, 0)))
    assert state.slots[0] == pg.Element(z2, (1, 0))
    assert state.slots[1] is None
    assert changes == {1: pg.Element(z2, (1, 0))}
    hnf, pivots = pg.hermite_normal_form([[2, 0], [3, 0]])
    assert hnf == [[1, 0]] and pivots == [1]


def test_add_gen_normalises_and_leaves_no_residue():
    z4 = helpers.cyclic(4)
    state, changes = pg.add_gen_to_pigs(pg.PartialIgs.empty(z4),
                                        pg.Element(z4, (2,)))
    assert state.slots[0] == pg.Element(z4, (2,))
    assert changes == {1: pg.Element(z4, (2,))}
    assert pg.enumerate_subgroup(z4, [pg.Element(z4, (2,))]) == \
        {pg.identity(z4), pg.Element(z4, (2,))}


def test_add_gen_preserves_generated_subgroup(corpus):
    rng = random.Random(43)
    for pres in corpus.values():
        state = pg.PartialIgs.empty(pres)
        for _ in range(6):
            g = helpers.random_element(pres, rng)
            before = pg.enumerate_subgroup(pres, state.occupied() + [g])
            state, _ = pg.add_gen_to_pigs(state, g)
            assert pg.enumerate_subgroup(pres, state.occupied()) == before


def test_igs_of_nothing_is_trivial(d8):
    seq = _subgroup_igs(d8, [])
    assert len(seq) == 0
    assert pg.subgroup_order(seq) == 1
    assert pg.verify_igs(list(seq.gens))


def test_igs_d8_cyclic_part(d8):
    g1, g2, g3 = pg.generators(d8)
    seq = _subgroup_igs(d8, [g2])
    assert [u.exponents for u in seq] == [(0, 1, 0), (0, 0, 1)]
    assert pg.enumerate_subgroup(d8, [g2]) == \
        {g for g in pg.FiniteGroupTable(d8) if pg.sift(seq, g).membership}


def test_igs_d8_whole_group(d8):
    g1, g2, _ = pg.generators(d8)
    seq = _subgroup_igs(d8, [g1, g2])
    assert [u.depth() for u in seq] == [1, 2, 3]
    assert pg.subgroup_order(seq) == 8


def test_identity_generators_skipped(d8):
    seq = _subgroup_igs(d8, [pg.identity(d8), pg.generator(d8, 3)])
    assert [u.exponents for u in seq] == [(0, 0, 1)]


def test_verify_igs_accepts_outputs(corpus):
    rng = random.Random(47)
    for pres in corpus.values():
        for _ in range(10):
            gens = [helpers.random_element(pres, rng) for _ in range(2)]
            assert pg.verify_igs(list(_subgroup_igs(pres, gens).gens))


def test_verify_igs_examples(d8):
    g1, g2, g3 = pg.generators(d8)
    assert pg.verify_igs([]) is True
    # g2^2 = g3 escapes the suffix: condition on relative-order powers fails
    assert pg.verify_igs([g1, g2]) is False
    assert pg.verify_igs([g2, g3]) is True
    # depths must strictly increase
    assert pg.verify_igs([g3, g2]) is False
    assert pg.verify_igs([pg.identity(d8)]) is False


def test_subgroup_order_and_index_d8(d8):
    seq = _subgroup_igs(d8, [pg.generator(d8, 2)])
    assert pg.subgroup_order(seq) == 4
    assert pg.subgroup_index(d8, seq) == 2


def test_subgroup_order_and_index_free_abelian(z2):
    seq = _subgroup_igs(z2, [pg.Element(z2, (2, 1)), pg.Element(z2, (0, 3))])
    assert pg.subgroup_order(seq) == INFINITE
    assert pg.subgroup_index(z2, seq) == 6


def test_empty_igs_in_free_abelian(z2):
    seq = _subgroup_igs(z2, [])
    assert pg.subgroup_order(seq) == Cardinal(1)
    assert pg.subgroup_index(z2, seq) == INFINITE


def test_sift_examples(d8, z2):
    lattice = _subgroup_igs(z2, [pg.Element(z2, (2, 0)), pg.Element(z2, (0, 3))])
    assert pg.sift(lattice, pg.identity(z2)).membership
    assert pg.sift(lattice, pg.Element(z2, (4, 3))).membership
    assert not pg.sift(lattice, pg.Element(z2, (1, 0))).membership
    cyclic_part = _subgroup_igs(d8, [pg.generator(d8, 2)])
    assert not pg.sift(cyclic_part, pg.generator(d8, 1)).membership


def test_sift_residue_depth_never_decreases(z2):
    lattice = _subgroup_igs(z2, [pg.Element(z2, (2, 0)), pg.Element(z2, (0, 3))])
    res = pg.sift(lattice, pg.Element(z2, (4, 1)))
    assert not res.membership
    assert res.residue == pg.Element(z2, (0, 1))


def test_canonical_reduces_above_pivots(z2):
    seq = pg.Igs(z2, [pg.Element(z2, (2, 5)), pg.Element(z2, (0, 3))])
    reduced = pg.canonical_igs(seq)
    assert [u.exponents for u in reduced] == [(2, 2), (0, 3)]
    assert pg.canonical_igs(reduced) == reduced


def test_canonical_is_idempotent_random(z2):
    rng = random.Random(53)
    for _ in range(50):
        rows = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(3)]
        seq = _subgroup_igs(z2, [pg.Element(z2, r) for r in rows])
        reduced = pg.canonical_igs(seq)
        assert pg.canonical_igs(reduced) == reduced


def test_canonical_same_subgroup_d8(d8):
    g1, g2, g3 = pg.generators(d8)
    seq = pg.Igs(d8, [g2 * g3, g3])
    reduced = pg.canonical_igs(seq)
    assert [u.exponents for u in reduced] == [(0, 1, 0), (0, 0, 1)]
    assert pg.enumerate_subgroup(d8, [g2 * g3, g3]) == \
        pg.enumerate_subgroup(d8, list(reduced.gens))


def test_subgroups_equal_examples(d8, z2):
    assert pg.subgroups_equal(
        [pg.Element(z2, (2, 1)), pg.Element(z2, (0, 3))],
        [pg.Element(z2, (2, 4)), pg.Element(z2, (0, 3))])
    g1, g2, g3 = pg.generators(d8)
    assert pg.subgroups_equal([g2], [g2 * g3])
    assert not pg.subgroups_equal([g1], [g3])
    assert pg.subgroups_equal([], [])


def test_subgroups_equal_reflexive_and_symmetric(corpus):
    rng = random.Random(109)
    for pres in corpus.values():
        us = [helpers.random_element(pres, rng) for _ in range(2)]
        vs = [helpers.random_element(pres, rng) for _ in range(2)]
        assert pg.subgroups_equal(us, us)
        assert pg.subgroups_equal(list(reversed(us)), us)
        assert pg.subgroups_equal(us, vs) == pg.subgroups_equal(vs, us)


def test_add_gen_leaves_input_snapshot_untouched(d8):
    state, _ = pg.add_gen_to_pigs(pg.PartialIgs.empty(d8), pg.generator(d8, 2))
    before = state.slots
    after, changes = pg.add_gen_to_pigs(state, pg.generator(d8, 1))
    assert state.slots == before  # snapshots never mutate
    assert changes and after.slots != before
    with pytest.raises(AttributeError):
        state.slots = ()


def test_subgroups_equal_matches_enumeration(corpus):
    rng = random.Random(59)
    for pres in corpus.values():
        for _ in range(8):
            us = [helpers.random_element(pres, rng) for _ in range(2)]
            vs = [helpers.random_element(pres, rng) for _ in range(2)]
            expected = pg.enumerate_subgroup(pres, us) == \
                pg.enumerate_subgroup(pres, vs)
            assert pg.subgroups_equal(us, vs) == expected


def test_lagrange_on_finite_groups(corpus):
    rng = random.Random(61)
    for pres in corpus.values():
        whole = pg.FiniteGroupTable(pres).order
        for _ in range(8):
            gens = [helpers.random_element(pres, rng)
                    for _ in range(rng.randint(0, 3))]
            seq = _subgroup_igs(pres, gens)
            assert pg.subgroup_order(seq) * pg.subgroup_index(pres, seq) == whole


def test_mutual_sifting(corpus):
    rng = random.Random(67)
    for pres in corpus.values():
        gens = [helpers.random_element(pres, rng) for _ in range(3)]
        seq = _subgroup_igs(pres, gens)
        for g in gens:
            assert pg.sift(seq, g).membership
        rebuilt = _subgroup_igs(pres, list(seq.gens))
        for u in seq:
            assert pg.sift(rebuilt, u).membership


def test_generator_order_does_not_matter(corpus):
    rng = random.Random(71)
    for pres in corpus.values():
        gens = [helpers.random_element(pres, rng) for _ in range(3)]
        seq = pg.canonical_igs(_subgroup_igs(pres, gens))
        for _ in range(3):
            rng.shuffle(gens)
            shuffled = pg.canonical_igs(_subgroup_igs(pres, gens))
            assert shuffled == seq


def test_free_abelian_matches_hnf(z2):
    rng = random.Random(73)
    for _ in range(60):
        rows = [[rng.randint(-20, 20) for _ in range(2)]
                for _ in range(rng.randint(0, 3))]
        seq = pg.canonical_igs(_subgroup_igs(z2, [pg.Element(z2, r) for r in rows]))
        hnf, pivots = pg.hermite_normal_form(rows, ncols=2)
        assert [list(u.exponents) for u in seq] == hnf
        expected = INFINITE
        if len(pivots) == 2:
            expected = Cardinal(pivots[0] * pivots[1])
        assert pg.subgroup_index(z2, seq) == expected


def test_canonical_preserves_membership(corpus):
    rng = random.Random(79)
    for pres in corpus.values():
        gens = [helpers.random_element(pres, rng) for _ in range(2)]
        seq = _subgroup_igs(pres, gens)
        reduced = pg.canonical_igs(seq)
        for g in gens:
            assert pg.sift(reduced, g).membership


def _twisted_infinite_groups():
    # Z^2 twisted by an order-4 rotation of the plane
    rot = pg.PcPresentation(
        3, [0, 0, 0],
        conjugates={(2, 1): [(3, 1)], (3, 1): [(2, -1)]},
        inv_conjugates={(2, 1): [(3, -1)], (3, 1): [(2, 1)]})
    # Klein bottle group: both factors infinite, the top one inverting
    klein = pg.PcPresentation(2, [0, 0], conjugates={(2, 1): [(2, -1)]},
                              inv_conjugates={(2, 1): [(2, -1)]})
    # Z twisted by an order-4 finite top
    zrot = pg.PcPresentation(2, [4, 0], conjugates={(2, 1): [(2, -1)]})
    return [rot, klein, zrot]


def test_igs_closure_on_twisted_infinite_groups():
    rng = random.Random(113)
    for pres in _twisted_infinite_groups():
        assert pg.validate_inverse_tails(pres) == []
        for _ in range(40):
            gens = [helpers.random_element(pres, rng, spread=4)
                    for _ in range(rng.randint(1, 3))]
            seq = pg.igs_by_generators(pres, gens)
            assert pg.verify_igs(list(seq.gens))
            for g in gens:
                assert pg.sift(seq, g).membership


def test_index_in_twisted_infinite_groups():
    rot, klein, zrot = _twisted_infinite_groups()
    a, t = pg.generators(klein)
    assert pg.subgroup_index(klein, pg.igs_by_generators(klein, [a ** 2, t])) == 2
    g1, g2 = pg.generators(zrot)
    assert pg.subgroup_index(zrot, pg.igs_by_generators(zrot, [g1 ** 2, g2])) == 2
    assert pg.subgroup_index(zrot, pg.igs_by_generators(zrot, [g1, g2 ** 3])) == 3
    x, y, z = pg.generators(rot)
    lattice = pg.igs_by_generators(rot, [y ** 2, z])
    assert pg.subgroup_index(rot, lattice) == INFINITE  # depth 1 is missed
    assert pg.subgroup_order(lattice) == INFINITE


def test_igs_binding_mismatch(d8):
    z4 = helpers.cyclic(4)
    with pytest.raises(ValueError):
        pg.igs_by_generators(d8, [pg.generator(z4, 1)])
    with pytest.raises(ValueError):
        pg.add_gen_to_pigs(pg.PartialIgs.empty(d8), pg.generator(z4, 1))


def test_partial_igs_slot_validation(d8):
    g2 = pg.generator(d8, 2)
    with pytest.raises(ValueError):
        pg.PartialIgs(d8, (g2, None, None))  # depth 2 element in slot 1
    with pytest.raises(ValueError):
        pg.Igs(d8, [pg.identity(d8)])


def test_igs_depth_order_validation(z2):
    with pytest.raises(ValueError):
        pg.Igs(z2, [pg.Element(z2, (0, 1)), pg.Element(z2, (1, 0))])
    with pytest.raises(ValueError):
        pg.Igs(z2, [pg.Element(z2, (-1, 0))])  # not normalised
