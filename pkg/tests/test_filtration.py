import random

import pytest

from sqstanley.errors import NMismatchError
from sqstanley.filtration import (
    FiltrationStep,
    PrimeFiltration,
    dualize_filtration,
    facet_peel_filtration,
    filtration_to_decomposition,
    validate_filtration,
)
from sqstanley.ideals import SqIdeal
from sqstanley.setcalc import IndexSet
from sqstanley.sqmod import SqQuotient, dualize_quotient, validate_decomposition


def ring_mod(ideal_masks, n):
    return SqQuotient(n, SqIdeal.of(n, ideal_masks), SqIdeal.of(n, [0]))


def step(n, degree, prime):
    return FiltrationStep(IndexSet.of(n, degree), IndexSet.of(n, prime))


def _random_module(rng, n):
    outer = SqIdeal.of(n, [rng.randrange(1 << n) for _ in range(rng.randint(0, 3))])
    members = [m for m in range(1 << n) if outer.contains_mask(m)]
    rng.shuffle(members)
    inner = SqIdeal.of(n, members[:rng.randint(0, len(members))])
    return SqQuotient(n, inner, outer)


class TestFacetPeel:
    def test_worked_example(self):
        # S/(x1x2): peel {1}, then {2}, then the empty set
        filt = facet_peel_filtration(ring_mod([0b011], 2))
        got = [(s.degree.members, s.prime.members) for s in filt.steps]
        assert got == [((1,), (2,)), ((2,), (1,)), ((), (1, 2))]

    def test_validates(self):
        rng = random.Random(101)
        for _ in range(80):
            n = rng.randint(1, 5)
            m = _random_module(rng, n)
            filt = facet_peel_filtration(m)
            assert validate_filtration(m, filt)
            assert len(filt) == len(m.support_masks())

    def test_zero_module_empty(self):
        i = SqIdeal.of(2, [0b01])
        m = SqQuotient(2, i, i)
        filt = facet_peel_filtration(m)
        assert filt.steps == ()
        assert validate_filtration(m, filt)

    def test_deterministic_tie_break(self):
        filt = facet_peel_filtration(ring_mod([0b011], 2))
        again = facet_peel_filtration(ring_mod([0b011], 2))
        assert filt == again


class TestValidate:
    def test_rejects_wrong_order(self):
        m = ring_mod([0b011], 2)
        bad = PrimeFiltration(2, m.inner, (
            step(2, [], [1, 2]), step(2, [1], [2]), step(2, [2], [1])))
        assert not validate_filtration(m, bad)

    def test_rejects_wrong_prime(self):
        m = ring_mod([0b011], 2)
        bad = PrimeFiltration(2, m.inner, (
            step(2, [1], []), step(2, [2], [1]), step(2, [], [1, 2])))
        assert not validate_filtration(m, bad)

    def test_rejects_wrong_base_or_final(self):
        m = ring_mod([0b011], 2)
        good = facet_peel_filtration(m)
        other = ring_mod([0b01], 2)
        assert not validate_filtration(other, good)
        short = PrimeFiltration(2, m.inner, good.steps[:2])
        assert not validate_filtration(m, short)

    def test_n_mismatch_is_hard_error(self):
        m = ring_mod([0b011], 2)
        filt = PrimeFiltration(3, SqIdeal.of(3, []), ())
        with pytest.raises(NMismatchError):
            validate_filtration(m, filt)

    def test_step_degree_meeting_prime_rejected(self):
        with pytest.raises(ValueError):
            step(2, [1], [1, 2])


class TestDualize:
    def test_worked_example(self):
        filt = facet_peel_filtration(ring_mod([0b011], 2))
        dual = dualize_filtration(filt)
        got = [(s.degree.members, s.prime.members) for s in dual.steps]
        assert got == [((1, 2), ()), ((1,), (2,)), ((2,), (1,))]
        assert dual.base.is_zero

    def test_dual_validates_against_dual_module(self):
        rng = random.Random(103)
        for _ in range(60):
            n = rng.randint(1, 5)
            m = _random_module(rng, n)
            dual = dualize_filtration(facet_peel_filtration(m))
            assert validate_filtration(dualize_quotient(m), dual)

    def test_involution(self):
        rng = random.Random(107)
        for _ in range(40):
            n = rng.randint(1, 5)
            filt = facet_peel_filtration(_random_module(rng, n))
            assert dualize_filtration(dualize_filtration(filt)) == filt


class TestToDecomposition:
    def test_peel_gives_singletons(self):
        m = ring_mod([0b011], 2)
        dec = filtration_to_decomposition(facet_peel_filtration(m))
        assert all(iv.bottom == iv.top for iv in dec.intervals)
        assert validate_decomposition(m, dec)

    def test_general_step_interval(self):
        # S = S/0 at n=2 filtered by 0 < (x1) < S with free steps
        filt = PrimeFiltration(2, SqIdeal.of(2, []), (
            step(2, [1], []), step(2, [], [1])))
        m = SqQuotient(2, SqIdeal.of(2, []), SqIdeal.of(2, [0]))
        assert validate_filtration(m, filt)
        dec = filtration_to_decomposition(filt)
        got = [(iv.bottom.members, iv.top.members) for iv in dec.intervals]
        assert got == [((), (2,)), ((1,), (1, 2))]
        assert validate_decomposition(m, dec)
