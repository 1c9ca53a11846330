"""Known regions of correcting posets: generators, membership, box oracle."""

from __future__ import annotations

from fractions import Fraction

import pytest

from posfact import (
    BoxTooLargeError,
    CurveOrbit,
    DimensionMismatchError,
    DomainError,
    NTClass,
    OrbitKind,
    PosetRegion,
    PositivelyFactorizable,
    Surface,
    classify,
    contains,
    enumerate_box,
    essential_inclusion_check,
    known_region,
    minimal_generators,
)
from conftest import rand_poset_ntclass


def orbit(screw, kind=OrbitKind.REGULAR, separating=False, oid="O1"):
    return CurveOrbit(oid, 1, kind, separating, Fraction(screw))


def nt(genus, fr, orbits=()):
    fr = tuple(Fraction(x) for x in fr)
    return NTClass(Surface(genus, len(fr)), fr, tuple(orbits))


class TestPosetRegion:
    def test_generators_must_be_antichain(self):
        with pytest.raises(ValueError, match="antichain"):
            PosetRegion(2, frozenset({(0, 0), (1, 1)}))

    def test_dimension_positive(self):
        with pytest.raises(ValueError):
            PosetRegion(0, frozenset())

    def test_generator_length_checked(self):
        with pytest.raises(ValueError):
            PosetRegion(2, frozenset({(1,)}))

    def test_minimal_generators_reduction(self):
        points = [(0, 0), (1, 0), (0, 1), (-1, 2), (5, 5)]
        assert minimal_generators(points) == frozenset({(0, 0), (-1, 2)})


class TestContains:
    region = PosetRegion(2, frozenset({(-1, 0)}))

    def test_dominating_point(self):
        assert contains(self.region, (0, 0))

    def test_failing_coordinate(self):
        assert not contains(self.region, (-1, -1))

    def test_empty_region(self):
        assert not contains(PosetRegion(2, frozenset()), (100, 100))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            contains(self.region, (0, 0, 0))


class TestKnownRegion:
    def test_positive_screws_single_generator(self):
        phi = nt(2, [Fraction(5, 3), Fraction(1, 3)], [orbit(Fraction(1, 2))])
        assert known_region(phi).generators == frozenset({(-1, 0)})

    def test_negative_screw_uses_correction_route(self):
        phi = nt(2, [5, 5], [orbit(Fraction(-1, 2))])
        region = known_region(phi)
        assert region.generators == frozenset({(-2, -2)})
        assert contains(region, (-2, -2))
        assert contains(region, (0, 0))

    def test_empty_when_no_route_applies(self):
        phi = nt(0, [5], [orbit(Fraction(-1, 2))])
        region = known_region(phi)
        assert region.generators == frozenset()

    def test_separating_negative_orbit_empty(self):
        phi = nt(2, [5], [orbit(Fraction(-1, 2), separating=True)])
        assert known_region(phi).generators == frozenset()

    def test_no_boundary_rejected(self):
        with pytest.raises(DomainError):
            known_region(NTClass(Surface(2, 0), ()))

    def test_origin_membership_iff_classified(self, rng):
        for _ in range(400):
            phi = rand_poset_ntclass(rng)
            region = known_region(phi)
            origin = (0,) * region.dimension
            assert contains(region, origin) == isinstance(classify(phi), PositivelyFactorizable)


class TestEnumerateBox:
    def test_matches_generator_in_example(self):
        phi = nt(2, [5, 5], [orbit(Fraction(-1, 2))])
        points = enumerate_box(phi, (-3, -3), (3, 3))
        expected = {
            (a, b) for a in range(-3, 4) for b in range(-3, 4) if a >= -2 and b >= -2
        }
        assert points == expected

    def test_positive_screw_example(self):
        phi = nt(2, [Fraction(5, 3), Fraction(1, 3)], [orbit(Fraction(1, 2))])
        points = enumerate_box(phi, (-2, -2), (2, 2))
        expected = {
            (a, b) for a in range(-2, 3) for b in range(-2, 3) if a >= -1 and b >= 0
        }
        assert points == expected

    def test_empty_region_box(self):
        phi = nt(2, [5], [orbit(Fraction(-1, 2), separating=True)])
        assert enumerate_box(phi, (-5,), (5,)) == frozenset()

    def test_box_cap(self):
        phi = nt(2, [0, 0])
        with pytest.raises(BoxTooLargeError):
            enumerate_box(phi, (-2, -2), (2, 2), max_points=20)

    def test_invalid_bounds(self):
        phi = nt(2, [0])
        with pytest.raises(DomainError):
            enumerate_box(phi, (3,), (1,))
        with pytest.raises(DimensionMismatchError):
            enumerate_box(phi, (0, 0), (1, 1))

    def test_oracle_equivalence_bulk(self, rng):
        for _ in range(60):
            phi = rand_poset_ntclass(rng)
            r = phi.surface.boundary_count
            region = known_region(phi)
            box = enumerate_box(phi, (-4,) * r, (4,) * r)
            for point in box:
                assert contains(region, point)
            import itertools

            for point in itertools.product(range(-4, 5), repeat=r):
                assert (point in box) == contains(region, point)

    def test_upward_closure_on_members(self, rng):
        for _ in range(40):
            phi = rand_poset_ntclass(rng)
            r = phi.surface.boundary_count
            region = known_region(phi)
            for point in enumerate_box(phi, (-3,) * r, (3,) * r):
                for i in range(r):
                    bumped = tuple(c + (1 if j == i else 0) for j, c in enumerate(point))
                    assert contains(region, bumped)


class TestEssentialInclusion:
    def test_positive_fr_inclusion_holds(self):
        phi = nt(2, [Fraction(5, 3), Fraction(1, 3)], [orbit(Fraction(1, 2))])
        assert essential_inclusion_check(phi) is True

    def test_already_essential_trivially_true(self):
        phi = nt(2, [Fraction(-1, 2)])
        assert essential_inclusion_check(phi) is True

    def test_skipped_when_fr_must_be_raised(self):
        phi = nt(2, [Fraction(-3, 2)])
        assert essential_inclusion_check(phi) is None

    def test_can_fail_when_correction_budget_shrinks(self):
        # The essential part turns screw -3 into 0, cutting d from 4 to 1;
        # the shrunken known region genuinely escapes the original one.
        phi = nt(2, [Fraction(1, 2)], [orbit(Fraction(-3))])
        assert essential_inclusion_check(phi) is False
