"""The provably-known region of a correcting poset.

For a class with r boundary components, the correcting poset consists of
the integer boundary-shift vectors a for which the shifted class is
positively factorizable; it is upward closed under the componentwise
order.  Full membership is undecidable from invariant data, so this module
computes a certified *subset*: the shifts certified by the two routes of
:func:`posfact.factorization.classify`.  All names say "known region" to
avoid overclaiming; the region may be a strict subset of the true poset.

An upward-closed region is represented by its finite antichain of minimal
generators; a point belongs to the region iff it dominates some generator
componentwise.  :func:`enumerate_box` is the independent brute-force
oracle: it classifies every lattice point of a box without consulting the
generator representation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .core import BoundaryTwist, DomainError, NTClass, compose_twists
from .factorization import (
    PositivelyFactorizable,
    _correction_exponent,
    classify,
    criterion_k,
)
from .invariants import essential_part

__all__ = [
    "DimensionMismatchError",
    "BoxTooLargeError",
    "PosetRegion",
    "minimal_generators",
    "known_region",
    "contains",
    "essential_inclusion_check",
    "enumerate_box",
]

DEFAULT_BOX_CAP = 10**6


class DimensionMismatchError(DomainError):
    """A query point's length differs from the region's dimension."""


class BoxTooLargeError(DomainError):
    """The requested box exceeds the enumeration cap."""


def _dominates(point: Sequence[int], generator: Sequence[int]) -> bool:
    return all(g <= p for g, p in zip(generator, point))


def minimal_generators(points: Iterable[Sequence[int]]) -> frozenset[tuple[int, ...]]:
    """Reduce a set of points to the antichain of its componentwise-minimal members."""
    pts = {tuple(p) for p in points}
    return frozenset(
        p for p in pts if not any(q != p and _dominates(p, q) for q in pts)
    )


@dataclass(frozen=True)
class PosetRegion:
    """Upward-closed subset of Z^dimension, given by its antichain of generators."""

    dimension: int
    generators: frozenset[tuple[int, ...]]

    def __post_init__(self) -> None:
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.dimension!r}")
        generators = frozenset(tuple(g) for g in self.generators)
        object.__setattr__(self, "generators", generators)
        for g in generators:
            if len(g) != self.dimension:
                raise ValueError(f"generator {g} does not have dimension {self.dimension}")
        if minimal_generators(generators) != generators:
            raise ValueError("generators must form an antichain of minimal points")


def contains(region: PosetRegion, point: Sequence[int]) -> bool:
    """True iff ``point`` dominates some generator componentwise."""
    point = tuple(point)
    if len(point) != region.dimension:
        raise DimensionMismatchError(
            f"point of length {len(point)} queried against dimension {region.dimension}"
        )
    return any(_dominates(point, g) for g in region.generators)


def known_region(phi: NTClass) -> PosetRegion:
    """Certified subset of the correcting poset, by minimal generators in closed form.

    The direct route (available iff every screw number is positive)
    contributes the single minimal point with a_i the least integer
    > -fr_i.  The correction route (when its gate passes) contributes the
    minimal point with fr_i + a_i > k * sum(d_j) for all i.  Each member is
    a genuine element of the correcting poset.
    """
    r = phi.surface.boundary_count
    if r == 0:
        raise DomainError("the correcting poset needs at least one boundary component")
    generators: list[tuple[int, ...]] = []
    if all(orbit.screw > 0 for orbit in phi.orbits):
        generators.append(tuple(math.floor(-x) + 1 for x in phi.fr))
    k = criterion_k(phi.surface.genus, r)
    if isinstance(k, int):
        to_correct = [orbit for orbit in phi.orbits if orbit.screw <= 0]
        if not any(orbit.separating for orbit in to_correct):
            total = k * sum(_correction_exponent(orbit) for orbit in to_correct)
            generators.append(tuple(math.floor(total - x) + 1 for x in phi.fr))
    return PosetRegion(r, minimal_generators(generators))


def essential_inclusion_check(phi: NTClass) -> Optional[bool]:
    """Consistency check: is the essential part's known region inside ``phi``'s?

    Returns True/False accordingly, or None (not applicable) when some
    boundary exponent of the essential correction is positive: there the
    essential part *raises* a boundary coefficient and the containment has
    no reason to hold.  A False result is not a certified contradiction:
    known regions are under-approximations of the true posets and need not
    nest even where the true posets do (e.g. when the essential part
    shrinks the correction budget).
    """
    result = essential_part(phi)
    if any(n > 0 for n in result.boundary_exponents):
        return None
    inner = known_region(result.essential)
    outer = known_region(phi)
    return all(contains(outer, g) for g in inner.generators)


def enumerate_box(
    phi: NTClass,
    lo: Sequence[int],
    hi: Sequence[int],
    max_points: int = DEFAULT_BOX_CAP,
) -> frozenset[tuple[int, ...]]:
    """All certified boundary shifts inside the box, classified pointwise.

    Deliberately ignorant of :func:`known_region`: each lattice point is
    checked by composing the shift and running the full classification.
    Results are order-independent; the box volume must not exceed
    ``max_points``.
    """
    lo = tuple(lo)
    hi = tuple(hi)
    r = phi.surface.boundary_count
    if len(lo) != r or len(hi) != r:
        raise DimensionMismatchError(
            f"box bounds of lengths {len(lo)}/{len(hi)} for {r} boundary components"
        )
    if any(a > b for a, b in zip(lo, hi)):
        raise DomainError(f"empty box: lo={lo} exceeds hi={hi} in some coordinate")
    volume = 1
    for a, b in zip(lo, hi):
        volume *= b - a + 1
    if volume > max_points:
        raise BoxTooLargeError(f"box holds {volume} points, cap is {max_points}")
    members = []
    for point in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        moves = [BoundaryTwist(i + 1, s) for i, s in enumerate(point) if s != 0]
        shifted = compose_twists(phi, moves)
        if isinstance(classify(shifted), PositivelyFactorizable):
            members.append(point)
    return frozenset(members)
