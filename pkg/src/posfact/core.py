"""Exact invariant data of pseudoperiodic surface mapping classes.

A pseudoperiodic mapping class of a compact oriented surface with boundary
is described, up to the data we can reason about, by

* the surface type ``(genus, boundary_count)``,
* one fractional Dehn twist coefficient per boundary component, and
* one orbit of invariant curves per reduction-system orbit, carrying its
  length, its regular/amphidrome kind, a separating flag and its screw
  number.

All invariant values are exact rationals (``fractions.Fraction``); no
floating point is used anywhere in this package.  Every type in this module
is an immutable value and every operation is a pure function, so everything
is safe for unrestricted concurrent use.

.. warning::
   This data *underdetermines* the mapping class: two distinct mapping
   classes can share identical invariant data.  Every certification
   performed downstream (``posfact.factorization``, ``posfact.poset``)
   consumes only this data, so a positive answer is valid for *every*
   mapping class realizing the given invariants.  No attempt is made to
   decide which rational vectors are realized by actual mapping classes
   at all; callers own that question.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "DomainError",
    "InvalidMoveError",
    "Surface",
    "OrbitKind",
    "CurveOrbit",
    "NTClass",
    "BoundaryTwist",
    "OrbitTwist",
    "TwistMove",
    "PeriodData",
    "int_variant",
    "compose_twists",
    "period_data",
    "as_rational",
]


class DomainError(Exception):
    """Base class for domain-level errors (invalid operation for the data)."""


class InvalidMoveError(DomainError):
    """A twist move referenced a boundary index or orbit id that does not exist."""


RationalLike = Union[Fraction, int]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction, rejecting floats.

    Floats are rejected rather than converted: all arithmetic in this
    package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational (int or Fraction), got {value!r}")


def int_variant(x: RationalLike) -> int:
    """Integer part truncated toward zero: floor(x) for x >= 0, ceil(x) for x < 0.

    Satisfies int_variant(-x) == -int_variant(x) and |x - int_variant(x)| < 1.
    """
    x = as_rational(x)
    p, q = x.numerator, x.denominator
    if p >= 0:
        return p // q
    return -((-p) // q)


@dataclass(frozen=True)
class Surface:
    """A compact connected oriented surface: genus and number of boundary circles.

    Boundary components are labelled 1..boundary_count by position.
    """

    genus: int
    boundary_count: int

    def __post_init__(self) -> None:
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")
        if not isinstance(self.boundary_count, int) or self.boundary_count < 0:
            raise ValueError(
                f"boundary_count must be a non-negative integer, got {self.boundary_count!r}"
            )


class OrbitKind(Enum):
    """Whether the first-return map of an orbit preserves or reverses the curve orientation."""

    REGULAR = "regular"
    AMPHIDROME = "amphidrome"


@dataclass(frozen=True)
class CurveOrbit:
    """One orbit of the invariant curve system.

    ``length`` is the number of curves in the orbit.  The first-return map
    of the orbit preserves curve orientation for a regular orbit and
    reverses it for an amphidrome one; this gives the derived quantities

    * ``alpha``: smallest power sending each curve to itself preserving
      orientation (``length`` if regular, ``2 * length`` if amphidrome);
    * ``beta``: the screw-number increment caused by one full twist around
      a curve of the orbit (1 if regular, 2 if amphidrome).

    A screw number of exactly 0 is permitted: a minimal curve system would
    drop such an orbit, but twist composition can produce it transiently.
    """

    id: str
    length: int
    kind: OrbitKind
    separating: bool
    screw: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError(f"orbit id must be a non-empty string, got {self.id!r}")
        if not isinstance(self.length, int) or self.length < 1:
            raise ValueError(f"orbit length must be a positive integer, got {self.length!r}")
        if not isinstance(self.kind, OrbitKind):
            raise ValueError(f"orbit kind must be an OrbitKind, got {self.kind!r}")
        object.__setattr__(self, "screw", as_rational(self.screw))

    @property
    def alpha(self) -> int:
        return self.length if self.kind is OrbitKind.REGULAR else 2 * self.length

    @property
    def beta(self) -> int:
        return 1 if self.kind is OrbitKind.REGULAR else 2


@dataclass(frozen=True)
class NTClass:
    """Invariant data of a pseudoperiodic mapping class.

    ``fr`` holds one fractional Dehn twist coefficient per boundary
    component, in boundary order.  ``orbits`` holds the interior curve
    orbits, with pairwise distinct ids.
    """

    surface: Surface
    fr: tuple[Fraction, ...]
    orbits: tuple[CurveOrbit, ...] = ()

    def __post_init__(self) -> None:
        fr = tuple(as_rational(x) for x in self.fr)
        object.__setattr__(self, "fr", fr)
        orbits = tuple(self.orbits)
        object.__setattr__(self, "orbits", orbits)
        if len(fr) != self.surface.boundary_count:
            raise ValueError(
                f"fr has {len(fr)} entries but the surface has "
                f"{self.surface.boundary_count} boundary components"
            )
        ids = [orbit.id for orbit in orbits]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"orbit ids must be pairwise distinct, repeated: {dupes}")

    def orbit_index(self, orbit_id: str) -> int:
        for i, orbit in enumerate(self.orbits):
            if orbit.id == orbit_id:
                return i
        raise InvalidMoveError(f"unknown orbit id {orbit_id!r}")


@dataclass(frozen=True)
class BoundaryTwist:
    """Compose with the m-th power of the boundary Dehn twist at boundary ``index`` (1-based)."""

    index: int
    power: int


@dataclass(frozen=True)
class OrbitTwist:
    """Compose with the m-th power of a Dehn twist around one curve of orbit ``orbit_id``."""

    orbit_id: str
    power: int


TwistMove = Union[BoundaryTwist, OrbitTwist]


def compose_twists(phi: NTClass, moves: Iterable[TwistMove]) -> NTClass:
    """Invariant data after composing with powers of boundary/curve Dehn twists.

    A boundary move of power m adds m to the corresponding fractional Dehn
    twist coefficient; an orbit move of power m adds beta * m to the orbit's
    screw number.  Moves commute, so the result does not depend on their
    order.  Unknown targets raise :class:`InvalidMoveError`.
    """
    fr_shift = [0] * phi.surface.boundary_count
    screw_shift = [Fraction(0)] * len(phi.orbits)
    for move in moves:
        if isinstance(move, BoundaryTwist):
            if not 1 <= move.index <= phi.surface.boundary_count:
                raise InvalidMoveError(
                    f"unknown boundary index {move.index} "
                    f"(surface has {phi.surface.boundary_count} boundary components)"
                )
            fr_shift[move.index - 1] += move.power
        elif isinstance(move, OrbitTwist):
            j = phi.orbit_index(move.orbit_id)
            screw_shift[j] += phi.orbits[j].beta * move.power
        else:
            raise InvalidMoveError(f"unknown twist move {move!r}")
    fr = tuple(x + s for x, s in zip(phi.fr, fr_shift))
    orbits = tuple(
        orbit if s == 0 else CurveOrbit(orbit.id, orbit.length, orbit.kind, orbit.separating, orbit.screw + s)
        for orbit, s in zip(phi.orbits, screw_shift)
    )
    return NTClass(phi.surface, fr, orbits)


@dataclass(frozen=True)
class PeriodData:
    """Least common period of the invariant data.

    ``n`` is the least positive integer with n * fr_i integral for every
    boundary and n * screw_j / alpha_j integral for every orbit;
    ``k_boundary`` and ``k_orbit`` are those integer values.
    """

    n: int
    k_boundary: tuple[int, ...]
    k_orbit: tuple[int, ...]


def period_data(phi: NTClass) -> PeriodData:
    """Compute the least period ``n`` and the integer twist counts it induces."""
    denominators = [x.denominator for x in phi.fr]
    denominators += [(orbit.screw / orbit.alpha).denominator for orbit in phi.orbits]
    n = math.lcm(*denominators) if denominators else 1
    k_boundary = tuple(int(n * x) for x in phi.fr)
    k_orbit = tuple(int(n * orbit.screw / orbit.alpha) for orbit in phi.orbits)
    return PeriodData(n, k_boundary, k_orbit)
