"""Essential parts and veering predicates of pseudoperiodic invariant data.

A class is *essential* when every fractional Dehn twist coefficient lies in
(-1, 1), every regular screw number in (-1, 1) and every amphidrome screw
number in (-2, 2).  Every class has a unique twist-correction to an
essential one that preserves the sign of each nonzero invariant; the
correcting exponents are closed-form truncations and
:func:`verify_essential_uniqueness` re-derives the uniqueness by an
exhaustive window scan rather than trusting the closed form.

All functions are pure and depend only on the invariant data; permuting
the orbit list permutes outputs correspondingly.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._backend import kernel
from .core import (
    BoundaryTwist,
    CurveOrbit,
    NTClass,
    OrbitTwist,
    TwistMove,
    compose_twists,
    int_variant,
)

__all__ = [
    "EssentialResult",
    "is_essential",
    "essential_part",
    "verify_essential_uniqueness",
    "is_fully_right_veering",
]


def _within_essential_bound(orbit: CurveOrbit) -> bool:
    return abs(orbit.screw) < orbit.beta


def is_essential(phi: NTClass) -> bool:
    """True iff all |fr| < 1, regular |screw| < 1 and amphidrome |screw| < 2."""
    return all(abs(x) < 1 for x in phi.fr) and all(
        _within_essential_bound(orbit) for orbit in phi.orbits
    )


@dataclass(frozen=True)
class EssentialResult:
    """The essential part together with the twist exponents producing it.

    ``essential == compose_twists(original, moves)`` exactly, where the
    moves apply ``boundary_exponents[i]`` at boundary i+1 and
    ``orbit_exponents[j]`` at orbit j.
    """

    essential: NTClass
    boundary_exponents: tuple[int, ...]
    orbit_exponents: tuple[int, ...]

    def moves(self, phi: NTClass) -> tuple[TwistMove, ...]:
        """The twist moves realizing the correction on ``phi``."""
        boundary = tuple(
            BoundaryTwist(i + 1, n) for i, n in enumerate(self.boundary_exponents)
        )
        orbit = tuple(
            OrbitTwist(o.id, m) for o, m in zip(phi.orbits, self.orbit_exponents)
        )
        return boundary + orbit


def essential_part(phi: NTClass) -> EssentialResult:
    """The unique sign-preserving twist-correction of ``phi`` to an essential class.

    Boundary exponents are -int_variant(fr_i); orbit exponents are
    -int_variant(screw_j / beta_j).  The result is essential, and each
    nonzero corrected invariant keeps the sign of the original one.
    """
    boundary_exponents = tuple(-int_variant(x) for x in phi.fr)
    orbit_exponents = tuple(
        -int_variant(orbit.screw / orbit.beta) for orbit in phi.orbits
    )
    result = EssentialResult(phi, boundary_exponents, orbit_exponents)
    essential = compose_twists(phi, result.moves(phi))
    return EssentialResult(essential, boundary_exponents, orbit_exponents)


def verify_essential_uniqueness(phi: NTClass, window: int = 3) -> bool:
    """Re-derive essential-exponent uniqueness by scanning a window of exponents.

    Scans every integer exponent tuple within ``window`` of the closed-form
    exponents and checks that exactly one tuple yields an essential,
    sign-preserving result, namely the closed-form one.  The three
    conditions are per-coordinate, so the tuple count is the product of
    per-coordinate counts; the scan (in the selected kernel backend)
    exploits that factorization.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    nums = [x.numerator for x in phi.fr]
    dens = [x.denominator for x in phi.fr]
    betas = [1] * len(phi.fr)
    for orbit in phi.orbits:
        nums.append(orbit.screw.numerator)
        dens.append(orbit.screw.denominator)
        betas.append(orbit.beta)
    unique, exponents = kernel.scan_class(nums, dens, betas, window)
    if not unique:
        return False
    closed = essential_part(phi)
    return tuple(exponents) == closed.boundary_exponents + closed.orbit_exponents


def is_fully_right_veering(phi: NTClass) -> bool:
    """True iff every fractional Dehn twist coefficient and every screw number is > 0."""
    return all(x > 0 for x in phi.fr) and all(orbit.screw > 0 for orbit in phi.orbits)
