"""Certified positive-factorization routes for pseudoperiodic invariant data.

Two routes can certify that every mapping class with the given invariants
admits a factorization into right-handed Dehn twists:

* the *direct* route: strictly positive fractional Dehn twist coefficients
  and screw numbers certify a positive factorization outright;
* the *correction* route: when all boundary coefficients are positive but
  some non-separating orbits carry non-positive screw numbers, trading each
  left-handed correction twist for k boundary multitwists (k from the case
  table below) certifies a positive factorization provided
  k * sum(d_j) < min_i fr_i, with d_j = -int_variant(screw_j / beta_j) + 1.

Everything here consumes invariant data only; a "Sufficient"/"Positively
factorizable" answer therefore holds for every mapping class realizing the
data.  A negative answer is never produced: outside the two routes the
outcome is Unknown/Inconclusive/NotApplicable with machine-readable
diagnostics.

The supremum L of non-separating positive twist counts in factorizations of
boundary multitwists (and its powers) is genus- and boundary-dependent;
genus 0 is not covered by the underlying case table, so the table
operations reject it.  On a genus-0 surface every essential simple closed
curve is separating and invariant orbits are singletons; see
:func:`genus_zero_diagnostics`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from .core import BoundaryTwist, DomainError, NTClass, OrbitTwist, compose_twists, int_variant
from .invariants import is_fully_right_veering

__all__ = [
    "GenusZeroUnsupportedError",
    "TableUndefinedError",
    "LTag",
    "LValue",
    "Diagnostic",
    "WitnessDecomposition",
    "Sufficient",
    "Inconclusive",
    "NotApplicable",
    "CriterionResult",
    "MainTheoremRoute",
    "CriterionRoute",
    "PositivelyFactorizable",
    "Unknown",
    "ClassificationReport",
    "l_multitwist",
    "l_multitwist_power",
    "criterion_k",
    "criterion",
    "classify",
    "correcting_exponent_bound",
    "genus_zero_diagnostics",
]


class GenusZeroUnsupportedError(DomainError):
    """The multitwist case table does not cover genus 0."""


class TableUndefinedError(DomainError):
    """The requested parameters fall outside the partial case table."""


class LTag(Enum):
    PLUS_INFINITY = "plus_infinity"
    MINUS_INFINITY = "minus_infinity"
    FINITE = "finite"
    EXACT = "exact"


@dataclass(frozen=True)
class LValue:
    """Supremum of non-separating positive twist counts: a tag, plus the exact count when known."""

    tag: LTag
    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag is LTag.EXACT:
            if not isinstance(self.value, int) or self.value < 1:
                raise ValueError("exact L values must be positive integers")
        elif self.value is not None:
            raise ValueError(f"tag {self.tag.value} carries no value")

    def __str__(self) -> str:
        if self.tag is LTag.EXACT:
            return f"Exact {self.value}"
        return {"plus_infinity": "PlusInfinity", "minus_infinity": "MinusInfinity", "finite": "Finite"}[self.tag.value]


@dataclass(frozen=True)
class Diagnostic:
    """Machine-readable reason: a stable code, a human message, structured data."""

    code: str
    message: str
    data: tuple[tuple[str, str], ...] = ()

    def get(self, key: str) -> Optional[str]:
        for k, v in self.data:
            if k == key:
                return v
        return None


def _check_table_args(genus: int, boundary_count: int) -> None:
    if not isinstance(genus, int) or genus < 0:
        raise DomainError(f"genus must be a non-negative integer, got {genus!r}")
    if not isinstance(boundary_count, int) or boundary_count < 1:
        raise DomainError(f"boundary count must be a positive integer, got {boundary_count!r}")


def l_multitwist(genus: int, boundary_count: int) -> LValue:
    """Case table for the boundary multitwist: PlusInfinity / MinusInfinity / Finite.

    PlusInfinity when (g = 1 and r > 9) or (g >= 2 and r > 4g + 4);
    MinusInfinity when r <= 2g - 4; Finite otherwise.  Genus 0 is rejected.
    """
    _check_table_args(genus, boundary_count)
    if genus == 0:
        raise GenusZeroUnsupportedError(
            "the multitwist case table does not cover genus 0 "
            "(no curve is both essential and non-separating there)"
        )
    g, r = genus, boundary_count
    if (g == 1 and r > 9) or (g >= 2 and r > 4 * g + 4):
        return LValue(LTag.PLUS_INFINITY)
    if r <= 2 * g - 4:
        return LValue(LTag.MINUS_INFINITY)
    return LValue(LTag.FINITE)


def l_multitwist_power(genus: int, boundary_count: int, power: int) -> LValue:
    """Case table for the k-th power of the boundary multitwist.

    Exact(12k) when g = 1, k >= 1 and r <= 9; PlusInfinity when g >= 2 and
    k >= 2.  The table is partial: any other parameters raise
    :class:`TableUndefinedError` (genus 0 raises the dedicated error).
    """
    _check_table_args(genus, boundary_count)
    if not isinstance(power, int) or power < 1:
        raise DomainError(f"power must be a positive integer, got {power!r}")
    if genus == 0:
        raise GenusZeroUnsupportedError("the multitwist case table does not cover genus 0")
    g, r, k = genus, boundary_count, power
    if g == 1 and r <= 9:
        return LValue(LTag.EXACT, 12 * k)
    if g >= 2 and k >= 2:
        return LValue(LTag.PLUS_INFINITY)
    raise TableUndefinedError(
        f"the case table does not define L for genus={g}, boundary={r}, power={k}"
    )


def criterion_k(genus: int, boundary_count: int) -> Union[int, Diagnostic]:
    """Multitwist cost k of one correction twist, or a not-applicable diagnostic.

    k = 1 when (g = 1 and r < 9) or (g >= 2 and r <= 2g - 4);
    k = 2 when g >= 2 and r > 2g - 4.  Genus 0, the unresolved (g=1, r=9)
    case, the excluded g=1 with r > 9, and r = 0 yield diagnostics.
    """
    g, r = genus, boundary_count
    if r < 1:
        return Diagnostic("no-boundary", "the correction route needs at least one boundary component")
    if g == 0:
        return Diagnostic("genus-zero", "the multitwist case table does not cover genus 0")
    if g == 1:
        if r < 9:
            return 1
        return Diagnostic(
            "k-undefined",
            f"the correction cost is undefined for genus 1 with {r} boundary components",
        )
    return 1 if r <= 2 * g - 4 else 2


def _correction_exponent(orbit) -> int:
    # d_j = -int(screw/beta) + 1 lifts screw to screw + beta*d_j in (0, beta].
    return -int_variant(orbit.screw / orbit.beta) + 1


@dataclass(frozen=True)
class WitnessDecomposition:
    """Explicit correction certifying the correction route.

    ``corrected`` is the class obtained from the input by adding d_j twists
    on each corrected orbit and removing k * sum(d_j) boundary multitwists;
    it is fully right-veering, which is what certifies the original class.
    """

    k: int
    corrections: tuple[tuple[str, int], ...]
    total_multitwist_power: int
    corrected: NTClass


@dataclass(frozen=True)
class Sufficient:
    witness: WitnessDecomposition


@dataclass(frozen=True)
class Inconclusive:
    reasons: tuple[Diagnostic, ...]


@dataclass(frozen=True)
class NotApplicable:
    reason: Diagnostic


CriterionResult = Union[Sufficient, Inconclusive, NotApplicable]


def criterion(phi: NTClass) -> CriterionResult:
    """Apply the correction route to ``phi``.

    NotApplicable when the correction cost is undefined for the surface,
    when some boundary coefficient is <= 0, or when some orbit with
    screw <= 0 is separating.  Otherwise every orbit with screw <= 0 gets
    d_j = -int_variant(screw_j / beta_j) + 1 correction twists, and the
    outcome is Sufficient iff k * sum(d_j) < min_i fr_i (the constructed
    witness is then checked to be fully right-veering); Inconclusive
    reports the failed inequality exactly.
    """
    surface = phi.surface
    k = criterion_k(surface.genus, surface.boundary_count)
    if isinstance(k, Diagnostic):
        return NotApplicable(k)
    bad_fr = [i + 1 for i, x in enumerate(phi.fr) if x <= 0]
    if bad_fr:
        return NotApplicable(
            Diagnostic(
                "fr-not-positive",
                f"boundary coefficients at {bad_fr} are not strictly positive",
                (("boundaries", ",".join(map(str, bad_fr))),),
            )
        )
    to_correct = [orbit for orbit in phi.orbits if orbit.screw <= 0]
    separating = [orbit.id for orbit in to_correct if orbit.separating]
    if separating:
        return NotApplicable(
            Diagnostic(
                "separating-negative-orbit",
                f"orbits {separating} have non-positive screw numbers on separating curves",
                (("orbits", ",".join(separating)),),
            )
        )
    corrections = tuple((orbit.id, _correction_exponent(orbit)) for orbit in to_correct)
    total = k * sum(d for _, d in corrections)
    min_fr = min(phi.fr)
    moves = [OrbitTwist(orbit_id, d) for orbit_id, d in corrections]
    moves += [BoundaryTwist(i + 1, -total) for i in range(surface.boundary_count)]
    corrected = compose_twists(phi, moves)
    witness = WitnessDecomposition(k, corrections, total, corrected)
    if total < min_fr:
        if not is_fully_right_veering(corrected):  # unreachable; defensive
            return Inconclusive(
                (Diagnostic("witness-not-fully-right-veering", "corrected class failed verification"),)
            )
        return Sufficient(witness)
    return Inconclusive(
        (
            Diagnostic(
                "criterion-inequality-failed",
                f"k*sum(d) = {total} is not < min fr = {min_fr}",
                (("lhs", str(total)), ("rhs", str(min_fr))),
            ),
        )
    )


@dataclass(frozen=True)
class MainTheoremRoute:
    """Certified directly: all invariants strictly positive."""


@dataclass(frozen=True)
class CriterionRoute:
    """Certified through an explicit correction witness."""

    witness: WitnessDecomposition


@dataclass(frozen=True)
class PositivelyFactorizable:
    route: Union[MainTheoremRoute, CriterionRoute]


@dataclass(frozen=True)
class Unknown:
    diagnostics: tuple[Diagnostic, ...]


ClassificationReport = Union[PositivelyFactorizable, Unknown]


def _positivity_diagnostics(phi: NTClass) -> list[Diagnostic]:
    out = []
    bad_fr = [i + 1 for i, x in enumerate(phi.fr) if x <= 0]
    if bad_fr:
        out.append(
            Diagnostic(
                "fr-not-positive",
                f"boundary coefficients at {bad_fr} are not strictly positive",
                (("boundaries", ",".join(map(str, bad_fr))),),
            )
        )
    bad_sc = [orbit.id for orbit in phi.orbits if orbit.screw <= 0]
    if bad_sc:
        out.append(
            Diagnostic(
                "sc-not-positive",
                f"orbits {bad_sc} have non-positive screw numbers",
                (("orbits", ",".join(bad_sc)),),
            )
        )
    return out


def classify(phi: NTClass) -> ClassificationReport:
    """Certify positive factorizability of every class with these invariants, if possible.

    Tries the direct route first, then the correction route.  Anything else
    is Unknown with the strict-positivity violations and the correction
    route's outcome as diagnostics.  Classes without boundary components
    are Unknown: both routes require at least one boundary.
    """
    if phi.surface.boundary_count == 0:
        return Unknown(
            (Diagnostic("no-boundary", "certification requires at least one boundary component"),)
        )
    if is_fully_right_veering(phi):
        return PositivelyFactorizable(MainTheoremRoute())
    result = criterion(phi)
    if isinstance(result, Sufficient):
        return PositivelyFactorizable(CriterionRoute(result.witness))
    diagnostics = _positivity_diagnostics(phi)
    if isinstance(result, Inconclusive):
        diagnostics.extend(result.reasons)
    else:
        diagnostics.append(
            Diagnostic(
                "criterion-not-applicable",
                f"correction route not applicable: {result.reason.message}",
                result.reason.data,
            )
        )
    return Unknown(tuple(diagnostics))


def correcting_exponent_bound(phi: NTClass) -> Optional[int]:
    """Least N >= 0 with the N-fold boundary multitwist of ``phi`` certified, or None.

    Closed form over the two routes, both monotone in the boundary shift:
    the direct route needs every fr_i + N > 0 and all screws positive; the
    correction route needs k * sum(d_j) < min_i fr_i + N with the same
    applicability gate as :func:`criterion`.  None means neither route can
    certify any boundary shift of ``phi``.  The result bounds the true
    correcting exponent from above; it is exact for the implemented routes.
    """
    surface = phi.surface
    r = surface.boundary_count
    if r == 0:
        return None
    candidates = []
    lift_positive = max((math.floor(-x) + 1 for x in phi.fr), default=0)
    if all(orbit.screw > 0 for orbit in phi.orbits):
        candidates.append(max(0, lift_positive))
    k = criterion_k(surface.genus, r)
    if isinstance(k, int):
        to_correct = [orbit for orbit in phi.orbits if orbit.screw <= 0]
        if not any(orbit.separating for orbit in to_correct):
            total = k * sum(_correction_exponent(orbit) for orbit in to_correct)
            candidates.append(max(0, lift_positive, math.floor(total - min(phi.fr)) + 1))
    if not candidates:
        return None
    return min(candidates)


def genus_zero_diagnostics(phi: NTClass) -> tuple[Diagnostic, ...]:
    """Realizability warnings for genus-0 data.

    On a genus-0 surface every essential simple closed curve separates and
    is invariant on its own, so orbits of length > 1 and non-separating
    orbits cannot be realized.  Returns an empty tuple for genus > 0.
    """
    if phi.surface.genus != 0:
        return ()
    out = []
    long_orbits = [orbit.id for orbit in phi.orbits if orbit.length > 1]
    if long_orbits:
        out.append(
            Diagnostic(
                "genus-zero-orbit-length",
                f"orbits {long_orbits} have length > 1, impossible at genus 0",
                (("orbits", ",".join(long_orbits)),),
            )
        )
    non_sep = [orbit.id for orbit in phi.orbits if not orbit.separating]
    if non_sep:
        out.append(
            Diagnostic(
                "genus-zero-non-separating",
                f"orbits {non_sep} are marked non-separating, impossible at genus 0",
                (("orbits", ",".join(non_sep)),),
            )
        )
    return tuple(out)
