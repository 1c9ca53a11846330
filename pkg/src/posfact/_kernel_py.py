"""Pure-Python twin of the compiled window-scan kernel.

These functions work on raw integer triples (numerator, denominator, beta)
so that the hot loop of the essential-part uniqueness scan never touches
Fraction objects.  The compiled twin in ``_kernel.pyx`` implements the same
contract; :mod:`posfact._backend` selects between the two at import time.

For a coordinate with value v = num/den and twist step beta, the essential
window condition for an exponent e is

    |v + beta * e| < beta   and   (v + beta * e == 0 or sign matches sign(v)),

equivalently, on numerators over the common denominator den:

    |num + e * beta * den| < beta * den.

The closed-form exponent is e* = -trunc(v / beta), truncation toward zero.
"""

from __future__ import annotations

__all__ = ["int_variant_pair", "scan_class"]


def int_variant_pair(num: int, den: int) -> int:
    """trunc(num / den) toward zero, for den > 0."""
    if num >= 0:
        return num // den
    return -((-num) // den)


def scan_class(
    nums: list[int], dens: list[int], betas: list[int], window: int
) -> tuple[bool, list[int]]:
    """Window-scan every coordinate of a class for essential-exponent uniqueness.

    Returns ``(unique, exponents)`` where ``exponents[i]`` is the closed-form
    exponent of coordinate i and ``unique`` is True iff, for every
    coordinate, exactly one exponent within ``window`` of the closed-form
    one satisfies the essential window condition, namely the closed-form
    exponent itself.  Conditions are per-coordinate, so the number of
    satisfying exponent *tuples* is the product of the per-coordinate
    counts; unique == True iff that product is 1 and the tuple is the
    closed-form one.
    """
    unique = True
    exponents = []
    for num, den, beta in zip(nums, dens, betas):
        step = beta * den
        e_star = -int_variant_pair(num, step)
        count = 0
        found = 0
        for e in range(e_star - window, e_star + window + 1):
            value = num + e * step
            if -step < value < step and (value == 0 or (value > 0) == (num > 0)):
                count += 1
                found = e
        if count != 1 or found != e_star:
            unique = False
        exponents.append(e_star)
    return unique, exponents
