# cython: language_level=3
"""Compiled twin of :mod:`posfact._kernel_py`.

Same contract as the pure module.  Exactness is preserved: the int64 fast
path is only taken when the scan provably stays inside 64-bit range;
anything larger falls back to Python-integer arithmetic inside the same
loop structure.
"""

from libc.stdint cimport int64_t

__all__ = ["int_variant_pair", "scan_class"]

# With |num| < 2**59 and (window + 2) * step < 2**59, every scanned value
# satisfies |num + e*step| <= 2|num| + (window + 1)*step < 2**61: int64-safe.
DEF SMALL = 576460752303423488  # 2**59


def int_variant_pair(num, den):
    """trunc(num / den) toward zero, for den > 0."""
    if num >= 0:
        return num // den
    return -((-num) // den)


cdef inline int64_t _trunc_c(int64_t num, int64_t den) nogil:
    if num >= 0:
        return num // den
    return -((-num) // den)


cdef bint _scan_coord_c(int64_t num, int64_t step, long window, long* out_estar) nogil:
    cdef int64_t e_star = -_trunc_c(num, step)
    cdef int64_t e, value
    cdef int count = 0
    cdef int64_t found = 0
    for e in range(e_star - window, e_star + window + 1):
        value = num + e * step
        if -step < value < step and (value == 0 or (value > 0) == (num > 0)):
            count += 1
            found = e
    out_estar[0] = <long> e_star
    return count == 1 and found == e_star


def scan_class(nums, dens, betas, long window):
    """Window-scan every coordinate; see the pure twin for the contract."""
    cdef Py_ssize_t i, ncoords = len(nums)
    cdef bint unique = True
    cdef long e_star_c
    cdef int64_t num_c, step_c
    exponents = []
    for i in range(ncoords):
        num = nums[i]
        step = betas[i] * dens[i]
        if -SMALL < num < SMALL and step < SMALL // (window + 2):
            num_c = num
            step_c = step
            if not _scan_coord_c(num_c, step_c, window, &e_star_c):
                unique = False
            exponents.append(e_star_c)
        else:
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
