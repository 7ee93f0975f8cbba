"""Pure-Python exhaustive kernels (fallback for the compiled ``_kernels``).

Tables are flat: an ``k``-tuple ``(a_1, ..., a_k)`` lives at index
``sum(a_i * size**(k-i))``, so index order is lexicographic tuple order.
Hyperoperation outputs are bitmasks (bit ``x`` set iff ``x`` is in the set).
Integer-encoded intervals share one common denominator.

Every function returns ``None`` when no violation exists, otherwise the
lexicographically least violating position.
"""

from itertools import product

IMPLEMENTATION = "python"


def _index(digits, size):
    idx = 0
    for d in digits:
        idx = idx * size + d
    return idx


def _bits(mask):
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def hyper_assoc_violation(ftab, size, m):
    """First ``(tuple_index, i, j)`` where bracketing at slots i and j differ."""
    width = 2 * m - 1
    for idx, d in enumerate(product(range(size), repeat=width)):
        first = None
        for p in range(m):
            inner = ftab[_index(d[p:p + m], size)]
            head, tail = d[:p], d[p + m:]
            out = 0
            for x in _bits(inner):
                out |= ftab[_index(head + (x,) + tail, size)]
            if p == 0:
                first = out
            elif out != first:
                return idx, 0, p
    return None


def nary_assoc_violation(gtab, size, n):
    width = 2 * n - 1
    for idx, d in enumerate(product(range(size), repeat=width)):
        first = None
        for p in range(n):
            inner = gtab[_index(d[p:p + n], size)]
            out = gtab[_index(d[:p] + (inner,) + d[p + n:], size)]
            if p == 0:
                first = out
            elif out != first:
                return idx, 0, p
    return None


def distributivity_violation(ftab, gtab, size, m, n):
    """First ``(slot, others_index, args_index)`` breaking g-over-f distributivity."""
    for slot in range(n):
        for xi, xs in enumerate(product(range(size), repeat=n - 1)):
            head, tail = xs[:slot], xs[slot:]
            for ai, a in enumerate(product(range(size), repeat=m)):
                lhs = 0
                for c in _bits(ftab[_index(a, size)]):
                    lhs |= 1 << gtab[_index(head + (c,) + tail, size)]
                args = tuple(gtab[_index(head + (ak,) + tail, size)] for ak in a)
                if ftab[_index(args, size)] != lhs:
                    return slot, xi, ai
    return None


def sum_violation(ftab, size, m, lo, hi, cap_lo, cap_hi, floor_lo, floor_hi):
    """Check ``rmin{mu(a_i), cap} <= rmax{mu(c), floor}`` for every c in f(a).

    Returns ``(tuple_index, c)`` for the first failure.
    """
    for idx, a in enumerate(product(range(size), repeat=m)):
        left_lo = min(min(lo[x] for x in a), cap_lo)
        left_hi = min(min(hi[x] for x in a), cap_hi)
        for c in _bits(ftab[idx]):
            if left_lo > max(lo[c], floor_lo) or left_hi > max(hi[c], floor_hi):
                return idx, c
    return None


def product_violation(gtab, size, n, lo, hi, join_lo, join_hi,
                      cap_lo, cap_hi, floor_lo, floor_hi):
    """Check ``rmin{rmax{mu(b_i), join}, cap} <= rmax{mu(g(b)), floor}``."""
    for idx, b in enumerate(product(range(size), repeat=n)):
        left_lo = min(max(max(lo[x] for x in b), join_lo), cap_lo)
        left_hi = min(max(max(hi[x] for x in b), join_hi), cap_hi)
        c = gtab[idx]
        if left_lo > max(lo[c], floor_lo) or left_hi > max(hi[c], floor_hi):
            return idx
    return None
