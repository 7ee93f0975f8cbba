import random

import pytest
from hypothesis import given, settings, strategies as st

from hyperlab import kernels
from hyperlab.hyperstructure import paper_24, zmod

compiled = pytest.mark.skipif(kernels.compiled_backend is None,
                              reason="compiled kernels not built")
py = kernels.python_backend


def random_tables(rng, size, m, n):
    ftab = [rng.randrange(1, 1 << size) for _ in range(size ** m)]
    gtab = [rng.randrange(size) for _ in range(size ** n)]
    return ftab, gtab


def test_fallback_is_selectable():
    assert py.name == "python"
    assert kernels.IMPLEMENTATION in ("python", "cython")


def test_python_kernels_find_known_facts():
    R = paper_24()
    assert py.hyper_assoc_violation(R.f_masks, R.size, R.m) is None
    assert py.nary_assoc_violation(R.g_table, R.size, R.n) is None
    assert py.distributivity_violation(R.f_masks, R.g_table, R.size, R.m, R.n) is None
    ftab = list(R.f_masks)
    ftab[1 * 4 + 2] = ftab[2 * 4 + 1] = 1 << 2
    assert py.hyper_assoc_violation(ftab, R.size, R.m) is not None


def test_sum_kernel_on_small_example():
    # f(a,b) = {a+b mod 2}; mu = [1,1] on 0 and [0,0] on 1
    ftab = [1, 2, 2, 1]
    assert py.sum_violation(ftab, 2, 2, [1, 0], [1, 0], (1, 1), (0, 0)) is None
    # now 1 is the high element: (1,1) -> 0 keeps the bound, (0,1) -> 1 is fine
    assert py.sum_violation(ftab, 2, 2, [0, 1], [0, 1], (1, 1), (0, 0)) == (3, 0)


@compiled
@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 4), st.integers(2, 3), st.integers(2, 3))
def test_structural_kernels_agree(seed, size, m, n):
    rng = random.Random(seed)
    ftab, gtab = random_tables(rng, size, m, n)
    cy = kernels.compiled_backend
    assert cy.hyper_assoc_violation(ftab, size, m) == py.hyper_assoc_violation(ftab, size, m)
    assert cy.nary_assoc_violation(gtab, size, n) == py.nary_assoc_violation(gtab, size, n)
    assert (cy.distributivity_violation(ftab, gtab, size, m, n)
            == py.distributivity_violation(ftab, gtab, size, m, n))


@compiled
@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 5), st.integers(2, 3))
def test_membership_kernels_agree(seed, size, m):
    rng = random.Random(seed)
    ftab, gtab = random_tables(rng, size, m, m)
    lo = [rng.randint(0, 10) for _ in range(size)]
    hi = [rng.randint(a, 10) for a in lo]
    pair = lambda: tuple(sorted((rng.randint(0, 10), rng.randint(0, 10))))
    cap, floor, join = pair(), pair(), pair()
    cy = kernels.compiled_backend
    assert (cy.sum_violation(ftab, size, m, lo, hi, cap, floor)
            == py.sum_violation(ftab, size, m, lo, hi, cap, floor))
    assert (cy.product_violation(gtab, size, m, lo, hi, join, cap, floor)
            == py.product_violation(gtab, size, m, lo, hi, join, cap, floor))


@compiled
def test_catalog_validation_agrees():
    cy = kernels.compiled_backend
    for R in (paper_24(), zmod(5, 3, 2), zmod(4, 2, 4)):
        for name in ("hyper_assoc_violation",):
            assert getattr(cy, name)(R.f_masks, R.size, R.m) is None
        assert cy.nary_assoc_violation(R.g_table, R.size, R.n) is None
        assert cy.distributivity_violation(R.f_masks, R.g_table, R.size, R.m, R.n) is None
