import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from multisym.errors import BadExponents, InvalidMultiPartition, UniverseTooLarge
from multisym.indexing import Context
from multisym.partitions import MultiPartition, enumerate_multipartitions, staircase
from multisym.polynomial import (
    Polynomial,
    apply_permutation,
    exact_div,
    is_homogeneous,
    is_symmetric,
)
from multisym.schur import (
    alternant,
    alternant_by_permutations,
    schur,
    schur_oracle,
    vandermonde_matrix,
    vandermonde_product,
)
from multisym.symfun import expand_in_monomial_basis, monomial_symmetric


def tableaux_schur(ctx, shape):
    """Sum of x^T over semistandard tableaux of ``shape`` with entries 1..N."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    N = ctx.size
    terms = {}

    def fill(idx, tab):
        if idx == len(cells):
            e = [0] * N
            for v in tab.values():
                e[v - 1] += 1
            e = tuple(e)
            terms[e] = terms.get(e, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, N + 1):
            tab[(r, c)] = v
            fill(idx + 1, tab)
        tab.pop((r, c), None)

    fill(0, {})
    return Polynomial(ctx, terms)


def flat(ctx, *values):
    return MultiPartition.from_flat(ctx, values)


SMALL = [Context(1, 1, 0), Context(1, 2, 1), Context(2, 1, 1), Context(1, 1, 3), Context(2, 2, 1)]


def test_vandermonde_matrix_examples():
    ctx = Context(1, 2, 1)
    x1, y1, y2 = Polynomial.variables(ctx)
    one = Polynomial.one(ctx)
    assert vandermonde_matrix(ctx, (2, 1, 0)) == [[x1**2, x1, one], [y1**2, y1, one], [y2**2, y2, one]]
    assert vandermonde_matrix(Context(1, 1, 0), (0,)) == [[Polynomial.one(Context(1, 1, 0))]]
    big = Context(2, 2, 1)
    assert vandermonde_matrix(big, staircase(big).values)[0][0] == Polynomial.variable(big, 1, 5)


@pytest.mark.parametrize("alpha", [(2, 2, 0), (2, 1), (2, 1, -1), (0, 1, 2)])
def test_bad_alpha(alpha):
    with pytest.raises(BadExponents):
        alternant(Context(1, 2, 1), alpha)


def test_vandermonde_product_examples():
    ctx = Context(1, 2, 1)
    x1, y1, y2 = Polynomial.variables(ctx)
    assert vandermonde_product(ctx) == (x1 - y1) * (x1 - y2) * (y1 - y2)
    assert vandermonde_product(Context(1, 1, 0)) == Polynomial.one(Context(1, 1, 0))


@pytest.mark.parametrize("ctx", [Context(1, 1, 0), Context(1, 2, 1), Context(2, 1, 1), Context(1, 3, 1), Context(2, 2, 1), Context(1, 2, 2), Context(1, 1, 6)])
def test_alternant_of_staircase_is_product(ctx):
    assert alternant(ctx, staircase(ctx).values) == vandermonde_product(ctx)


def test_alternant_is_antisymmetric():
    ctx = Context(2, 1, 1)
    a = alternant(ctx, (6, 3, 2, 0))
    for i in range(1, 4):
        sigma = list(range(1, 5))
        sigma[i - 1], sigma[i] = sigma[i], sigma[i - 1]
        assert apply_permutation(a, sigma) == -a


@settings(max_examples=40)
@given(st.integers(3, 5), st.data())
def test_random_alternants_divisible(size, data):
    ctx = Context(1, 1, size - 1)
    alpha = sorted(data.draw(st.sets(st.integers(0, 12 - size), min_size=size, max_size=size)), reverse=True)
    a = alternant(ctx, alpha)
    assert a == alternant_by_permutations(ctx, alpha)
    quotient = exact_div(a, vandermonde_product(ctx))
    assert is_symmetric(quotient)
    assert is_homogeneous(quotient, sum(alpha) - size * (size - 1) // 2)


def test_schur_zero_is_one():
    for ctx in SMALL:
        assert schur(MultiPartition.zero(ctx)) == Polynomial.one(ctx)
        assert schur_oracle(MultiPartition.zero(ctx)) == Polynomial.one(ctx)


def test_schur_rejects_invalid_chain():
    with pytest.raises(InvalidMultiPartition):
        schur(MultiPartition.from_levels(Context(1, 2, 1), [[1], [2, 1]]))


def test_schur_321_value():
    ctx = Context(1, 2, 1)
    x1, y1, y2 = Polynomial.variables(ctx)
    expected = x1 * y1 * y2 * (monomial_symmetric(flat(ctx, 2, 1, 0)) + 2 * monomial_symmetric(flat(ctx, 1, 1, 1)))
    ell = flat(ctx, 3, 2, 1)
    assert schur(ell) == schur_oracle(ell) == expected
    assert is_homogeneous(schur(ell), 6)
    # a neighbouring shape one box smaller gives the degree-5 quotient
    assert is_homogeneous(schur(flat(ctx, 3, 1, 1)), 5)


def test_schur_221_structure():
    ctx = Context(2, 2, 1)
    ell = MultiPartition.from_levels(ctx, [[3, 2], [2, 1, 1, 1]])
    e6 = monomial_symmetric(flat(ctx, 1, 1, 1, 1, 1, 1))
    inner = monomial_symmetric(flat(ctx, 2, 1, 1)) + 3 * monomial_symmetric(flat(ctx, 1, 1, 1, 1))
    assert schur(ell) == schur_oracle(ell) == e6 * inner


def test_schur_122_structure():
    ctx = Context(1, 2, 2)
    ell = MultiPartition.from_levels(ctx, [[3], [2, 1], [1, 1, 1, 1]])
    e7 = monomial_symmetric(flat(ctx, *[1] * 7))
    inner = monomial_symmetric(flat(ctx, 2, 1)) + 2 * monomial_symmetric(flat(ctx, 1, 1, 1))
    assert schur(ell) == e7 * inner


@pytest.mark.parametrize("ctx", SMALL)
def test_schur_matches_tableaux_and_oracle(ctx):
    for r in range(5):
        for ell in enumerate_multipartitions(ctx, r):
            s = schur(ell)
            shape = [v for v in ell.values if v]
            assert s == tableaux_schur(ctx, shape)
            assert s == schur_oracle(ell)
            assert is_homogeneous(s, r)
            assert all(isinstance(c, int) for c in expand_in_monomial_basis(s).values())


def test_schur_full_symmetry_up_to_six():
    for ctx in [Context(1, 2, 1), Context(2, 1, 1), Context(1, 1, 4), Context(2, 2, 1)]:
        ell = MultiPartition.from_flat(ctx, [3, 2, 1][: ctx.size])
        s = schur(ell)
        for sigma in permutations(range(1, ctx.size + 1)):
            assert apply_permutation(s, sigma) == s


def test_schur_random_symmetry_seven():
    ctx = Context(1, 2, 2)
    s = schur(MultiPartition.from_flat(ctx, (2, 2, 1)))
    rng = random.Random(7)
    for _ in range(50):
        sigma = list(range(1, 8))
        rng.shuffle(sigma)
        assert apply_permutation(s, sigma) == s


def test_oracle_bound(monkeypatch):
    monkeypatch.setenv("MULTISYM_FACTORIAL_BOUND", "5")
    with pytest.raises(UniverseTooLarge):
        schur_oracle(MultiPartition.zero(Context(2, 2, 1)))
