from itertools import permutations

import pytest

from multisym.errors import UniverseTooLarge
from multisym.indexing import Context
from multisym.partitions import MultiPartition, count_partitions_at_most
from multisym.polynomial import Polynomial, apply_permutation, is_homogeneous, is_symmetric
from multisym.symfun import (
    distinct_permutations,
    expand_in_monomial_basis,
    homogeneous_basis,
    monomial_symmetric,
    symmetrize,
)

CTX = Context(1, 2, 1)
X1, Y1, Y2 = Polynomial.variables(CTX)


def mp(ctx, *values):
    return MultiPartition.from_flat(ctx, values)


def test_msym_examples():
    assert monomial_symmetric(mp(CTX, 1, 1, 0)) == X1 * Y1 + X1 * Y2 + Y1 * Y2
    # e_3 = m_(1,1,1)
    assert monomial_symmetric(mp(CTX, 1, 1, 1)) == X1 * Y1 * Y2
    assert monomial_symmetric(MultiPartition.zero(CTX)) == Polynomial.one(CTX)


def test_distinct_permutations_against_set_of_permutations():
    for items in [(2, 1, 1, 0), (3, 3, 3), (2, 1, 0, 0, 0)]:
        got = list(distinct_permutations(items))
        assert len(got) == len(set(got))
        assert set(got) == set(permutations(items))


@pytest.mark.parametrize("ctx", [Context(1, 2, 1), Context(2, 1, 1), Context(1, 1, 3)])
def test_msym_matches_orbit_oracle(ctx):
    for r in range(5):
        for part in homogeneous_basis(ctx, r):
            assert is_symmetric(part) and is_homogeneous(part, r)
            assert set(part.terms.values()) <= {1}
            lead = part.leading_term()[0]
            assert set(part.terms) == set(permutations(lead))


def test_symmetrize_examples():
    assert symmetrize(X1) == 2 * (X1 + Y1 + Y2)
    e2 = X1 * Y1 + X1 * Y2 + Y1 * Y2
    assert symmetrize(e2) == 6 * e2
    assert symmetrize(Polynomial.zero(CTX)).is_zero()


def test_symmetrize_bound(monkeypatch):
    monkeypatch.setenv("MULTISYM_FACTORIAL_BOUND", "2")
    with pytest.raises(UniverseTooLarge):
        symmetrize(X1)


def test_symmetrize_brute_force():
    p = 3 * X1**2 * Y1 - Y2
    brute = sum((apply_permutation(p, s) for s in permutations((1, 2, 3))), Polynomial.zero(CTX))
    assert symmetrize(p) == brute


def test_basis_examples():
    basis = homogeneous_basis(CTX, 2)
    assert basis == [X1**2 + Y1**2 + Y2**2, X1 * Y1 + X1 * Y2 + Y1 * Y2]
    assert homogeneous_basis(CTX, 0) == [Polynomial.one(CTX)]


def test_basis_expresses_pf1_plus_qf2():
    f1, f2 = homogeneous_basis(CTX, 2)[1], homogeneous_basis(CTX, 2)[0]
    f = 5 * f1 - 7 * f2
    assert expand_in_monomial_basis(f) == {(2,): -7, (1, 1): 5}


@pytest.mark.parametrize("ctx", [Context(1, 1, 0), Context(1, 2, 1), Context(2, 1, 1), Context(1, 1, 7), Context(2, 2, 1)])
def test_basis_dimension_and_triangularity(ctx):
    for r in range(7 if ctx.size < 8 else 5):
        basis = homogeneous_basis(ctx, r)
        assert len(basis) == count_partitions_at_most(r, ctx.size)
        leads = [b.leading_term()[0] for b in basis]
        assert len(set(leads)) == len(leads)
