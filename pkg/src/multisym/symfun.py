"""Monomial symmetric functions, symmetrisation and homogeneous bases."""

from __future__ import annotations

import os
from collections import Counter
from itertools import permutations
from collections.abc import Iterator, Sequence

from .errors import UniverseTooLarge
from .indexing import Context
from .partitions import MultiPartition, enumerate_multipartitions, require_valid
from .polynomial import Polynomial, apply_permutation

__all__ = [
    "factorial_bound",
    "distinct_permutations",
    "monomial_symmetric",
    "symmetrize",
    "homogeneous_basis",
    "expand_in_monomial_basis",
]

DEFAULT_FACTORIAL_BOUND = 8


def factorial_bound() -> int:
    """Largest universe on which S_N is walked element by element."""
    return int(os.environ.get("MULTISYM_FACTORIAL_BOUND", DEFAULT_FACTORIAL_BOUND))


def distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Each distinct arrangement of a multiset exactly once."""
    counts = Counter(items)
    keys = sorted(counts, reverse=True)
    n = len(items)
    current: list[int] = []

    def rec():
        if len(current) == n:
            yield tuple(current)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                current.append(key)
                yield from rec()
                current.pop()
                counts[key] += 1

    yield from rec()


def monomial_symmetric(mp: MultiPartition) -> Polynomial:
    """Sum of the distinct monomials in the orbit of ``a ** mp``."""
    require_valid(mp)
    return Polynomial._raw(mp.ctx, {e: 1 for e in distinct_permutations(mp.values)})


def symmetrize(p: Polynomial) -> Polynomial:
    """Sum of ``sigma . p`` over the whole symmetric group of the universe."""
    n = p.ctx.size
    bound = factorial_bound()
    if n > bound:
        raise UniverseTooLarge(f"universe of {n} variables exceeds factorial bound {bound}")
    total = Polynomial.zero(p.ctx)
    for perm in permutations(range(1, n + 1)):
        total = total + apply_permutation(p, perm)
    return total


def homogeneous_basis(ctx: Context, r: int) -> list[Polynomial]:
    return [monomial_symmetric(mp) for mp in enumerate_multipartitions(ctx, r)]


def expand_in_monomial_basis(p: Polynomial) -> dict[tuple[int, ...], int]:
    """Coefficients of a symmetric polynomial on the monomial symmetric functions.

    Keys are partitions (trailing zeros dropped).  The coefficient of ``m_lam``
    is the coefficient of the monomial whose exponents are ``lam`` in
    decreasing order; the expansion is checked by reconstruction.
    """
    ctx = p.ctx
    coeffs: dict[tuple[int, ...], int] = {}
    for exps, c in p.terms.items():
        if list(exps) == sorted(exps, reverse=True):
            coeffs[tuple(x for x in exps if x)] = c
    rebuilt = Polynomial.zero(ctx)
    for lam, c in coeffs.items():
        rebuilt = rebuilt + monomial_symmetric(MultiPartition.from_flat(ctx, lam)) * c
    if rebuilt != p:
        raise ValueError("polynomial is not symmetric; no monomial-basis expansion")
    return coeffs
