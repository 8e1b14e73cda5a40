"""Generalised Vandermonde matrices, alternants and Schur quotients.

Rows of every alternant matrix follow flat-index order of the variables and
columns follow the exponent sequence, so ``alternant(ctx, staircase)`` is the
product of ``x_i - x_j`` over ``i < j``.
"""

from __future__ import annotations

from functools import lru_cache
from collections.abc import Sequence

from .errors import BadExponents, NotDivisible, UniverseTooLarge
from .indexing import Context
from .partitions import MultiPartition, require_valid, shift_by_staircase, staircase
from .polynomial import Polynomial, determinant, determinant_by_permutations, divide_by_difference, exact_div
from .symfun import factorial_bound

__all__ = [
    "vandermonde_matrix",
    "alternant",
    "alternant_by_permutations",
    "vandermonde_product",
    "vandermonde_factors",
    "schur",
    "schur_oracle",
]


def _check_alpha(ctx: Context, alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != ctx.size:
        raise BadExponents(f"need {ctx.size} exponents, got {len(alpha)}")
    if any(a < 0 for a in alpha):
        raise BadExponents(f"negative exponent in {alpha}")
    if any(a <= b for a, b in zip(alpha, alpha[1:])):
        raise BadExponents(f"{alpha} is not strictly decreasing")
    return alpha


def vandermonde_matrix(ctx: Context, alpha: Sequence[int]) -> list[list[Polynomial]]:
    """Entry ``(i, j)`` is the variable with flat index ``i+1`` to the power ``alpha[j]``."""
    alpha = _check_alpha(ctx, alpha)
    return [[Polynomial.variable(ctx, i, a) for a in alpha] for i in range(1, ctx.size + 1)]


def alternant(ctx: Context, alpha: Sequence[int]) -> Polynomial:
    return determinant(vandermonde_matrix(ctx, alpha))


def alternant_by_permutations(ctx: Context, alpha: Sequence[int]) -> Polynomial:
    return determinant_by_permutations(vandermonde_matrix(ctx, alpha))


def vandermonde_factors(ctx: Context) -> list[Polynomial]:
    """The linear factors ``x_i - x_j``, ``i < j``, in flat order."""
    xs = Polynomial.variables(ctx)
    return [xs[i] - xs[j] for i in range(len(xs)) for j in range(i + 1, len(xs))]


@lru_cache(maxsize=64)
def vandermonde_product(ctx: Context) -> Polynomial:
    result = Polynomial.one(ctx)
    for f in vandermonde_factors(ctx):
        result = result * f
    return result


def schur(ell: MultiPartition) -> Polynomial:
    """Quotient of the alternant of ``ell + staircase`` by the Vandermonde product.

    The division runs one linear factor at a time; a :class:`NotDivisible`
    here means the alternant was computed wrongly.
    """
    require_valid(ell)
    ctx = ell.ctx
    lam = shift_by_staircase(ell)
    quotient = alternant(ctx, lam.values)
    n = ctx.size
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            try:
                quotient = divide_by_difference(quotient, i, j)
            except NotDivisible as exc:
                raise NotDivisible(f"alternant of {lam} not divisible by x{i} - x{j}: {exc}", exc.term) from exc
    return quotient


def schur_oracle(ell: MultiPartition) -> Polynomial:
    """Schur quotient via Leibniz-expanded determinants and one full division."""
    require_valid(ell)
    ctx = ell.ctx
    bound = factorial_bound()
    if ctx.size > bound:
        raise UniverseTooLarge(f"universe of {ctx.size} variables exceeds factorial bound {bound}")
    lam = shift_by_staircase(ell)
    num = alternant_by_permutations(ctx, lam.values)
    den = alternant_by_permutations(ctx, staircase(ctx).values)
    return exact_div(num, den)
