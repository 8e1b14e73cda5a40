"""Horizontal, vertical and diagonal projections between contexts.

Each projection sets a block of variables to zero and renumbers the
surviving variables onto the target universe, so results are ordinary
polynomials of the target context.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from .errors import BudgetExceeded, ChainShapeMismatch, ContextMismatch, InvalidContext
from .indexing import Context, flat_index
from .partitions import MultiPartition, count_partitions_at_most, partitions_at_most, require_valid
from .polynomial import Polynomial
from .schur import schur
from .symfun import expand_in_monomial_basis, monomial_symmetric

__all__ = [
    "ProjectionKind",
    "horizontal",
    "vertical",
    "diagonal",
    "truncate",
    "project",
    "kill_set",
    "threshold",
    "is_bijective_on_degree",
    "dimension_row",
    "verify_surjectivity",
    "pad_multipartition",
    "verify_schur_stability",
    "compatible_sequence_check",
]

KINDS = ("horizontal", "vertical", "diagonal")


@dataclass(frozen=True)
class ProjectionKind:
    kind: str
    source: Context
    target: Context

    def __post_init__(self):
        s, t = self.source, self.target
        if self.kind not in KINDS:
            raise InvalidContext(f"unknown projection kind {self.kind!r}")
        if s.n != t.n:
            raise InvalidContext("projections keep n fixed")
        dm, dk = {"horizontal": (1, 0), "vertical": (0, 1), "diagonal": (1, 1)}[self.kind]
        if (s.m - t.m, s.k - t.k) != (dm, dk):
            raise InvalidContext(f"{self.kind} projection cannot map {s} to {t}")

    def __str__(self):
        return f"{self.kind}:{self.source}->{self.target}"


def horizontal(m: int, n: int, k: int) -> ProjectionKind:
    """Drop row ``m+1``: ``(m+1, n, k) -> (m, n, k)``."""
    return ProjectionKind("horizontal", Context(m + 1, n, k), Context(m, n, k))


def vertical(m: int, n: int, k: int) -> ProjectionKind:
    """Drop depth ``k+1``: ``(m, n, k+1) -> (m, n, k)``."""
    return ProjectionKind("vertical", Context(m, n, k + 1), Context(m, n, k))


def diagonal(m: int, n: int, k: int) -> ProjectionKind:
    return ProjectionKind("diagonal", Context(m + 1, n, k + 1), Context(m, n, k))


def _survivors(source: Context, target: Context) -> list[int]:
    # flat index in source of each target variable, in target order
    if source.n != target.n or target.m > source.m or target.k > source.k:
        raise ContextMismatch(f"{target} is not a sub-context of {source}")
    return [flat_index(source, lab) for lab in target.labels]


def kill_set(pk: ProjectionKind) -> set[int]:
    """Flat indices (in the source) of the variables set to zero."""
    keep = set(_survivors(pk.source, pk.target))
    return set(range(1, pk.source.size + 1)) - keep


def truncate(p: Polynomial, target: Context) -> Polynomial:
    """Kill every variable of ``p.ctx`` that does not exist in ``target``."""
    keep = [i - 1 for i in _survivors(p.ctx, target)]
    keep_set = set(keep)
    dead = [i for i in range(p.ctx.size) if i not in keep_set]
    out: dict[tuple[int, ...], int] = {}
    for e, c in p.terms.items():
        if any(e[i] for i in dead):
            continue
        out[tuple(e[i] for i in keep)] = c
    return Polynomial(target, out)


def project(pk: ProjectionKind, p: Polynomial) -> Polynomial:
    if p.ctx != pk.source:
        raise ContextMismatch(f"polynomial lives in {p.ctx}, projection source is {pk.source}")
    return truncate(p, pk.target)


def threshold(pk: ProjectionKind) -> int:
    return pk.target.size


def is_bijective_on_degree(pk: ProjectionKind, r: int) -> bool:
    """Closed-form verdict: bijective on degree ``r`` iff ``r <= m*q_k`` of the target."""
    return r <= threshold(pk)


def dimension_row(pk: ProjectionKind, r: int) -> dict:
    """One row of the bijectivity report, observed side by partition counting."""
    ds = count_partitions_at_most(r, pk.source.size)
    dt = count_partitions_at_most(r, pk.target.size)
    claimed = is_bijective_on_degree(pk, r)
    observed = ds == dt
    s = pk.source
    return {
        "kind": pk.kind,
        "m": s.m,
        "n": s.n,
        "k": s.k,
        "r": r,
        "threshold": threshold(pk),
        "dim_source": ds,
        "dim_target": dt,
        "bijective_claimed": claimed,
        "bijective_observed": observed,
        "pass": claimed == observed,
    }


def _integer_span_is_full(rows: list[list[int]], dim: int) -> bool:
    """Do the integer ``rows`` generate all of Z^dim?  Echelon form via gcd steps."""
    rows = [list(r) for r in rows if any(r)]
    pivots = []
    for col in range(dim):
        live = [r for r in rows if r[col]]
        if not live:
            return False
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            for r in live[1:]:
                f = r[col] // piv[col]
                for j in range(dim):
                    r[j] -= f * piv[j]
            live = [r for r in live if r[col]]
        piv = live[0]
        pivots.append(abs(piv[col]))
        rows = [r for r in rows if r is not piv and any(r)]
    return all(p == 1 for p in pivots)


def _rank(rows: list[list[int]]) -> int:
    mat = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _projected_basis_matrix(pk: ProjectionKind, r: int, budget: int):
    src = list(partitions_at_most(r, pk.source.size))
    tgt = list(partitions_at_most(r, pk.target.size))
    if len(src) > budget:
        raise BudgetExceeded(f"{len(src)} basis elements exceed budget {budget}")
    col = {lam: j for j, lam in enumerate(tgt)}
    rows = []
    for lam in src:
        image = project(pk, monomial_symmetric(MultiPartition.from_flat(pk.source, lam)))
        row = [0] * len(tgt)
        for mu, c in expand_in_monomial_basis(image).items():
            row[col[mu]] = c
        rows.append(row)
    return rows, len(tgt)


def verify_surjectivity(pk: ProjectionKind, r: int, budget: int = 5000) -> bool:
    """Do the projected source basis elements of degree ``r`` generate the target over Z?"""
    rows, dim = _projected_basis_matrix(pk, r, budget)
    return _integer_span_is_full(rows, dim)


def observed_injective(pk: ProjectionKind, r: int, budget: int = 5000) -> bool:
    """Rank test: are the images of the source basis linearly independent?"""
    rows, _ = _projected_basis_matrix(pk, r, budget)
    return _rank(rows) == len(rows)


def pad_multipartition(ell: MultiPartition, source: Context) -> MultiPartition:
    """Append zeros to the flat reading of ``ell`` so it lives in ``source``."""
    return MultiPartition.from_flat(source, ell.values)


def verify_schur_stability(ell: MultiPartition, pk: ProjectionKind) -> bool:
    if ell.ctx != pk.target:
        raise ContextMismatch(f"{ell} lives in {ell.ctx}, projection target is {pk.target}")
    require_valid(ell)
    return project(pk, schur(pad_multipartition(ell, pk.source))) == schur(ell)


def _link(kind: str, lower: Context, upper: Context) -> ProjectionKind:
    try:
        return ProjectionKind(kind, upper, lower)
    except InvalidContext as exc:
        raise ChainShapeMismatch(f"{upper} -> {lower} is not a {kind} step") from exc


def compatible_sequence_check(seq: Sequence[tuple[Context, Polynomial]], kind: str) -> bool:
    """Each entry must project onto its predecessor (contexts grow along ``seq``)."""
    for (c0, p0), (c1, p1) in zip(seq, seq[1:]):
        pk = _link(kind, c0, c1)
        if p0.ctx != c0 or p1.ctx != c1:
            raise ChainShapeMismatch("polynomial context differs from the declared one")
        if project(pk, p1) != p0:
            return False
    return True
