"""Sparse exact polynomials over the integers on a fixed variable universe.

Terms are stored as ``{exponent tuple: int}``; exponent tuples are dense and
follow flat-index order of the owning :class:`~multisym.indexing.Context`.
Monomials are compared in graded lexicographic order, the first variable
being the largest.
"""

from __future__ import annotations

import heapq
import json
from math import gcd
from collections.abc import Iterable, Mapping, Sequence
from itertools import permutations

from .errors import (
    ContextMismatch,
    DivisionByZero,
    IndexOutOfRange,
    InvalidPermutation,
    NonSquareMatrix,
    NotDivisible,
    ShapeMismatch,
)
from .indexing import Context

__all__ = [
    "Polynomial",
    "exact_div",
    "divide_by_difference",
    "determinant",
    "determinant_by_permutations",
    "permutation_sign",
    "substitute_zero",
    "apply_permutation",
    "is_symmetric",
    "degree",
    "is_homogeneous",
    "homogeneous_component",
    "monomial_key",
]

Monomial = tuple[int, ...]


def monomial_key(exps: Monomial):
    """Sort key realising graded lex order (bigger key = bigger monomial)."""
    return (sum(exps), exps)


def _add_exps(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: Context, terms: Mapping[Monomial, int] | None = None):
        self.ctx = ctx
        n = ctx.size
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ShapeMismatch(f"exponent vector of length {len(exps)} in a {n}-variable context")
                if any(e < 0 for e in exps):
                    raise ShapeMismatch(f"negative exponent in {exps}")
                if c:
                    clean[exps] = clean.get(exps, 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ctx: Context) -> Polynomial:
        return cls._raw(ctx, {})

    @classmethod
    def constant(cls, ctx: Context, c: int) -> Polynomial:
        return cls._raw(ctx, {(0,) * ctx.size: int(c)} if c else {})

    @classmethod
    def one(cls, ctx: Context) -> Polynomial:
        return cls.constant(ctx, 1)

    @classmethod
    def monomial(cls, ctx: Context, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls(ctx, {tuple(exps): coeff})

    @classmethod
    def variable(cls, ctx: Context, i: int, power: int = 1) -> Polynomial:
        """The variable at flat index ``i`` (1-based), raised to ``power``."""
        if not 1 <= i <= ctx.size:
            raise IndexOutOfRange(f"flat index {i} outside [1,{ctx.size}]")
        exps = [0] * ctx.size
        exps[i - 1] = power
        return cls._raw(ctx, {tuple(exps): 1})

    @classmethod
    def variables(cls, ctx: Context) -> list[Polynomial]:
        return [cls.variable(ctx, i) for i in range(1, ctx.size + 1)]

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        """Terms in descending monomial order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, key=monomial_key, reverse=True)]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=monomial_key)
        return e, self._terms[e]

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for exps, c in self._terms.items():
            v = c
            for x, e in zip(values, exps):
                if e:
                    v *= x**e
            total += v
        return total

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.ctx != other.ctx:
            raise ContextMismatch(f"context {self.ctx} vs {other.ctx}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ctx, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.ctx)
            return Polynomial._raw(self.ctx, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Monomial, int] = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = _add_exps(ea, eb)
                v = out.get(e, 0) + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a nonnegative int")
        result = Polynomial.one(self.ctx)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self._terms == Polynomial.constant(self.ctx, other)._terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # -- rendering --------------------------------------------------------

    def to_text(self, alias: bool = False) -> str:
        """Render as e.g. ``3*a[1]^2*a[1;2] - a[2]``, terms in descending order."""
        if not self._terms:
            return "0"
        labels = self.ctx.labels
        names = [lab.alias() if alias else lab.text() for lab in labels]
        parts = []
        for exps, c in self.items():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.ctx}, {self.to_text()!r})"

    def to_dict(self) -> dict:
        ctx = self.ctx
        return {
            "context": {"m": ctx.m, "n": ctx.n, "k": ctx.k},
            "terms": [{"coeff": str(c), "exp": list(e)} for e, c in self.items()],
        }

    def to_json(self) -> str:
        """Canonical JSON; byte-identical for equal polynomials."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_dict(cls, data: Mapping) -> Polynomial:
        c = data["context"]
        ctx = Context(int(c["m"]), int(c["n"]), int(c["k"]))
        terms: dict[Monomial, int] = {}
        for t in data["terms"]:
            e = tuple(int(x) for x in t["exp"])
            terms[e] = terms.get(e, 0) + int(t["coeff"])
        return cls(ctx, terms)

    @classmethod
    def from_json(cls, text: str) -> Polynomial:
        return cls.from_dict(json.loads(text))


def _check_same(polys: Iterable[Polynomial]) -> Context:
    ctx = None
    for p in polys:
        if ctx is None:
            ctx = p.ctx
        elif p.ctx != ctx:
            raise ContextMismatch(f"context {p.ctx} vs {ctx}")
    return ctx


def exact_div(num: Polynomial, den: Polynomial) -> Polynomial:
    """Return ``q`` with ``q * den == num``.

    Plain multivariate division by a single divisor in graded lex order.  If
    ``den`` divides ``num`` every leading term of the running remainder is
    divisible by the leading term of ``den``, so the first failure proves
    non-divisibility and :class:`NotDivisible` is raised with that term.
    """
    num._check(den)
    if den.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if num.is_zero():
        return num
    # Every term met during the division has total degree <= deg(num), so
    # monomials pack into base-B integers (degree digit first) that compare
    # like graded lex and add like exponent vectors.
    base = max(degree(num), degree(den)) + 1
    n = num.ctx.size

    def encode(e):
        code = sum(e)
        for x in e:
            code = code * base + x
        return code

    def decode(code):
        out = [0] * n
        for i in range(n - 1, -1, -1):
            code, out[i] = divmod(code, base)
        return tuple(out)

    lt, lc = den.leading_term()
    lt_code = encode(lt)
    rest = [(encode(e), c) for e, c in den._terms.items() if e != lt]
    rem = {encode(e): c for e, c in num._terms.items()}
    heap = [-code for code in rem]
    heapq.heapify(heap)
    quot: dict[Monomial, int] = {}
    while heap:
        key = -heapq.heappop(heap)
        c = rem.pop(key, None)
        if c is None:
            continue
        exps = decode(key)
        qe = tuple(a - b for a, b in zip(exps, lt))
        if any(x < 0 for x in qe) or c % lc:
            raise NotDivisible(f"remainder term {c}*x^{exps} not divisible by leading term {lc}*x^{lt}", (exps, c))
        qc = c // lc
        quot[qe] = qc
        q_code = key - lt_code
        for e_code, dc in rest:
            k2 = q_code + e_code
            old = rem.get(k2)
            if old is None:
                rem[k2] = -qc * dc
                heapq.heappush(heap, -k2)
            else:
                v = old - qc * dc
                if v:
                    rem[k2] = v
                else:
                    del rem[k2]
    return Polynomial._raw(num.ctx, quot)


def divide_by_difference(p: Polynomial, i: int, j: int) -> Polynomial:
    """Exact quotient of ``p`` by ``x_i - x_j`` (flat indices, 1-based, i != j).

    Synthetic division in ``x_i``: writing ``p = sum_t x_i^t C_t``, the
    quotient coefficients satisfy ``Q_{t-1} = C_t + x_j Q_t`` and the
    remainder ``C_0 + x_j Q_0`` must vanish.
    """
    n = p.ctx.size
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise IndexOutOfRange(f"bad variable pair ({i}, {j}) for {n} variables")
    a, b = i - 1, j - 1
    by_power: dict[int, dict[Monomial, int]] = {}
    for e, c in p._terms.items():
        by_power.setdefault(e[a], {})[e[:a] + (0,) + e[a + 1 :]] = c
    if not by_power:
        return p
    quot: dict[Monomial, int] = {}
    carry: dict[Monomial, int] = {}  # x_j * Q_t, to be added to C_t
    for t in range(max(by_power), -1, -1):
        coeff = dict(by_power.get(t, {}))
        for e, c in carry.items():
            v = coeff.get(e, 0) + c
            if v:
                coeff[e] = v
            else:
                coeff.pop(e, None)
        if t == 0:
            if coeff:
                e, c = next(iter(coeff.items()))
                raise NotDivisible(f"nonzero remainder {c}*x^{e} dividing by x{i} - x{j}", (e, c))
            break
        # coeff is now Q_{t-1}
        carry = {}
        for e, c in coeff.items():
            quot[e[:a] + (t - 1,) + e[a + 1 :]] = c
            carry[e[:b] + (e[b] + 1,) + e[b + 1 :]] = c
    return Polynomial._raw(p.ctx, quot)


def _square(mat: Sequence[Sequence[Polynomial]]) -> tuple[int, Context]:
    n = len(mat)
    if n == 0:
        raise NonSquareMatrix("empty matrix")
    for row in mat:
        if len(row) != n:
            raise NonSquareMatrix(f"row of length {len(row)} in a {n}-row matrix")
    ctx = _check_same(p for row in mat for p in row)
    return n, ctx


def determinant(mat: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Laplace expansion along rows, memoising minors by their column set."""
    n, ctx = _square(mat)
    memo: dict[int, Polynomial] = {}

    def minor(row: int, mask: int) -> Polynomial:
        # rows row..n-1 against the columns whose bits are set in mask
        if row == n - 1:
            return mat[row][mask.bit_length() - 1]
        if mask in memo:
            return memo[mask]
        acc: dict[Monomial, int] = {}
        pos = 0
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            entry = mat[row][j]
            if entry:
                sub = minor(row + 1, mask ^ bit)
                if sub:
                    prod = entry * sub
                    sign = -1 if pos & 1 else 1
                    for e, c in prod._terms.items():
                        v = acc.get(e, 0) + sign * c
                        if v:
                            acc[e] = v
                        else:
                            del acc[e]
            pos += 1
        result = Polynomial._raw(ctx, acc)
        memo[mask] = result
        return result

    return minor(0, (1 << n) - 1)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``0..n-1`` via cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant_by_permutations(mat: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Leibniz formula; the independent reference for :func:`determinant`."""
    n, ctx = _square(mat)
    total = Polynomial.zero(ctx)
    for perm in permutations(range(n)):
        term = Polynomial.constant(ctx, permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * mat[i][j]
            if not term:
                break
        if term:
            total = total + term
    return total


def substitute_zero(p: Polynomial, variables: Iterable[int]) -> Polynomial:
    """Set the variables at the given flat indices to zero."""
    idx = set(variables)
    for i in idx:
        if not 1 <= i <= p.ctx.size:
            raise IndexOutOfRange(f"flat index {i} outside [1,{p.ctx.size}]")
    zero_pos = [i - 1 for i in idx]
    return Polynomial._raw(
        p.ctx, {e: c for e, c in p._terms.items() if not any(e[i] for i in zero_pos)}
    )


def _check_permutation(sigma: Sequence[int], n: int):
    if len(sigma) != n or sorted(sigma) != list(range(1, n + 1)):
        raise InvalidPermutation(f"{list(sigma)} is not a permutation of 1..{n}")


def apply_permutation(p: Polynomial, sigma: Sequence[int]) -> Polynomial:
    """Act by ``x_i -> x_sigma(i)``; ``sigma[i-1]`` is the image of ``i``."""
    n = p.ctx.size
    _check_permutation(sigma, n)
    inv = [0] * n
    for i, s in enumerate(sigma):
        inv[s - 1] = i
    out = {}
    for e, c in p._terms.items():
        out[tuple(e[inv[j]] for j in range(n))] = c
    return Polynomial._raw(p.ctx, out)


def is_symmetric(p: Polynomial) -> bool:
    """Invariance under every adjacent transposition of the universe."""
    terms = p._terms
    n = p.ctx.size
    for i in range(n - 1):
        for e, c in terms.items():
            if e[i] == e[i + 1]:
                continue
            swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
            if terms.get(swapped) != c:
                return False
    return True


def degree(p: Polynomial) -> int:
    """Maximum total degree; ``-1`` for the zero polynomial."""
    return max((sum(e) for e in p._terms), default=-1)


def is_homogeneous(p: Polynomial, r: int | None = None) -> bool:
    degs = {sum(e) for e in p._terms}
    if not degs:
        return True
    if len(degs) > 1:
        return False
    return r is None or degs == {r}


def homogeneous_component(p: Polynomial, r: int) -> Polynomial:
    return Polynomial._raw(p.ctx, {e: c for e, c in p._terms.items() if sum(e) == r})
