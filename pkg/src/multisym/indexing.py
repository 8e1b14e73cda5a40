"""Multi-indexed indeterminates and their flat numbering.

A context ``(m, n, k)`` owns the variables ``a[p;mu_1,...,mu_t]`` with
``1 <= p <= m``, ``0 <= t <= k`` and ``1 <= mu_i <= n``.  Every variable gets
a flat index in ``1 .. m*q(n, k)``: all depth-0 variables first, then all
depth-1 variables, and so on; inside one depth the order is lexicographic in
``(p, mu_1, ..., mu_t)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import NamedTuple

from .errors import IndexOutOfRange, InvalidContext, InvalidLabel

__all__ = [
    "Context",
    "Label",
    "CardinalityReport",
    "q",
    "flat_index",
    "label_of",
    "universe",
    "cardinalities",
    "enumerated_cardinalities",
    "parse_label",
]


def q(n: int, k: int) -> int:
    """Number of index words of depth at most ``k`` over ``{1..n}``."""
    if n < 1 or k < 0:
        raise InvalidContext(f"q needs n >= 1 and k >= 0, got n={n}, k={k}")
    if n == 1:
        return k + 1
    return (n ** (k + 1) - 1) // (n - 1)


@dataclass(frozen=True)
class Context:
    """The triple fixing a variable universe of size ``m * q(n, k)``."""

    m: int
    n: int
    k: int

    def __post_init__(self):
        for name in ("m", "n", "k"):
            if not isinstance(getattr(self, name), int) or isinstance(getattr(self, name), bool):
                raise InvalidContext(f"{name} must be an int")
        if self.m < 1 or self.n < 1 or self.k < 0:
            raise InvalidContext(f"need m >= 1, n >= 1, k >= 0; got {self}")

    @property
    def q(self) -> int:
        return q(self.n, self.k)

    @property
    def size(self) -> int:
        return self.m * q(self.n, self.k)

    @cached_property
    def labels(self) -> tuple[Label, ...]:
        return tuple(_traverse(self.m, self.n, self.k))

    @cached_property
    def _positions(self) -> dict[Label, int]:
        return {lab: i for i, lab in enumerate(self.labels, start=1)}

    def __str__(self):
        return f"({self.m},{self.n},{self.k})"


@dataclass(frozen=True)
class Label:
    """One indeterminate: owner row ``p`` and tensor index word ``word``."""

    p: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))

    @property
    def depth(self) -> int:
        return len(self.word)

    def text(self) -> str:
        if not self.word:
            return f"a[{self.p}]"
        return f"a[{self.p};{','.join(map(str, self.word))}]"

    def alias(self) -> str:
        """Short name: ``X1``, ``Y1,2``, ``Z1,2,1``."""
        if self.depth > 2:
            return self.text()
        letter = "XYZ"[self.depth]
        return letter + ",".join(map(str, (self.p,) + self.word))

    def __str__(self):
        return self.text()


_FLAT_RE = re.compile(r"^a\[(\d+)(?:;(\d+(?:,\d+)*))?\]$")
_ALIAS_RE = re.compile(r"^([XYZ])(\d+(?:,\d+)*)$")


def parse_label(text: str) -> Label:
    """Parse either ``a[p;mu...]`` or the X/Y/Z alias form."""
    text = text.strip()
    m = _FLAT_RE.match(text)
    if m:
        word = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
        return Label(int(m.group(1)), word)
    m = _ALIAS_RE.match(text)
    if m:
        nums = tuple(int(x) for x in m.group(2).split(","))
        if len(nums) != "XYZ".index(m.group(1)) + 1:
            raise InvalidLabel(f"alias {text!r} has the wrong number of indices")
        return Label(nums[0], nums[1:])
    raise InvalidLabel(f"cannot parse label {text!r}")


def _traverse(m, n, k):
    for t in range(k + 1):
        for p in range(1, m + 1):
            for word in product(range(1, n + 1), repeat=t):
                yield Label(p, word)


def _check_label(ctx: Context, label: Label):
    if not 1 <= label.p <= ctx.m:
        raise InvalidLabel(f"row {label.p} outside [1,{ctx.m}]")
    if label.depth > ctx.k:
        raise InvalidLabel(f"depth {label.depth} exceeds k={ctx.k}")
    for mu in label.word:
        if not 1 <= mu <= ctx.n:
            raise InvalidLabel(f"index {mu} outside [1,{ctx.n}]")


def flat_index(ctx: Context, label: Label) -> int:
    _check_label(ctx, label)
    t = label.depth
    if t == 0:
        return label.p
    n = ctx.n
    idx = ctx.m * q(n, t - 1) + (label.p - 1) * n**t
    for l, mu in enumerate(label.word[:-1], start=1):
        idx += (mu - 1) * n ** (t - l)
    return idx + label.word[-1]


def label_of(ctx: Context, i: int) -> Label:
    if not 1 <= i <= ctx.size:
        raise IndexOutOfRange(f"flat index {i} outside [1,{ctx.size}]")
    if i <= ctx.m:
        return Label(i)
    m, n = ctx.m, ctx.n
    t = 1
    while i > m * q(n, t):
        t += 1
    r = i - m * q(n, t - 1) - 1
    p, r = divmod(r, n**t)
    word = []
    for l in range(1, t + 1):
        mu, r = divmod(r, n ** (t - l))
        word.append(mu + 1)
    return Label(p + 1, tuple(word))


def universe(ctx: Context) -> tuple[Label, ...]:
    """All labels of ``ctx`` in flat-index order."""
    return ctx.labels


class CardinalityReport(NamedTuple):
    card_column: int
    card_row: int
    card_corner: int


def cardinalities(ctx: Context) -> CardinalityReport:
    """Closed-form sizes of the column, row and corner index sets."""
    m, n, k = ctx.m, ctx.n, ctx.k
    qk = q(n, k)
    return CardinalityReport(qk, n ** (k + 1) * m, qk + n ** (k + 1) * (m + 1))


def enumerated_cardinalities(ctx: Context) -> CardinalityReport:
    """Same three sizes, counted by building the label sets explicitly."""
    m, n, k = ctx.m, ctx.n, ctx.k
    column = {Label(m + 1, w) for t in range(k + 1) for w in product(range(1, n + 1), repeat=t)}
    row = {Label(p, w) for p in range(1, m + 1) for w in product(range(1, n + 1), repeat=k + 1)}
    corner_new = {Label(m + 1, w) for w in product(range(1, n + 1), repeat=k + 1)}
    corner = column | row | corner_new
    return CardinalityReport(len(column), len(row), len(corner))
