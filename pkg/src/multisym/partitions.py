"""Partitions, multi-partitions and the staircase exponent assignment.

A multi-partition of a context is stored flat: one nonnegative value per
variable, in flat-index order.  Level ``d`` is the slice holding the
depth-``d`` variables, ``m * n**d`` values long.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from collections.abc import Iterator, Sequence

from .errors import InvalidMultiPartition, LengthExceedsUniverse, MultisymError, ShapeMismatch
from .indexing import Context, Label, flat_index, q

__all__ = [
    "Partition",
    "MultiPartition",
    "Staircase",
    "validate_multipartition",
    "require_valid",
    "staircase",
    "staircase_closed_form",
    "shift_by_staircase",
    "unshift",
    "count_partitions_at_most",
    "partitions_at_most",
    "enumerate_multipartitions",
    "parse_levels",
    "MultiPartitionParseError",
]


class MultiPartitionParseError(MultisymError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing and nonnegative")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)


def _level_sizes(ctx: Context) -> list[int]:
    return [ctx.m * ctx.n**d for d in range(ctx.k + 1)]


@dataclass(frozen=True)
class MultiPartition:
    """Exponent assignment for a context, stored in flat-index order.

    No ordering is enforced at construction; use
    :func:`validate_multipartition` or :func:`require_valid`.
    """

    ctx: Context
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != self.ctx.size:
            raise ShapeMismatch(f"{len(values)} values for a universe of {self.ctx.size}")
        if any(v < 0 for v in values):
            raise ShapeMismatch("multi-partition entries must be nonnegative")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_flat(cls, ctx: Context, values: Sequence[int]) -> MultiPartition:
        """Pad ``values`` with zeros up to the universe size."""
        values = list(values)
        while len(values) > ctx.size and values[-1] == 0:
            values.pop()
        if len(values) > ctx.size:
            raise LengthExceedsUniverse(f"{len(values)} nonzero-terminated entries exceed universe size {ctx.size}")
        return cls(ctx, tuple(values) + (0,) * (ctx.size - len(values)))

    @classmethod
    def from_levels(cls, ctx: Context, levels: Sequence[Sequence[int]]) -> MultiPartition:
        """Build from per-level arrays; short levels and missing levels are zero-filled."""
        sizes = _level_sizes(ctx)
        if len(levels) > len(sizes):
            raise ShapeMismatch(f"{len(levels)} levels given, context has {len(sizes)}")
        flat: list[int] = []
        for d, size in enumerate(sizes):
            level = list(levels[d]) if d < len(levels) else []
            if len(level) > size:
                raise ShapeMismatch(f"level {d} has {len(level)} entries, expected at most {size}")
            flat.extend(level + [0] * (size - len(level)))
        return cls(ctx, tuple(flat))

    @classmethod
    def zero(cls, ctx: Context) -> MultiPartition:
        return cls(ctx, (0,) * ctx.size)

    @property
    def levels(self) -> list[tuple[int, ...]]:
        out, start = [], 0
        for size in _level_sizes(self.ctx):
            out.append(self.values[start : start + size])
            start += size
        return out

    def __getitem__(self, label: Label) -> int:
        return self.values[flat_index(self.ctx, label) - 1]

    @property
    def weight(self) -> int:
        return sum(self.values)

    @property
    def length(self) -> int:
        return sum(1 for v in self.values if v)

    def to_text(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, lev)) + "]" for lev in self.levels) + "]"

    def to_json(self) -> str:
        return json.dumps([list(lev) for lev in self.levels])

    def __str__(self):
        return self.to_text()


_LEVELS_RE = re.compile(r"^\s*\[\s*(\[\s*(\d+\s*(,\s*\d+\s*)*)?\]\s*(,\s*\[\s*(\d+\s*(,\s*\d+\s*)*)?\]\s*)*)?\]\s*$")


def parse_levels(text: str) -> list[list[int]]:
    """Parse the nested text form ``[[3],[2,1]]``."""
    if not _LEVELS_RE.match(text):
        raise MultiPartitionParseError(f"cannot parse multi-partition {text!r}")
    return [list(map(int, lev)) for lev in json.loads(text)]


def first_violation(values: Sequence[int], strict: bool = False) -> int | None:
    """1-based position of the first entry breaking the chain, else ``None``."""
    for i in range(1, len(values)):
        a, b = values[i - 1], values[i]
        if b > a or (strict and b and a == b):
            return i + 1
    return None


def validate_multipartition(mp: MultiPartition, strict: bool = False) -> bool:
    """True iff the flat reading is weakly decreasing (strict on the nonzero prefix)."""
    return first_violation(mp.values, strict) is None


def require_valid(mp: MultiPartition, strict: bool = False) -> MultiPartition:
    pos = first_violation(mp.values, strict)
    if pos is not None:
        label = mp.ctx.labels[pos - 1]
        prev = mp.ctx.labels[pos - 2]
        rel = ">=" if strict else ">"
        raise InvalidMultiPartition(
            f"chain inequality fails at flat position {pos} ({label}): "
            f"{mp.values[pos - 1]} {rel} {mp.values[pos - 2]} at {prev}",
            pos,
        )
    return mp


@dataclass(frozen=True)
class Staircase:
    ctx: Context
    values: tuple[int, ...]

    def as_multipartition(self) -> MultiPartition:
        return MultiPartition(self.ctx, self.values)


def staircase(ctx: Context) -> Staircase:
    """Exponent ``m*q_k - i`` on the variable with flat index ``i``."""
    n = ctx.size
    return Staircase(ctx, tuple(n - i for i in range(1, n + 1)))


def staircase_closed_form(ctx: Context, label: Label) -> int:
    """Per-level closed form of the staircase value, written without flat indices."""
    m, n, k = ctx.m, ctx.n, ctx.k
    d, p, mu = label.depth, label.p, label.word
    if d == 0:
        return m * q(n, k) - p
    value = n**d * (m * q(n, k - d) - (p - 1))
    for l in range(1, d):
        value -= (mu[l - 1] - 1) * n ** (d - l)
    return value - mu[d - 1]


def shift_by_staircase(ell: MultiPartition) -> MultiPartition:
    """lambda = ell + staircase, entrywise in flat order."""
    require_valid(ell)
    delta = staircase(ell.ctx).values
    return MultiPartition(ell.ctx, tuple(a + b for a, b in zip(ell.values, delta)))


def unshift(lam: MultiPartition) -> MultiPartition:
    delta = staircase(lam.ctx).values
    diff = tuple(a - b for a, b in zip(lam.values, delta))
    if any(v < 0 for v in diff):
        raise InvalidMultiPartition("entries fall below the staircase")
    return MultiPartition(lam.ctx, diff)


@lru_cache(maxsize=None)
def count_partitions_at_most(r: int, parts: int) -> int:
    """Number of partitions of ``r`` into at most ``parts`` parts."""
    if r < 0 or parts < 0:
        raise ValueError("r and parts must be nonnegative")
    if r == 0:
        return 1
    if parts == 0:
        return 0
    # either fewer than `parts` parts, or subtract 1 from each of exactly `parts` parts
    return count_partitions_at_most(r, parts - 1) + (count_partitions_at_most(r - parts, parts) if r >= parts else 0)


def partitions_at_most(r: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``r`` with at most ``parts`` parts, reverse-lex order."""
    if largest is None:
        largest = r
    if r == 0:
        yield ()
        return
    if parts == 0:
        return
    for first in range(min(r, largest), 0, -1):
        for rest in partitions_at_most(r - first, parts - 1, first):
            yield (first,) + rest


def enumerate_multipartitions(ctx: Context, r: int) -> list[MultiPartition]:
    return [MultiPartition.from_flat(ctx, lam) for lam in partitions_at_most(r, ctx.size)]
