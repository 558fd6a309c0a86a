"""Young diagrams: transposition, hooks, contents and run-length decomposition.

Diagrams are stored as tuples of row lengths without trailing zeros, so two
diagrams are equal exactly when they describe the same partition.  Boxes are
addressed 1-based as (row, column); tables returned by :func:`hook_lengths`
and :func:`contents` are ragged lists with the shape of the diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, groupby
from typing import Iterator

__all__ = [
    "YoungDiagram",
    "RunDecomposition",
    "EMPTY",
    "transpose",
    "area",
    "hook_lengths",
    "contents",
    "runs",
    "from_runs",
    "partitions",
    "partitions_upto",
    "partition_count",
]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse ``"4,2,1"``; the empty (or blank) string is the empty diagram."""
        text = text.strip()
        if not text:
            return EMPTY
        try:
            rows = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(rows)

    def __str__(self) -> str:
        return ",".join(map(str, self.rows))

    def __repr__(self) -> str:
        return f"YoungDiagram({self.rows})"

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def area(self) -> int:
        return sum(self.rows)

    @property
    def T(self) -> "YoungDiagram":
        return transpose(self)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.rows, start=1):
            for c in range(1, length + 1):
                yield r, c


EMPTY = YoungDiagram()


@dataclass(frozen=True)
class RunDecomposition:
    """Multiplicities of equal-width row groups (``a``, top to bottom) and of
    equal-height column groups (``b``, left to right)."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))

    @property
    def k(self) -> int:
        return len(self.a)

    @property
    def A(self) -> tuple[int, ...]:
        return tuple(accumulate(self.a))

    @property
    def B(self) -> tuple[int, ...]:
        return tuple(accumulate(self.b))

    def swapped(self) -> "RunDecomposition":
        return RunDecomposition(self.b, self.a)


@lru_cache(maxsize=4096)
def transpose(y: YoungDiagram) -> YoungDiagram:
    if not y.rows:
        return EMPTY
    return YoungDiagram(tuple(sum(1 for r in y.rows if r >= j) for j in range(1, y.rows[0] + 1)))


def area(y: YoungDiagram) -> int:
    return sum(y.rows)


def hook_lengths(y: YoungDiagram) -> list[list[int]]:
    cols = transpose(y).rows
    return [
        [(length - c) + (cols[c - 1] - r) + 1 for c in range(1, length + 1)]
        for r, length in enumerate(y.rows, start=1)
    ]


def contents(y: YoungDiagram) -> list[list[int]]:
    return [[c - r for c in range(1, length + 1)] for r, length in enumerate(y.rows, start=1)]


def _multiplicities(seq) -> tuple[int, ...]:
    return tuple(sum(1 for _ in grp) for _, grp in groupby(seq))


def runs(y: YoungDiagram) -> RunDecomposition:
    if not y.rows:
        raise ValueError("run decomposition of the empty diagram is undefined")
    return RunDecomposition(_multiplicities(y.rows), _multiplicities(transpose(y).rows))


def from_runs(r: RunDecomposition) -> YoungDiagram:
    if len(r.a) != len(r.b):
        raise ValueError(f"run counts differ: {len(r.a)} row runs, {len(r.b)} column runs")
    if not r.a:
        raise ValueError("at least one run is required")
    if any(x <= 0 for x in r.a + r.b):
        raise ValueError("run multiplicities must be positive")
    # row group i (top-down) is as wide as the first k+1-i column groups together
    widths = reversed(r.B)
    rows: list[int] = []
    for mult, width in zip(r.a, widths):
        rows.extend([width] * mult)
    return YoungDiagram(tuple(rows))


def partitions(n: int, max_part: int | None = None) -> Iterator[YoungDiagram]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def gen(n, m):
        if n == 0:
            yield ()
            return
        for first in range(min(n, m), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    for p in gen(n, max_part):
        yield YoungDiagram(p)


def partitions_upto(max_area: int) -> list[YoungDiagram]:
    """Every diagram of area <= ``max_area``, sorted lexicographically by rows."""
    return sorted(p for n in range(max_area + 1) for p in partitions(n))


@lru_cache(maxsize=None)
def partition_count(n: int, max_part: int | None = None) -> int:
    """Number of partitions of ``n`` with all parts <= ``max_part``."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    if n < 0 or max_part <= 0:
        return 0
    max_part = min(max_part, n)
    return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1)
