"""Partition arithmetic: containment, transposes, duals, and column statistics.

Partitions are canonical tuples of weakly decreasing positive integers; the
empty partition is ``()``.  Two partitions differing by trailing zeros are the
same object after canonicalization, so ``==`` and hashing are structural.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]

EMPTY: Partition = ()


class Box(NamedTuple):
    """An ``rows x cols`` rectangle; indexes Schubert classes of Gr(rows, rows+cols)."""

    rows: int
    cols: int

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def rectangle(self) -> Partition:
        """The full-box partition (cols repeated rows times)."""
        return (self.cols,) * self.rows if self.rows and self.cols else EMPTY

    def transpose(self) -> "Box":
        return Box(self.cols, self.rows)


class ColumnCondition(Enum):
    HOLDS_STRICTLY_BELOW = "holds_strictly_below"
    HOLDS_WITH_EQUALITY = "holds_with_equality"
    FAILS = "fails"


def partition(parts: Iterable[int]) -> Partition:
    """Canonical partition from an iterable; validates and strips trailing zeros.

    Raises ValueError on increasing sequences or negative parts.
    """
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing: {list(p)}")
    if p and p[-1] < 0:
        raise ValueError(f"parts must be nonnegative: {list(p)}")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def weight(lam: Partition) -> int:
    """Total number of boxes."""
    return sum(lam)


def num_rows(lam: Partition) -> int:
    """Number of nonzero rows (the height of the first column)."""
    return len(lam)


def part(lam: Partition, i: int) -> int:
    """Row length with zero padding; ``i`` is 1-based."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(outer: Partition, inner: Partition) -> bool:
    """Diagram containment inner <= outer, rowwise."""
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def fits_box(lam: Partition, box: Box) -> bool:
    return len(lam) <= box.rows and (not lam or lam[0] <= box.cols)


def transpose(lam: Partition) -> Partition:
    """Conjugate partition: column lengths become row lengths."""
    if not lam:
        return EMPTY
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def dual_in_box(lam: Partition, box: Box) -> Partition:
    """Complement of the diagram in the box, read bottom to top."""
    if not fits_box(lam, box):
        raise ValueError(f"{list(lam)} does not fit in a {box.rows}x{box.cols} box")
    dual = tuple(box.cols - part(lam, box.rows + 1 - i) for i in range(1, box.rows + 1))
    return partition(dual)


def star_dual(nu: Partition, r: int) -> Partition:
    """Complement of ``nu`` in the (r+1) x nu_1 rectangle, read bottom to top.

    The star dual of the empty partition is empty (the zero-width rectangle
    degenerates), so rank factors with an empty insertion collapse cleanly.
    """
    if not nu:
        return EMPTY
    if len(nu) > r + 1:
        raise ValueError(f"{list(nu)} has more than {r + 1} rows")
    width = nu[0]
    dual = tuple(width - part(nu, r + 2 - i) for i in range(1, r + 2))
    return partition(dual)


def split_first_column(lam: Partition) -> tuple[Partition, Partition, Partition]:
    """Split off the first column.

    Returns ``(alpha, beta, alpha_bar)`` where ``alpha_bar`` is the full first
    column ``(1^#lam)``, ``alpha`` is the column minus one box ``(1^(#lam-1))``,
    and ``beta`` is the partition with its first column removed.
    """
    h = len(lam)
    alpha_bar = (1,) * h
    alpha = (1,) * (h - 1) if h else EMPTY
    beta = partition(tuple(x - 1 for x in lam if x > 1))
    return alpha, beta, alpha_bar


def column_condition(lams: tuple[Partition, ...], box: Box) -> ColumnCondition:
    """Classify a tuple against the critical-weight and first-column bounds."""
    r, l = box.rows, box.cols
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        return ColumnCondition.FAILS
    heights = sum(num_rows(lam) for lam in lams)
    if heights < 2 * (r + 1):
        return ColumnCondition.HOLDS_STRICTLY_BELOW
    if heights == 2 * (r + 1):
        return ColumnCondition.HOLDS_WITH_EQUALITY
    return ColumnCondition.FAILS


@lru_cache(maxsize=None)
def partitions_in_box(rows: int, cols: int) -> tuple[Partition, ...]:
    """All partitions fitting in a rows x cols rectangle, in a stable order."""
    result: list[Partition] = []

    def build(prefix: list[int], maximum: int) -> None:
        result.append(tuple(prefix))
        if len(prefix) < rows:
            for x in range(maximum, 0, -1):
                prefix.append(x)
                build(prefix, x)
                prefix.pop()

    build([], cols)
    result.sort(key=lambda p: (sum(p), p))
    return tuple(result)


@lru_cache(maxsize=None)
def partitions_of_weight_in_box(w: int, rows: int, cols: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_in_box(rows, cols) if sum(p) == w)


def iter_partitions_of_weight(w: int, max_rows: int | None = None,
                              max_cols: int | None = None) -> Iterator[Partition]:
    """All partitions of ``w``, optionally bounded, largest part first."""
    rows = max_rows if max_rows is not None else w
    cols = max_cols if max_cols is not None else w

    def build(remaining: int, maximum: int, depth: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        if depth == rows:
            return
        top = min(maximum, remaining)
        for x in range(top, 0, -1):
            prefix.append(x)
            yield from build(remaining - x, x, depth + 1, prefix)
            prefix.pop()

    yield from build(w, cols, 0, [])


def parse_partition(text: str) -> Partition:
    """Parse the bracket syntax, e.g. ``[4,4,2,1]``; ``[]`` is empty."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected bracketed partition, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return EMPTY
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
    return partition(parts)


def format_partition(lam: Partition) -> str:
    return "[" + ",".join(str(x) for x in lam) + "]"


def parse_partition_list(text: str) -> tuple[Partition, ...]:
    """Parse a semicolon-separated list of bracketed partitions."""
    s = text.strip()
    if not s:
        return ()
    return tuple(parse_partition(tok) for tok in s.split(";"))


def format_partition_list(lams: Iterable[Partition]) -> str:
    return ";".join(format_partition(lam) for lam in lams)


def canonical_tuple(lams: Iterable[Partition]) -> tuple[Partition, ...]:
    """Sort a tuple of partitions descending; key form for symmetric quantities."""
    return tuple(sorted(lams, reverse=True))
