"""F-curve combinatorics on the moduli space of stable n-pointed rational curves.

An F-curve is an unordered partition of the marked points {1..n} into four
nonempty blocks, stored canonically: each block ascending, blocks ordered by
their minimum.  Divisors are represented numerically by their intersection
vector against all F-curves, which span the space of curve classes, so vector
equality is the artifact's notion of numerical equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

FCurve = tuple[tuple[int, ...], ...]


def fcurve(blocks: Iterable[Iterable[int]], n: int | None = None) -> FCurve:
    """Canonical F-curve from four blocks; validates the set partition."""
    bs = [tuple(sorted(set(b))) for b in blocks]
    if len(bs) != 4 or any(not b for b in bs):
        raise ValueError("an F-curve needs exactly 4 nonempty blocks")
    flat = [x for b in bs for x in b]
    support = set(flat)
    if len(flat) != len(support):
        raise ValueError("blocks must be disjoint")
    size = n if n is not None else max(support)
    if support != set(range(1, size + 1)):
        raise ValueError(f"blocks must partition 1..{size}")
    bs.sort(key=lambda b: b[0])
    return tuple(bs)


@lru_cache(maxsize=None)
def enumerate_fcurves(n: int) -> tuple[FCurve, ...]:
    """All F-curves of the n-pointed space, in a stable canonical order."""
    if n < 4:
        raise ValueError("need at least 4 marked points")
    result: list[FCurve] = []

    def assign(i: int, blocks: list[list[int]]) -> None:
        if i > n:
            if len(blocks) == 4:
                result.append(tuple(tuple(b) for b in blocks))
            return
        if len(blocks) + (n - i + 1) < 4:
            return
        for b in blocks:
            b.append(i)
            assign(i + 1, blocks)
            b.pop()
        if len(blocks) < 4:
            blocks.append([i])
            assign(i + 1, blocks)
            blocks.pop()

    assign(1, [])
    return tuple(result)


def parse_fcurve(text: str, n: int | None = None) -> FCurve:
    """Parse the block syntax ``{1,2|3|4|5,6}``."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"expected {{..|..|..|..}}, got {text!r}")
    try:
        blocks = [[int(x) for x in blk.split(",")] for blk in s[1:-1].split("|")]
    except ValueError as exc:
        raise ValueError(f"bad F-curve {text!r}") from exc
    return fcurve(blocks, n)


def format_fcurve(fc: FCurve) -> str:
    return "{" + "|".join(",".join(str(x) for x in b) for b in fc) + "}"


@dataclass(frozen=True)
class DivisorVector:
    """Numerical class of a divisor: its degree on every F-curve."""

    n: int
    values: tuple[tuple[FCurve, int], ...]

    def degree(self, fc: FCurve) -> int:
        return dict(self.values)[fc]

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for _, v in self.values)

    def to_json_obj(self) -> list[dict]:
        return [{"fcurve": format_fcurve(fc), "value": v} for fc, v in self.values]


def divisor_vector(eval_fn: Callable[[FCurve], int], n: int) -> DivisorVector:
    """Materialize a divisor's intersection vector over all F-curves."""
    values = tuple((fc, eval_fn(fc)) for fc in enumerate_fcurves(n))
    return DivisorVector(n, values)
