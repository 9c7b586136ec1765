"""Conformal-blocks bundles for sl(r+1): ranks, 4-point degrees, F-curve pairings.

Ranks come from the cohomological dictionary: writing the total weight as
(r+1)(l+s), the rank is a classical generalized Littlewood-Richardson
coefficient for s <= 0 and a degree-s quantum coefficient on
QH*Gr(r+1, r+1+l) for s >= 0.  First Chern degrees on the 4-pointed moduli
space use the standard rank-weighted conformal-weight formula with node
corrections over the three pairings; all rational arithmetic is exact and the
degree must clear its denominator, which is asserted.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import cache as _cache
from .moduli import FCurve
from .partitions import (
    Box,
    Partition,
    canonical_tuple,
    fits_box,
    format_partition_list,
    partition,
    partitions_in_box,
    partitions_of_weight_in_box,
    split_first_column,
    star_dual,
    transpose,
    weight,
)
from .quantum import quantum_lr_coefficient
from .schur import generalized_lr


class CbBundle(NamedTuple):
    """A bundle of covacua on the n-pointed moduli space."""

    r: int
    level: int
    weights: tuple[Partition, ...]

    def rank(self) -> int:
        return cb_rank(self.weights, self.r, self.level)

    def c1_degree_m04(self) -> int:
        return cb_c1_degree_m04(self.weights, self.r, self.level)

    def dot_fcurve(self, fc: FCurve) -> int:
        return cb_dot_fcurve(self.weights, self.r, self.level, fc)


def critical_level(lams: tuple[Partition, ...], r: int) -> Fraction:
    """The level at which first Chern classes of higher levels vanish."""
    return Fraction(sum(weight(lam) for lam in lams), r + 1) - 1


def is_critical(lams: tuple[Partition, ...], r: int, l: int) -> bool:
    return critical_level(lams, r) == l


def is_above_critical(lams: tuple[Partition, ...], r: int, l: int) -> bool:
    return critical_level(lams, r) < l


def _check_weights(lams: tuple[Partition, ...], r: int, l: int) -> None:
    box = Box(r, l)
    for lam in lams:
        if not fits_box(lam, box):
            raise ValueError(
                f"{list(lam)} is not a level-{l} weight of sl({r + 1})")


def _rank_key(lams: tuple[Partition, ...], r: int, l: int) -> str:
    return f"sl{r + 1}@{l}|" + format_partition_list(canonical_tuple(lams))


@lru_cache(maxsize=None)
def _rank_cached(lams: tuple[Partition, ...], r: int, l: int) -> int:
    total = sum(weight(lam) for lam in lams)
    if total % (r + 1) != 0:
        return 0
    s = total // (r + 1) - l
    if s <= 0:
        rectangle = ((l + s),) * (r + 1) if l + s > 0 else ()
        return generalized_lr(lams, rectangle)
    return quantum_lr_coefficient(
        lams + (((l,),) * s), s, (l,) * (r + 1), r + 1, r + 1 + l)


@_cache.disk_memo("cb_rank", _rank_key)
def cb_rank(lams: tuple[Partition, ...], r: int, l: int) -> int:
    """Rank of the sl(r+1) level-l bundle with the given weights."""
    _check_weights(lams, r, l)
    return _rank_cached(canonical_tuple(lams), r, l)


def conformal_weight(lam: Partition, r: int, l: int) -> Fraction:
    """Normalized Casimir action on the simple module of lam, exact."""
    _check_weights((lam,), r, l)
    w = weight(lam)
    casimir = Fraction(sum(x * (x + r + 2 - 2 * i) for i, x in enumerate(lam, start=1)))
    casimir -= Fraction(w * w, r + 1)
    return casimir / (2 * (l + r + 1))


def dual_weight(lam: Partition, r: int) -> Partition:
    """Highest weight of the dual module.

    Pad to r+1 parts and reverse-complement under the width: the dual of the
    gl-weight (lam_1, ..., lam_{r+1}) shifted back to a partition.  This is an
    involution fixing the conformal weight, and coincides with the star dual
    on weights with at most r rows.
    """
    if len(lam) > r:
        raise ValueError(f"{list(lam)} has more than {r} rows")
    if not lam:
        return ()
    padded = lam + (0,) * (r + 1 - len(lam))
    return partition(tuple(lam[0] - padded[r - i] for i in range(r + 1)))


def _deg4_key(lams: tuple[Partition, ...], r: int, l: int) -> str:
    return f"sl{r + 1}@{l}|" + format_partition_list(canonical_tuple(lams))


@lru_cache(maxsize=None)
def _deg4_cached(lams: tuple[Partition, ...], r: int, l: int) -> int:
    rank = _rank_cached(lams, r, l)
    if rank == 0:
        return 0
    total = rank * sum(conformal_weight(lam, r, l) for lam in lams)
    a, b, c, d = lams
    for left, right in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        pair_weight = weight(left[0]) + weight(left[1])
        for mu in partitions_in_box(r, l):
            if not mu or (pair_weight + weight(mu)) % (r + 1) != 0:
                continue
            n_left = _rank_cached(canonical_tuple(left + (mu,)), r, l)
            if n_left == 0:
                continue
            n_right = _rank_cached(
                canonical_tuple(right + (dual_weight(mu, r),)), r, l)
            if n_right == 0:
                continue
            total -= conformal_weight(mu, r, l) * n_left * n_right
    if total.denominator != 1 or total < 0:
        raise AssertionError(
            f"4-point degree {total} is not a nonnegative integer; "
            f"conformal-weight normalization bug")
    return int(total)


@_cache.disk_memo("cb_deg4", _deg4_key)
def cb_c1_degree_m04(lams: tuple[Partition, ...], r: int, l: int) -> int:
    """Degree of the first Chern class on the 4-pointed moduli space."""
    if len(lams) != 4:
        raise ValueError("the 4-point degree needs exactly 4 weights")
    _check_weights(lams, r, l)
    return _deg4_cached(canonical_tuple(lams), r, l)


def cb_dot_fcurve(lams: tuple[Partition, ...], r: int, l: int, fc: FCurve) -> int:
    """Intersection of the first Chern class with an F-curve, by factorization.

    Sums over 4-tuples of node weights nu with |nu_j| equal to the weight of
    the j-th block; each summand is a 4-point degree times the ranks of the
    four side bundles with the star-dual weight inserted at the node.
    """
    _check_weights(lams, r, l)
    if not is_critical(lams, r, l):
        raise ValueError("F-curve pairing is for critical-level data")
    if len(lams) != sum(len(b) for b in fc):
        raise ValueError("F-curve does not match the number of marked points")
    block_factors: list[dict[Partition, int]] = []
    for block in fc:
        block_weights = tuple(lams[i - 1] for i in block)
        w = sum(weight(x) for x in block_weights)
        factors: dict[Partition, int] = {}
        for nu in partitions_of_weight_in_box(w, r, l):
            rk = cb_rank(block_weights + (star_dual(nu, r),), r, l)
            if rk:
                factors[nu] = rk
        if not factors:
            return 0
        block_factors.append(factors)
    total = 0

    def rec(j: int, chosen: list[Partition], factor: int) -> None:
        nonlocal total
        if j == 4:
            total += factor * cb_c1_degree_m04(tuple(chosen), r, l)
            return
        for nu, rk in block_factors[j].items():
            chosen.append(nu)
            rec(j + 1, chosen, factor * rk)
            chosen.pop()

    rec(0, [], 1)
    return total


def newwitten_rank(lams: tuple[Partition, ...], r: int, l: int) -> int:
    """Critical-level rank as one classical coefficient on a hooked rectangle."""
    _check_weights(lams, r, l)
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("total weight must be (r+1)(l+1)")
    if sum(len(lam) for lam in lams) != 2 * (r + 1):
        raise ValueError("first-column heights must sum to 2(r+1)")
    return generalized_lr(lams, (l,) * (r + 1) + (1,) * (r + 1))


def critical_identity(lams: tuple[Partition, ...], r: int,
                      l: int) -> tuple[int, int]:
    """4-point degree vs. its first-column factorization on the bundle side.

    Right side: level-1 degree of the first columns times the rank of the
    stripped shapes at level l-1.
    """
    _check_weights(lams, r, l)
    if len(lams) != 4:
        raise ValueError("needs exactly 4 weights")
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("total weight must be (r+1)(l+1)")
    if sum(len(lam) for lam in lams) != 2 * (r + 1):
        raise ValueError("first-column heights must sum to 2(r+1)")
    lhs = cb_c1_degree_m04(lams, r, l)
    splits = [split_first_column(lam) for lam in lams]
    alpha_bars = tuple(s[2] for s in splits)
    betas = tuple(s[1] for s in splits)
    rhs = cb_c1_degree_m04(alpha_bars, r, 1) * cb_rank(betas, r, l - 1)
    return lhs, rhs


def transpose_symmetry_check(lams: tuple[Partition, ...], r: int,
                             l: int) -> tuple[int, int]:
    """4-point degree vs. the degree of the transposed data at the swapped rank."""
    _check_weights(lams, r, l)
    if not is_critical(lams, r, l):
        raise ValueError("transpose symmetry is for critical-level data")
    lhs = cb_c1_degree_m04(lams, r, l)
    rhs = cb_c1_degree_m04(tuple(transpose(lam) for lam in lams), l, r)
    return lhs, rhs
