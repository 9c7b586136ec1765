"""Gromov-Witten divisor degrees and F-curve pairings from Grassmannian geometry.

Degree-1 n-pointed invariants are computed classically on the two-step flag
variety Fl(r-1, r+1; r+l): each Schubert condition becomes the locus of lines
meeting it, and the invariant is an honest intersection number there.  The
4-point invariants are the divisor degrees on the 4-pointed moduli space, and
pairings with F-curves of the n-pointed space expand over 4-tuples of node
partitions weighted by Grassmannian intersection numbers.
"""

from __future__ import annotations

from functools import lru_cache

from . import cache as _cache
from .flags import FlagShape, flag_intersection, level_d_perm
from .moduli import FCurve
from .partitions import (
    Box,
    Partition,
    canonical_tuple,
    dual_in_box,
    fits_box,
    format_partition_list,
    split_first_column,
    weight,
)
from .schur import grassmannian_intersection, multiply_schur


def _check_in_box(lams: tuple[Partition, ...], box: Box) -> None:
    for lam in lams:
        if not fits_box(lam, box):
            raise ValueError(
                f"{list(lam)} does not fit in a {box.rows}x{box.cols} box")


def gw_invariant_d1(lams: tuple[Partition, ...], box: Box) -> int:
    """n-pointed degree-1 Gromov-Witten invariant of Gr(r, r+l).

    Requires the dimension condition sum|lam| - r - l - rl = n - 3.  Inserting
    the fundamental class (an empty partition) makes the two-step integrand
    miss top degree, so such invariants vanish, as they must.
    """
    _check_in_box(lams, box)
    r, l = box.rows, box.cols
    n = len(lams)
    if sum(weight(lam) for lam in lams) - r - l - r * l != n - 3:
        raise ValueError("dimension condition fails for a degree-1 invariant")
    m = r + l
    classes = tuple(level_d_perm(lam, r, m, 1) for lam in lams)
    return flag_intersection(classes, FlagShape(r - 1, r + 1, m))


def _gw_deg4_key(lams: tuple[Partition, ...], box: Box) -> str:
    return f"{box.rows}x{box.cols}|" + format_partition_list(canonical_tuple(lams))


@lru_cache(maxsize=None)
def _gw_deg4_cached(lams: tuple[Partition, ...], box: Box) -> int:
    return gw_invariant_d1(lams, box)


@_cache.disk_memo("gw_deg4", _gw_deg4_key)
def gw_divisor_degree_m04(lams: tuple[Partition, ...], box: Box) -> int:
    """Degree of the 4-pointed Gromov-Witten divisor (a number, the space is P^1)."""
    if len(lams) != 4:
        raise ValueError("the 4-pointed degree needs exactly 4 partitions")
    r, l = box.rows, box.cols
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("critical level condition fails")
    return _gw_deg4_cached(canonical_tuple(lams), box)


def gw_column_factorization(lams: tuple[Partition, ...],
                            box: Box) -> tuple[int, int]:
    """Both sides of the first-column factorization of the 4-point degree.

    Left: the divisor degree.  Right: the alpha-columns paired on Gr(r-1, r+1)
    times the stripped shapes paired on Gr(r+1, r+l).  Requires the column
    condition; under strict inequality both sides are zero.
    """
    r, l = box.rows, box.cols
    _check_in_box(lams, box)
    if len(lams) != 4 or sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("need a critical 4-tuple")
    if sum(len(lam) for lam in lams) > 2 * (r + 1):
        raise ValueError("column condition fails")
    lhs = gw_divisor_degree_m04(lams, box)
    splits = [split_first_column(lam) for lam in lams]
    alphas = tuple(s[0] for s in splits)
    betas = tuple(s[1] for s in splits)
    rhs = (grassmannian_intersection(alphas, Box(r - 1, 2))
           * grassmannian_intersection(betas, Box(r + 1, l - 1)))
    return lhs, rhs


def _block_candidates(block_weights: tuple[Partition, ...],
                      box: Box) -> dict[Partition, int]:
    """Shapes mu in the box carried by the product over a block, with coefficients.

    The coefficient of mu is exactly the Grassmannian intersection number of
    the block's classes against the dual of mu, so the support doubles as the
    list of nonzero pairing factors.
    """
    return multiply_schur(block_weights, inside=box.rectangle)


def gw_dot_fcurve(lams: tuple[Partition, ...], box: Box, fc: FCurve) -> int:
    """Intersection of the n-pointed GW divisor with an F-curve."""
    r, l = box.rows, box.cols
    _check_in_box(lams, box)
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("critical level condition fails")
    if len(lams) != sum(len(b) for b in fc):
        raise ValueError("F-curve does not match the number of marked points")
    block_support: list[dict[Partition, int]] = []
    for block in fc:
        weights = tuple(lams[i - 1] for i in block)
        if sum(weight(w) for w in weights) > box.area:
            return 0
        block_support.append(_block_candidates(weights, box))
    total = 0

    def rec(j: int, chosen: list[Partition], factor: int) -> None:
        nonlocal total
        if j == 4:
            total += factor * gw_divisor_degree_m04(tuple(chosen), box)
            return
        for mu, coeff in block_support[j].items():
            chosen.append(mu)
            rec(j + 1, chosen, factor * coeff)
            chosen.pop()

    rec(0, [], 1)
    return total


def gw_pairing_factor(block_weights: tuple[Partition, ...], mu: Partition,
                      box: Box) -> int:
    """Degree-0 pairing of a block's classes against the box dual of mu."""
    return grassmannian_intersection(
        block_weights + (dual_in_box(mu, box),), box)


def gw_transpose_degree(lams: tuple[Partition, ...], box: Box) -> int:
    """The 4-point degree computed on the transposed Grassmannian."""
    from .partitions import transpose

    return gw_divisor_degree_m04(tuple(transpose(lam) for lam in lams),
                                 Box(box.cols, box.rows))
