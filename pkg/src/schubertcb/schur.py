"""Schur-polynomial products and Littlewood-Richardson coefficients.

Products are computed by the tableau form of the Littlewood-Richardson rule:
``s_lam * s_mu`` expands over chains of horizontal strips, one per row of
``mu``, subject to the ballot condition.  Pairwise products are memoized and
n-fold products fold pairwise, so the cache is shared across the whole
artifact.  Coefficients are exact Python integers throughout.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import (
    Box,
    EMPTY,
    Partition,
    contains,
    fits_box,
    weight,
)

# Expansion of an element of the ring of symmetric functions in the Schur
# basis: nonzero integer coefficients keyed by partition.
SchurExpansion = dict[Partition, int]


def _lattice_strips(shape: Partition, size: int, prev: tuple[int, ...] | None):
    """Add ``size`` boxes to ``shape`` as a horizontal strip.

    ``prev`` holds the per-row box counts of the previous strip; the new
    strip's prefix counts may not exceed the previous strip's prefix counts
    shifted down one row (the ballot condition).  ``prev is None`` disables
    the check (first strip).  Yields (new_shape, added_counts).
    """
    nrows = len(shape) + 1
    added = [0] * nrows

    def rec(row: int, remaining: int, cum_new: int, cum_prev: int):
        # cum_prev: boxes of the previous strip in rows < row.
        if remaining == 0:
            new_shape = tuple(s + a for s, a in zip(shape + (0,), added))
            while new_shape and new_shape[-1] == 0:
                new_shape = new_shape[:-1]
            yield new_shape, tuple(added[: len(new_shape)])
            return
        if row > nrows:
            return
        old = shape[row - 1] if row <= len(shape) else 0
        above = shape[row - 2] if row >= 2 else None
        cap = remaining if above is None else max(0, above - old)
        if prev is not None:
            cap = min(cap, cum_prev - cum_new)
        prev_here = prev[row - 1] if prev is not None and row <= len(prev) else 0
        for a in range(cap, -1, -1):
            added[row - 1] = a
            yield from rec(row + 1, remaining - a, cum_new + a, cum_prev + prev_here)
        added[row - 1] = 0

    yield from rec(1, size, 0, 0)


@lru_cache(maxsize=None)
def _pairwise(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Schur expansion of s_lam * s_mu as a sorted tuple of (shape, coeff)."""
    if (weight(mu), mu) > (weight(lam), lam):
        lam, mu = mu, lam
    frontier: dict[tuple[Partition, tuple[int, ...] | None], int] = {(lam, None): 1}
    for row_size in mu:
        nxt: dict[tuple[Partition, tuple[int, ...] | None], int] = {}
        for (shape, prev), count in frontier.items():
            for new_shape, strip in _lattice_strips(shape, row_size, prev):
                key = (new_shape, strip)
                nxt[key] = nxt.get(key, 0) + count
        frontier = nxt
    result: dict[Partition, int] = {}
    for (shape, _), count in frontier.items():
        result[shape] = result.get(shape, 0) + count
    return tuple(sorted(result.items()))


def multiply_pair(lam: Partition, mu: Partition) -> SchurExpansion:
    return dict(_pairwise(lam, mu))


def multiply_schur(lams: tuple[Partition, ...],
                   inside: Partition | None = None) -> SchurExpansion:
    """Full Schur expansion of an n-fold product (no box truncation).

    The empty product is the unit ``{(): 1}``.  If ``inside`` is given, terms
    not contained in that shape are dropped after every fold; this is the
    call-site truncation used for Grassmannian computations.
    """
    expansion: SchurExpansion = {EMPTY: 1}
    for factor in sorted(lams, key=weight, reverse=True):
        nxt: SchurExpansion = {}
        for shape, coeff in expansion.items():
            for term, c in _pairwise(shape, factor):
                if inside is not None and not contains(inside, term):
                    continue
                nxt[term] = nxt.get(term, 0) + coeff * c
        expansion = nxt
    return expansion


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The pairwise Littlewood-Richardson coefficient c^nu_{lam,mu}."""
    if weight(lam) + weight(mu) != weight(nu):
        return 0
    if not (contains(nu, lam) and contains(nu, mu)):
        return 0
    for shape, coeff in _pairwise(lam, mu):
        if shape == nu:
            return coeff
    return 0


def generalized_lr(lams: tuple[Partition, ...], nu: Partition) -> int:
    """Coefficient of s_nu in the n-fold product of the s_lam."""
    if sum(weight(lam) for lam in lams) != weight(nu):
        return 0
    if any(not contains(nu, lam) for lam in lams):
        return 0
    expansion = multiply_schur(lams, inside=nu)
    return expansion.get(nu, 0)


def grassmannian_intersection(lams: tuple[Partition, ...], box: Box) -> int:
    """Integral of a product of Schubert classes over Gr(rows, rows+cols).

    Degenerate boxes (zero rows or columns) integrate to 1 exactly when every
    factor is empty, which is what ``generalized_lr`` against the empty
    rectangle returns.
    """
    for lam in lams:
        if not fits_box(lam, box):
            raise ValueError(
                f"{list(lam)} is not a Schubert class of a {box.rows}x{box.cols} box")
    return generalized_lr(lams, box.rectangle)


def schur_cache_info():
    return _pairwise.cache_info()
