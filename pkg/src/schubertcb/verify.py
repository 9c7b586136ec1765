"""Equality sweeps, factorization audits, and nonvanishing certificates.

The sweeps enumerate every tuple of Schubert classes at the critical weight
and compare the Gromov-Witten divisor degree against the first Chern degree
of the matching bundle, on the 4-pointed space directly and against every
F-curve for more marked points.  Mismatches are collected, never fatal: a
conjecture harness must report the complete counterexample set.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .cb import cb_c1_degree_m04, cb_dot_fcurve, cb_rank
from .gw import gw_divisor_degree_m04, gw_dot_fcurve, gw_pairing_factor
from .moduli import FCurve, enumerate_fcurves, format_fcurve
from .partitions import (
    Box,
    Partition,
    format_partition_list,
    num_rows,
    partitions_in_box,
    split_first_column,
    star_dual,
    weight,
)
from .schur import multiply_schur


@dataclass(frozen=True)
class Mismatch:
    lams: tuple[Partition, ...]
    gw: int
    cb: int
    fcurve: FCurve | None = None
    kind: str = "degree"

    def to_json_obj(self) -> dict:
        obj = {"kind": self.kind, "lams": format_partition_list(self.lams),
               "gw": self.gw, "cb": self.cb}
        if self.fcurve is not None:
            obj["fcurve"] = format_fcurve(self.fcurve)
        return obj


@dataclass(frozen=True)
class SweepReport:
    box: Box
    n: int
    tuples_checked: int
    mismatches: tuple[Mismatch, ...]
    elapsed_ms: int
    # (weights, fcurve or None, gw degree, cb degree) when collected
    rows: tuple[tuple[tuple[Partition, ...], FCurve | None, int, int], ...] = \
        field(default=())

    @property
    def verified(self) -> bool:
        return not self.mismatches

    def to_json_obj(self) -> dict:
        return {
            "box": {"rows": self.box.rows, "cols": self.box.cols},
            "n": self.n,
            "tuples_checked": self.tuples_checked,
            "mismatches": [m.to_json_obj() for m in self.mismatches],
            "elapsed_ms": self.elapsed_ms,
        }


def critical_tuples(box: Box, n: int,
                    up_to_symmetry: bool = True) -> tuple[tuple[Partition, ...], ...]:
    """All n-tuples in the box at total weight (r+1)(l+1), canonically ordered.

    With the symmetry flag, one representative per multiset (degrees are
    symmetric in the weights); without it, the full ordered enumeration.
    """
    target = (box.rows + 1) * (box.cols + 1)
    shapes = partitions_in_box(box.rows, box.cols)
    if not up_to_symmetry:
        return tuple(t for t in product(shapes, repeat=n)
                     if sum(weight(x) for x in t) == target)
    shapes_desc = tuple(sorted(shapes, key=lambda p: (weight(p), p), reverse=True))
    result: list[tuple[Partition, ...]] = []

    def rec(start: int, left: int, acc: list[Partition], budget: int) -> None:
        if left == 0:
            if budget == 0:
                result.append(tuple(acc))
            return
        for idx in range(start, len(shapes_desc)):
            w = weight(shapes_desc[idx])
            if w * left < budget:
                break  # weights are nonincreasing; the target is out of reach
            if w > budget:
                continue
            acc.append(shapes_desc[idx])
            rec(idx, left - 1, acc, budget - w)
            acc.pop()

    rec(0, n, [], target)
    return tuple(result)


def _n4_row(args) -> tuple[tuple[Partition, ...], int, int]:
    lams, box = args
    return lams, gw_divisor_degree_m04(lams, box), cb_c1_degree_m04(
        lams, box.rows, box.cols)


def _n5_row(args):
    lams, box = args
    rows = []
    for fc in enumerate_fcurves(len(lams)):
        rows.append((fc, gw_dot_fcurve(lams, box, fc),
                     cb_dot_fcurve(lams, box.rows, box.cols, fc)))
    return lams, tuple(rows)


def _make_worker_cache_readonly():
    # forked workers must not append to the shared cache file; the parent
    # is the single writer
    from . import cache as _cache

    active = _cache.active()
    if active is not None:
        active.readonly = True


def _run(worker, items, jobs: int):
    if jobs <= 1:
        return [worker(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs,
                             initializer=_make_worker_cache_readonly) as pool:
        return list(pool.map(worker, items, chunksize=4))


def sweep_conjecture(box: Box, n: int = 4, up_to_symmetry: bool = True,
                     jobs: int = 1, collect_rows: bool = False) -> SweepReport:
    """Compare GW and CB degrees over every critical tuple in the box."""
    if n not in (4, 5):
        raise ValueError("sweeps run at 4 or 5 marked points")
    start = time.monotonic()
    tuples = critical_tuples(box, n, up_to_symmetry)
    mismatches: list[Mismatch] = []
    rows: list[tuple[tuple[Partition, ...], FCurve | None, int, int]] = []
    items = [(lams, box) for lams in tuples]
    if n == 4:
        for lams, gw, cb in _run(_n4_row, items, jobs):
            if collect_rows:
                rows.append((lams, None, gw, cb))
            if gw != cb:
                mismatches.append(Mismatch(lams, gw, cb))
    else:
        for lams, per_curve in _run(_n5_row, items, jobs):
            for fc, gw, cb in per_curve:
                if collect_rows:
                    rows.append((lams, fc, gw, cb))
                if gw != cb:
                    mismatches.append(Mismatch(lams, gw, cb, fcurve=fc))
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return SweepReport(box, n, len(tuples), tuple(mismatches), elapsed_ms,
                       tuple(rows))


def reduction_consistency(box: Box, n: int = 5) -> SweepReport:
    """Term-by-term audit of the F-curve expansions at n marked points.

    Checks the full pairings agree and, summand by summand, that the
    Grassmannian pairing factor of every node shape equals the bundle rank
    with the star-dual insertion.
    """
    start = time.monotonic()
    r, l = box.rows, box.cols
    tuples = critical_tuples(box, n, up_to_symmetry=True)
    mismatches: list[Mismatch] = []
    for lams in tuples:
        for fc in enumerate_fcurves(n):
            gw = gw_dot_fcurve(lams, box, fc)
            cb = cb_dot_fcurve(lams, r, l, fc)
            if gw != cb:
                mismatches.append(Mismatch(lams, gw, cb, fcurve=fc))
            for block in fc:
                block_weights = tuple(lams[i - 1] for i in block)
                support = multiply_schur(block_weights, inside=box.rectangle)
                for mu, coeff in support.items():
                    pairing = gw_pairing_factor(block_weights, mu, box)
                    rank = cb_rank(block_weights + (star_dual(mu, r),), r, l)
                    if not (pairing == rank == coeff):
                        mismatches.append(Mismatch(
                            block_weights + (mu,), pairing, rank,
                            fcurve=fc, kind="summand"))
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return SweepReport(box, n, len(tuples), tuple(mismatches), elapsed_ms)


# ---------------------------------------------------------------------------
# nonvanishing certificates

class SearchStatus(Enum):
    FOUND = "found"
    ABSENT = "absent"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class Certificate:
    blocks: FCurve
    mus: tuple[Partition, Partition, Partition, Partition]

    def to_json_obj(self) -> dict:
        return {"blocks": format_fcurve(self.blocks),
                "mus": format_partition_list(self.mus)}


@dataclass(frozen=True)
class CertificateSearch:
    status: SearchStatus
    certificate: Certificate | None
    examined: int


def certificate_conditions_hold(lams: tuple[Partition, ...], box: Box,
                                cert: Certificate) -> bool:
    """Re-check the three sufficiency conditions of a certificate."""
    r, l = box.rows, box.cols
    for block, mu in zip(cert.blocks, cert.mus):
        block_weights = tuple(lams[i - 1] for i in block)
        support = multiply_schur(block_weights, inside=box.rectangle)
        if support.get(mu, 0) <= 0:
            return False
    if sum(num_rows(mu) for mu in cert.mus) != 2 * r + 2:
        return False
    betas = tuple(split_first_column(mu)[1] for mu in cert.mus)
    stripped = multiply_schur(betas, inside=Box(r + 1, l - 1).rectangle)
    return any(c > 0 for c in stripped.values())


def nonvanishing_certificate(lams: tuple[Partition, ...], box: Box,
                             search_budget: int | None = None) -> CertificateSearch:
    """Search for a decomposition and node shapes certifying nonvanishing.

    A certificate proves both divisors meet the corresponding F-curve
    positively; absence proves nothing.  The budget counts
    (decomposition, node-tuple) pairs examined.
    """
    r, l = box.rows, box.cols
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("critical level condition fails")
    n = len(lams)
    examined = 0
    for fc in enumerate_fcurves(n):
        supports = []
        for block in fc:
            block_weights = tuple(lams[i - 1] for i in block)
            support = multiply_schur(block_weights, inside=box.rectangle)
            supports.append(sorted(support))
        for mus in product(*supports):
            examined += 1
            if search_budget is not None and examined > search_budget:
                return CertificateSearch(SearchStatus.BUDGET_EXHAUSTED, None,
                                         examined - 1)
            if sum(num_rows(mu) for mu in mus) != 2 * r + 2:
                continue
            betas = tuple(split_first_column(mu)[1] for mu in mus)
            stripped = multiply_schur(betas, inside=Box(r + 1, l - 1).rectangle)
            if any(c > 0 for c in stripped.values()):
                cert = Certificate(fc, mus)
                return CertificateSearch(SearchStatus.FOUND, cert, examined)
    return CertificateSearch(SearchStatus.ABSENT, None, examined)


# ---------------------------------------------------------------------------
# example families and corollary identities

def family_degree_one(r: int, l: int) -> int:
    """The two-boxes/hook/rectangle family; both degrees must equal 1."""
    if r < 1 or l < 1:
        raise ValueError("need r, l >= 1")
    lams = ((1,), (1,), (l,) + (1,) * (r - 1), (l,) * r)
    box = Box(r, l)
    gw = gw_divisor_degree_m04(lams, box)
    cb = cb_c1_degree_m04(lams, r, l)
    if gw != 1 or cb != 1:
        raise AssertionError(f"family degree is not 1: gw={gw}, cb={cb}")
    return 1


def addrow_identity(lams: tuple[Partition, ...], r: int,
                    l: int) -> tuple[int, int]:
    """Degree invariance under adding a maximal row and a column box.

    Sorts the weights by column height, adds a width-l top row to the first
    and one box at the foot of the second's first column, and compares the
    degree for sl(r+1) against the enlarged data for sl(r+2).
    """
    if len(lams) != 4:
        raise ValueError("needs exactly 4 weights")
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("total weight must be (r+1)(l+1)")
    ordered = tuple(sorted(lams, key=num_rows, reverse=True))
    if sum(num_rows(lam) for lam in ordered) > 2 * (r + 1):
        raise ValueError("column condition fails for the enlarged tuple")
    mu1 = (l,) + ordered[0]
    mu2 = ordered[1] + (1,)
    mus = (mu1, mu2, ordered[2], ordered[3])
    lhs = cb_c1_degree_m04(ordered, r, l)
    rhs = cb_c1_degree_m04(mus, r + 1, l)
    return lhs, rhs
