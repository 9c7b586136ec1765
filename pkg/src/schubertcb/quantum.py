"""Small quantum cohomology of Grassmannians via beta-number reduction.

The surjection from the ring of symmetric functions onto QH*Gr(k, m) sends
``s_nu`` to a signed power of q times a Schubert class, or to zero.  It is
computed on beta-numbers (first-column hook lengths) placed on m runners:

* shapes with more than k rows map to zero;
* pad ``nu`` to k parts and form the k beta-numbers ``nu_i + k - i``;
* if two beta-numbers share a residue mod m, the reduction cannot reach the
  k x (m-k) box and the class is zero;
* otherwise slide every bead down to its residue.  Each full slide of one
  bead removes one m-rim-hook; ``d`` hooks are removed in total and the sign
  is the parity of the permutation that re-sorts the slid beads, times
  ``(-1)^(d(k-1))``.

The sign convention is pinned by quantum Pieri, associativity, coefficient
nonnegativity and the two-step flag cross-route, all enforced in the test
suite; the width-based single-hook sign is not used.
"""

from __future__ import annotations

from typing import NamedTuple

from .partitions import Box, Partition, dual_in_box, fits_box, partition, weight
from .schur import multiply_schur

# Expansion in QH*Gr(k, m): coefficients keyed by (q-degree, shape in box).
QExpansion = dict[tuple[int, Partition], int]


class Reduced(NamedTuple):
    """Outcome of reducing a shape modulo m-rim-hooks into the k x (m-k) box."""

    sign: int
    degree: int
    shape: Partition


def rim_hook_reduce(lam: Partition, k: int, m: int) -> Reduced | None:
    """Reduce ``lam`` into the k x (m-k) box; ``None`` means the class is zero."""
    if not (m > k >= 1):
        raise ValueError(f"need m > k >= 1, got k={k}, m={m}")
    if len(lam) > k:
        return None
    padded = lam + (0,) * (k - len(lam))
    beta = [padded[i] + (k - 1 - i) for i in range(k)]
    residues = [b % m for b in beta]
    if len(set(residues)) < k:
        return None
    d = sum((b - r) // m for b, r in zip(beta, residues))
    inversions = sum(
        1
        for i in range(k)
        for j in range(i + 1, k)
        if residues[i] < residues[j]
    )
    sign = (-1) ** (inversions + d * (k - 1))
    ordered = sorted(residues, reverse=True)
    shape = partition(ordered[i] - (k - 1 - i) for i in range(k))
    return Reduced(sign, d, shape)


def _fold_factor(expansion: QExpansion, factor: Partition, k: int, m: int) -> QExpansion:
    result: QExpansion = {}
    for (d, shape), coeff in expansion.items():
        for term, c in multiply_schur((shape, factor)).items():
            red = rim_hook_reduce(term, k, m)
            if red is None:
                continue
            key = (d + red.degree, red.shape)
            value = result.get(key, 0) + coeff * c * red.sign
            if value:
                result[key] = value
            elif key in result:
                del result[key]
    return result


def quantum_multiply(lams: tuple[Partition, ...], k: int, m: int) -> QExpansion:
    """Quantum product of Schubert classes in QH*Gr(k, m).

    Computed classically factor by factor with rim-hook reduction after every
    fold; every coefficient of the result is a genus-zero Gromov-Witten
    datum and must be nonnegative, which is asserted.
    """
    box = Box(k, m - k)
    for lam in lams:
        if not fits_box(lam, box):
            raise ValueError(f"{list(lam)} is not a class of Gr({k},{m})")
    expansion: QExpansion = {(0, ()): 1}
    for factor in sorted(lams, key=weight, reverse=True):
        expansion = _fold_factor(expansion, factor, k, m)
    for key, coeff in expansion.items():
        if coeff < 0:
            raise AssertionError(
                f"negative quantum coefficient {coeff} at {key}; reduction bug")
    return expansion


def quantum_lr_coefficient(lams: tuple[Partition, ...], d: int, nu: Partition,
                           k: int, m: int) -> int:
    """Coefficient of q^d sigma_nu in the quantum product of the classes."""
    if sum(weight(lam) for lam in lams) != weight(nu) + m * d:
        return 0
    return quantum_multiply(lams, k, m).get((d, nu), 0)


def three_point_gw(lam1: Partition, lam2: Partition, lam3: Partition,
                   d: int, box: Box) -> int:
    """3-pointed degree-d Gromov-Witten invariant of Gr(rows, rows+cols)."""
    r, l = box.rows, box.cols
    total = weight(lam1) + weight(lam2) + weight(lam3)
    if total != r * l + (r + l) * d:
        raise ValueError(
            f"dimension condition fails: weights sum to {total}, "
            f"need {r * l + (r + l) * d}")
    return quantum_lr_coefficient(
        (lam1, lam2), d, dual_in_box(lam3, box), r, r + l)


def quantum_classical_identity(lams: tuple[Partition, ...], r: int,
                               l: int) -> tuple[int, int]:
    """Degree-1 quantum coefficient vs. the hooked classical coefficient.

    Left side: the coefficient of q sigma_{(l^(r+1))} in the quantum product
    of the classes together with one extra full row (l), in QH*Gr(r+1, r+1+l).
    Right side: the classical generalized coefficient on the target
    ``(l^(r+1), 1^(r+1))``.  The two agree on the stated domain.
    """
    box = Box(r, l)
    if any(not fits_box(lam, box) for lam in lams):
        raise ValueError("weights must fit the r x l box")
    if sum(weight(lam) for lam in lams) != (r + 1) * (l + 1):
        raise ValueError("total weight must be (r+1)(l+1)")
    if sum(len(lam) for lam in lams) != 2 * (r + 1):
        raise ValueError("first-column heights must sum to 2(r+1)")
    from .schur import generalized_lr

    lhs = quantum_lr_coefficient(lams + ((l,),), 1, (l,) * (r + 1), r + 1, r + 1 + l)
    rhs = generalized_lr(lams, (l,) * (r + 1) + (1,) * (r + 1))
    return lhs, rhs
