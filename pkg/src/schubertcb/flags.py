"""Schubert calculus on two-step flag varieties Fl(a, b; m).

Classes are indexed by permutations of S_m with descents contained in
{a, b}.  Products and intersection numbers are computed through Schubert
polynomials: the intersection of classes u^1, ..., u^n equals the constant

    del_{w0} ( S_{u^1} ... S_{u^n} * S_{w0 * wmax} )

where wmax is the longest permutation with descents in {a, b} (the point
class), w0 is the longest element of S_m, and del_{w0} is the composite
divided difference along a reduced word of w0.  Multiplying by S_{w0*wmax}
and pushing to the full flag variety extracts exactly the coefficient of the
point class; terms indexed by permutations outside S_m die under del_{w0}.

The degenerate shapes a = 0 and b = m are allowed and behave as the single
Grassmannian Gr(b, m) resp. Gr(a, m).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

from . import cache as _cache
from .partitions import Box, Partition, partition, weight
from .schur import generalized_lr

Permutation = tuple[int, ...]
Poly = dict[tuple[int, ...], int]


class FlagShape(NamedTuple):
    a: int
    b: int
    m: int

    @property
    def dim(self) -> int:
        a, b, m = self
        return a * (b - a) + b * (m - b)


class PairOfPartitions(NamedTuple):
    alpha: Partition
    beta: Partition
    shape: FlagShape

    @property
    def codim(self) -> int:
        return weight(self.alpha) + weight(self.beta)


# ---------------------------------------------------------------------------
# permutations

def inversions(w: Permutation) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descents(w: Permutation) -> tuple[int, ...]:
    """Positions i (1-based) with w(i) > w(i+1)."""
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def compose(w: Permutation, v: Permutation) -> Permutation:
    """(w o v)(i) = w(v(i))."""
    return tuple(w[v[i] - 1] for i in range(len(w)))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w):
        inv[x - 1] = i + 1
    return tuple(inv)


def longest_element(m: int) -> Permutation:
    return tuple(range(m, 0, -1))


def longest_with_descents(shape: FlagShape) -> Permutation:
    """The point class of Fl(a, b; m): largest values first, ascending blocks."""
    a, b, m = shape
    first = range(m - a + 1, m + 1)
    second = range(m - b + 1, m - a + 1)
    third = range(1, m - b + 1)
    return tuple(first) + tuple(second) + tuple(third)


def _check_flag_class(w: Permutation, shape: FlagShape) -> None:
    allowed = {shape.a, shape.b}
    bad = [i for i in descents(w) if i not in allowed]
    if bad:
        raise ValueError(
            f"{list(w)} has descents {bad} outside positions {sorted(allowed)}")


def grassmann_perm(lam: Partition, r: int, m: int) -> Permutation:
    """The Grassmann permutation of a partition in the r x (m-r) box."""
    if len(lam) > r or (lam and lam[0] > m - r):
        raise ValueError(f"{list(lam)} does not fit in a {r}x{m - r} box")
    head = [((lam[r - i] if r - i < len(lam) else 0) + i) for i in range(1, r + 1)]
    tail = sorted(set(range(1, m + 1)) - set(head))
    return tuple(head) + tuple(tail)


def perm_to_partition(w: Permutation, r: int) -> Partition:
    """Inverse of grassmann_perm for a permutation with descent only at r."""
    return partition(tuple(w[r - i] - (r + 1 - i) for i in range(1, r + 1)))


def level_d_perm(lam: Partition, r: int, m: int, d: int) -> Permutation:
    """The class on Fl(r-d, r+d; m) swept out by degree-d curves through X_lam.

    Obtained from the Grassmann permutation by sorting the window of values
    at positions r-d+1, ..., r+d.
    """
    if not (1 <= d <= min(r, m - r)):
        raise ValueError(f"need 1 <= d <= min({r}, {m - r})")
    w = list(grassmann_perm(lam, r, m))
    w[r - d:r + d] = sorted(w[r - d:r + d])
    return tuple(w)


def perms_with_descents_in(shape: FlagShape) -> tuple[Permutation, ...]:
    """All Schubert-class indices of Fl(a, b; m), ascending by length."""
    a, b, m = shape
    everything = range(1, m + 1)
    result = []
    for first in combinations(everything, a):
        rest = sorted(set(everything) - set(first))
        for second in combinations(rest, b - a):
            third = tuple(sorted(set(rest) - set(second)))
            result.append(first + second + third)
    result.sort(key=lambda w: (inversions(w), w))
    return tuple(result)


# ---------------------------------------------------------------------------
# Schubert polynomials

def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def divided_difference(p: Poly, i: int) -> Poly:
    """The operator (f - s_i f) / (x_i - x_{i+1}); ``i`` is 1-based."""
    out: Poly = {}
    for exp, c in p.items():
        u, v = exp[i - 1], exp[i]
        if u == v:
            continue
        lo, hi, sign = (v, u, 1) if u > v else (u, v, -1)
        e = list(exp)
        for t in range(lo, hi):
            e[i - 1], e[i] = t, lo + hi - 1 - t
            key = tuple(e)
            val = out.get(key, 0) + sign * c
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


@lru_cache(maxsize=None)
def schubert_poly(w: Permutation) -> Poly:
    """Schubert polynomial, by divided differences down from the top class."""
    m = len(w)
    if w == longest_element(m):
        return {tuple(range(m - 1, -1, -1)): 1}
    for i in range(1, m):
        if w[i - 1] < w[i]:
            ws = list(w)
            ws[i - 1], ws[i] = ws[i], ws[i - 1]
            return divided_difference(schubert_poly(tuple(ws)), i)
    raise AssertionError("unreachable: identity is handled by the loop")


def full_flag_integral(p: Poly, m: int) -> int:
    """Integrate a degree-binomial(m,2) class over the full flag variety.

    The composite divided difference of the longest element turns x^a into
    the Schur polynomial of sort(a) - (m-1, ..., 0), which is a constant
    exactly when the exponents are a permutation of (m-1, ..., 1, 0); the
    constant is the sign of that permutation.  So the integral is a signed
    sum over the monomials with pairwise-distinct exponents below m.
    """
    staircase = frozenset(range(m))
    total = 0
    for exp, coeff in p.items():
        if len(set(exp)) != m or not staircase.issuperset(exp):
            continue
        inversions_ = sum(1 for i in range(m) for j in range(i + 1, m)
                          if exp[i] < exp[j])
        total += coeff if inversions_ % 2 == 0 else -coeff
    return total


def _poly_mul_capped(p: Poly, q: Poly, cap: int) -> Poly:
    """Product dropping monomials with any exponent above ``cap``.

    Exponents never decrease under further multiplication, and the final
    integral only sees exponents below m, so the drop is lossless there.
    """
    out: Poly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            if any(x > cap for x in key):
                continue
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def _flag_sc_key(ws: tuple[Permutation, ...], shape: FlagShape) -> str:
    body = ";".join("[" + ",".join(map(str, w)) + "]" for w in sorted(ws))
    return f"{shape.a},{shape.b};{shape.m}|{body}"


def flag_intersection(classes: Iterable[Permutation], shape: FlagShape) -> int:
    """Intersection number of Schubert classes on Fl(a, b; m)."""
    return _flag_intersection(tuple(classes), shape)


@_cache.disk_memo("flag_sc", _flag_sc_key)
def _flag_intersection(ws: tuple[Permutation, ...], shape: FlagShape) -> int:
    for w in ws:
        if len(w) != shape.m:
            raise ValueError(f"{list(w)} is not a permutation of S_{shape.m}")
        _check_flag_class(w, shape)
    if sum(inversions(w) for w in ws) != shape.dim:
        return 0
    w0 = longest_element(shape.m)
    dual_point = compose(w0, longest_with_descents(shape))
    prod: Poly = schubert_poly(dual_point)
    for w in sorted(ws, key=inversions, reverse=True):
        if inversions(w) == 0:
            continue
        prod = _poly_mul_capped(prod, schubert_poly(w), shape.m - 1)
        if not prod:
            return 0
    return full_flag_integral(prod, shape.m)


def schubert_expand(classes: Iterable[Permutation], shape: FlagShape) -> dict[Permutation, int]:
    """Expansion of a product of flag classes in the Schubert basis of Fl(a, b; m)."""
    ws = tuple(classes)
    for w in ws:
        _check_flag_class(w, shape)
    degree = sum(inversions(w) for w in ws)
    prod: Poly = {(0,) * shape.m: 1}
    for w in ws:
        prod = _poly_mul_capped(prod, schubert_poly(w), shape.m - 1)
    w0 = longest_element(shape.m)
    out: dict[Permutation, int] = {}
    for v in perms_with_descents_in(shape):
        if inversions(v) != degree:
            continue
        c = full_flag_integral(
            _poly_mul_capped(prod, schubert_poly(compose(w0, v)), shape.m - 1),
            shape.m)
        if c:
            out[v] = c
    return out


# ---------------------------------------------------------------------------
# pairs of partitions

def pair_factorization(w: Permutation, shape: FlagShape) -> PairOfPartitions:
    """Factor w = w2 w1 into Grassmann permutations and read off (alpha, beta).

    alpha lives in the a x (b-a) box (a Schubert index of Gr(a, b)) and beta
    in the b x (m-b) box (a Schubert index of Gr(b, m)); together
    |alpha| + |beta| equals the number of inversions of w.
    """
    a, b, m = shape
    if not 1 <= a < b <= m:
        raise ValueError(f"degenerate flag shape {shape} has no pair basis")
    _check_flag_class(w, shape)
    rho = sorted(range(1, b + 1), key=lambda i: w[i - 1])
    rho = tuple(rho) + tuple(range(b + 1, m + 1))
    w2 = compose(w, rho)
    w1 = inverse(rho)
    alpha = perm_to_partition(w1, a)
    beta = perm_to_partition(w2, b)
    return PairOfPartitions(alpha, beta, shape)


def perm_from_pair(pair: PairOfPartitions) -> Permutation:
    a, b, m = pair.shape
    w1_small = grassmann_perm(pair.alpha, a, b)
    w1 = w1_small + tuple(range(b + 1, m + 1))
    w2 = grassmann_perm(pair.beta, b, m)
    return compose(w2, w1)


def factorized_intersection(pairs: Iterable[PairOfPartitions]) -> int:
    """Product of two Grassmannian integrals computing a flag intersection.

    Valid when the alpha-weights do not exceed dim Gr(a, b); in that regime
    it agrees with ``flag_intersection`` of the corresponding classes, and it
    vanishes when the alpha-weights fall strictly short.
    """
    ps = tuple(pairs)
    if not ps:
        raise ValueError("empty intersection")
    shape = ps[0].shape
    if any(p.shape != shape for p in ps):
        raise ValueError("pairs live on different flag varieties")
    a, b, m = shape
    if sum(p.codim for p in ps) != shape.dim:
        return 0
    alpha_total = sum(weight(p.alpha) for p in ps)
    if alpha_total > a * (b - a):
        raise ValueError(
            "alpha-weights exceed dim Gr(a,b); the factorization does not apply")
    if alpha_total < a * (b - a):
        return 0
    left = generalized_lr(tuple(p.alpha for p in ps), Box(a, b - a).rectangle)
    right = generalized_lr(tuple(p.beta for p in ps), Box(b, m - b).rectangle)
    return left * right
