"""Reverse-lex generic initial ideals of symbolic powers, two ways.

Route A (generic_gin, the trust anchor): apply a random change of
coordinates to the points (vanishing order is coordinate-invariant, so no
polynomial substitution is ever needed), extract per-degree initial
monomials as the pivot columns of the row-reduced symbolic power basis, and
assemble the staircase. Independent trials must agree exactly.

Route B (staircase_from_hilbert, the fast path): the generic initial ideal
of a point ideal is generated in x and y with strictly decreasing y-steps,
so it is determined by the h-vector of the artinian reduction; the column
count over each height recovers the lambdas with no randomness at all.
"""

from dataclasses import dataclass
import random

import numpy as np

from .errors import DomainError, GenericityFailure, MalformedHVector
from .fatpoints import (
    FatPointConfig,
    condition_matrix_for_points,
    degree_cap,
    normalize_point,
    quotient_hilbert_function_raw,
)
from .ffield import FFMatrix, apply_matrix_3, random_invertible_3x3, row_reduce
from .monomials import ideal_contains, is_strongly_stable, minimal_generators
from .resolutions import predicted_extremal_shifts
from .staircase import GinStaircase


def artinian_h_vector(cfg: FatPointConfig) -> tuple[int, ...]:
    """First difference of HF(R/I), truncated after it reaches zero; sums
    to the multiplicity r*m(m+1)/2."""
    m = cfg.uniform_multiplicity
    total = cfg.multiplicity_total
    hard_cap = 4 * degree_cap(cfg.r, m) + 16
    hf = []
    d = 0
    while True:
        hf.append(quotient_hilbert_function_raw(
            cfg.points, cfg.multiplicities, cfg.prime, d))
        if hf[-1] == total:
            break
        if d > hard_cap:
            raise RuntimeError("Hilbert function failed to stabilize")
        d += 1
    h = [hf[0]] + [hf[i] - hf[i - 1] for i in range(1, len(hf))]
    while h and h[-1] == 0:
        h.pop()
    assert sum(h) == total
    return tuple(h)


def staircase_from_hilbert(h) -> GinStaircase:
    """Reconstruct the staircase whose artinian quotient has h-vector h:
    alpha = max h, lambda_a = #{e : h(e) > a}. Raises MalformedHVector when
    no strictly decreasing staircase realizes h."""
    h = tuple(int(v) for v in h)
    while h and h[-1] == 0:
        h = h[:-1]
    if not h or h[0] != 1 or any(v < 0 for v in h):
        raise MalformedHVector(f"not an h-vector of a cyclic quotient: {h}")
    alpha = max(h)
    lambdas = tuple(sum(1 for v in h if v > a) for a in range(alpha))
    try:
        stair = GinStaircase(alpha=alpha, lambdas=lambdas)
    except ValueError as exc:
        raise MalformedHVector(str(exc)) from exc
    if stair.h_vector() != h:
        raise MalformedHVector(f"h-vector {h} is not realizable by a staircase")
    return stair


def hilbert_staircase(cfg: FatPointConfig) -> GinStaircase:
    """Fast-path gin staircase: h-vector route, no randomness."""
    return staircase_from_hilbert(artinian_h_vector(cfg))


def _staircase_from_pivot_sweep(points, multiplicities, p: int,
                                hard_cap: int) -> GinStaircase:
    """Collect initial monomials degree by degree until the Hilbert
    function saturates, then prune to minimal generators and read off the
    staircase. Any shape violation is a genericity failure."""
    total = sum(m * (m + 1) // 2 for m in multiplicities)
    pivot_monomials = set()
    saturation = None
    d = 0
    while True:
        mat = condition_matrix_for_points(points, multiplicities, p, d)
        red = row_reduce(mat)
        if red.kernel_basis:
            kernel_mat = FFMatrix(p, np.vstack(red.kernel_basis),
                                  mat.column_labels)
            pivot_monomials.update(row_reduce(kernel_mat).pivot_columns)
        if saturation is None and red.rank == total:
            saturation = d
        if saturation is not None and d >= saturation + 2:
            break
        if d > hard_cap:
            raise GenericityFailure("degree sweep failed to stabilize")
        d += 1

    gens = minimal_generators(pivot_monomials)
    if any(g.c > 0 for g in gens):
        raise GenericityFailure(
            f"initial ideal has z in a minimal generator: {sorted(gens)}")
    pure_x = [g for g in gens if g.b == 0]
    if len(pure_x) != 1:
        raise GenericityFailure(f"expected one pure x power, got {sorted(gens)}")
    alpha = pure_x[0].a
    by_column = {g.a: g.b for g in gens if g.b > 0}
    if sorted(by_column) != list(range(alpha)):
        raise GenericityFailure(
            f"generators do not fill x-degrees 0..{alpha - 1}: {sorted(gens)}")
    try:
        stair = GinStaircase(alpha=alpha,
                             lambdas=tuple(by_column[a] for a in range(alpha)))
    except ValueError as exc:
        raise GenericityFailure(str(exc)) from exc
    if sum(stair.lambdas) != total:
        raise GenericityFailure(
            f"staircase colength {sum(stair.lambdas)} != multiplicity {total}")
    if not is_strongly_stable(stair.generators()):
        raise GenericityFailure("initial ideal is not strongly stable")
    return stair


def generic_gin(cfg: FatPointConfig, trials: int = 3, seed: int = 0) -> GinStaircase:
    """Oracle gin: random coordinate changes applied to the points, pivot
    extraction per degree, all trials required to agree exactly."""
    cfg.uniform_multiplicity  # mixed multiplicities are out of scope here
    if trials < 2:
        raise DomainError("need at least 2 trials for a genericity certificate")
    p = cfg.prime
    hard_cap = 4 * degree_cap(cfg.r, cfg.uniform_multiplicity) + 16
    rng = random.Random(seed)
    results = []
    for _ in range(trials):
        g = random_invertible_3x3(p, rng)
        moved = [normalize_point(apply_matrix_3(g, q, p), p) for q in cfg.points]
        results.append(_staircase_from_pivot_sweep(
            moved, cfg.multiplicities, p, hard_cap))
    first = results[0]
    if any(s != first for s in results[1:]):
        raise GenericityFailure(
            f"trials disagree: {[s.to_json_dict() for s in results]}")
    return first


@dataclass(frozen=True)
class ShapeCertificate:
    passed: bool
    alpha: int
    expected_alpha: int
    lambda0: int
    expected_lambda0: int


def shape_certificate(s: GinStaircase, r: int, m: int) -> ShapeCertificate:
    """Check alpha = D(m) and lambda_0 = U(m) - 1 against the predicted
    extremal shifts. Only meaningful where the closed forms exist."""
    D, U = predicted_extremal_shifts(r, m)
    return ShapeCertificate(
        passed=(s.alpha == D and s.lambdas[0] == U - 1),
        alpha=s.alpha,
        expected_alpha=D,
        lambda0=s.lambdas[0],
        expected_lambda0=U - 1,
    )


def staircase_product_contained(a: GinStaircase, b: GinStaircase,
                                target: GinStaircase) -> bool:
    """Whether the product of the two staircase ideals is contained in the
    target staircase ideal (generator-by-generator divisibility)."""
    target_gens = target.generators()
    return all(
        ideal_contains(target_gens, ga.times(gb))
        for ga in a.generators()
        for gb in b.generators()
    )
