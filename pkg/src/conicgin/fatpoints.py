"""Fat point schemes on the irreducible conic xz = y^2 and their exact
linear-algebra oracle.

Points are parametrized as (1 : t : t^2) for distinct t in GF(p), so every
configuration lies on the conic by construction. A form of degree d vanishes
to order >= m at a point q exactly when all its partial derivatives of order
min(m-1, d) vanish at q: for d >= m Euler's relation pushes the vanishing
down to the lower orders, and for d < m the order-d partials are the
coefficients themselves, forcing the zero form. Either way one matrix of
derivative rows per point captures the membership conditions, and row
reduction gives Hilbert functions and degree-d bases of the symbolic power
with no Groebner machinery.

All functions here are pure; distinct degrees can be evaluated concurrently.
"""

from dataclasses import dataclass
import random

import numpy as np

from .errors import CharacteristicHazard, DegenerateInput
from .ffield import FFMatrix, is_prime, modular_inverse, row_reduce
from .monomials import monomials_of_degree

DEFAULT_PRIME = 32003
SECOND_PRIME = 32009  # for cross-checking results in a second characteristic


def normalize_point(coords, p: int) -> tuple[int, int, int]:
    """Scale so the first nonzero coordinate is 1."""
    coords = tuple(int(c) % p for c in coords)
    for c in coords:
        if c:
            inv = modular_inverse(c, p)
            return tuple(x * inv % p for x in coords)
    raise ValueError("projective point must have a nonzero coordinate")


def conic_points(r: int, seed: int = 0, p: int = DEFAULT_PRIME) -> list[tuple[int, int, int]]:
    """r distinct points (1 : t : t^2) on xz = y^2, drawn deterministically
    from the seed. Raises DegenerateInput for r < 2 or p <= r."""
    points, _ = _conic_points_with_params(r, seed, p)
    return points


def _conic_points_with_params(r, seed, p):
    if r < 2:
        raise DegenerateInput(f"need at least 2 points, got r={r}")
    if p <= r:
        raise DegenerateInput(f"cannot draw {r} distinct parameters from GF({p})")
    rng = random.Random(seed)
    ts = rng.sample(range(p), r)
    return [(1, t, t * t % p) for t in ts], ts


@dataclass(frozen=True)
class FatPointConfig:
    """r points on the conic with multiplicities (uniform m in the main
    pipeline; mixed multiplicities are accepted for oracle probing)."""

    prime: int
    points: tuple[tuple[int, int, int], ...]
    multiplicities: tuple[int, ...]
    t_values: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(tuple(q) for q in self.points))
        object.__setattr__(self, "multiplicities", tuple(self.multiplicities))
        object.__setattr__(self, "t_values", tuple(self.t_values))
        p = self.prime
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if len(self.points) != len(self.multiplicities) or len(self.points) < 2:
            raise ValueError("need matching points/multiplicities lists with r >= 2")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be pairwise distinct")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be >= 1")
        for q in self.points:
            if (q[0] * q[2] - q[1] * q[1]) % p:
                raise ValueError(f"point {q} is not on the conic xz = y^2")

    @property
    def r(self) -> int:
        return len(self.points)

    @property
    def uniform_multiplicity(self) -> int:
        ms = set(self.multiplicities)
        if len(ms) != 1:
            raise ValueError("configuration has mixed multiplicities")
        return ms.pop()

    @property
    def multiplicity_total(self) -> int:
        """Number of conditions imposed: sum of binom(m_q + 1, 2)."""
        return sum(m * (m + 1) // 2 for m in self.multiplicities)

    def to_json_dict(self) -> dict:
        return {
            "prime": self.prime,
            "r": self.r,
            "m": self.uniform_multiplicity,
            "seed": self.seed,
            "t_values": list(self.t_values),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "FatPointConfig":
        p = d["prime"]
        ts = [t % p for t in d["t_values"]]
        points = tuple((1, t, t * t % p) for t in ts)
        return cls(
            prime=p,
            points=points,
            multiplicities=(d["m"],) * d["r"],
            t_values=tuple(ts),
            seed=d.get("seed"),
        )


def uniform_conic_config(r: int, m: int, seed: int = 0,
                         prime: int = DEFAULT_PRIME) -> FatPointConfig:
    points, ts = _conic_points_with_params(r, seed, prime)
    if m < 1:
        raise ValueError("multiplicity must be >= 1")
    return FatPointConfig(
        prime=prime,
        points=tuple(points),
        multiplicities=(m,) * r,
        t_values=tuple(ts),
        seed=seed,
    )


def degree_cap(r: int, m: int) -> int:
    """Safe sweep bound: the largest staircase generator degree is
    max(rm/2, 2m) + 1 across all supported r, plus guard room."""
    return max((r * m + 1) // 2, 2 * m) + 3


def _falling_factorial_table(degree: int, order: int, p: int) -> np.ndarray:
    """F[n, t] = n (n-1) ... (n-t+1) mod p, zero when t > n."""
    F = np.zeros((degree + 1, order + 1), dtype=np.int64)
    F[:, 0] = 1
    for t in range(1, order + 1):
        for n in range(degree + 1):
            factor = n - t + 1
            F[n, t] = F[n, t - 1] * factor % p if factor > 0 else 0
    return F


def _point_rows(q, mult: int, degree: int, p: int,
                col_exps: np.ndarray) -> np.ndarray:
    """Derivative-condition rows for one point: one row per partial of
    order min(mult - 1, degree), columns in the caller's monomial order."""
    order = min(mult - 1, degree)
    F = _falling_factorial_table(degree, order, p)
    pow_tab = np.ones((3, degree + 1), dtype=np.int64)
    for i in range(3):
        for e in range(1, degree + 1):
            pow_tab[i, e] = pow_tab[i, e - 1] * q[i] % p
    ea, eb, ec = col_exps[:, 0], col_exps[:, 1], col_exps[:, 2]
    rows = []
    for deriv in monomials_of_degree(order, 3):
        i, j, k = deriv
        row = F[ea, i] * F[eb, j] % p * F[ec, k] % p
        row = row * pow_tab[0, np.maximum(ea - i, 0)] % p
        row = row * pow_tab[1, np.maximum(eb - j, 0)] % p
        row = row * pow_tab[2, np.maximum(ec - k, 0)] % p
        rows.append(row)
    return np.vstack(rows)


def condition_matrix_for_points(points, multiplicities, prime: int,
                                degree: int) -> FFMatrix:
    """Vanishing-condition matrix for arbitrary points (need not be on the
    conic); columns labeled by degree-d monomials in descending degrevlex."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if prime <= degree:
        raise CharacteristicHazard(
            f"prime {prime} does not exceed degree {degree}; falling "
            f"factorials may vanish mod p")
    cols = monomials_of_degree(degree, 3)
    col_exps = np.array(cols, dtype=np.int64)
    blocks = [
        _point_rows(q, m, degree, prime, col_exps)
        for q, m in zip(points, multiplicities)
    ]
    return FFMatrix(prime, np.vstack(blocks), tuple(cols))


def condition_matrix(cfg: FatPointConfig, degree: int) -> FFMatrix:
    return condition_matrix_for_points(
        cfg.points, cfg.multiplicities, cfg.prime, degree)


def quotient_hilbert_function_raw(points, multiplicities, prime, degree) -> int:
    """HF(R/I)_d = rank of the condition matrix."""
    return row_reduce(condition_matrix_for_points(
        points, multiplicities, prime, degree)).rank


def hilbert_function(cfg: FatPointConfig, degree: int) -> int:
    """dim of the degree-d piece of the symbolic power ideal."""
    n_monomials = (degree + 2) * (degree + 1) // 2
    return n_monomials - quotient_hilbert_function(cfg, degree)


def quotient_hilbert_function(cfg: FatPointConfig, degree: int) -> int:
    return quotient_hilbert_function_raw(
        cfg.points, cfg.multiplicities, cfg.prime, degree)


def symbolic_power_basis(cfg: FatPointConfig, degree: int) -> list[np.ndarray]:
    """Coefficient vectors (against the descending degrevlex monomial basis)
    spanning the degree-d piece of the symbolic power."""
    return row_reduce(condition_matrix(cfg, degree)).kernel_basis
