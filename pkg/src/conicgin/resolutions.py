"""Betti-table algebra for symbolic powers of conic point ideals.

All resolutions here have length one (Hilbert-Burch), so a table is just the
pair of shift multisets: f0 for the generators of F0 and f1 for the syzygies
of F1, with |f0| = |f1| + 1. Maps are never computed; every statement in
this module is about shifts.
"""

from collections import Counter
from dataclasses import dataclass

from .errors import DomainError, EmptyTable, UnsupportedCase
from .staircase import GinStaircase


@dataclass(frozen=True)
class BettiTable:
    f0: tuple[int, ...]
    f1: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f0", tuple(sorted(int(v) for v in self.f0)))
        object.__setattr__(self, "f1", tuple(sorted(int(v) for v in self.f1)))
        if len(self.f0) != len(self.f1) + 1:
            raise ValueError("need |f0| == |f1| + 1 (Hilbert-Burch rank condition)")
        if any(v < 0 for v in self.f0 + self.f1):
            raise ValueError("shifts must be nonnegative")
        if self.f1 and min(self.f1) <= min(self.f0):
            raise ValueError("every syzygy shift must exceed the initial degree")


def base_resolution() -> BettiTable:
    """Table of the unit ideal: 0 -> 0 -> R(0) -> R -> 0."""
    return BettiTable((0,), ())


def catalisano_step(prev: BettiTable, r: int, t: int) -> BettiTable:
    """One step of Catalisano's recursion: the table of the t-th symbolic
    power of r >= 4 conic points from the table of the (t-1)-st.

    rt even: twist everything by 2 and adjoin R(-rt/2) to F0, R(-rt/2 - 2)
    to F1. rt odd: twist by 2 and adjoin R^2(-(rt+1)/2) to F0,
    R^2(-(rt+1)/2 - 1) to F1.
    """
    if r < 4:
        raise DomainError(f"recursion requires r >= 4, got r={r}")
    if t < 1:
        raise DomainError(f"step index must be >= 1, got t={t}")
    f0 = [d + 2 for d in prev.f0]
    f1 = [u + 2 for u in prev.f1]
    if (r * t) % 2 == 0:
        f0.append(r * t // 2)
        f1.append(r * t // 2 + 2)
    else:
        s = (r * t + 1) // 2
        f0 += [s, s]
        f1 += [s + 1, s + 1]
    return BettiTable(tuple(f0), tuple(f1))


def catalisano_resolve(r: int, m: int) -> BettiTable:
    """Table of the m-th symbolic power by folding the recursion m times
    from the unit ideal."""
    if r < 4:
        raise DomainError(f"recursion requires r >= 4, got r={r}")
    if m < 0:
        raise DomainError("m must be >= 0")
    table = base_resolution()
    for t in range(1, m + 1):
        table = catalisano_step(table, r, t)
    return table


def closed_form_resolution(r: int, m: int) -> BettiTable:
    """Closed-form shift multisets for the m-th symbolic power of r points
    on an irreducible conic. Supported: r >= 4 even (any m >= 1), r >= 5 odd
    with m even, and r = 3 with m even."""
    if r < 3 or m < 1:
        raise UnsupportedCase(f"no closed form for (r={r}, m={m})")
    if r % 2 == 0:
        f0 = [2 * (m - j) + r * j // 2 for j in range(m + 1)]
        f1 = [2 * (m - j) + r * j // 2 + 2 for j in range(1, m + 1)]
    elif r == 3:
        if m % 2:
            raise UnsupportedCase(f"no closed form for r=3 with odd m={m}")
        half = m // 2
        f0 = [3 * m // 2] + [3 * m // 2 + j + 1 for j in range(half) for _ in range(3)]
        f1 = [3 * m // 2 + j + 2 for j in range(half) for _ in range(3)]
    else:
        if m % 2:
            raise UnsupportedCase(f"no closed form for odd r={r} with odd m={m}")
        half = m // 2
        side = (r - 1) // 2
        f0 = [2 * m + j * (r - 4) for j in range(half + 1)]
        f0 += [2 * m + j * (r - 4) + side - 1 for j in range(half) for _ in range(2)]
        f1 = [2 * m + j * (r - 4) + 2 for j in range(1, half + 1)]
        f1 += [2 * m + j * (r - 4) + side for j in range(half) for _ in range(2)]
    return BettiTable(tuple(f0), tuple(f1))


def extremal_shifts(table: BettiTable) -> tuple[int, int]:
    """(D, U) = (min generator shift, max syzygy shift)."""
    if not table.f0 or not table.f1:
        raise EmptyTable("need nonempty f0 and f1 to take extremes")
    return min(table.f0), max(table.f1)


def predicted_extremal_shifts(r: int, m: int) -> tuple[int, int]:
    """Predicted (D(m), U(m)): (2m, rm/2 + 2) for r >= 4 (m even when r is
    odd), and (3m/2, 2m + 1) for r = 3 with m even."""
    if m >= 1 and r >= 4 and (r % 2 == 0 or m % 2 == 0):
        return 2 * m, r * m // 2 + 2
    if m >= 1 and r == 3 and m % 2 == 0:
        return 3 * m // 2, 2 * m + 1
    raise UnsupportedCase(f"no shift prediction for (r={r}, m={m})")


def hilbert_burch_of_gin(s: GinStaircase) -> BettiTable:
    """Table of the staircase ideal itself: syzygies at lambda_i + i + 1 and
    generators at lambda_i + i together with the pure power at alpha."""
    f1 = tuple(lam + i + 1 for i, lam in enumerate(s.lambdas))
    f0 = tuple(lam + i for i, lam in enumerate(s.lambdas)) + (s.alpha,)
    return BettiTable(f0, f1)


def consecutive_cancellation_reachable(source: BettiTable,
                                       target: BettiTable):
    """Sequence of consecutive cancellations turning source into target, or
    None. Each move removes one shift value simultaneously from f0 and f1,
    so reachability is: target is a componentwise sub-multiset of source and
    the two multiset differences agree."""
    s0, s1 = Counter(source.f0), Counter(source.f1)
    t0, t1 = Counter(target.f0), Counter(target.f1)
    if any(t0[v] > s0[v] for v in t0) or any(t1[v] > s1[v] for v in t1):
        return None
    diff0 = s0 - t0
    diff1 = s1 - t1
    if diff0 != diff1:
        return None
    return sorted(diff0.elements())


def _binom2(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


def hf_from_betti(table: BettiTable, degree: int) -> int:
    """dim of the degree-d piece of the resolved ideal, by the Euler
    characteristic of the length-1 resolution."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    gen = sum(_binom2(degree - d + 2) for d in table.f0)
    syz = sum(_binom2(degree - u + 2) for u in table.f1)
    return gen - syz


def betti_to_json_dict(table: BettiTable) -> dict:
    def grouped(shifts):
        counts = Counter(shifts)
        return [{"shift": s, "mult": counts[s]} for s in sorted(counts)]

    return {"f0": grouped(table.f0), "f1": grouped(table.f1)}


def betti_from_json_dict(d: dict) -> BettiTable:
    def flat(groups):
        return tuple(g["shift"] for g in groups for _ in range(g["mult"]))

    return BettiTable(flat(d["f0"]), flat(d["f1"]))
