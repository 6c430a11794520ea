"""Monomials in K[x, y, z] with x > y > z and the graded reverse
lexicographic order, plus strong-stability (Borel) checks and
minimal-generator pruning for monomial ideals."""

from typing import NamedTuple


class Monomial(NamedTuple):
    a: int  # exponent of x
    b: int  # exponent of y
    c: int  # exponent of z

    def degree(self) -> int:
        return self.a + self.b + self.c

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b and self.c <= other.c

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b, self.c + other.c)

    def text(self) -> str:
        parts = []
        for name, e in zip("xyz", self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def degrevlex_key(u: Monomial):
    """Sort key: larger key means larger monomial in degrevlex."""
    return (u.degree(), -u.c, -u.b)


def degrevlex_compare(u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as u <, ==, > v in degrevlex with x > y > z.

    Ties in total degree break on the last nonzero coordinate of u - v:
    negative means u is the larger monomial.
    """
    du, dv = u.degree(), v.degree()
    if du != dv:
        return 1 if du > dv else -1
    for x, y in zip(reversed(u), reversed(v)):
        if x != y:
            return 1 if x < y else -1
    return 0


def monomials_of_degree(d: int, nvars: int = 3) -> list[Monomial]:
    """All monomials of degree d in the first nvars variables, sorted
    descending in degrevlex (binom(d + nvars - 1, nvars - 1) of them)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if nvars not in (2, 3):
        raise ValueError("nvars must be 2 or 3")
    out = []
    c_range = range(d + 1) if nvars == 3 else (0,)
    for c in c_range:
        for b in range(d - c + 1):
            out.append(Monomial(d - b - c, b, c))
    return out


def ideal_contains(gens, mono: Monomial) -> bool:
    """Whether mono lies in the monomial ideal generated by gens."""
    return any(g.divides(mono) for g in gens)


def is_strongly_stable(gens) -> bool:
    """Borel-fixedness of the ideal generated by gens, checked via the
    single-step moves y -> x and z -> y on each generator (sufficient by
    transitivity of the elementary moves)."""
    gens = frozenset(gens)
    if not gens:
        raise ValueError("generator set must be nonempty")
    for g in gens:
        if g.b > 0 and not ideal_contains(gens, Monomial(g.a + 1, g.b - 1, g.c)):
            return False
        if g.c > 0 and not ideal_contains(gens, Monomial(g.a, g.b + 1, g.c - 1)):
            return False
    return True


def minimal_generators(gens) -> frozenset:
    """Elements of gens not divisible by a distinct element of gens."""
    gens = frozenset(gens)
    return frozenset(
        g for g in gens
        if not any(h.divides(g) for h in gens if h != g)
    )
