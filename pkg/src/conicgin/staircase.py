"""Staircase of a Borel-fixed ideal generated in x and y.

The generator profile {x^alpha, x^(alpha-1)*y^(lambda_(alpha-1)), ...,
x*y^(lambda_1), y^(lambda_0)} with lambda_0 > lambda_1 > ... >= 1 is stored
as (alpha, lambdas)."""

from dataclasses import dataclass

from .monomials import Monomial


@dataclass(frozen=True)
class GinStaircase:
    alpha: int
    lambdas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lambdas", tuple(int(v) for v in self.lambdas))
        if self.alpha != len(self.lambdas) or self.alpha < 1:
            raise ValueError("alpha must equal len(lambdas) >= 1")
        if self.lambdas[-1] < 1:
            raise ValueError("lambdas must be >= 1")
        if any(x <= y for x, y in zip(self.lambdas, self.lambdas[1:])):
            raise ValueError("lambdas must be strictly decreasing")

    def generators(self) -> frozenset:
        gens = {Monomial(self.alpha, 0, 0)}
        gens.update(Monomial(a, lam, 0) for a, lam in enumerate(self.lambdas))
        return frozenset(gens)

    def h_vector(self) -> tuple[int, ...]:
        """h(e) of the artinian quotient k[x,y]/staircase: the number of
        columns a with a <= e <= a + lambda_a - 1."""
        top = self.lambdas[0] - 1
        return tuple(
            sum(1 for a, lam in enumerate(self.lambdas) if a <= e <= a + lam - 1)
            for e in range(top + 1)
        )

    def to_json_dict(self) -> dict:
        return {"alpha": self.alpha, "lambdas": list(self.lambdas)}

    @classmethod
    def from_json_dict(cls, d: dict) -> "GinStaircase":
        return cls(alpha=d["alpha"], lambdas=tuple(d["lambdas"]))

    def csv_rows(self) -> list[tuple[int, int]]:
        return [(a, lam) for a, lam in enumerate(self.lambdas)]
