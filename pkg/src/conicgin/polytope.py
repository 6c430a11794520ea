"""Newton polytopes of gin staircases, their 1/m scalings, and the limiting
shape they converge to. Everything on the verification path is exact
rational arithmetic; floats appear only when SVG pixel coordinates are
formatted."""

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import DomainError
from .staircase import GinStaircase


@dataclass(frozen=True)
class LimitShape:
    """Region above the segment from (gamma1, 0) to (0, gamma2) in the
    nonnegative quadrant."""

    gamma1: Fraction
    gamma2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "gamma1", Fraction(self.gamma1))
        object.__setattr__(self, "gamma2", Fraction(self.gamma2))
        if self.gamma1 <= 0 or self.gamma2 <= 0:
            raise ValueError("intercepts must be positive")

    def contains(self, u, v) -> bool:
        u, v = Fraction(u), Fraction(v)
        if u < 0 or v < 0:
            return False
        return u / self.gamma1 + v / self.gamma2 >= 1


@dataclass(frozen=True)
class StaircasePolytope:
    """Staircase region of a monomial ideal in two effective variables,
    stored by its corners (a, lambda_a) plus (alpha, 0); membership is the
    union of translated quadrants, optionally rescaled."""

    corners: tuple[tuple[int, int], ...]
    scale: Fraction = Fraction(1)

    @classmethod
    def from_staircase(cls, s: GinStaircase, scale=Fraction(1)) -> "StaircasePolytope":
        corners = tuple((a, lam) for a, lam in enumerate(s.lambdas)) + ((s.alpha, 0),)
        return cls(corners=corners, scale=Fraction(scale))

    def contains(self, u, v) -> bool:
        u, v = Fraction(u) / self.scale, Fraction(v) / self.scale
        if u < 0 or v < 0:
            return False
        alpha = self.corners[-1][0]
        if u >= alpha:
            return True
        return v >= self.corners[floor(u)][1]


def limit_shape(r: int) -> LimitShape:
    """Limiting shape for r points on an irreducible conic: intercepts
    (2, r/2) for r >= 4 and (r/2, 2) for r in {2, 3}."""
    if r < 2:
        raise DomainError(f"need r >= 2, got r={r}")
    if r >= 4:
        return LimitShape(Fraction(2), Fraction(r, 2))
    return LimitShape(Fraction(r, 2), Fraction(2))


def gamma_product_check(ls: LimitShape, r: int) -> bool:
    """True iff gamma1 * gamma2 == r exactly; the certificate that a single
    boundary line cuts out the limiting polytope."""
    return ls.gamma1 * ls.gamma2 == r


def scaled_intercepts(s: GinStaircase, m: int) -> tuple[Fraction, Fraction]:
    """Axis intercepts (alpha/m, lambda_0/m) of the 1/m-scaled staircase."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return Fraction(s.alpha, m), Fraction(s.lambdas[0], m)


def covolume(s: GinStaircase) -> int:
    """Area of the staircase complement in the positive quadrant, which is
    the colength sum(lambdas)."""
    return sum(s.lambdas)


@dataclass(frozen=True)
class ConvergenceRow:
    m: int
    alpha: int
    lambda0: int
    gamma1_m: Fraction
    gamma2_m: Fraction
    dev1: Fraction
    dev2: Fraction
    covol_scaled: Fraction


def convergence_report(r: int, staircases) -> list[ConvergenceRow]:
    """Per-m scaled intercepts, deviations from the limit, and scaled
    covolume (which tends to r/2)."""
    limit = limit_shape(r)
    rows = []
    for m, s in staircases:
        g1, g2 = scaled_intercepts(s, m)
        rows.append(ConvergenceRow(
            m=m,
            alpha=s.alpha,
            lambda0=s.lambdas[0],
            gamma1_m=g1,
            gamma2_m=g2,
            dev1=abs(g1 - limit.gamma1),
            dev2=abs(g2 - limit.gamma2),
            covol_scaled=Fraction(covolume(s), m * m),
        ))
    return rows


REPORT_COLUMNS = ("m", "alpha", "lambda0", "gamma1_m", "gamma2_m",
                  "dev1", "dev2", "covol_scaled")


def report_csv(rows) -> str:
    lines = [",".join(REPORT_COLUMNS)]
    for row in rows:
        lines.append(",".join(str(getattr(row, col)) for col in REPORT_COLUMNS))
    return "\n".join(lines) + "\n"


# --- SVG emission -----------------------------------------------------------

SVG_SIZE = 600
SVG_MARGIN = 40


def _axis_bound(values) -> int:
    return int(floor(max(values))) + 1


def _fmt(v: Fraction) -> str:
    return f"{float(v):.2f}"


def limit_figure_svg(r: int, staircases) -> str:
    """Scaled staircases in light strokes with the heavy limit line on top,
    600x600 viewport with a 40px margin and inverted y axis."""
    limit = limit_shape(r)
    xs = [limit.gamma1] + [Fraction(s.alpha, m) for m, s in staircases]
    ys = [limit.gamma2] + [Fraction(s.lambdas[0], m) for m, s in staircases]
    x_max = _axis_bound(xs)
    y_max = _axis_bound(ys)
    span = SVG_SIZE - 2 * SVG_MARGIN

    def px(u) -> Fraction:
        return SVG_MARGIN + Fraction(u) * span / x_max

    def py(v) -> Fraction:
        return SVG_SIZE - SVG_MARGIN - Fraction(v) * span / y_max

    origin_x, origin_y = px(0), py(0)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" '
        f'height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f'<rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'<line class="axis" x1="{_fmt(origin_x)}" y1="{_fmt(origin_y)}" '
        f'x2="{_fmt(px(x_max))}" y2="{_fmt(origin_y)}" stroke="black" stroke-width="1"/>',
        f'<line class="axis" x1="{_fmt(origin_x)}" y1="{_fmt(origin_y)}" '
        f'x2="{_fmt(origin_x)}" y2="{_fmt(py(y_max))}" stroke="black" stroke-width="1"/>',
    ]
    for tick in range(x_max + 1):
        x = _fmt(px(tick))
        out.append(f'<line x1="{x}" y1="{_fmt(origin_y)}" x2="{x}" '
                   f'y2="{_fmt(origin_y + 5)}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{x}" y="{_fmt(origin_y + 18)}" font-size="12" '
                   f'text-anchor="middle">{tick}</text>')
    for tick in range(y_max + 1):
        y = _fmt(py(tick))
        out.append(f'<line x1="{_fmt(origin_x)}" y1="{y}" x2="{_fmt(origin_x - 5)}" '
                   f'y2="{y}" stroke="black" stroke-width="1"/>')
        out.append(f'<text x="{_fmt(origin_x - 8)}" y="{y}" font-size="12" '
                   f'text-anchor="end" dominant-baseline="middle">{tick}</text>')
    for m, s in staircases:
        pts = [(Fraction(0), Fraction(s.lambdas[0], m))]
        for a in range(1, s.alpha):
            pts.append((Fraction(a, m), Fraction(s.lambdas[a - 1], m)))
            pts.append((Fraction(a, m), Fraction(s.lambdas[a], m)))
        pts.append((Fraction(s.alpha, m), Fraction(s.lambdas[-1], m)))
        pts.append((Fraction(s.alpha, m), Fraction(0)))
        path = " ".join(f"{_fmt(px(u))},{_fmt(py(v))}" for u, v in pts)
        out.append(f'<polyline class="staircase" points="{path}" fill="none" '
                   f'stroke="#999999" stroke-width="1"/>')
    out.append(
        f'<line class="limit-line" x1="{_fmt(px(limit.gamma1))}" y1="{_fmt(origin_y)}" '
        f'x2="{_fmt(origin_x)}" y2="{_fmt(py(limit.gamma2))}" stroke="black" stroke-width="3"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
