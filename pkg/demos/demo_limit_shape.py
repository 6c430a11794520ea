#!/usr/bin/env python3
"""Walkthrough: scaled Newton polytopes closing in on the limiting shape.

For r points on a conic the 1/m-scaled gin staircases keep their x-intercept
pinned while the y-intercept falls to the limit like 1/m. Writes the overlay
figure next to this script.
"""

from pathlib import Path

from conicgin import (
    convergence_report,
    gamma_product_check,
    hilbert_staircase,
    limit_figure_svg,
    limit_shape,
    report_csv,
    uniform_conic_config,
)

r, m_max = 6, 4
stairs = [(m, hilbert_staircase(uniform_conic_config(r, m)))
          for m in range(1, m_max + 1)]

limit = limit_shape(r)
print(f"limiting shape for r={r}: boundary through "
      f"({limit.gamma1}, 0) and (0, {limit.gamma2}); "
      f"gamma1*gamma2 = r: {gamma_product_check(limit, r)}")

rows = convergence_report(r, stairs)
print("\n" + report_csv(rows))

out = Path(__file__).with_name(f"limit_r{r}.svg")
out.write_text(limit_figure_svg(r, stairs))
print(f"figure written to {out}")
