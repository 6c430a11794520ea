#!/usr/bin/env python3
"""Walkthrough: the generic initial staircase of the double points ideal.

Builds r points on the conic xz = y^2, computes the gin of the m-th
symbolic power two independent ways (random coordinate changes vs the
h-vector reconstruction), and checks the predicted corners.
"""

from conicgin import (
    artinian_h_vector,
    generic_gin,
    hilbert_function,
    shape_certificate,
    staircase_from_hilbert,
    uniform_conic_config,
)

r, m = 4, 2
cfg = uniform_conic_config(r, m, seed=0)
print(f"{r} points on xz = y^2 over GF({cfg.prime}), multiplicity {m}:")
for q, t in zip(cfg.points, cfg.t_values):
    print(f"  t = {t:6d}  ->  point {q}")

print("\nHilbert function of the symbolic power:")
for d in range(2 * m + 3):
    print(f"  dim I^({m})_{d} = {hilbert_function(cfg, d)}")

h = artinian_h_vector(cfg)
print(f"\nartinian h-vector: {h}  (sums to r*m(m+1)/2 = {sum(h)})")

fast = staircase_from_hilbert(h)
oracle = generic_gin(cfg, trials=3, seed=0)
print(f"h-vector route:  alpha={fast.alpha}  lambdas={fast.lambdas}")
print(f"oracle route:    alpha={oracle.alpha}  lambdas={oracle.lambdas}")
print(f"routes agree:    {fast == oracle}")

print("\nminimal generators of the gin:")
for g in sorted(oracle.generators()):
    print(f"  {g.text()}")

cert = shape_certificate(oracle, r, m)
print(f"\ncorner certificate: alpha = {cert.alpha} (expected {cert.expected_alpha}), "
      f"lambda0 = {cert.lambda0} (expected {cert.expected_lambda0}) "
      f"-> {'pass' if cert.passed else 'FAIL'}")
