"""
The explicit constant pipeline, step by step
============================================

Given a group type, the degree m of the base Galois extension, and a
positive density omega of useful primes, the pipeline chooses the smallest
number r of linearly disjoint degree-t extensions (t = Weyl order) that
pushes the never-splits mass below omega/2, yielding a selection margin
theta > omega/2, a per-extension density floor delta = omega/(2r), and the
super-decreasing divisor bound n = ((floor(1/delta)+1)!)^d * rho(d).
"""

import json
from fractions import Fraction

from chebdens import csp_bound_pipeline, report_to_dict
from chebdens.calculus import TowerSpec, disjoint_union_density, tower_theta

# Walk the A1, omega = 1/2 case by hand first.
m, t, omega = 1, 2, Fraction(1, 2)
for r in (1, 2, 3):
    mass = Fraction(t - 1, t) ** r / m
    print(f"r = {r}: never-splits mass (1 - 1/t)^r / m = {mass}  "
          f"({'<' if mass < omega / 2 else '>='} omega/2 = {omega / 2})")

spec = TowerSpec(m=m, t=t, r=3)
print("union density of the three splitting sets:", disjoint_union_density(spec))
print("selection margin:", tower_theta(omega, spec))

# The pipeline packages the same steps for any type.
for label, omega in (("A1", Fraction(1, 2)), ("A1", Fraction(1)), ("G2", Fraction(1, 4))):
    report = csp_bound_pipeline(label, 1, omega)
    print(f"\n{label}, omega = {omega}:")
    print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
