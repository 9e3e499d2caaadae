"""
Union density for linearly disjoint quadratic fields
====================================================

Q(sqrt 2), Q(sqrt 3), Q(sqrt 5) are linearly disjoint over Q, so any ell of
their splitting sets intersect in a set of density 1/2^ell, and
inclusion-exclusion gives a closed form for the union:

    d(A1 u A2 u A3) = 1 - (1 - 1/2)^3 = 7/8.

The same number falls out of the empirical counts.
"""

import numpy as np

from chebdens import (
    TowerSpec,
    disjoint_union_density,
    inclusion_exclusion_density,
    intersect_splitting,
    natural_density_estimate,
    primes_upto,
    split_mask,
    splitting_field_model,
)
from fractions import Fraction
from itertools import combinations

CUTOFF = 10**6
models = {d: splitting_field_model((-d, 0, 1), 2) for d in (2, 3, 5)}

# exact side: the closed form and the raw alternating sum agree
exact = disjoint_union_density(TowerSpec(m=1, t=2, r=3))
table = {}
for size in range(1, 4):
    for combo in combinations((1, 2, 3), size):
        table[combo] = Fraction(1, 2**size)
print("closed form      :", exact)
print("alternating sum  :", inclusion_exclusion_density(table))

# empirical side: union of the three split masks
primes = primes_upto(CUTOFF)
union = np.zeros(primes.shape, dtype=bool)
for model in models.values():
    union |= split_mask(model, primes)
print(f"empirical (<{CUTOFF}):", union.sum() / primes.size)

# pairwise intersections really do look like density 1/4
for a, b in combinations((2, 3, 5), 2):
    pair = intersect_splitting([models[a], models[b]])
    est = natural_density_estimate(pair, CUTOFF)
    print(f"Spl(x^2-{a}) n Spl(x^2-{b}): {est.value:.6f}  (reference 0.25)")
