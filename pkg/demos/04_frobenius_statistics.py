"""
Frobenius cycle types equidistribute by conjugacy class size
============================================================

For x^3 - 2 the splitting field has Galois group S3.  The factorization
shape of f mod p mirrors the cycle type of the Frobenius class at p, so the
three shapes should appear with frequencies 1/6, 3/6, 2/6 (the class sizes
of S3 divided by the group order).  Cycle-type membership is exactly the
generalized-progression predicate exposed by the library.
"""

from collections import Counter

from chebdens import (
    cycle_type_predicate,
    frobenius_cycle_type,
    natural_density_estimate,
    primes_upto,
    splitting_field_model,
)

CUTOFF = 10**5
model = splitting_field_model((-2, 0, 0, 1), 6)

counts = Counter()
total = 0
for p in primes_upto(CUTOFF).tolist():
    if p in model.bad_primes:
        continue
    counts[frobenius_cycle_type(model, p).degrees] += 1
    total += 1

print(f"cycle-type frequencies for x^3 - 2, primes < {CUTOFF}:")
for degrees, reference in (((1, 1, 1), 1 / 6), ((1, 2), 1 / 2), ((3,), 1 / 3)):
    observed = counts[degrees] / total
    print(f"  {str(degrees):>10}: observed {observed:.4f}  reference {reference:.4f}")

# the same numbers through the progression predicate
pred = cycle_type_predicate(model, (1, 2))
est = natural_density_estimate(pred, CUTOFF)
print(f"\npredicate density for shape (1, 2): {est.value:.4f}")
