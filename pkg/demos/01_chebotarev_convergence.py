"""
Splitting statistics converge to the Chebotarev reference density
=================================================================

A prime p splits completely in the splitting field of a polynomial f
exactly when f mod p factors into distinct linear factors.  Chebotarev's
density theorem says the set of such primes has density 1/[L:Q], so
counting split primes below growing cutoffs should approach that value.
"""

from chebdens import (
    chebotarev_reference,
    natural_density_estimate,
    splitting_field_model,
)

MODELS = {
    "x^2 + 1 (degree 2)": splitting_field_model((1, 0, 1), 2),
    "x^3 - 2 (splitting field degree 6)": splitting_field_model((-2, 0, 0, 1), 6),
    "x^3 + x^2 - 2x - 1 (cyclic cubic)": splitting_field_model((-1, -2, 1, 1), 3),
}

for name, model in MODELS.items():
    reference = chebotarev_reference(model)
    print(f"\n{name}: reference density = {reference} = {float(reference):.6f}")
    print(f"{'cutoff':>10} {'members':>9} {'primes':>8} {'estimate':>10} {'|gap|':>10}")
    for cutoff in (10**4, 10**5, 10**6):
        est = natural_density_estimate(model, cutoff)
        gap = abs(est.value - float(reference))
        print(f"{cutoff:>10} {est.members:>9} {est.primes:>8} {est.value:>10.6f} {gap:>10.2e}")
