"""
Why the Dirichlet ratio curve is reported whole
===============================================

The Dirichlet density is the limit of xi_A(s) / log(1/(s-1)) as s -> 1+,
where xi_A(s) sums p^(-s) over the member primes.  Truncating the sum at a
cutoff X caps how small an s is informative: once log(1/(s-1)) dwarfs
(s-1)*log(X), the truncated ratio undershoots badly.  The coverage column
(the captured fraction of the untruncated full-prime sum) makes the loss
visible, which is why tight checks use natural density instead.
"""

from chebdens import abelian_model, dirichlet_density_estimate, natural_density_estimate

MOD4 = abelian_model(4, [1])  # primes p = 1 mod 4, true density 1/2

for cutoff in (10**5, 10**6):
    est = dirichlet_density_estimate(MOD4, s_grid=(1.2, 1.1, 1.05, 1.02, 1.01), cutoff=cutoff)
    print(f"\ncutoff = {cutoff}")
    print(f"{'s':>6} {'ratio':>9} {'coverage':>9}")
    for s, ratio, cov in zip(est.s_grid, est.ratios, est.coverage):
        print(f"{s:>6} {ratio:>9.4f} {cov:>9.4f}")
    natural = natural_density_estimate(MOD4, cutoff)
    print(f"natural density at the same cutoff: {natural.value:.6f}  (limit is 0.5)")
