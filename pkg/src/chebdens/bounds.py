"""Explicit constants for the index-bound pipeline over a splitting tower.

Starting from a positive density omega of primes that both lie in a set S
and split completely in a degree-m Galois extension, the pipeline picks the
minimal number r of linearly disjoint degree-t extensions that forces the
selection margin theta above omega/2, sets delta = omega/(2r), and produces
the universal divisor bound n = ((floor(1/delta) + 1)!)^d * rho(d) for the
closure index of a d-dimensional torus.  n is astronomically large in
general, so the factored form is primary and exact materialization is gated
by a digit limit.

All comparisons deciding r use exact integer powers; a float logarithm only
seeds the starting guess, after which minimality is proven by exact checks
at r and r-1.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .calculus import TowerSpec, as_density, tower_theta
from .errors import HypothesisFailureError, InconsistencyError, InvariantViolationError, ResourceLimitError
from .weyl import GroupConstants, RootSystemType, constants_for_group, parse_type

#: Largest r the exact search will certify before giving up.
DEFAULT_R_CAP = 100_000

#: Materialize n exactly only below this many decimal digits.
DEFAULT_MATERIALIZE_LIMIT = 100_000

_LOG10 = math.log(10.0)


@lru_cache(maxsize=256)
def _cached_factorial(k: int) -> int:
    return math.factorial(k)


def decimal_digits(n: int) -> int:
    """Exact decimal length of a nonnegative integer, without building its string."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    # bit_length * log10(2) underestimates by < 1; bracket exactly
    digits = max(1, n.bit_length() * 30103 // 100000)
    while 10**digits <= n:
        digits += 1
    while digits > 1 and 10 ** (digits - 1) > n:
        digits -= 1
    return digits


def decimal_str(n: int) -> str:
    """Decimal string of an integer of any size (lifts the conversion guard)."""
    get_limit = getattr(sys, "get_int_max_str_digits", None)
    if get_limit is None:
        return str(n)
    old = get_limit()
    try:
        sys.set_int_max_str_digits(max(old, decimal_digits(abs(n)) + 16))
        return str(n)
    finally:
        sys.set_int_max_str_digits(old)


def _reciprocal_floor(delta: Fraction) -> int:
    """floor(1/delta) for a positive rational delta, exactly."""
    return delta.denominator // delta.numerator


def _validate_delta(delta) -> Fraction:
    delta = as_density(delta)
    if delta == 0:
        raise ValueError("delta must be positive")
    return delta


@dataclass(frozen=True)
class FactoredBound:
    """The bound (factorial_of!)^power * times, kept in factored form."""

    factorial_of: int
    power: int
    times: int

    def value(self) -> int:
        return _cached_factorial(self.factorial_of) ** self.power * self.times

    def digit_count_estimate(self) -> int:
        """Decimal length from Stirling/lgamma; reliable away from digit boundaries."""
        log10 = (self.power * math.lgamma(self.factorial_of + 1) + math.log(self.times)) / _LOG10
        return int(log10) + 1

    def __str__(self) -> str:
        base = f"({self.factorial_of}!)^{self.power}"
        return base if self.times == 1 else f"{base} * {self.times}"


@dataclass(frozen=True)
class BoundReport:
    """All constants produced by the pipeline for one (type, m, omega, rho) input."""

    type: RootSystemType
    d: int
    c: int
    m: int
    t: int
    omega: Fraction
    r: int
    theta: Fraction
    delta: Fraction
    nu_arg: int
    rho: int
    n_factored: FactoredBound
    n_digits: int
    n_exact: int | None
    idele_index: int
    valuation_budget: int
    omega_provenance: str = "user"


def _condition(m: int, t: int, r: int, omega: Fraction) -> bool:
    """Exact test of (1/m) * (1 - 1/t)^r < omega / 2."""
    return 2 * omega.denominator * (t - 1) ** r < omega.numerator * m * t**r


def minimal_tower_count(m: int, t: int, omega, r_cap: int = DEFAULT_R_CAP) -> int:
    """Minimal r >= 1 with (1/m) * (1 - 1/t)^r < omega/2, certified exactly.

    omega must satisfy 0 < omega <= 1/m (it is the density of a subset of a
    set of density 1/m).  For very large t combined with tiny omega the
    certified answer would need integer powers beyond ``r_cap`` digits of
    work; that raises a resource error rather than an approximate answer.
    """
    m = int(m)
    t = int(t)
    if m < 1 or t < 2:
        raise ValueError("need m >= 1 and t >= 2")
    omega = as_density(omega)
    if omega == 0:
        raise HypothesisFailureError(
            "omega = 0 violates the positivity hypothesis \U0001d521_K(S∩Spl(M/K)) > 0"
        )
    if omega > Fraction(1, m):
        raise InconsistencyError(
            f"omega = {omega} exceeds the splitting-set density 1/m = 1/{m}"
        )
    if _condition(m, t, 1, omega):
        return 1
    if not _condition(m, t, r_cap, omega):
        raise ResourceLimitError(
            f"minimal r exceeds the certification cap {r_cap} for t = {t}; "
            "raise r_cap to spend the extra exact-arithmetic effort"
        )
    # condition is (1 - 1/t)^r < omega*m/2; seed r from logs of the big
    # integers (finite where float(omega) may underflow), then walk exactly
    log_target = (
        math.log(omega.numerator) - math.log(omega.denominator)
        + math.log(m) - math.log(2)
    )
    r = min(max(math.ceil(log_target / math.log1p(-1.0 / t)), 2), r_cap)
    a, b = omega.numerator, omega.denominator
    num = (t - 1) ** r  # (t-1)^r and t^r, updated incrementally while walking
    den = t**r
    while 2 * b * num >= a * m * den:
        r += 1
        num *= t - 1
        den *= t
    while r > 2:
        num_dn, den_dn = num // (t - 1), den // t
        if 2 * b * num_dn >= a * m * den_dn:
            break
        r -= 1
        num, den = num_dn, den_dn
    return r


def factorial_bound(delta) -> int:
    """(floor(1/delta) + 1)! -- divisible by every positive integer <= 1/delta + 1.

    Monotone under refinement: shrinking delta can only multiply the value,
    so the bound for a smaller delta is divisible by the bound for a larger
    one.
    """
    delta = _validate_delta(delta)
    return _cached_factorial(_reciprocal_floor(delta) + 1)


def index_divisor_bound(
    delta,
    d: int,
    rho: int = 1,
    materialize_limit: int = DEFAULT_MATERIALIZE_LIMIT,
) -> int | FactoredBound:
    """factorial_bound(delta)^d * rho: divisor bound for a rank-d torus closure index.

    Returns the exact integer when its decimal length fits under
    ``materialize_limit``; otherwise the factored form.  Fixing rho, the map
    delta -> bound is super-decreasing: the value at a larger delta divides
    the value at any smaller delta (factorial divisibility raised to the
    same power).
    """
    delta = _validate_delta(delta)
    d = int(d)
    rho = int(rho)
    if d < 1:
        raise ValueError("d must be a positive integer")
    if rho < 1:
        raise ValueError("rho must be a positive integer")
    factored = FactoredBound(_reciprocal_floor(delta) + 1, d, rho)
    if factored.digit_count_estimate() <= materialize_limit:
        return factored.value()
    return factored


def idele_index_bound(delta) -> int:
    """floor(1/delta): the closure index is an integer bounded by 1/delta."""
    delta = _validate_delta(delta)
    return _reciprocal_floor(delta)


def csp_bound_pipeline(
    rst_type: RootSystemType | str,
    m: int,
    omega,
    rho: int = 1,
    materialize_limit: int = DEFAULT_MATERIALIZE_LIMIT,
    r_cap: int = DEFAULT_R_CAP,
    omega_provenance: str = "user",
) -> BoundReport:
    """Run the whole constant pipeline for one group type and base configuration.

    Looks up (d, w, c) for the type, sets t = w (a generic maximal torus has
    splitting degree w over the inner-form base), certifies the minimal r,
    checks theta > omega/2 (guaranteed by the choice of r), and assembles
    delta = omega/(2r) with the factored divisor bound, the idele-index
    bound floor(1/delta), and the valuation budget c*r needed to pin down r
    independent generic tori.

    rho is a caller-supplied positive integer (default 1): the rank-only
    cohomology factor rho(d) has no closed form here, so reports built with
    the default understate n by exactly that factor.
    """
    constants: GroupConstants = constants_for_group(parse_type(rst_type))
    m = int(m)
    omega = as_density(omega)
    t = constants.t
    r = minimal_tower_count(m, t, omega, r_cap=r_cap)
    theta_bound = tower_theta(omega, TowerSpec(m=m, t=t, r=r))
    if not theta_bound.theta > omega / 2:
        raise InvariantViolationError(
            f"theta = {theta_bound.theta} failed to exceed omega/2 = {omega / 2} "
            f"despite minimal r = {r}; this should be impossible"
        )
    delta = omega / (2 * r)
    nu_arg = _reciprocal_floor(delta) + 1
    rho = int(rho)
    if rho < 1:
        raise ValueError("rho must be a positive integer")
    factored = FactoredBound(nu_arg, constants.d, rho)
    if factored.digit_count_estimate() <= materialize_limit:
        n_exact: int | None = factored.value()
        n_digits = decimal_digits(n_exact)
    else:
        n_exact = None
        n_digits = factored.digit_count_estimate()
    return BoundReport(
        type=parse_type(rst_type),
        d=constants.d,
        c=constants.c,
        m=m,
        t=t,
        omega=omega,
        r=r,
        theta=theta_bound.theta,
        delta=delta,
        nu_arg=nu_arg,
        rho=rho,
        n_factored=factored,
        n_digits=n_digits,
        n_exact=n_exact,
        idele_index=idele_index_bound(delta),
        valuation_budget=constants.c * r,
        omega_provenance=omega_provenance,
    )


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def report_to_dict(report: BoundReport) -> dict:
    """JSON-ready dictionary: rationals as 'p/q' strings, big integers as strings."""
    return {
        "type": str(report.type),
        "d": report.d,
        "c": report.c,
        "m": report.m,
        "t": report.t,
        "omega": _fraction_str(report.omega),
        "r": report.r,
        "theta": _fraction_str(report.theta),
        "delta": _fraction_str(report.delta),
        "nu_arg": report.nu_arg,
        "rho": report.rho,
        "n_factored": {
            "factored": {
                "factorial_of": report.n_factored.factorial_of,
                "power": report.n_factored.power,
                "times": report.n_factored.times,
            }
        },
        "n_digits": report.n_digits,
        "n_exact": decimal_str(report.n_exact) if report.n_exact is not None else None,
        "idele_index": report.idele_index,
        "valuation_budget": report.valuation_budget,
        "omega_provenance": report.omega_provenance,
    }
