"""Dimension estimators and inequality verifiers built on exact counts.

Box-counting estimates come from pointwise log-ratios rather than
regression: the lower/upper dimension are a liminf/limsup, so the min
and max of ``log N(F, s) / -log s`` over the finest half of a profile
converge to them and stay deterministic.  Logarithms of rationals are
taken as ``log(num) - log(den)`` so arbitrarily deep scales (denominators
with hundreds of digits) never underflow.

Every integer inequality here (product-count bounds, zoom-witness
ratios, the geometric chain) is checked exactly; only dimension values
themselves are floats, with tolerances pinned by the callers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .numerics import format_rational
from .covers import (
    CoverProfile,
    local_cover_count,
    min_cover_count,
    window_stats,
)
from .setlab import ATermRule, CantorSet, PairSpec, generators_from_pair

__all__ = [
    "DimEstimate",
    "AttainmentReport",
    "AssouadWindow",
    "AssouadReport",
    "EquiHomReport",
    "WitnessEntry",
    "ln",
    "box_dims_from_profile",
    "box_dims_from_generators",
    "box_dims_from_exponents",
    "theorem42_ratios",
    "attainment_check",
    "assouad_windows",
    "assouad_lower_witness",
    "equihom_check",
    "product_bracket",
    "verify_product_theorem",
    "self_product_dims",
    "self_product_local_witness",
]

ZERO = Fraction(0)
ONE = Fraction(1)
LOG2 = math.log(2.0)


def ln(value: Fraction | int) -> float:
    """log of a positive rational, safe for values far below float range."""
    value = Fraction(value)
    if value <= 0:
        raise InvalidInputError("logarithm of a non-positive value")
    return math.log(value.numerator) - math.log(value.denominator)


@dataclass(frozen=True)
class DimEstimate:
    lower: float
    upper: float
    scale_range: tuple[Fraction, Fraction]
    method: str  # "profile" | "formula"

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper:
            raise InvalidInputError(
                f"estimate must satisfy 0 <= lower <= upper, got ({self.lower}, {self.upper})")

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "method": self.method}


@dataclass(frozen=True)
class AttainmentReport:
    """Range of the compensated counts N(F, s) * s**d over a profile.

    A bounded c_max/c_min ratio down the profile is the finite-scale
    signature of the scaling N ~ s**(-d) holding with uniform constants.
    """

    exponent: float
    c_min: float
    c_max: float
    scale_range: tuple[Fraction, Fraction]


@dataclass(frozen=True)
class AssouadWindow:
    delta: Fraction
    rho: Fraction
    sup_sampled: int
    slope: float


@dataclass(frozen=True)
class AssouadReport:
    """Window-by-window local scaling exponents.

    ``slope = log(sup) / log(delta/rho)`` overshoots the true local
    exponent at small delta/rho ratios (the uniform constant in the
    definition is invisible to a single window), so the lambda-based
    upper bound is reported alongside rather than enforced per window.
    """

    windows: tuple[AssouadWindow, ...]
    best_slope: float
    upper_bound_from_lambda: float | None


@dataclass(frozen=True)
class EquiHomReport:
    """Largest sampled sup/inf ratio of local cover counts on a grid."""

    max_ratio: Fraction
    window_count: int
    constants: tuple[Fraction, int, int]  # (M_found, c1, c2); c1 = c2 = 1 here


@dataclass(frozen=True)
class WitnessEntry:
    m: int
    run_start_level: int | None
    delta: Fraction | None
    rho: Fraction | None
    count_delta: int | None
    count_rho: int | None
    ratio: Fraction | None
    bound: int
    passed: bool
    skipped: bool = False


# ---------------------------------------------------------------------------
# box-counting estimators


def box_dims_from_profile(profile: CoverProfile) -> DimEstimate:
    """Min/max of log N / -log s over the finest half of the profile.

    Needs at least 3 entries spanning at least two decades of scale.
    """
    entries = profile.entries
    if len(entries) < 3:
        raise InvalidInputError("profile needs at least 3 entries")
    if entries[0].scale < 100 * entries[-1].scale:
        raise InvalidInputError("profile must span at least two decades of scale")
    half = [e for e in entries[len(entries) // 2:] if e.scale < 1]
    if not half:
        raise InvalidInputError("finest half of the profile has no scales below 1")
    slopes = [ln(e.countN) / -ln(e.scale) for e in half]
    return DimEstimate(min(slopes), max(slopes),
                       (half[0].scale, half[-1].scale), "profile")


def box_dims_from_generators(seq, n_max: int) -> DimEstimate:
    """Min/max of n*log2 / -sum_{i<=n} log(lambda_i) over n in [n_max/2, n_max].

    Works straight off the generator ratios; no covers are computed.
    """
    if n_max < 2:
        raise InvalidInputError("n_max must be >= 2")
    start = max(2, n_max // 2)
    log_sum = 0.0
    ratios = []
    for i in range(1, n_max + 1):
        log_sum += ln(seq.lambda_at(i))
        if i >= start:
            ratios.append(i * LOG2 / -log_sum)
    return DimEstimate(min(ratios), max(ratios),
                       (seq.length(start), seq.length(n_max)), "formula")


def box_dims_from_exponents(exponent_fn, alpha: Fraction, n_max: int) -> DimEstimate:
    """Box-dimension estimate for a q-power construction from its exponents.

    For generators ``lambda_i = q**e_i`` the log-ratio collapses to
    ``alpha * n / (e_1 + ... + e_n)`` with ``alpha = -log2/log q``, which
    is exact rational arithmetic.  This is the route that supports bases
    like ``q = 2**(-1/alpha)`` where the generators themselves are
    irrational: only the exponents and alpha enter.  Since the scales
    themselves are irrational here, ``scale_range`` records the level
    window instead.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise InvalidInputError(f"alpha must lie in (0, 1], got {alpha}")
    if n_max < 2:
        raise InvalidInputError("n_max must be >= 2")
    start = max(2, n_max // 2)
    exp_sum = 0
    ratios = []
    for i in range(1, n_max + 1):
        exp = exponent_fn(i)
        if exp < 1:
            raise InvalidInputError(f"exponent e[{i}] = {exp} must be >= 1")
        exp_sum += exp
        if i >= start:
            ratios.append(alpha * i / exp_sum)
    low, high = min(ratios), max(ratios)
    return DimEstimate(float(low), float(high),
                       (Fraction(start), Fraction(n_max)), "formula")


def theorem42_ratios(rule: ATermRule, k_max: int) -> tuple[list[Fraction], list[Fraction]]:
    """Exact partial-sum ratios whose limsups set the two box dimensions.

    For side C the k-th ratio is (a_1 + a_3 + ... + a_{2k-1}) / s_{2k-1};
    for side D it is (a_2 + a_4 + ... + a_{2k}) / s_{2k}.  Multiplying the
    limsup by -log2/log q gives the corresponding upper box dimension.
    """
    if k_max < 2:
        raise InvalidInputError("k_max must be >= 2")
    c_ratios: list[Fraction] = []
    d_ratios: list[Fraction] = []
    odd = even = 0
    for k in range(1, k_max + 1):
        odd += rule.term(2 * k - 1)
        c_ratios.append(Fraction(odd, odd + even))
        even += rule.term(2 * k)
        d_ratios.append(Fraction(even, odd + even))
    return c_ratios, d_ratios


def attainment_check(profile: CoverProfile, exponent: float) -> AttainmentReport:
    """Extremes of N(F, s) * s**exponent over the whole profile (report only)."""
    if not profile.entries:
        raise InvalidInputError("profile is empty")
    values = [math.exp(ln(e.countN) + exponent * ln(e.scale)) for e in profile.entries]
    return AttainmentReport(exponent, min(values), max(values),
                            (profile.entries[0].scale, profile.entries[-1].scale))


# ---------------------------------------------------------------------------
# local (Assouad-flavoured) analysis


def assouad_windows(handle, windows, samples: int = 64, seed: int = 0) -> AssouadReport:
    """Sampled local-cover slopes over a list of (delta, rho) windows."""
    entries = []
    for delta, rho in sorted(windows, reverse=True):
        delta, rho = Fraction(delta), Fraction(rho)
        stat = window_stats(handle, delta, rho, samples=samples, seed=seed)
        if stat.sup_sampled > 1 and delta > rho:
            slope = ln(stat.sup_sampled) / ln(delta / rho)
        else:
            slope = 0.0
        entries.append(AssouadWindow(delta, rho, stat.sup_sampled, slope))
    best = max((w.slope for w in entries), default=0.0)
    bound = None
    if isinstance(handle, CantorSet):
        bound = -LOG2 / ln(handle.seq.uniform_upper_bound())
    return AssouadReport(tuple(entries), best, bound)


def assouad_lower_witness(spec: PairSpec, side: str, m_max: int,
                          scan_cap: int = 4096) -> list[WitnessEntry]:
    """Exact zoom-witness ratios D(C, rho_m) / D(C, delta_m) >= 2**(m-1).

    The witness for depth m sits where m consecutive generators equal q:
    with delta_m = L_j at the run start and rho_m = L_{j+m}, the cover
    counts must jump by at least 2**(m-1).  Runs are located by scanning
    the exponent sequence; if no run of length m exists within the scan
    cap the entry is reported as skipped.
    """
    if m_max < 1:
        raise InvalidInputError("m_max must be >= 1")
    seq = generators_from_pair(spec, side)
    cset = CantorSet(seq)
    exponent = spec.c_exponent if side.upper() == "C" else spec.d_exponent
    entries: list[WitnessEntry] = []
    for m in range(1, m_max + 1):
        run_start = None
        run_len = 0
        for i in range(1, scan_cap + 1):
            if exponent(i) == 1:
                run_len += 1
                if run_len == m:
                    run_start = i - m + 1
                    break
            else:
                run_len = 0
        if run_start is None:
            entries.append(WitnessEntry(m, None, None, None, None, None, None,
                                        2 ** (m - 1), False, skipped=True))
            continue
        j = run_start - 1
        delta = seq.length(j)
        rho = seq.length(j + m)
        count_delta = min_cover_count(cset, delta)
        count_rho = min_cover_count(cset, rho)
        ratio = Fraction(count_rho, count_delta)
        bound = 2 ** (m - 1)
        entries.append(WitnessEntry(m, j, delta, rho, count_delta, count_rho,
                                    ratio, bound, ratio >= bound))
    return entries


def equihom_check(handle, grid, samples: int = 64, seed: int = 0) -> EquiHomReport:
    """Max sampled sup/inf ratio of local cover counts over a window grid.

    This is the c1 = c2 = 1 diameter-count form of the local-uniformity
    property; for generalised Cantor sets the ratio is at most 6 at every
    window, hence on any sampled grid.
    """
    max_ratio = Fraction(1)
    count = 0
    for delta, rho in grid:
        stat = window_stats(handle, Fraction(delta), Fraction(rho),
                            samples=samples, seed=seed)
        ratio = Fraction(stat.sup_sampled, stat.inf_sampled)
        max_ratio = max(max_ratio, ratio)
        count += 1
    return EquiHomReport(max_ratio, count, (max_ratio, 1, 1))


# ---------------------------------------------------------------------------
# products


def product_bracket(profile_f: CoverProfile, profile_g: CoverProfile,
                    delta: Fraction, m1: Fraction, m2: Fraction) -> tuple[int, int]:
    """Integer bracket for the product set's cover count D(F x G, delta).

        D(F, 8*delta/m1) * D(G, 8*delta/m1)
            <= D(F x G, delta) <=
        D(F, delta/(2*m2)) * D(G, delta/(2*m2))

    ``m1 <= m2`` are the product-metric constants; a rational m2 that
    over-estimates the true one (3/2 for the Euclidean sqrt(2)) keeps all
    scale arithmetic rational and only weakens the upper bound.  Scales
    at or beyond the component diameter contribute a factor of exactly 1;
    deltas at or beyond the product diameter short-circuit to (1, 1).
    """
    delta, m1, m2 = Fraction(delta), Fraction(m1), Fraction(m2)
    if delta <= 0:
        raise InvalidInputError("delta must be positive")
    if not 0 < m1 <= m2:
        raise InvalidInputError("product metric constants need 0 < m1 <= m2")
    if delta >= m2:
        return (1, 1)

    def factor(profile: CoverProfile, scale: Fraction) -> int:
        if scale >= 1:
            return 1
        return profile.countD_at(scale)

    low_scale = 8 * delta / m1
    high_scale = delta / (2 * m2)
    lower = factor(profile_f, low_scale) * factor(profile_g, low_scale)
    upper = factor(profile_f, high_scale) * factor(profile_g, high_scale)
    return (lower, upper)


def verify_product_theorem(spec: PairSpec, j_values, threads: int = 1) -> dict:
    """Exact check of 2**(j+a1-3) <= D(C, q**j) * D(D, q**j) <= 2**(j+a1).

    The bound is only claimed from j = s_2 on; smaller j are reported as
    skipped.  Counts are exact; the check is integer arithmetic.
    """
    set_c = CantorSet(generators_from_pair(spec, "C"))
    set_d = CantorSet(generators_from_pair(spec, "D"))
    a1 = spec.a(1)
    s2 = spec.s(2)
    js = sorted(set(int(j) for j in j_values))

    def check(j: int) -> dict:
        scale = spec.q**j
        c_count = min_cover_count(set_c, scale)
        d_count = min_cover_count(set_d, scale)
        product = c_count * d_count
        lower = 2 ** (j + a1 - 3)
        upper = 2 ** (j + a1)
        return {
            "j": j,
            "scale": format_rational(scale),
            "countC": c_count,
            "countD": d_count,
            "product": product,
            "lower": lower,
            "upper": upper,
            "pass": lower <= product <= upper,
        }

    tested = [j for j in js if j >= s2]
    skipped = [j for j in js if j < s2]
    if threads > 1 and len(tested) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(check, tested))
    else:
        results = [check(j) for j in tested]
    entries = [{"j": j, "skipped": True} for j in skipped] + results
    entries.sort(key=lambda e: e["j"])
    overall = bool(tested) and all(e["pass"] for e in results)
    return {
        "check": "theorem41",
        "claim": "2^(j+a1-3) <= D(C,q^j)*D(D,q^j) <= 2^(j+a1) for all j >= s_2",
        "params": {**spec.describe(), "a1": a1, "s2": s2,
                   "j_min": js[0] if js else None, "j_max": js[-1] if js else None},
        "entries": entries,
        "pass": overall,
    }


def self_product_dims(profile: CoverProfile) -> DimEstimate:
    """Box-dimension estimate for F x F: exactly double the 1D estimate.

    Valid because cover counts of a self-product are bracketed between
    squared 1D counts at comparable scales, which doubles both the liminf
    and the limsup of the log-ratio.
    """
    est = box_dims_from_profile(profile)
    return DimEstimate(2 * est.lower, 2 * est.upper, est.scale_range, est.method)


def self_product_local_witness(handle, x: Fraction, delta: Fraction, rho: Fraction,
                               m1: Fraction = ONE, m2: Fraction = Fraction(3, 2)) -> dict:
    """Reported (not asserted) local product bound at the diagonal point (x, x):
    a window count v for F forces at least v**2 on the corresponding
    product window.  Purely informational output."""
    v = local_cover_count(handle, x, delta, rho)
    m1, m2 = Fraction(m1), Fraction(m2)
    return {
        "x": format_rational(Fraction(x)),
        "delta": format_rational(Fraction(delta)),
        "rho": format_rational(Fraction(rho)),
        "local_count": v,
        "product_window_lower_bound": v * v,
        "product_window": {
            "delta": format_rational(m2 * Fraction(delta)),
            "rho": format_rational(m1 * Fraction(rho) / 4),
        },
    }
