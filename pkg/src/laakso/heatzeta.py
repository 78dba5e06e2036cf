"""Heat-kernel trace, spectral zeta function, poles, and small-time asymptotics.

The heat trace is Z(t) = sum_k g_k exp(-E_k t) over the full spectrum
(lambda = 0 included), evaluated with certified truncation bounds: each
shape family's tail is dominated by a geometric series once the quadratic
eigenvalue growth is linearized past the cut, and the remaining levels are
dominated through I_n >= 2 I_{n-1}.

The spectral zeta function zeta_L(s) = sum g_k E_k^{-s} (zero mode excluded)
has two independent evaluations:

  * direct: family-by-family partial power sums finished with
    Euler-Maclaurin tails, levels summed until geometric domination;
  * closed: zeta_R(2s) pi^(-2s) times a bracket that resolves, for a
    sequence of period p with block product P, into finitely many geometric
    series in w = 2^p P^(1-2s) and v = 2^p P^(-2s).  This
    rational-in-exponentials form is also the meromorphic continuation,
    which is how the constant zeta_L(0) is obtained.

The closed form's denominators vanish on two vertical lattices,
Re s = d_s/2 (from w) and Re s = p log2 / (2 log P) (from v), spaced
pi / log P apart in the imaginary direction.  For p = 1 that spacing equals
the familiar 2 pi / log r^2; for longer periods the actual lattice is p
times finer than the coarse progression, and keeping the finer lattice is
what makes the residue expansion track the directly-summed trace.  Residues
at those poles, plus the s = 1/2 and s = 0 contributions, give the small-t
expansion of Z(t) used by the leading-term evaluators.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionUndefinedError,
    DivergenceError,
    PoleError,
    TailToleranceError,
    ValidationError,
)
from .sequences import EXPLICIT, JSequence, dimensions, parse_sequence
from .special import complex_gamma, riemann_zeta
from .spectrum import SpectrumTable

_PI_SQ = math.pi * math.pi
_LOG_PI_SQ = math.log(_PI_SQ)
_EXP_FLOOR = 745.0  # exp(-745) is the smallest normal-ish double


@dataclass(frozen=True)
class HeatTraceSample:
    t: float
    z: float
    tail_bound: float
    level_cap: int | None = None


@dataclass(frozen=True)
class PoleLattice:
    """Arithmetic progression of zeta poles governing the small-t behavior."""

    real_part: float  # log(2r) / log(r^2) = d_s / 2
    spacing: float  # 2 pi / log(r^2)
    members: tuple[complex, ...]


@dataclass(frozen=True)
class _Family:
    """One eigenvalue family: log of count, log of the quadratic scale c
    (eigenvalues are c (k+offset)^2), the half-integer offset, first k."""

    log_count: float
    log_c: float
    offset: float
    kstart: int


def _level_families(seq: JSequence, n: int, scale_prev: int, scale: int) -> list[_Family]:
    log_c = _LOG_PI_SQ + 2.0 * math.log(scale)
    jn = seq.j(n)
    fams = [_Family(n * math.log(2.0), log_c, 0.5, 0)]  # V, count 2^n
    loop_count = (1 << (n - 1)) * (jn - 2) * scale_prev
    if loop_count:
        fams.append(_Family(math.log(loop_count), log_c, 0.0, 1))
    if n >= 2:
        cross_count = (1 << (n - 2)) * (scale_prev - 1)
        if cross_count:
            fams.append(_Family(math.log(2 * cross_count), log_c, 0.0, 1))
            fams.append(_Family(math.log(cross_count), log_c - math.log(4.0), 0.0, 1))
    return fams


def _level_weight(seq: JSequence, n: int, scale_prev: int) -> int:
    """Total multiplicity weight of level n: V + loops + 3x crosses."""
    jn = seq.j(n)
    total = 1 << n
    total += (1 << (n - 1)) * (jn - 2) * scale_prev
    if n >= 2:
        total += 3 * (1 << (n - 2)) * (scale_prev - 1)
    return total


# ---------------------------------------------------------------------------
# heat trace with certified tails
# ---------------------------------------------------------------------------


def _family_partial(fam: _Family, t: float, budget: float) -> tuple[float, float]:
    """Partial sum of count * exp(-c (k+offset)^2 t), certified tail <= budget.

    Works with the product c*t (bounded once a level passes the caller's
    exponent guard) so that deep-level scales never overflow on their own.
    """
    g = math.exp(fam.log_count)
    ct = math.exp(fam.log_c + math.log(t))

    def tail_bound(k_first_omitted: int) -> float:
        q = k_first_omitted + fam.offset
        expo = ct * q * q
        if expo > _EXP_FLOOR:
            return 0.0
        ratio = math.exp(-2.0 * ct * q) if 2.0 * ct * q < _EXP_FLOOR else 0.0
        return g * math.exp(-expo) / (1.0 - ratio)

    if tail_bound(fam.kstart) <= budget:
        return 0.0, tail_bound(fam.kstart)

    target = math.log(max(g / budget, 1.0))
    q0 = math.sqrt(target / ct) if target > 0 else 0.0
    k = max(fam.kstart, int(q0 - fam.offset))
    while tail_bound(k + 1) > budget:
        k += max(1, k // 8)
    while k > fam.kstart and tail_bound(k) <= budget:
        k -= 1
    ks = np.arange(fam.kstart, k + 1, dtype=np.float64) + fam.offset
    partial = g * float(np.exp(-ct * ks * ks).sum())
    return partial, tail_bound(k + 1)


def _min_exponent(scale: int, t: float) -> float:
    """log of (lambda_min(level) * t) where lambda_min = pi^2 I^2 / 4."""
    return _LOG_PI_SQ + 2.0 * math.log(scale) - math.log(4.0) + math.log(t)


def _remaining_levels_bound(
    seq: JSequence, n_first: int, scale_first: int, scale_prev: int, t: float
) -> float:
    """Certified bound on the total contribution of levels >= n_first."""
    if _min_exponent(scale_first, t) > math.log(_EXP_FLOOR):
        return 0.0
    lam_min = _PI_SQ * float(scale_first) ** 2 / 4.0
    expo = lam_min * t
    if expo > _EXP_FLOOR:
        return 0.0
    u = math.exp(-expo)
    rho = 2.0 * max(seq.values)
    if u > 0.5 or rho * u**3 >= 0.5:
        return math.inf
    g_first = 3.0 * float(_level_weight(seq, n_first, scale_prev))
    # weights grow at most like rho per level while the Boltzmann factors
    # contract like u^(1+3i); sum the dominating geometric series
    return g_first * u / ((1.0 - u) * (1.0 - rho * u**3))


def heat_trace(
    seq: JSequence,
    t: float,
    tol: float = 1e-10,
    *,
    level_cap: int | None = None,
) -> HeatTraceSample:
    """Z(t) with a certified truncation bound at most tol.

    With no level cap (constant and periodic sequences) the sum runs over
    every level and the omitted-level remainder is dominated geometrically.
    A level cap restricts the target to the level-capped spectrum, the same
    object level_spectrum describes; explicit prefixes always carry a cap
    (defaulting to the prefix length) and additionally raise when even the
    mildest continuation (j = 2 at the next level) would contribute more
    than tol, since no cap-respecting answer can then speak for the limit
    space at that accuracy.
    """
    if t <= 0:
        raise ValidationError(f"t {t} <= 0")
    if tol <= 0:
        raise ValidationError(f"tol {tol} <= 0")
    # term-by-term summation needs ~sqrt(745 / (pi^2 t)) line-family terms;
    # refuse once that stops being enumerable (use the residue expansion
    # for the deep asymptotic regime instead)
    if t < 3e-14:
        raise ValidationError(
            f"t {t} is below the direct-summation floor 3e-14; "
            "heat_trace_asymptote covers the deep small-t regime"
        )
    explicit = seq.kind == EXPLICIT
    if explicit:
        if level_cap is None:
            level_cap = seq.max_level
        level_cap = min(level_cap, seq.max_level)

    z = 1.0  # lambda = 0
    partial, bound = _family_partial(_Family(0.0, _LOG_PI_SQ, 0.0, 1), t, tol / 4.0)
    z += partial

    scale_prev = 1
    n = 1
    while True:
        if level_cap is not None and n > level_cap:
            break
        scale = scale_prev * seq.j(n)
        if level_cap is None:
            remaining = _remaining_levels_bound(seq, n, scale, scale_prev, t)
            if remaining <= tol / 2.0:
                bound += remaining
                break
        if _min_exponent(scale, t) > math.log(_EXP_FLOOR):
            # every remaining capped level is below double-precision zero
            break
        fams = _level_families(seq, n, scale_prev, scale)
        level_budget = tol / 2.0 ** (n + 2)
        for fam in fams:
            partial, tb = _family_partial(fam, t, level_budget / len(fams))
            z += partial
            bound += tb
        scale_prev = scale
        n += 1

    if explicit:
        # cheapest possible continuation: a V family at level cap+1 with j = 2
        expo = _min_exponent(2 * seq.scale(level_cap), t)
        lower = 0.0
        if expo < math.log(_EXP_FLOOR):
            lower = 2.0 ** (level_cap + 1) * math.exp(-math.exp(expo))
        if lower > tol:
            raise TailToleranceError(
                f"levels beyond the cap {level_cap} contribute at least "
                f"{lower:.3e} > tol {tol:.3e} at t = {t}",
                achieved_bound=bound + lower,
            )
    if bound > tol:
        raise TailToleranceError(
            f"achieved certified bound {bound:.3e} exceeds tol {tol:.3e}",
            achieved_bound=bound,
        )
    return HeatTraceSample(t=t, z=z, tail_bound=bound, level_cap=level_cap)


def heat_trace_grid(
    seq: JSequence,
    ts,
    tol: float = 1e-10,
    *,
    level_cap: int | None = None,
) -> list[HeatTraceSample]:
    return [heat_trace(seq, float(t), tol, level_cap=level_cap) for t in ts]


# ---------------------------------------------------------------------------
# direct spectral zeta (power sums + Euler-Maclaurin tails)
# ---------------------------------------------------------------------------

_EM_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)

_EM_CUT = 64


def _power_tail(w: complex, kfirst: int, offset: float) -> complex:
    """sum_{k >= kfirst} (k + offset)^(-w) by Euler-Maclaurin."""
    a = kfirst + offset
    la = math.log(a)
    apow = cmath.exp(-w * la)
    total = apow * a / (w - 1.0)
    total += apow / 2.0
    rising = w
    apow_j = apow / a
    for j, b in enumerate(_EM_BERNOULLI, start=1):
        if j > 1:
            rising = rising * (w + (2 * j - 3)) * (w + (2 * j - 2))
        total += (b / math.factorial(2 * j)) * rising * apow_j
        apow_j /= a * a
    return total


def _family_zeta(fam: _Family, s: complex) -> complex:
    """count * sum_k (c (k+offset)^2)^(-s), Euler-Maclaurin finish."""
    w = 2.0 * s
    ks = np.arange(fam.kstart, _EM_CUT, dtype=np.float64) + fam.offset
    partial = complex(np.sum(np.exp(-w * np.log(ks))))
    partial += _power_tail(w, _EM_CUT, fam.offset)
    return cmath.exp(fam.log_count - s * fam.log_c) * partial


def convergence_abscissa(seq: JSequence) -> float:
    """Re s must exceed this for the eigenvalue sum to converge."""
    if seq.has_contraction_limit:
        return dimensions(seq).spectral / 2.0
    return 0.5  # capped-level sums only need the line-family abscissa


def spectral_zeta_direct(
    table: SpectrumTable | JSequence,
    s: complex,
    *,
    atol: float = 1e-13,
    level_cap: int | None = None,
) -> complex:
    """Brute-force zeta_L(s): term-by-term family sums, no closed forms.

    Accepts a SpectrumTable (its sequence and any level cap are used) or a
    JSequence directly.  Serves as the independent oracle for
    spectral_zeta_closed on the convergence half-plane.
    """
    if isinstance(table, SpectrumTable):
        seq = table.sequence
        if level_cap is None:
            level_cap = table.level_cap
    else:
        seq = table
    s = complex(s)
    sigma = s.real
    abscissa = convergence_abscissa(seq)
    if sigma <= abscissa:
        raise DivergenceError(
            f"Re s = {sigma} is at or below the abscissa of convergence "
            f"{abscissa}; the eigenvalue sum diverges"
        )
    if seq.kind == EXPLICIT:
        if level_cap is None:
            level_cap = seq.max_level
        level_cap = min(level_cap, seq.max_level)

    total = _family_zeta(_Family(0.0, _LOG_PI_SQ, 0.0, 1), s)
    scale_prev = 1
    n = 1
    while True:
        if level_cap is not None and n > level_cap:
            break
        scale = scale_prev * seq.j(n)
        level_term = 0.0 + 0.0j
        for fam in _level_families(seq, n, scale_prev, scale):
            level_term += _family_zeta(fam, s)
        total += level_term
        if level_cap is None:
            # remaining levels shrink geometrically with ratio 2 r^(1-2 sigma)
            ratio = 2.0 * seq.contraction_limit() ** (1.0 - 2.0 * sigma)
            if n >= 2 and abs(level_term) * ratio / (1.0 - ratio) <= atol:
                break
        scale_prev = scale
        n += 1
    return total


# ---------------------------------------------------------------------------
# closed-form spectral zeta (blocked geometric series)
# ---------------------------------------------------------------------------


def _periodic_view(seq: JSequence) -> JSequence:
    if seq.kind == EXPLICIT:
        raise DimensionUndefinedError(
            "this operation needs a constant or periodic sequence"
        )
    return seq


def _bracket(seq: JSequence, s: complex, *, pole_tol: float = 1e-12) -> complex:
    """The level sum multiplying zeta_R(2s)/pi^(2s) in zeta_L(s).

    Exact for constant and periodic sequences: residue classes mod the
    period turn the level sum into geometric series with ratios
    w = 2^p P^(1-2s) (dominant) and v = 2^p P^(-2s) (subdominant).
    """
    seq = _periodic_view(seq)
    p = seq.period
    log_block = math.log(math.prod(seq.values))
    two_2s = cmath.exp(2.0 * s * math.log(2.0))
    w = cmath.exp(p * math.log(2.0) + (1.0 - 2.0 * s) * log_block)
    v = cmath.exp(p * math.log(2.0) - 2.0 * s * log_block)
    for q, family in ((w, "dominant"), (v, "subdominant")):
        if abs(1.0 - q) < pole_tol:
            raise PoleError(
                f"s = {s} is within {pole_tol} of a {family} pole of the "
                "closed-form zeta",
                nearest_pole=_nearest_pole(seq, s, family),
            )
    c_half = two_2s / 2.0  # 2^(2s-1)
    c_sub = 1.5 * two_2s - 3.0
    j1 = seq.j(1)
    total = 1.0 + (2.0 * two_2s - 4.0 + j1) * cmath.exp(-2.0 * s * math.log(j1))
    for rho in range(2, p + 2):
        scale_prev = seq.scale(rho - 1)
        j_rho = seq.j(rho)
        prefix = (2.0 ** (rho - 1)) * cmath.exp(-2.0 * s * math.log(seq.scale(rho)))
        total += prefix * (
            scale_prev * (c_half + j_rho - 1.0) / (1.0 - w) + c_sub / (1.0 - v)
        )
    return total


def _nearest_pole(seq: JSequence, s: complex, family: str) -> complex:
    p = seq.period
    log_block = math.log(math.prod(seq.values))
    fine = math.pi / log_block
    if family == "dominant":
        re = (p * math.log(2.0) + log_block) / (2.0 * log_block)
    else:
        re = p * math.log(2.0) / (2.0 * log_block)
    return complex(re, round(s.imag / fine) * fine)


def spectral_zeta_closed(seq: JSequence, s: complex) -> complex:
    """zeta_L(s) via the closed geometric form (and its continuation).

    Valid at any s away from the pole lattices and from s = 1/2, where the
    Riemann factor has its pole; in particular s = 0 gives the constant
    term of the small-t trace expansion.
    """
    s = complex(s)
    if abs(2.0 * s - 1.0) < 1e-9:
        raise PoleError(
            "s = 1/2 is the pole of the zeta_R(2s) factor",
            nearest_pole=0.5 + 0.0j,
        )
    bracket = _bracket(seq, s)
    if s == 0:
        return complex(-0.5 * bracket)  # zeta_R(0) = -1/2
    return riemann_zeta(2.0 * s) * cmath.exp(-2.0 * s * math.log(math.pi)) * bracket


def zeta_at_zero(seq: JSequence) -> float:
    """zeta_L(0) by analytic continuation of the closed form."""
    return spectral_zeta_closed(seq, 0.0).real


# ---------------------------------------------------------------------------
# poles and residues
# ---------------------------------------------------------------------------


def poles(seq: JSequence, m_range: tuple[int, int] = (-3, 3)) -> PoleLattice:
    """The principal pole lattice s_m = (log 2r + 2 pi i m) / log r^2."""
    if m_range[0] > m_range[1]:
        raise ValidationError(f"empty m range {m_range}")
    seq = _periodic_view(seq)
    r = seq.contraction_limit()
    log_r2 = math.log(r * r)
    real_part = math.log(2.0 * r) / log_r2
    spacing = 2.0 * math.pi / log_r2
    members = tuple(
        complex(real_part, m * spacing) for m in range(m_range[0], m_range[1] + 1)
    )
    return PoleLattice(real_part=real_part, spacing=spacing, members=members)


def fine_pole_spacing(seq: JSequence) -> float:
    """Imaginary spacing pi/log P of the closed form's actual pole families.

    Equals the PoleLattice spacing for constant sequences; for period p the
    denominator zeros interleave p times finer.
    """
    seq = _periodic_view(seq)
    return math.pi / math.log(math.prod(seq.values))


def oscillation_log_period(seq: JSequence) -> float:
    """Period in log t of the slowest log-periodic oscillation of Z(t)."""
    return 2.0 * math.pi / fine_pole_spacing(seq)


def _n_dominant(seq: JSequence, s: complex) -> complex:
    c_half = cmath.exp(2.0 * s * math.log(2.0)) / 2.0
    total = 0.0 + 0.0j
    for rho in range(2, seq.period + 2):
        total += (
            (2.0 ** (rho - 1))
            * seq.scale(rho - 1)
            * (c_half + seq.j(rho) - 1.0)
            * cmath.exp(-2.0 * s * math.log(seq.scale(rho)))
        )
    return total


def _n_subdominant(seq: JSequence, s: complex) -> complex:
    c_sub = 1.5 * cmath.exp(2.0 * s * math.log(2.0)) - 3.0
    total = 0.0 + 0.0j
    for rho in range(2, seq.period + 2):
        total += (2.0 ** (rho - 1)) * cmath.exp(-2.0 * s * math.log(seq.scale(rho)))
    return c_sub * total


def residue_coefficient(seq: JSequence, s_pole: complex, family: str) -> complex:
    """Residue of zeta_L(s) Gamma(s) t^(-s) at a lattice pole, sans t^(-s).

    family is "dominant" (zeros of 1 - w) or "subdominant" (zeros of 1 - v);
    either way the bracket's residue there is numerator / (2 log P).
    """
    seq = _periodic_view(seq)
    if family == "dominant":
        num = _n_dominant(seq, s_pole)
    elif family == "subdominant":
        num = _n_subdominant(seq, s_pole)
    else:
        raise ValidationError(f"unknown pole family {family!r}")
    log_block = math.log(math.prod(seq.values))
    return (
        complex_gamma(s_pole)
        * riemann_zeta(2.0 * s_pole)
        * cmath.exp(-2.0 * s_pole * math.log(math.pi))
        * num
        / (2.0 * log_block)
    )


def bracket_at_half(seq: JSequence) -> float:
    """Limit of the bracket at s = 1/2, where it is removable.

    The dominant part contributes exactly -2 against the entire part's +2
    for every pattern, so the limit is 0 unless the pattern is all twos; in
    that case the subdominant coefficient's zero meets the subdominant pole
    and leaves sum_rho 2^(rho-1) * 3 log2 / (I_rho log P)."""
    seq = _periodic_view(seq)
    p = seq.period
    block = math.prod(seq.values)
    if block != 2**p:
        return 0.0
    log_block = math.log(block)
    return sum(
        (2.0 ** (rho - 1)) * 3.0 * math.log(2.0) / (seq.scale(rho) * log_block)
        for rho in range(2, p + 2)
    )


def sqrt_term_coefficient(seq: JSequence) -> float:
    """C in the C / sqrt(pi t) term of the small-t expansion of Z(t).

    Res_{s=1/2} zeta_R(2s) = 1/2 and Gamma(1/2)/pi^1 = 1/sqrt(pi), so the
    residue is bracket(1/2)/2 times 1/sqrt(pi t)."""
    return bracket_at_half(seq) / 2.0


def _pole_families(seq: JSequence) -> list[tuple[float, str]]:
    p = seq.period
    log_block = math.log(math.prod(seq.values))
    fams = [((p * math.log(2.0) + log_block) / (2.0 * log_block), "dominant")]
    if math.prod(seq.values) != 2**p:
        # for all-2 patterns every subdominant residue vanishes identically
        fams.append((p * math.log(2.0) / (2.0 * log_block), "subdominant"))
    return fams


def heat_trace_asymptote(seq: JSequence, t: float, m_terms: int = 5) -> float:
    """Small-t residue expansion of the full heat trace Z(t).

    Includes the zero mode (+1), the continued constant zeta_L(0), the
    square-root term when present, and both residue lattices at their
    actual (period-refined) imaginary spacing; m_terms lattice points are
    kept on each side of the real axis per family, and conjugate pairs are
    folded into twice the real part.
    """
    if t <= 0:
        raise ValidationError(f"t {t} <= 0")
    seq = _periodic_view(seq)
    fine = fine_pole_spacing(seq)
    log_t = math.log(t)
    total = 1.0 + zeta_at_zero(seq)
    total += sqrt_term_coefficient(seq) / math.sqrt(math.pi * t)
    for re_part, family in _pole_families(seq):
        coeff0 = residue_coefficient(seq, complex(re_part, 0.0), family)
        total += coeff0.real * math.exp(-re_part * log_t)
        for m in range(1, m_terms + 1):
            s_m = complex(re_part, m * fine)
            term = residue_coefficient(seq, s_m, family) * cmath.exp(-s_m * log_t)
            total += 2.0 * term.real
    return total


_SEQ_J2 = parse_sequence("2")
_SEQ_J23 = parse_sequence("2,3")


def leading_term_j2(t: float, m_terms: int = 5) -> float:
    """Residue expansion of Z(t) for the constant-2 space.

    The oscillatory part is (1/(16 t log 2)) (1 + sum_m 2 Re a_m t^(-i m w))
    with w = 2 pi / log 4 and
    a_m = 6 zeta_R(2 + 4 pi i m/log4) Gamma(1 + 2 pi i m/log4)
          / pi^(2 + 4 pi i m/log4).
    The square-root term is 3/(4 sqrt(pi t)) and the constant is
    1 + zeta_L(0).  Valid as t -> 0; for large t the trace approaches 1 and
    this expansion does not apply.
    """
    return heat_trace_asymptote(_SEQ_J2, t, m_terms)


def leading_term_j23(t: float, m_terms: int = 5) -> float:
    """Residue expansion of Z(t) for the alternating 2,3 space.

    Dominant lattice at Re s = 1/2 + log2/log6 with coefficient
    (1/(24 log6)) 2^(-2s) (2^(4s) + 10 * 2^(2s) + 12) Gamma(s) zeta_R(2s)
    / pi^(2s); subdominant lattice at Re s = log2/log6 with coefficient
    (3/(8 log6)) (4^(2s) - 4) 4^(-s) Gamma(s) zeta_R(2s) / pi^(2s).  Both
    lattices are spaced pi/log6 apart in the imaginary direction, and the
    bracket's zero at s = 1/2 removes the square-root term entirely.
    """
    return heat_trace_asymptote(_SEQ_J23, t, m_terms)


def oscillation_amplitude(seq: JSequence, m: int = 1) -> float:
    """|a_m|: the m-th dominant oscillation coefficient relative to a_0.

    Used to certify that the log-periodic wobble stays inside a stated band
    before asserting window-averaged leading-term checks.
    """
    seq = _periodic_view(seq)
    fine = fine_pole_spacing(seq)
    re_dom = _pole_families(seq)[0][0]
    base = residue_coefficient(seq, complex(re_dom, 0.0), "dominant").real
    osc = residue_coefficient(seq, complex(re_dom, m * fine), "dominant")
    return abs(osc) / abs(base)


# ---------------------------------------------------------------------------
# spectral dimension from trace samples
# ---------------------------------------------------------------------------


def estimate_spectral_dimension(
    samples: list[HeatTraceSample], log_period: float
) -> float:
    """-2 x slope of log z against log t, after one-period window averaging.

    The averaging window is the full period of the slowest log-periodic
    oscillation (oscillation_log_period), which cancels the first-order
    wobble exactly on a uniform log grid.  Requires >= 10 samples spanning
    at least two decades with tail_bound/z < 1e-6.
    """
    if len(samples) < 10:
        raise ValidationError(f"need at least 10 samples, got {len(samples)}")
    if log_period <= 0:
        raise ValidationError(f"log_period {log_period} <= 0")
    ordered = sorted(samples, key=lambda s: s.t)
    tau = np.array([math.log(s.t) for s in ordered])
    if tau[-1] - tau[0] < 2.0 * math.log(10.0):
        raise ValidationError("samples span fewer than two decades of t")
    for s in ordered:
        if s.tail_bound / s.z >= 1e-6:
            raise ValidationError(
                f"sample at t={s.t} has tail_bound/z = "
                f"{s.tail_bound / s.z:.2e} >= 1e-6"
            )
    y = np.array([math.log(s.z) for s in ordered])
    delta = float(np.mean(np.diff(tau)))
    q = max(1, round(log_period / delta))
    if q >= len(ordered):
        raise ValidationError(
            "averaging window exceeds the sample span; extend the t grid"
        )
    kernel = np.ones(q) / q
    y_bar = np.convolve(y, kernel, mode="valid")
    tau_bar = np.convolve(tau, kernel, mode="valid")
    slope = float(np.polyfit(tau_bar, y_bar, 1)[0])
    return -2.0 * slope
