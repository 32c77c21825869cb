"""Reference-quality scalar special functions and series evaluators.

Schemes (documented per the module contract):

* log_gamma  -- Lanczos approximation, g = 7 with the standard 9-term
                coefficient set, one downward recurrence step for Re z < 0.5
* digamma    -- upward recurrence to Re z >= 12, then the Bernoulli
                asymptotic series
* lerch_phi  -- direct sum with geometric tail (|z| < 1), Euler-transform
                acceleration (z = -1), Euler-Maclaurin integral-test tail
                (z = 1 and generic |z| = 1)
* E_n        -- two-regime series / continued fraction, see `expint`

Series truncation is always driven by a-priori tail bounds, never by,
consecutive-term smallness.  Reference constants are embedded to 17
significant digits so oracle comparisons stay independent of the series
under test.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

from . import halfline, quad
from .errors import DomainError, Nonconvergent
from .expint import e1_complex, expint_en, expint_real
from .model import FactorProduct
from .seriesutil import (alternating_sum, em_power_tail,
                         richardson_partial_sums)

__all__ = [
    "EULER_GAMMA", "CATALAN", "LOG2", "SeriesResult",
    "log_gamma", "gamma_fn", "digamma", "lerch_phi", "lerch_phi_info", "zeta",
    "euler_gamma", "exp_integral_E", "e1_complex", "expint_en",
    "alt_log_product", "series_of_halfline", "psi_weighted_sum",
]

EULER_GAMMA = 0.57721566490153286
CATALAN = 0.91596559417721902
LOG2 = 0.69314718055994531


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    tail_bound: float
    accelerated: bool = False

    @property
    def real(self) -> float:
        return complex(self.value).real


# ---------------------------------------------------------------------------
# log Gamma / Gamma
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_TWO_PI = 0.91893853320467274


def log_gamma(z: complex) -> complex:
    """Principal log Gamma for Re z > 0."""
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError(f"log_gamma requires Re z > 0, got {z}")
    if z.real < 0.5:
        return log_gamma(z + 1.0) - cmath.log(z)
    zm1 = z - 1.0
    acc = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[k] / (zm1 + k)
    t = zm1 + _LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (zm1 + 0.5) * cmath.log(t) - t + cmath.log(acc)


def gamma_fn(z: complex) -> complex:
    return cmath.exp(log_gamma(z))


# ---------------------------------------------------------------------------
# digamma
# ---------------------------------------------------------------------------

# - B_2n / (2n): coefficients of z^{-2n} in the asymptotic series
_PSI_ASYMP = (
    -1.0 / 12, 1.0 / 120, -1.0 / 252, 1.0 / 240,
    -1.0 / 132, 691.0 / 32760, -1.0 / 12,
)


def digamma(s: complex) -> complex:
    """psi(s) for Re s > 0; 1e-12 or better on the real range [0.05, 50]."""
    z = complex(s)
    if z.real <= 0.0:
        raise DomainError(f"digamma requires Re s > 0, got {s}")
    acc = 0.0 + 0.0j
    while z.real < 12.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    tail = 0.0 + 0.0j
    power = inv2
    for c in _PSI_ASYMP:
        tail += c * power
        power *= inv2
    return acc + cmath.log(z) - 0.5 / z + tail


# ---------------------------------------------------------------------------
# Lerch transcendent and zeta
# ---------------------------------------------------------------------------

_LERCH_BUDGET = 2_000_000


def lerch_phi_info(z: complex, s: float, a: float, tol: float = 1e-12) -> SeriesResult:
    """Phi(z, s, a) = sum_{k>=0} z^k / (k+a)^s with an a-priori tail bound."""
    z = complex(z)
    s = float(s)
    a = float(a)
    if a <= 0.0:
        raise DomainError(f"lerch_phi requires a > 0, got {a}")
    az = abs(z)
    if az > 1.0 + 1e-15:
        raise DomainError(f"lerch_phi requires |z| <= 1, got |z| = {az}")
    if z == 1.0 and s <= 1.0:
        raise DomainError("lerch_phi at z = 1 requires s > 1 (no continuation here)")
    if z != 1.0 and s < 1.0:
        raise DomainError("lerch_phi requires s >= 1 (s > 1 when z = 1)")
    if z == 0.0:
        return SeriesResult(value=a ** -s, terms_used=1, tail_bound=0.0)

    if z == -1.0:
        value, bound, used = alternating_sum(lambda k: (k + a) ** -s,
                                             start=0, direct=64, k_diffs=28)
        return SeriesResult(value=value, terms_used=used, tail_bound=bound,
                            accelerated=True)

    if az < 1.0:
        total = 0.0 + 0.0j
        power = 1.0 + 0.0j
        k = 0
        while k < _LERCH_BUDGET:
            total += power * (k + a) ** -s
            power *= z
            k += 1
            bound = az ** k * (k + a) ** -s / (1.0 - az)
            if bound < tol:
                return SeriesResult(value=total, terms_used=k, tail_bound=bound)
        raise Nonconvergent(f"lerch_phi(|z|={az}) exceeded its budget")

    if z != 1.0:
        raise DomainError(
            f"lerch_phi on the unit circle supports only z = 1 or z = -1, got {z}")

    # z = 1, s > 1: direct sum with an Euler-Maclaurin integral-test tail
    for n in (64, 512, 4096):
        tail, bound = em_power_tail(a, s, n)
        if bound < tol or n == 4096:
            total = math.fsum((k + a) ** -s for k in range(n))
            return SeriesResult(value=total + tail, terms_used=n, tail_bound=bound)
    raise Nonconvergent("unreachable")


def lerch_phi(z: complex, s: float, a: float, tol: float = 1e-12) -> complex:
    return lerch_phi_info(z, s, a, tol).value


def zeta(s: float) -> float:
    """zeta(s) for real s > 1, via Phi(1, s, 1)."""
    if not s > 1.0:
        raise DomainError(f"zeta requires s > 1, got {s}")
    return complex(lerch_phi(1.0, float(s), 1.0)).real


# ---------------------------------------------------------------------------
# Euler's constant from its defining series
# ---------------------------------------------------------------------------

def euler_gamma(tolerance: float) -> SeriesResult:
    """gamma = sum_{n>=0} (1/(n+1) - log((n+2)/(n+1))), Richardson-corrected."""
    if tolerance <= 0.0:
        raise DomainError("tolerance must be positive")
    n0 = 32 if tolerance >= 1e-8 else 128
    levels = 6
    term = lambda n: 1.0 / (n + 1) - math.log1p(1.0 / (n + 1))
    value, err, used = richardson_partial_sums(term, n0=n0, levels=levels)
    if err > tolerance:
        raise Nonconvergent(
            f"euler_gamma stalled at {err:.3e} > tolerance {tolerance:.3e}")
    return SeriesResult(value=value.real, terms_used=used, tail_bound=err,
                        accelerated=True)


# ---------------------------------------------------------------------------
# exponential integral (real orders on the positive axis)
# ---------------------------------------------------------------------------

def exp_integral_E(n: int, x: float) -> float:
    """E_n(x) for integer n >= 0 and real x > 0."""
    if n < 0:
        raise DomainError(f"exp_integral_E requires n >= 0, got {n}")
    return expint_real(n, float(x))


# ---------------------------------------------------------------------------
# alternating log product
# ---------------------------------------------------------------------------

def alt_log_product(a: float, b: float, c: float, tol: float = 1e-10) -> float:
    """log prod_{n>=0} ((a n + b)/(a n + c))^{(-1)^n}.

    Consecutive terms pair into an absolutely convergent series with O(1/m^2)
    terms; Richardson extrapolation supplies the tail.
    """
    if a <= 0.0 or b <= 0.0 or c <= 0.0:
        raise DomainError("alt_log_product requires positive parameters")
    if b == c:
        return 0.0

    def pair(m: int) -> float:
        base = 2.0 * a * m
        return (math.log1p((b - c) / (base + c))
                - math.log1p((b - c) / (base + a + c)))

    value, err, _ = richardson_partial_sums(pair, n0=64, levels=5, tol=tol)
    return value.real


# ---------------------------------------------------------------------------
# series of half-line integrals
# ---------------------------------------------------------------------------

def series_of_halfline(r: complex, term_factory: Callable[[int], FactorProduct],
                       tol: float = 1e-9, part: str = "full",
                       max_terms: int = 100_000) -> SeriesResult:
    """sum_{n>=0} r^n * integral(term_factory(n)), with tail bounds.

    |r| < 1 uses the geometric bound; r = 1 needs decaying terms and uses
    Richardson extrapolation of partial sums; r = -1 uses the Euler
    transform.  `part` optionally sums only re/im of each term's value.
    """
    r = complex(r)

    def term(n: int) -> complex:
        v = halfline.integrate_rational(term_factory(n))
        if part == "re":
            return complex(v.real)
        if part == "im":
            return complex(v.imag)
        return v

    if r == 1.0:
        value, err, used = richardson_partial_sums(term, n0=64, levels=5)
        if err > tol:
            raise Nonconvergent(f"series stalled at {err:.3e} > tol {tol:.3e}")
        return SeriesResult(value=value, terms_used=used, tail_bound=err,
                            accelerated=True)
    if r == -1.0:
        value, bound, used = alternating_sum(term, start=0, direct=48, k_diffs=24)
        if bound > tol:
            raise Nonconvergent(f"alternating series tail {bound:.3e} > tol {tol:.3e}")
        return SeriesResult(value=value, terms_used=used, tail_bound=bound,
                            accelerated=True)
    ar = abs(r)
    if ar >= 1.0:
        raise DomainError(f"series_of_halfline needs |r| < 1 or r = +-1, got {r}")
    total = 0.0 + 0.0j
    power = 1.0 + 0.0j
    recent = 0.0
    for n in range(max_terms):
        t = term(n)
        total += power * t
        power *= r
        recent = max(abs(t), 0.5 * recent)
        bound = ar ** (n + 1) * recent / (1.0 - ar)
        if bound < tol and n >= 4:
            return SeriesResult(value=total, terms_used=n + 1, tail_bound=bound)
    raise Nonconvergent("series_of_halfline exceeded its term budget")


# ---------------------------------------------------------------------------
# psi-weighted sums (Theorem-9 example family)
# ---------------------------------------------------------------------------

_PSI_WEIGHTS: dict[str, Callable[[float], float]] = {
    "n(n+1)": lambda n: 1.0 / (n * (n + 1.0)),
    "n^2": lambda n: 1.0 / (n * n),
    "n": lambda n: 1.0 / n,
    "n(n+2)": lambda n: 1.0 / (n * (n + 2.0)),
    "n(n+3)": lambda n: 1.0 / (n * (n + 3.0)),
}

# shift c of the weight 1/(n(n+c)); the tail integral uses it in closed form
_PSI_WEIGHT_SHIFT = {"n(n+1)": 1.0, "n^2": 0.0, "n(n+2)": 2.0, "n(n+3)": 3.0}


def psi_weighted_sum(weight: str, divisor: int = 1, alternating: bool = False,
                     n_direct: int = 100_000) -> SeriesResult:
    """sum_{n>=1} (+-1)^n psi(n/divisor) * weight(n).

    Non-alternating sums run direct to `n_direct` with an Euler-Maclaurin
    tail (integral by quadrature, endpoint derivative by central difference);
    alternating sums use the Euler transform.  psi values advance by the
    recurrence psi(x+1) = psi(x) + 1/x along each residue chain, so the
    direct part is O(n_direct) flops.
    """
    if weight not in _PSI_WEIGHTS:
        raise DomainError(f"unknown psi-sum weight {weight!r}")
    if divisor < 1:
        raise DomainError(f"divisor must be >= 1, got {divisor}")
    w = _PSI_WEIGHTS[weight]
    d = int(divisor)

    def psi_real(x: float) -> float:
        return complex(digamma(x)).real

    if alternating:
        a = lambda n: psi_real(n / d) * w(float(n))
        # sum (-1)^n a(n) from n = 1  ==  -(a(1) - a(2) + ...)
        value, bound, used = alternating_sum(a, start=1, direct=600, k_diffs=26)
        return SeriesResult(value=-value, terms_used=used, tail_bound=bound,
                            accelerated=True)

    chain = [psi_real(j / d) for j in range(1, d + 1)]
    total = 0.0
    n = 1
    while n <= n_direct:
        j = (n - 1) % d
        total += chain[j] * w(float(n))
        chain[j] += d / float(n)  # psi((n+d)/d) = psi(n/d) + d/n
        n += 1

    f = lambda x: psi_real(x / d) * w(x)
    a_start = float(n)
    tail_int, int_err = _psi_tail_integral(a_start, d, _PSI_WEIGHT_SHIFT[weight])
    fprime = (f(a_start + 1.0) - f(a_start - 1.0)) / 2.0
    f3 = (f(a_start + 2.0) - 2.0 * f(a_start + 1.0)
          + 2.0 * f(a_start - 1.0) - f(a_start - 2.0)) / 2.0
    tail = tail_int + 0.5 * f(a_start) - fprime / 12.0
    bound = abs(f3) / 720.0 + int_err  # first omitted Euler-Maclaurin term
    return SeriesResult(value=total + tail, terms_used=n_direct,
                        tail_bound=bound, accelerated=True)


def _psi_tail_integral(a: float, d: int, c: float) -> tuple[float, float]:
    """integral_a^inf psi(x/d) / (x (x+c)) dx.

    Substituting x = a/u turns the weight times the Jacobian into the benign
    1/(a + c u), dodging the x -> inf under/overflow of the naive form.
    """

    def g(u: float, d0: float, d1: float) -> complex:
        u = max(u, 1e-280)
        return complex(complex(digamma(a / (u * d))).real / (a + c * u))

    value, err, _ = quad.tanh_sinh_01(g, tol=1e-13)
    return complex(value).real, err
