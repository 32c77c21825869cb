"""Closed-form evaluation of half-line rational integrals.

    integral_0^inf P(x) / prod_n (a_n x + b_n + c_n i)^{m_n} dx

via complex partial fractions on the principal branch, plus the
e^{-m s}-weighted variant expressed through complex exponential integrals.
Exact up to binary64 rounding; products whose offsets are all real are
evaluated in exact rational arithmetic so that heavily cancelling cases
(e.g. huge equal-root multiplicities) keep full relative precision.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BranchConflict, Divergent, IllConditioned
from .expint import expint_scaled
from .model import (FactorProduct, LinearFactor, canonicalize, validate,
                    _validate_factor_product)

# Distinct roots closer than this but not merged signal an ill-conditioned
# expansion; callers should re-canonicalize with a looser merge.
ROOT_SEPARATION_TOL = 1e-9


@dataclass(frozen=True)
class PartialFractionTerm:
    root: complex
    order: int
    coefficient: complex


@dataclass(frozen=True)
class PartialFractionExpansion:
    terms: tuple[PartialFractionTerm, ...]
    global_scale: complex

    def reconstruct(self, x: complex) -> complex:
        return sum(t.coefficient / (x - t.root) ** t.order for t in self.terms)

    def residue_sum(self) -> complex:
        return sum(t.coefficient for t in self.terms if t.order == 1)


# ---------------------------------------------------------------------------
# series arithmetic for the coefficient computation (works over both complex
# floats and Fractions; synthetic/Horner shifts, no symbolic differentiation)
# ---------------------------------------------------------------------------

def _taylor_shift(coeffs: list, z, length: int) -> list:
    """Coefficients of P(z + u) in u, truncated to `length` entries."""
    # repeated synthetic division by (x - z)
    work = list(coeffs)
    out = []
    for _ in range(min(length, len(work))):
        rem = work[-1]
        acc = [work[-1]]
        for c in reversed(work[:-1]):
            rem = rem * z + c
            acc.append(rem)
        out.append(rem)
        work = list(reversed(acc[:-1]))
        if not work:
            break
    zero = coeffs[0] * 0
    while len(out) < length:
        out.append(zero)
    return out


def _reciprocal_power_series(d, m: int, length: int) -> list:
    """Series of (u + d)^(-m) in u: d^-m * sum_i binom(-m, i) (u/d)^i."""
    inv_d = 1 / d
    out = [inv_d ** m]
    for i in range(1, length):
        # binom(-m, i) = (-1)^i binom(m+i-1, i); build incrementally
        out.append(out[-1] * (-(m + i - 1)) * inv_d / i)
    return out


def _series_mul(p: list, q: list, length: int) -> list:
    zero = p[0] * 0
    out = [zero] * length
    for i, a in enumerate(p[:length]):
        if a == 0:
            continue
        for j, b in enumerate(q[: length - i]):
            out[i + j] = out[i + j] + a * b
    return out


def _coefficient_table(roots, mults, numerator):
    """Laurent coefficients A[j][r] about each root (r = 1..mult)."""
    table = []
    for j, (zj, mj) in enumerate(zip(roots, mults)):
        series = _taylor_shift(list(numerator), zj, mj)
        for l, (zl, ml) in enumerate(zip(roots, mults)):
            if l == j:
                continue
            series = _series_mul(series, _reciprocal_power_series(zj - zl, ml, mj), mj)
        coeffs = {}
        for r in range(1, mj + 1):
            coeffs[r] = series[mj - r]
        table.append(coeffs)
    return table


def _prepared_roots(fp: FactorProduct, exact: bool):
    canon = canonicalize(fp)
    roots = [f.root for f in canon.factors]
    mults = [f.multiplicity for f in canon.factors]
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) < ROOT_SEPARATION_TOL:
                raise IllConditioned(
                    f"roots {roots[i]} and {roots[j]} closer than "
                    f"{ROOT_SEPARATION_TOL} but not merged; re-canonicalize "
                    "with a looser merge tolerance"
                )
    if exact:
        roots = [Fraction(z.real) for z in roots]
        numerator = [Fraction(c) for c in canon.numerator]
    else:
        numerator = [complex(c) for c in canon.numerator]
    order = sorted(range(len(roots)),
                   key=lambda i: (float(roots[i].real), float(roots[i].imag)))
    roots = [roots[i] for i in order]
    mults = [mults[i] for i in order]
    return roots, mults, numerator


def _is_real_product(fp: FactorProduct) -> bool:
    return all(complex(f.offset).imag == 0.0 for f in fp.factors)


def partial_fractions(fp: FactorProduct) -> PartialFractionExpansion:
    """Expand fp into sum A / (x - z)^r terms (deterministic term order)."""
    violations = validate(fp)
    if violations:
        raise Divergent("; ".join(violations))
    exact = _is_real_product(fp)
    roots, mults, numerator = _prepared_roots(fp, exact)
    table = _coefficient_table(roots, mults, numerator)
    scale = 1.0
    for f in fp.factors:
        scale *= float(f.slope) ** f.multiplicity
    terms = []
    for zj, mj, coeffs in zip(roots, mults, table):
        z = complex(zj) if not exact else complex(float(zj))
        for r in range(1, mj + 1):
            a = coeffs[r]
            a = complex(a) if not exact else complex(float(a))
            if a != 0:
                terms.append(PartialFractionTerm(root=z, order=r, coefficient=a))
    return PartialFractionExpansion(terms=tuple(terms), global_scale=complex(1.0 / scale))


def _check_branch(z: complex) -> None:
    w = -z  # argument of the principal log / E_n
    if w.imag == 0.0 and w.real <= 0.0:
        raise BranchConflict(f"-root {w} lies on the principal branch cut")


def _pow_int(base: complex, n: int) -> complex:
    """base^n via exp(n log base) in log scale for |n| large.

    Keeps tiny magnitudes (2^-1007 style) away from intermediate under/overflow.
    """
    if abs(n) <= 16:
        return base ** n
    return cmath.exp(n * cmath.log(base))


def integrate_rational(fp: FactorProduct) -> complex:
    """Closed form of integral_0^inf P(x)/prod(a x + b + c i)^m dx."""
    violations = validate(fp)
    if violations:
        raise Divergent("; ".join(violations))
    if _is_real_product(fp):
        return _integrate_rational_exact(fp)
    roots, mults, numerator = _prepared_roots(fp, exact=False)
    table = _coefficient_table(roots, mults, numerator)
    total = 0.0 + 0.0j
    for zj, mj, coeffs in zip(roots, mults, table):
        _check_branch(zj)
        w = -zj
        for r in range(1, mj + 1):
            a = coeffs[r]
            if a == 0:
                continue
            if r == 1:
                total += a * (-cmath.log(w))
            else:
                total += a * _pow_int(w, 1 - r) / (r - 1)
    return total


def _integrate_rational_exact(fp: FactorProduct) -> complex:
    """Rational-exact path for all-real-offset products.

    Power terms accumulate as exact Fractions (one rounding at the end);
    residue-log terms use float logs of exact rational arguments.
    """
    roots, mults, numerator = _prepared_roots(fp, exact=True)
    table = _coefficient_table(roots, mults, numerator)
    rational_part = Fraction(0)
    log_part = 0.0
    for zj, mj, coeffs in zip(roots, mults, table):
        if zj >= 0:
            raise BranchConflict(f"root {zj} on the positive axis")
        w = -zj  # positive rational
        for r in range(1, mj + 1):
            a = coeffs[r]
            if a == 0:
                continue
            if r == 1:
                log_part += float(a) * (-_log_fraction(w))
            else:
                rational_part += a * w ** (1 - r) / (r - 1)
    return complex(float(rational_part) + log_part)


def _log_fraction(q: Fraction) -> float:
    # math.log accepts arbitrary-precision ints, so no float overflow here
    return math.log(q.numerator) - math.log(q.denominator)


# ---------------------------------------------------------------------------
# e^{-m s}-weighted variant
# ---------------------------------------------------------------------------

def _expand_denominator(roots, mults) -> list[complex]:
    poly = [1.0 + 0.0j]
    for z, m in zip(roots, mults):
        for _ in range(m):
            # multiply by (x - z)
            nxt = [0.0 + 0.0j] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] += c * (-z)
                nxt[i + 1] += c
            poly = nxt
    return poly


def _poly_divmod(num: list[complex], den: list[complex]):
    num = list(num)
    dn = len(den) - 1
    q = [0.0 + 0.0j] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        coef = num[i] / den[dn]
        q[i - dn] = coef
        for j in range(dn + 1):
            num[i - dn + j] -= coef * den[j]
    return q, num[:dn]


def integrate_rational_exp(fp: FactorProduct, m: float) -> complex:
    """Closed form of integral_0^inf e^{-m s} P(s)/prod(...)^mult ds, m >= 0.

    Assembled from e^{-m z} E_r(-m z) / (-z)^{r-1} per partial-fraction term;
    exponential damping relaxes the numerator-degree convergence rule, so the
    polynomial quotient (if any) integrates termwise to i!/m^{i+1}.
    """
    if m < 0:
        raise Divergent(f"exponential weight must be >= 0, got {m}")
    if m == 0.0:
        return integrate_rational(fp)
    # exponential damping restores convergence for any numerator degree
    violations = _validate_factor_product(fp, min_degree_margin=None)
    if violations:
        raise Divergent("; ".join(violations))
    roots, mults, numerator = _prepared_roots(fp, exact=False)
    total = 0.0 + 0.0j
    if len(numerator) - 1 >= sum(mults):
        den = _expand_denominator(roots, mults)
        quotient, remainder = _poly_divmod(list(numerator), den)
        for i, q in enumerate(quotient):
            total += q * math.factorial(i) / m ** (i + 1)
        numerator = remainder if remainder else [0.0 + 0.0j]
    table = _coefficient_table(roots, mults, numerator)
    for zj, mj, coeffs in zip(roots, mults, table):
        _check_branch(zj)
        w = -zj
        for r in range(1, mj + 1):
            a = coeffs[r]
            if a == 0:
                continue
            # e^{-m z} E_r(-m z) = e^{m w} E_r(m w), evaluated jointly
            total += a * expint_scaled(r, m * w) * _pow_int(w, 1 - r)
    return total


# ---------------------------------------------------------------------------
# Ramanujan product families
# ---------------------------------------------------------------------------

def ramanujan_product_integral(r: float | None, a: float | None, k: int,
                               family: str) -> complex:
    """Integral of 1/prod over the conjugate-paired quadratic factor families.

    geometric: factors (1 + r^{2(n-1)} x^2), n = 1..k, 0 < r < 1
    shifted:   factors (1 + x^2/(a+n-1)^2), n = 1..k, a > 0
    """
    if k < 1:
        raise Divergent(f"k must be >= 1, got {k}")
    factors = []
    if family == "geometric":
        if r is None or not 0.0 < r < 1.0:
            raise Divergent(f"geometric family needs r in (0,1), got {r}")
        for n in range(1, k + 1):
            rho = r ** (n - 1)
            factors.append(LinearFactor(rho, 1j))
            factors.append(LinearFactor(rho, -1j))
    elif family == "shifted":
        if a is None or a <= 0.0:
            raise Divergent(f"shifted family needs a > 0, got {a}")
        for n in range(1, k + 1):
            slope = 1.0 / (a + n - 1)
            factors.append(LinearFactor(slope, 1j))
            factors.append(LinearFactor(slope, -1j))
    else:
        raise ValueError(f"unknown Ramanujan family {family!r}")
    return integrate_rational(FactorProduct(factors=tuple(factors)))
