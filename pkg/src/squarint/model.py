"""Data model for integrands, series, identities and reports.

Everything here is immutable value data with validation; the numerics live in
the engine modules (`halfline`, `cubature`, `special`).  The central objects:

* ``FactorProduct``     -- P(x) / prod_n (a_n x + b_n + c_n i)^{m_n} on [0, inf)
* ``CubeIntegrandSpec`` -- declarative unit-cube integrand with an optional
                           1/(shift - log prod x^w)^j denominator, geometric
                           factor 1/(1 - z prod x^e) and log-monomial numerator
* ``SeriesSpec``        -- a named series family plus its parameters
* plan nodes            -- closed AST describing how to evaluate one side of
                           an identity (closed form / cubature / series /
                           named-constant expression, plus scale, part
                           extraction and finite sums)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Union

# Roots closer than this (after slope normalization) coalesce into one factor.
# Below quadrature noise, above binary64 rounding of small-integer parameters.
ROOT_MERGE_TOL = 1e-12

VALID_PARTS = ("full", "re", "im")
VALID_TRUST = ("asserted", "suspected-typo")

SERIES_FAMILIES = (
    "lerch",
    "geometric-of-halfline",
    "euler-gamma",
    "alt-log-product",
    "psi-sum",
    "zeta-of-integrals",
    "custom-term",
)


def is_finite_complex(z: complex) -> bool:
    z = complex(z)
    return math.isfinite(z.real) and math.isfinite(z.imag)


# --------------------------------------------------------------------------
# half-line rational integrands
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearFactor:
    """One factor (slope*x + offset)^multiplicity with complex offset."""

    slope: float
    offset: complex
    multiplicity: int = 1

    @property
    def root(self) -> complex:
        return -complex(self.offset) / self.slope


@dataclass(frozen=True)
class FactorProduct:
    """P(x) / prod factors, with P given by ascending-degree real coefficients."""

    factors: tuple[LinearFactor, ...]
    numerator: tuple[float, ...] = (1.0,)

    @property
    def degree(self) -> int:
        return sum(f.multiplicity for f in self.factors)

    @property
    def numerator_degree(self) -> int:
        deg = -1
        for i, c in enumerate(self.numerator):
            if c != 0.0:
                deg = i
        return deg

    def evaluate(self, x: complex) -> complex:
        num = 0.0 + 0.0j
        for c in reversed(self.numerator):
            num = num * x + c
        den = 1.0 + 0.0j
        for f in self.factors:
            den *= (f.slope * x + f.offset) ** f.multiplicity
        return num / den


def factor_product(*triples, numerator=(1.0,), mults=None) -> FactorProduct:
    """Convenience constructor from (a, b, c) triples meaning a*x + b + c*i."""
    mults = mults or [1] * len(triples)
    factors = tuple(
        LinearFactor(float(a), complex(b, c), int(m))
        for (a, b, c), m in zip(triples, mults)
    )
    return FactorProduct(factors=factors, numerator=tuple(float(v) for v in numerator))


# --------------------------------------------------------------------------
# unit-cube integrands
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class GeometricFactor:
    """1 / (1 - z * prod_v x_v^{exps_v})."""

    z: complex
    exps: tuple[float, ...]


@dataclass(frozen=True)
class LogMonomial:
    """coeff * prod_v log(x_v)^{p_v}, as ((variable index, power), ...)."""

    coeff: float
    powers: tuple[tuple[int, int], ...]

    @property
    def total_power(self) -> int:
        return sum(p for _, p in self.powers)


@dataclass(frozen=True)
class CubeIntegrandSpec:
    """Integrand over (0,1)^dim:

        prod_v x_v^{exponents_v} * polylog(log x) * geometric
        / (log_shift - sum_v log_weights_v * log(x_v))^log_power

    ``part`` selects which real part of the (generally complex) integrand is
    integrated; "full" keeps the complex value.  With log_power = 0 the
    denominator is absent.
    """

    dim: int
    exponents: tuple[complex, ...]
    log_weights: tuple[float, ...]
    log_power: int = 1
    log_shift: float = 0.0
    geometric: GeometricFactor | None = None
    poly_log: tuple[LogMonomial, ...] = ()
    part: str = "full"

    def conjugate(self) -> "CubeIntegrandSpec":
        geo = self.geometric
        if geo is not None:
            geo = GeometricFactor(z=complex(geo.z).conjugate(), exps=geo.exps)
        return replace(
            self,
            exponents=tuple(complex(m).conjugate() for m in self.exponents),
            geometric=geo,
        )


def cube_spec(exponents, log_weights=None, j=1, m=0.0, geo=None, poly=None,
              part="full") -> CubeIntegrandSpec:
    exps = tuple(complex(e) for e in exponents)
    k = len(exps)
    if log_weights is None:
        log_weights = (1.0,) * k if j >= 1 else (0.0,) * k
    return CubeIntegrandSpec(
        dim=k,
        exponents=exps,
        log_weights=tuple(float(w) for w in log_weights),
        log_power=int(j),
        log_shift=float(m),
        geometric=geo,
        poly_log=tuple(poly) if poly else (),
        part=part,
    )


# --------------------------------------------------------------------------
# series
# --------------------------------------------------------------------------

ParamValue = Union[int, float, complex, str]


@dataclass(frozen=True)
class SeriesSpec:
    """A series family tag plus its parameters (name -> value)."""

    family: str
    params: tuple[tuple[str, ParamValue], ...] = ()
    acceleration: str = "none"

    def param(self, name: str, default=None) -> ParamValue:
        for key, value in self.params:
            if key == name:
                return value
        if default is not None:
            return default
        raise KeyError(f"series parameter {name!r} missing for family {self.family!r}")

    def has_param(self, name: str) -> bool:
        return any(key == name for key, _ in self.params)


def series_spec(family: str, acceleration: str = "none", **params) -> SeriesSpec:
    items = tuple(sorted(params.items()))
    return SeriesSpec(family=family, params=items, acceleration=acceleration)


# --------------------------------------------------------------------------
# evaluation plans (closed variant set; registry-serializable)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstPlan:
    """Named-constant expression over gamma, pi, zeta(s), G, Gamma, psi, E_n, logs."""

    expr: str


@dataclass(frozen=True)
class HalflinePlan:
    """Closed-form integral of a FactorProduct, optionally e^{-weight*s} damped."""

    product: FactorProduct
    weight: float = 0.0


@dataclass(frozen=True)
class CubePlan:
    spec: CubeIntegrandSpec


@dataclass(frozen=True)
class SeriesPlan:
    spec: SeriesSpec


@dataclass(frozen=True)
class ScalePlan:
    factor: complex
    inner: "Plan"


@dataclass(frozen=True)
class RealPartPlan:
    inner: "Plan"


@dataclass(frozen=True)
class ImagPartPlan:
    inner: "Plan"


@dataclass(frozen=True)
class SumPlan:
    terms: tuple["Plan", ...]


Plan = Union[ConstPlan, HalflinePlan, CubePlan, SeriesPlan,
             ScalePlan, RealPartPlan, ImagPartPlan, SumPlan]


def scaled(factor, plan: Plan) -> Plan:
    return ScalePlan(factor=complex(factor), inner=plan)


# --------------------------------------------------------------------------
# identities and reports
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityRecord:
    id: str
    description: str
    lhs: Plan
    rhs: Plan
    tolerance: float
    paper_location: str
    trust: str = "asserted"


@dataclass(frozen=True)
class EngineDiagnostics:
    method: str
    evaluations: int
    error_estimate: float
    truncation_index: int = 0


@dataclass(frozen=True)
class VerificationReport:
    identity_id: str
    lhs_value: complex
    rhs_value: complex
    abs_error: float
    rel_error: float
    status: str  # PASS | FAIL | FLAGGED
    lhs_diagnostics: EngineDiagnostics
    rhs_diagnostics: EngineDiagnostics


# --------------------------------------------------------------------------
# validation: violations are data, not failures
# --------------------------------------------------------------------------

def validate(spec) -> list[str]:
    """Return the list of violated invariants (empty = ok)."""
    if isinstance(spec, FactorProduct):
        return _validate_factor_product(spec)
    if isinstance(spec, CubeIntegrandSpec):
        return _validate_cube_spec(spec)
    if isinstance(spec, SeriesSpec):
        return _validate_series_spec(spec)
    raise TypeError(f"cannot validate {type(spec).__name__}")


def _validate_factor_product(fp: FactorProduct,
                             min_degree_margin: int | None = 2) -> list[str]:
    out = []
    if not fp.factors:
        out.append("product has no factors")
        return out
    for f in fp.factors:
        if f.slope == 0.0 or not math.isfinite(f.slope):
            out.append(f"factor slope must be finite and nonzero, got {f.slope}")
        if f.multiplicity < 1:
            out.append(f"factor multiplicity must be >= 1, got {f.multiplicity}")
        if not is_finite_complex(f.offset):
            out.append(f"factor offset must be finite, got {f.offset}")
    if out:
        return out
    deg = fp.degree
    num_deg = fp.numerator_degree
    if num_deg < 0:
        out.append("numerator polynomial is identically zero")
    if min_degree_margin is not None and num_deg > deg - min_degree_margin:
        out.append(
            f"degree {deg} too small: numerator degree {max(num_deg, 0)} exceeds "
            f"denominator degree minus {min_degree_margin} (half-line integral diverges)"
        )
    for f in fp.factors:
        z = f.root
        if z.imag == 0.0 and z.real >= 0.0:
            out.append(f"root on positive axis (root at x={z.real:g})")
    return out


def _validate_cube_spec(spec: CubeIntegrandSpec) -> list[str]:
    out = []
    k = spec.dim
    if k < 1:
        out.append(f"dimension must be >= 1, got {k}")
    if len(spec.exponents) != k:
        out.append(f"expected {k} exponents, got {len(spec.exponents)}")
    if len(spec.log_weights) != k:
        out.append(f"expected {k} log weights, got {len(spec.log_weights)}")
    if out:
        return out
    for i, mu in enumerate(spec.exponents):
        if not is_finite_complex(mu):
            out.append(f"exponent {i} must be finite, got {mu}")
        elif complex(mu).real <= -1.0:
            out.append(f"Re(exponent {i}) = {complex(mu).real:g} <= -1 (divergent at 0-face)")
    if spec.log_power < 0:
        out.append(f"log power must be >= 0, got {spec.log_power}")
    if spec.log_shift < 0.0:
        out.append(f"log shift must be >= 0, got {spec.log_shift}")
    if spec.log_power >= 1:
        if all(w == 0.0 for w in spec.log_weights):
            out.append("log weights must not be all zero when log power >= 1")
        if any(w < 0.0 for w in spec.log_weights):
            out.append("log weights must be non-negative")
    if spec.part not in VALID_PARTS:
        out.append(f"part must be one of {VALID_PARTS}, got {spec.part!r}")
    geo = spec.geometric
    if geo is not None:
        if len(geo.exps) != k:
            out.append(f"geometric factor expects {k} exponents, got {len(geo.exps)}")
        elif any(e < 0.0 for e in geo.exps) or all(e == 0.0 for e in geo.exps):
            out.append("geometric exponents must be non-negative, not all zero")
        zabs = abs(complex(geo.z))
        if zabs > 1.0 + 1e-15:
            out.append(f"|z| = {zabs:g} > 1: geometric factor not summable on the cube")
        elif (complex(geo.z) == 1.0 and k == 1 and spec.log_power == 0
              and spec.log_shift == 0.0 and spec.part == "full"):
            out.append("z = 1 with no log factor diverges in dimension 1")
    return out


def _validate_series_spec(spec: SeriesSpec) -> list[str]:
    out = []
    if spec.family not in SERIES_FAMILIES:
        out.append(f"unknown series family {spec.family!r}")
    if spec.acceleration not in ("none", "alternating-transform", "tail-integral-bound"):
        out.append(f"unknown acceleration hint {spec.acceleration!r}")
    if spec.family == "geometric-of-halfline" and spec.has_param("r"):
        r = complex(spec.param("r"))
        if abs(r) > 1.0 + 1e-15:
            out.append(f"|r| = {abs(r):g} > 1: geometric series of integrals diverges")
    if spec.family == "lerch":
        z = complex(spec.param("z", 0.0))
        s = spec.param("s", 2.0)
        a = spec.param("a", 1.0)
        if abs(z) > 1.0 + 1e-15:
            out.append(f"lerch requires |z| <= 1, got |z| = {abs(z):g}")
        if complex(z) == 1.0 and not float(complex(s).real) > 1.0:
            out.append("lerch at z = 1 requires s > 1")
        if float(complex(a).real) <= 0.0:
            out.append("lerch requires a > 0")
    return out


# --------------------------------------------------------------------------
# canonical form
# --------------------------------------------------------------------------

def canonicalize(fp: FactorProduct) -> FactorProduct:
    """Normalize all slopes to 1 and merge near-identical roots.

    The extracted scale 1/prod(slope^mult) is folded into the numerator
    coefficients; roots within ROOT_MERGE_TOL coalesce (multiplicity-weighted
    mean root, summed multiplicity).  Idempotent.
    """
    scale = 1.0
    roots: list[tuple[complex, int]] = []
    for f in fp.factors:
        scale *= float(f.slope) ** f.multiplicity
        roots.append((complex(f.offset) / f.slope, f.multiplicity))

    roots.sort(key=lambda rm: (rm[0].real, rm[0].imag))
    merged: list[tuple[complex, int]] = []
    for off, mult in roots:
        if merged and abs(off - merged[-1][0]) <= ROOT_MERGE_TOL:
            prev_off, prev_mult = merged[-1]
            total = prev_mult + mult
            merged[-1] = ((prev_off * prev_mult + off * mult) / total, total)
        else:
            merged.append((off, mult))

    factors = tuple(LinearFactor(1.0, off, mult) for off, mult in merged)
    numerator = tuple(c / scale for c in fp.numerator)
    return FactorProduct(factors=factors, numerator=numerator)


# --------------------------------------------------------------------------
# rational arithmetic on factor products (used to combine series terms whose
# individual halves diverge; cancellation happens in the numerator)
# --------------------------------------------------------------------------

def _poly_mul(p: tuple[float, ...], q: tuple[float, ...]) -> tuple[float, ...]:
    out = [0.0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def _poly_add(p: tuple[float, ...], q: tuple[float, ...]) -> tuple[float, ...]:
    n = max(len(p), len(q))
    return tuple(
        (p[i] if i < len(p) else 0.0) + (q[i] if i < len(q) else 0.0)
        for i in range(n)
    )


def _poly_trim(p: tuple[float, ...]) -> tuple[float, ...]:
    last = 0
    for i, c in enumerate(p):
        if c != 0.0:
            last = i
    return tuple(p[: last + 1])


def _expand_factors(factors) -> tuple[float, ...]:
    poly = (1.0,)
    for f in factors:
        base = (f.offset.real, f.slope)  # real offsets only in this path
        for _ in range(f.multiplicity):
            poly = _poly_mul(poly, base)
    return poly


def combine_products(terms) -> FactorProduct:
    """Sum coeff_i * P_i/D_i of real-offset FactorProducts into one product.

    Shared roots keep their maximal multiplicity in the common denominator, so
    leading-order cancellation between divergent halves lands in the numerator
    (e.g. 1/(x+a) - 1/(x+b) -> (b-a)/((x+a)(x+b)), which does converge).
    """
    terms = list(terms)
    if not terms:
        raise ValueError("no terms to combine")
    for _, fp in terms:
        for f in fp.factors:
            if complex(f.offset).imag != 0.0:
                raise ValueError("combine_products handles real-offset factors only")
    canon = [(coeff, canonicalize(fp)) for coeff, fp in terms]

    # common denominator: max multiplicity per distinct root
    common: list[tuple[complex, int]] = []
    for _, fp in canon:
        for f in fp.factors:
            for i, (off, mult) in enumerate(common):
                if abs(off - complex(f.offset)) <= ROOT_MERGE_TOL:
                    common[i] = (off, max(mult, f.multiplicity))
                    break
            else:
                common.append((complex(f.offset), f.multiplicity))
    common.sort(key=lambda om: (om[0].real, om[0].imag))

    numerator: tuple[float, ...] = (0.0,)
    for coeff, fp in canon:
        cofactors = []
        for off, mult in common:
            have = 0
            for f in fp.factors:
                if abs(complex(f.offset) - off) <= ROOT_MERGE_TOL:
                    have = f.multiplicity
                    break
            if mult - have:
                cofactors.append(LinearFactor(1.0, off, mult - have))
        part = _poly_mul(tuple(c * coeff for c in fp.numerator), _expand_factors(cofactors))
        numerator = _poly_add(numerator, part)

    factors = tuple(LinearFactor(1.0, off, mult) for off, mult in common)
    return FactorProduct(factors=factors, numerator=_poly_trim(numerator))
