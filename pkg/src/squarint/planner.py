"""Plan evaluation and identity verification.

Maps each plan variant onto its engine: HalflinePlan -> halfline closed
forms, CubePlan -> cubature (with automatic series-mode fallback), SeriesPlan
-> the series evaluators, ConstPlan -> the named-constant expression
evaluator.  `verify`/`verify_all` produce VerificationReports with the
PASS/FAIL/FLAGGED status rules from the identity records.
"""

from __future__ import annotations

import ast
import cmath
import math
from dataclasses import dataclass, replace

from . import cubature, halfline, special
from .errors import (DomainError, EngineFailure, SquarintError,
                     UnknownIdentity)
from .expint import expint_scaled
from .model import (ConstPlan, CubePlan, EngineDiagnostics, FactorProduct,
                    HalflinePlan, IdentityRecord, ImagPartPlan, LinearFactor,
                    Plan, RealPartPlan, ScalePlan, SeriesPlan, SumPlan,
                    VerificationReport)
from .seriesutil import neville_zero, richardson_partial_sums

# ---------------------------------------------------------------------------
# budget profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    name: str
    quad_tol: float
    series_tol: float
    budget_evals: int
    budget_points: int
    seed: int = cubature.DEFAULT_SEED


PROFILES = {
    "quick": Profile(name="quick", quad_tol=1e-6, series_tol=1e-9,
                     budget_evals=300_000, budget_points=1 << 13),
    "thorough": Profile(name="thorough", quad_tol=1e-8, series_tol=1e-11,
                        budget_evals=1_000_000, budget_points=1 << 14),
}


# ---------------------------------------------------------------------------
# named-constant expressions (closed data: whitelisted names only)
# ---------------------------------------------------------------------------

def _coth(x):
    return cmath.cosh(x) / cmath.sinh(x)


_CONST_NAMES = {
    "pi": math.pi,
    "e": math.e,
    "gamma": special.EULER_GAMMA,
    "catalan": special.CATALAN,
    "i": 1j,
}

_CONST_FUNCS = {
    "log": cmath.log,
    "log1p": lambda x: cmath.log(1.0 + x),
    "sqrt": cmath.sqrt,
    "exp": cmath.exp,
    "sin": cmath.sin,
    "cos": cmath.cos,
    "tan": cmath.tan,
    "atan": cmath.atan,
    "atanh": cmath.atanh,
    "sinh": cmath.sinh,
    "cosh": cmath.cosh,
    "tanh": cmath.tanh,
    "coth": _coth,
    "abs": abs,
    "factorial": lambda n: float(math.factorial(int(n))),
    "Gamma": special.gamma_fn,
    "loggamma": special.log_gamma,
    "psi": special.digamma,
    "zeta": lambda s: special.zeta(float(complex(s).real)),
    "E": lambda n, x: special.exp_integral_E(int(n), float(complex(x).real)),
    "lerch": lambda z, s, a: special.lerch_phi(z, float(complex(s).real),
                                               float(complex(a).real)),
}

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def eval_const_expr(expr: str) -> complex:
    """Evaluate an expression over gamma, pi, zeta, G, Gamma, psi, E_n, logs."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise DomainError(f"unparseable constant expression {expr!r}: {exc}")
    return complex(_eval_node(tree.body, expr))


def _eval_node(node, expr: str):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, (int, float, complex)):
            return node.value
        raise DomainError(f"literal {node.value!r} not allowed in {expr!r}")
    if isinstance(node, ast.Name):
        if node.id in _CONST_NAMES:
            return _CONST_NAMES[node.id]
        raise DomainError(f"unknown name {node.id!r} in {expr!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        val = _eval_node(node.operand, expr)
        return -val if isinstance(node.op, ast.USub) else val
    if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
        left = _eval_node(node.left, expr)
        right = _eval_node(node.right, expr)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left / right
        return left ** right
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        fn = _CONST_FUNCS.get(node.func.id)
        if fn is None or node.keywords:
            raise DomainError(f"unknown function {node.func.id!r} in {expr!r}")
        args = [_eval_node(a, expr) for a in node.args]
        return fn(*args)
    raise DomainError(f"disallowed syntax in constant expression {expr!r}")


# ---------------------------------------------------------------------------
# series families
# ---------------------------------------------------------------------------

def _eval_series(spec, profile: Profile,
                 tolerance: float | None = None) -> tuple[complex, EngineDiagnostics]:
    family = spec.family
    tol = profile.series_tol
    if tolerance is not None:
        tol = min(tol, tolerance / 4.0)
    if family == "lerch":
        res = special.lerch_phi_info(complex(spec.param("z")),
                                     float(complex(spec.param("s")).real),
                                     float(complex(spec.param("a")).real),
                                     tol=min(tol, 1e-12))
    elif family == "euler-gamma":
        res = special.euler_gamma(min(tol, 1e-11))
    elif family == "alt-log-product":
        value = special.alt_log_product(_realp(spec, "a"), _realp(spec, "b"),
                                        _realp(spec, "c"), tol=min(tol, 1e-10))
        res = special.SeriesResult(value=value, terms_used=1, tail_bound=tol,
                                   accelerated=True)
    elif family == "psi-sum":
        res = special.psi_weighted_sum(str(spec.param("weight")),
                                       int(spec.param("divisor", 1)),
                                       alternating=bool(spec.param("alternating", 0)))
    elif family == "zeta-of-integrals":
        res = _zeta_of_integrals(int(spec.param("s")), tol)
    elif family == "geometric-of-halfline":
        res = _geometric_of_halfline(spec, tol)
    elif family == "custom-term":
        res = _custom_series(spec, tol)
    else:
        raise DomainError(f"no evaluator for series family {family!r}")
    diag = EngineDiagnostics(method=f"series:{family}",
                             evaluations=res.terms_used,
                             error_estimate=res.tail_bound,
                             truncation_index=res.terms_used)
    return complex(res.value), diag


def _realp(spec, name) -> float:
    return float(complex(spec.param(name)).real)


def _zeta_of_integrals(s: int, tol: float) -> special.SeriesResult:
    # zeta(s) = s * sum_k integral (x + k + 1)^-(s+1) = sum_k (k+1)^-s
    def factory(k: int) -> FactorProduct:
        return FactorProduct(
            factors=(LinearFactor(1.0, complex(k + 1.0), s + 1),))

    inner = special.series_of_halfline(1.0, factory, tol=tol / max(s, 1))
    return special.SeriesResult(value=inner.value * s,
                                terms_used=inner.terms_used,
                                tail_bound=inner.tail_bound * s,
                                accelerated=inner.accelerated)


def _geometric_of_halfline(spec, tol: float) -> special.SeriesResult:
    kind = str(spec.param("kind"))
    if kind == "coth":
        def factory(n: int) -> FactorProduct:
            c = n + 1.0
            return FactorProduct(
                factors=(LinearFactor(1.0, complex(c, 1.0), 2),
                         LinearFactor(1.0, complex(c, -1.0), 2)),
                numerator=(2.0 * c, 2.0),
            )
        return special.series_of_halfline(1.0, factory, tol=tol)
    if kind == "cor0":
        a, b, c, d = (_realp(spec, k) for k in "abcd")
        g, h = _realp(spec, "g"), _realp(spec, "h")
        r = complex(spec.param("r"))

        def factory(n: int) -> FactorProduct:
            return FactorProduct(factors=(
                LinearFactor(a, complex(b + c * n)),
                LinearFactor(d, complex(g + h * n)),
            ))
        return special.series_of_halfline(r, factory, tol=tol)
    if kind == "cor0b":
        a, b, c, d = (_realp(spec, k) for k in "abcd")
        e, h = _realp(spec, "e"), _realp(spec, "h")
        r = complex(spec.param("r"))

        def factory(n: int) -> FactorProduct:
            from .model import combine_products
            first = FactorProduct(factors=(
                LinearFactor(a, complex(b + c * n)),
                LinearFactor(d, complex(h + e * n)),
            ))
            second = FactorProduct(factors=(
                LinearFactor(a, complex(a + b + c * n)),
                LinearFactor(d, complex(d + h + e * n)),
            ))
            return combine_products([(1.0, first), (-1.0, second)])
        return special.series_of_halfline(r, factory, tol=tol)
    if kind == "t8":
        a, b, c, d = (_realp(spec, k) for k in "abcd")

        def factory(n: int) -> FactorProduct:
            from .model import combine_products
            m = n + 1  # the statement's sum starts at n = 1
            square = FactorProduct(
                factors=(LinearFactor(1.0, complex(d + b * m), 2),))
            pair = FactorProduct(factors=(
                LinearFactor(1.0, complex(a + b * m)),
                LinearFactor(1.0, complex(c + b * m)),
            ))
            return combine_products([(1.0, square), (-1.0, pair)])
        return special.series_of_halfline(1.0, factory, tol=tol)
    if kind == "lerch-int":
        z = complex(spec.param("z"))
        s = int(spec.param("s"))
        a = _realp(spec, "a")

        def factory(k: int) -> FactorProduct:
            return FactorProduct(
                factors=(LinearFactor(1.0, complex(k + a), s + 1),))
        inner = special.series_of_halfline(z, factory, tol=tol / s)
        return special.SeriesResult(value=inner.value * s,
                                    terms_used=inner.terms_used,
                                    tail_bound=inner.tail_bound * s,
                                    accelerated=inner.accelerated)
    raise DomainError(f"unknown geometric-of-halfline kind {kind!r}")


def _custom_series(spec, tol: float) -> special.SeriesResult:
    kind = str(spec.param("kind"))
    if kind == "cor3":
        k = int(spec.param("k"))

        def term(n: int) -> complex:
            m = n + 1
            return expint_scaled(k, float(m)) * float(m) ** (1 - k)
        value, err, used = richardson_partial_sums(term, n0=64, levels=5, tol=tol)
        return special.SeriesResult(value=value, terms_used=used, tail_bound=err,
                                    accelerated=True)
    if kind == "cor3-gamma":
        def term(n: int) -> complex:
            m = n + 1
            return math.log1p(1.0 / m) - expint_scaled(1, float(m))
        value, err, used = richardson_partial_sums(term, n0=64, levels=5, tol=tol)
        return special.SeriesResult(value=value + special.EULER_GAMMA,
                                    terms_used=used, tail_bound=err,
                                    accelerated=True)
    if kind == "cor3-alpha":
        alpha = _realp(spec, "alpha")

        def term(n: int) -> complex:
            m = n + 1
            return 1.0 / (alpha * m) - expint_scaled(1, alpha * m)
        value, err, used = richardson_partial_sums(term, n0=64, levels=5, tol=tol)
        return special.SeriesResult(value=value, terms_used=used, tail_bound=err,
                                    accelerated=True)
    if kind == "ram-shifted-limit":
        a = _realp(spec, "a")
        kmax = int(spec.param("kmax"))
        vals = [halfline.ramanujan_product_integral(None, a, k, "shifted")
                for k in range(1, kmax + 1)]
        xs = [1.0 / k for k in range(1, kmax + 1)]
        value, err = neville_zero(xs, vals)
        return special.SeriesResult(value=value, terms_used=kmax, tail_bound=err,
                                    accelerated=True)
    raise DomainError(f"unknown custom series kind {kind!r}")


# ---------------------------------------------------------------------------
# plan evaluation
# ---------------------------------------------------------------------------

def evaluate_plan(plan: Plan, profile: Profile,
                  tolerance: float | None = None) -> tuple[complex, EngineDiagnostics]:
    """Evaluate a plan; tolerance (if given) tightens the engine targets."""
    quad_tol = profile.quad_tol if tolerance is None \
        else min(profile.quad_tol, tolerance)

    if isinstance(plan, ConstPlan):
        value = eval_const_expr(plan.expr)
        return value, EngineDiagnostics(method="const", evaluations=1,
                                        error_estimate=4e-16 * abs(value))
    if isinstance(plan, HalflinePlan):
        if plan.weight:
            value = halfline.integrate_rational_exp(plan.product, plan.weight)
        else:
            value = halfline.integrate_rational(plan.product)
        n_terms = sum(f.multiplicity for f in plan.product.factors)
        return value, EngineDiagnostics(method="halfline-closed",
                                        evaluations=n_terms,
                                        error_estimate=1e-14 * abs(value))
    if isinstance(plan, CubePlan):
        qr = cubature.integrate_cube(plan.spec, tolerance=quad_tol,
                                     budget=profile.budget_evals,
                                     seed=profile.seed)
        return qr.value, EngineDiagnostics(method=qr.method,
                                           evaluations=qr.evaluations,
                                           error_estimate=qr.error_estimate)
    if isinstance(plan, SeriesPlan):
        return _eval_series(plan.spec, profile, tolerance)
    if isinstance(plan, ScalePlan):
        value, diag = evaluate_plan(plan.inner, profile, tolerance)
        scale = complex(plan.factor)
        return value * scale, replace(
            diag, error_estimate=diag.error_estimate * abs(scale))
    if isinstance(plan, RealPartPlan):
        value, diag = evaluate_plan(plan.inner, profile, tolerance)
        return complex(value.real), diag
    if isinstance(plan, ImagPartPlan):
        value, diag = evaluate_plan(plan.inner, profile, tolerance)
        return complex(value.imag), diag
    if isinstance(plan, SumPlan):
        combo = _flatten_cube_combo(plan)
        if combo is not None:
            qr = cubature.integrate_cube_combo(combo, tolerance=quad_tol,
                                               budget=profile.budget_evals,
                                               seed=profile.seed)
            return qr.value, EngineDiagnostics(method=qr.method,
                                               evaluations=qr.evaluations,
                                               error_estimate=qr.error_estimate)
        total = 0.0 + 0.0j
        evals = 0
        est = 0.0
        method = "sum"
        for sub in plan.terms:
            value, diag = evaluate_plan(sub, profile, tolerance)
            total += value
            evals += diag.evaluations
            est += diag.error_estimate
        return total, EngineDiagnostics(method=method, evaluations=evals,
                                        error_estimate=est)
    raise TypeError(f"cannot evaluate plan {type(plan).__name__}")


def _flatten_cube_combo(plan: SumPlan):
    """SumPlan of (optionally real-scaled) CubePlans -> combo term list."""
    combo = []
    for sub in plan.terms:
        coeff = 1.0
        while isinstance(sub, ScalePlan):
            factor = complex(sub.factor)
            if factor.imag != 0.0:
                return None
            coeff *= factor.real
            sub = sub.inner
        if not isinstance(sub, CubePlan):
            return None
        combo.append((coeff, sub.spec))
    return combo if combo else None


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _evaluate_side(plan: Plan, profile: Profile, tolerance: float, side: str):
    try:
        return evaluate_plan(plan, profile, tolerance)
    except SquarintError as exc:
        raise EngineFailure(f"{side} plan failed: {exc}", plan=plan, cause=exc)


def verify_record(rec: IdentityRecord, profile: Profile) -> VerificationReport:
    lhs_value, lhs_diag = _evaluate_side(rec.lhs, profile, rec.tolerance, "lhs")
    rhs_value, rhs_diag = _evaluate_side(rec.rhs, profile, rec.tolerance, "rhs")
    abs_error = abs(lhs_value - rhs_value)
    scale = max(abs(lhs_value), abs(rhs_value))
    rel_error = abs_error / scale if scale > 0.0 else 0.0
    if abs_error <= rec.tolerance or rel_error <= rec.tolerance:
        status = "PASS"
    elif rec.trust == "suspected-typo":
        status = "FLAGGED"
    else:
        status = "FAIL"
    return VerificationReport(
        identity_id=rec.id,
        lhs_value=lhs_value,
        rhs_value=rhs_value,
        abs_error=abs_error,
        rel_error=rel_error,
        status=status,
        lhs_diagnostics=lhs_diag,
        rhs_diagnostics=rhs_diag,
    )


def verify(registry, identity_id: str, profile: str | Profile = "quick"
           ) -> VerificationReport:
    if isinstance(profile, str):
        profile = PROFILES[profile]
    rec = registry.lookup(identity_id)
    if rec is None:
        raise UnknownIdentity(f"no identity with id {identity_id!r}")
    return verify_record(rec, profile)


def verify_all(registry, profile: str | Profile = "quick",
               ids: list[str] | None = None) -> list[VerificationReport]:
    if isinstance(profile, str):
        profile = PROFILES[profile]
    out = []
    for rec in registry.records:
        if ids is not None and rec.id not in ids:
            continue
        out.append(verify_record(rec, profile))
    return out
