"""squarint: three-route verification of unit-square/cube integral identities.

The engines:

* `halfline`  -- closed forms of half-line rational integrals via complex
  partial fractions (plus the e^{-ms}-weighted variant through E_n)
* `cubature`  -- singularity-aware numerical integration of unit-cube
  integrands and their exponential-orthant forms
* `special`   -- reference special functions and series evaluators
* `registry`/`planner` -- the identity catalog and per-identity verification
"""

from .model import (ConstPlan, CubeIntegrandSpec, CubePlan, FactorProduct,
                    GeometricFactor, HalflinePlan, IdentityRecord,
                    LinearFactor, LogMonomial, SeriesSpec, VerificationReport,
                    canonicalize, cube_spec, factor_product, validate)
from .halfline import (integrate_rational, integrate_rational_exp,
                       partial_fractions, ramanujan_product_integral)
from .cubature import (QuadratureResult, integrate_cube, integrate_cube_combo,
                       log_moment_kernel, riemann_limit_sum, to_orthant)
from .registry import Registry, builtin_registry
from .planner import PROFILES, evaluate_plan, verify, verify_all

__version__ = "0.1.0"

__all__ = [
    "ConstPlan", "CubeIntegrandSpec", "CubePlan", "FactorProduct",
    "GeometricFactor", "HalflinePlan", "IdentityRecord", "LinearFactor",
    "LogMonomial", "SeriesSpec", "VerificationReport", "canonicalize",
    "cube_spec", "factor_product", "validate",
    "integrate_rational", "integrate_rational_exp", "partial_fractions",
    "ramanujan_product_integral",
    "QuadratureResult", "integrate_cube", "integrate_cube_combo",
    "log_moment_kernel", "riemann_limit_sum", "to_orthant",
    "Registry", "builtin_registry",
    "PROFILES", "evaluate_plan", "verify", "verify_all",
    "__version__",
]
