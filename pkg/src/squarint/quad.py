"""Quadrature primitives.

* tanh-sinh on (0,1) with endpoint distances passed to the integrand, so
  integrands stay accurate when a node rounds to an endpoint
* exp-sinh on (0, inf) for decaying tails
* adaptive Genz-Malik degree-7 cubature over axis-aligned boxes (k >= 2)
* randomized (scrambled) Sobol means with shift-based error estimates
* Duffy / stick-breaking map from the unit cube onto the standard simplex

All routines are deterministic for fixed inputs (the Sobol engine for a fixed
seed) and report their evaluation counts.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidDim, Nonconvergent

_HALF_PI = math.pi / 2.0

# ---------------------------------------------------------------------------
# tanh-sinh on (0, 1)
# ---------------------------------------------------------------------------

_TS_TMAX = 6.0
_ts_level_cache: dict[int, list[tuple[float, float, float, float]]] = {}


def _ts_point(t: float) -> tuple[float, float, float, float]:
    """Return (x, dist0, dist1, dxdt) for the map x = (1 + tanh((pi/2) sinh t))/2."""
    u = _HALF_PI * math.sinh(t)
    au = abs(u)
    e = math.exp(-2.0 * au)          # in (0, 1], stable for large |u|
    near = e / (1.0 + e)             # distance to the closer endpoint
    far = 1.0 / (1.0 + e)
    if u >= 0.0:
        x, d0, d1 = far, far, near
    else:
        x, d0, d1 = near, near, far
    dxdt = math.pi * math.cosh(t) * e / (1.0 + e) ** 2
    return x, d0, d1, dxdt


def _ts_nodes(level: int) -> list[tuple[float, float, float, float]]:
    """New nodes introduced at `level` (level 0 = the h=1 coarse grid)."""
    table = _ts_level_cache.get(level)
    if table is not None:
        return table
    if level == 0:
        ts = [0.0]
        j = 1
        while j <= _TS_TMAX:
            ts.extend((j * 1.0, -j * 1.0))
            j += 1
    else:
        h = 1.0 / (1 << level)
        ts = []
        t = h
        while t <= _TS_TMAX:
            ts.extend((t, -t))
            t += 2.0 * h
    table = [_ts_point(t) for t in ts]
    _ts_level_cache[level] = table
    return table


def tanh_sinh_01(f: Callable[[float, float, float], complex], tol: float,
                 max_level: int = 11, min_level: int = 3) -> tuple[complex, float, int]:
    """Integrate f over (0,1); f receives (x, dist_from_0, dist_from_1).

    Returns (value, error_estimate, evaluations).
    """
    evals = 0
    raw = 0.0 + 0.0j      # sum of f * dx/dt over all nodes so far
    history: list[complex] = []
    est = math.inf
    for level in range(max_level + 1):
        for x, d0, d1, dxdt in _ts_nodes(level):
            if dxdt == 0.0:
                continue
            raw += complex(f(x, d0, d1)) * dxdt
            evals += 1
        h = 1.0 / (1 << level)
        value = raw * h
        history.append(value)
        if level >= min_level and len(history) >= 3:
            d1_ = abs(history[-1] - history[-2])
            d2_ = abs(history[-2] - history[-3])
            if d1_ == 0.0:
                est = 1e-16 * max(1.0, abs(value))
            elif d2_ > d1_:
                est = min(d1_, d1_ * d1_ / d2_)  # double-exponential decay model
            else:
                est = d1_
            est = max(est, 1e-16 * abs(value))
            if est <= tol:
                return value, est, evals
    return history[-1], est, evals


# ---------------------------------------------------------------------------
# exp-sinh on (0, inf)
# ---------------------------------------------------------------------------

_ES_TMAX = 6.2
_es_level_cache: dict[int, list[tuple[float, float]]] = {}


def _es_nodes(level: int) -> list[tuple[float, float]]:
    table = _es_level_cache.get(level)
    if table is not None:
        return table
    if level == 0:
        ts = [0.0]
        j = 1
        while j <= _ES_TMAX:
            ts.extend((float(j), float(-j)))
            j += 1
    else:
        h = 1.0 / (1 << level)
        ts = []
        t = h
        while t <= _ES_TMAX:
            ts.extend((t, -t))
            t += 2.0 * h
    out = []
    for t in ts:
        x = math.exp(_HALF_PI * math.sinh(t))
        dxdt = _HALF_PI * math.cosh(t) * x
        if math.isfinite(x) and math.isfinite(dxdt) and x > 0.0:
            out.append((x, dxdt))
    _es_level_cache[level] = out
    return out


def exp_sinh_0inf(f: Callable[[float], complex], tol: float,
                  max_level: int = 11, min_level: int = 3) -> tuple[complex, float, int]:
    """Integrate f over (0, inf); integrand must decay fast enough at infinity."""
    evals = 0
    raw = 0.0 + 0.0j
    history: list[complex] = []
    est = math.inf
    for level in range(max_level + 1):
        for x, dxdt in _es_nodes(level):
            fx = complex(f(x))
            if fx != 0.0:
                raw += fx * dxdt
            evals += 1
        h = 1.0 / (1 << level)
        value = raw * h
        history.append(value)
        if level >= min_level and len(history) >= 3:
            d1_ = abs(history[-1] - history[-2])
            d2_ = abs(history[-2] - history[-3])
            if d1_ == 0.0:
                est = 1e-16 * max(1.0, abs(value))
            elif d2_ > d1_:
                est = min(d1_, d1_ * d1_ / d2_)
            else:
                est = d1_
            est = max(est, 1e-16 * abs(value))
            if est <= tol:
                return value, est, evals
    return history[-1], est, evals


# ---------------------------------------------------------------------------
# Genz-Malik adaptive cubature
# ---------------------------------------------------------------------------

_LAMBDA2 = math.sqrt(9.0 / 70.0)
_LAMBDA3 = math.sqrt(9.0 / 10.0)
_LAMBDA4 = math.sqrt(9.0 / 10.0)
_LAMBDA5 = math.sqrt(9.0 / 19.0)
_FOURTH_RATIO = (_LAMBDA2 ** 2) / (_LAMBDA3 ** 2)


@dataclass(frozen=True)
class _GMRule:
    points: np.ndarray          # (P, k) offsets in [-1, 1]^k coordinates
    w7: np.ndarray              # degree-7 weights, reference volume 2^k
    w5: np.ndarray              # embedded degree-5 weights
    idx_center: int
    idx_l2: np.ndarray          # (k, 2) indices of the +-lambda2 axis points
    idx_l3: np.ndarray          # (k, 2)


_gm_cache: dict[int, _GMRule] = {}


def _gm_rule(k: int) -> _GMRule:
    rule = _gm_cache.get(k)
    if rule is not None:
        return rule
    pts: list[np.ndarray] = [np.zeros(k)]
    w7: list[float] = [(12824.0 - 9120.0 * k + 400.0 * k * k) / 19683.0]
    w5: list[float] = [(729.0 - 950.0 * k + 50.0 * k * k) / 729.0]
    idx_l2 = np.zeros((k, 2), dtype=int)
    idx_l3 = np.zeros((k, 2), dtype=int)
    for lam, w7i, w5i, idx in (
        (_LAMBDA2, 980.0 / 6561.0, 245.0 / 486.0, idx_l2),
        (_LAMBDA3, (1820.0 - 400.0 * k) / 19683.0, (265.0 - 100.0 * k) / 1458.0, idx_l3),
    ):
        for i in range(k):
            for s, col in ((+1.0, 0), (-1.0, 1)):
                p = np.zeros(k)
                p[i] = s * lam
                idx[i, col] = len(pts)
                pts.append(p)
                w7.append(w7i)
                w5.append(w5i)
    for i in range(k):
        for j in range(i + 1, k):
            for si in (+1.0, -1.0):
                for sj in (+1.0, -1.0):
                    p = np.zeros(k)
                    p[i] = si * _LAMBDA4
                    p[j] = sj * _LAMBDA4
                    pts.append(p)
                    w7.append(200.0 / 19683.0)
                    w5.append(25.0 / 729.0)
    for mask in range(1 << k):
        p = np.array([_LAMBDA5 if (mask >> i) & 1 else -_LAMBDA5 for i in range(k)])
        pts.append(p)
        w7.append(6859.0 / 19683.0 / (1 << k))
        w5.append(0.0)
    rule = _GMRule(
        points=np.array(pts),
        w7=np.array(w7),
        w5=np.array(w5),
        idx_center=0,
        idx_l2=idx_l2,
        idx_l3=idx_l3,
    )
    _gm_cache[k] = rule
    return rule


def _gm_eval_region(f, rule: _GMRule, center: np.ndarray, half: np.ndarray):
    """Apply the rule to one box; returns (value, error, split_axis, npoints)."""
    pts = center + rule.points * half
    vals = np.asarray(f(pts), dtype=complex)
    scale = float(np.prod(2.0 * half))    # weights are volume-normalized
    val7 = scale * np.dot(rule.w7, vals)
    val5 = scale * np.dot(rule.w5, vals)
    err = abs(val7 - val5)
    fc = vals[rule.idx_center]
    diffs = np.empty(len(half))
    for i in range(len(half)):
        s2 = vals[rule.idx_l2[i, 0]] + vals[rule.idx_l2[i, 1]] - 2.0 * fc
        s3 = vals[rule.idx_l3[i, 0]] + vals[rule.idx_l3[i, 1]] - 2.0 * fc
        diffs[i] = abs(s2 - _FOURTH_RATIO * s3)
    axis = int(np.argmax(diffs))
    return val7, err, axis, len(vals)


def adaptive_genz_malik(f, k: int, tol: float, max_evals: int = 1_000_000,
                        lo: float = 0.0, hi: float = 1.0) -> tuple[complex, float, int]:
    """Adaptive degree-7 Genz-Malik cubature of f over [lo, hi]^k, k >= 2.

    f maps an (N, k) array of interior points to complex values of shape (N,).
    Returns (value, error_estimate, evaluations); raises Nonconvergent when
    the budget is exhausted with the error estimate above tol.
    """
    if k < 2:
        raise InvalidDim(f"Genz-Malik needs dimension >= 2, got {k}")
    rule = _gm_rule(k)
    center = np.full(k, 0.5 * (lo + hi))
    half = np.full(k, 0.5 * (hi - lo))
    val, err, axis, used = _gm_eval_region(f, rule, center, half)
    total_val, total_err, evals = val, err, used
    counter = 0
    heap = [(-err, counter, center, half, val, axis)]
    while total_err > tol and evals + 2 * len(rule.w7) <= max_evals and heap:
        neg_err, _, c, h, v, ax = heapq.heappop(heap)
        total_val -= v
        total_err += neg_err  # remove the popped region's error
        h2 = h.copy()
        h2[ax] *= 0.5
        c1 = c.copy()
        c1[ax] -= h2[ax]
        c2 = c.copy()
        c2[ax] += h2[ax]
        for cc in (c1, c2):
            vv, ee, aa, used = _gm_eval_region(f, rule, cc, h2)
            evals += used
            counter += 1
            heapq.heappush(heap, (-ee, counter, cc, h2, vv, aa))
            total_val += vv
            total_err += ee
    return total_val, total_err, evals


# ---------------------------------------------------------------------------
# randomized Sobol means
# ---------------------------------------------------------------------------

def sobol_cube(f, k: int, m: int = 14, shifts: int = 8,
               seed: int = 20150921) -> tuple[complex, float, int]:
    """Scrambled-Sobol estimate of f over (0,1)^k with `shifts` replicates.

    f maps (N, k) points to complex (N,).  Value is the replicate mean,
    error estimate the standard error over replicates.  Points are nudged
    off the closed boundary so singular-edge integrands stay finite.
    """
    from scipy.stats import qmc

    if not 1 <= k <= 21201:
        raise InvalidDim(f"Sobol dimension out of range: {k}")
    eps = 2.0 ** -50
    means = []
    evals = 0
    for i in range(shifts):
        eng = qmc.Sobol(d=k, scramble=True, seed=seed * 1_000_003 + i)
        pts = eng.random_base2(m=m)
        np.clip(pts, eps, 1.0 - eps, out=pts)
        vals = np.asarray(f(pts), dtype=complex)
        means.append(complex(np.mean(vals)))
        evals += len(pts)
    arr = np.array(means)
    value = complex(np.mean(arr))
    if shifts > 1:
        err = float(np.sqrt(np.sum(np.abs(arr - value) ** 2) / (shifts - 1) / shifts))
    else:
        err = math.inf
    return value, err, evals


# ---------------------------------------------------------------------------
# simplex parametrization
# ---------------------------------------------------------------------------

def duffy_simplex(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Map cube points v (N, k-1) onto the unit simplex {u >= 0, sum u = 1}.

    Returns (u, jacobian) with u of shape (N, k); integrating
    g(u) * jacobian over the cube equals the integral of g over the simplex
    in the coordinates (u_1 .. u_{k-1}) with u_k = 1 - sum.
    """
    v = np.atleast_2d(v)
    n, km1 = v.shape
    k = km1 + 1
    u = np.empty((n, k))
    jac = np.ones(n)
    remaining = np.ones(n)
    for i in range(km1):
        u[:, i] = v[:, i] * remaining
        jac *= remaining
        remaining = remaining * (1.0 - v[:, i])
    u[:, k - 1] = remaining
    return u, jac


def gauss_legendre_01(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Cached Gauss-Legendre nodes/weights on (0,1)."""
    key = int(n)
    cached = _gl_cache.get(key)
    if cached is None:
        x, w = np.polynomial.legendre.leggauss(key)
        cached = (0.5 * (x + 1.0), 0.5 * w)
        _gl_cache[key] = cached
    return cached


_gl_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
