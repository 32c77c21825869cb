"""Series acceleration helpers: Richardson/Neville extrapolation, the Euler
transform for alternating tails, and Euler-Maclaurin power tails.

References: Bender & Orszag ch. 8 (Richardson, Euler transforms);
Abramowitz & Stegun 3.6 / 23.1 (Euler-Maclaurin).
"""

from __future__ import annotations

import math
from typing import Callable, Sequence

from .errors import Nonconvergent


def neville_zero(xs: Sequence[float], ys: Sequence[complex]) -> tuple[complex, float]:
    """Polynomial extrapolation of (xs, ys) to x = 0.

    Returns (limit, |last correction|), i.e. |T_{n,n} - T_{n,n-1}|: the size
    of the final elimination step, the usual Neville error proxy.
    """
    n = len(xs)
    if n < 2:
        return complex(ys[0]), float("inf")
    t = [complex(y) for y in ys]
    corr_last = 0.0
    corr_prev = 0.0
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            step = (t[i] - t[i - 1]) * xs[i] / (xs[i - j] - xs[i])
            if i == n - 1:
                corr_prev, corr_last = corr_last, abs(step)
            t[i] = t[i] + step
    # corrections decay geometrically for smooth expansions; project one order
    err = corr_last
    if corr_prev > corr_last > 0.0:
        err = corr_last * corr_last / corr_prev
    return t[n - 1], err


def richardson_partial_sums(term: Callable[[int], complex], n0: int = 64,
                            levels: int = 5, start: int = 0,
                            tol: float | None = None) -> tuple[complex, float, int]:
    """Limit of partial sums S_N (N = n0 * 2^i) extrapolated in 1/N.

    Suitable for terms with an asymptotic expansion in 1/n starting at 1/n^2
    (the tail of S_N is then a power series in 1/N, which Neville kills).
    Returns (value, error_estimate, terms_used).
    """
    ns = [n0 * (1 << i) for i in range(levels + 1)]
    partial = 0.0 + 0.0j
    sums = []
    idx = start
    for n_target in ns:
        while idx < start + n_target:
            partial += complex(term(idx))
            idx += 1
        sums.append(partial)
    xs = [1.0 / n for n in ns]
    value, err = neville_zero(xs, sums)
    if tol is not None and err > tol and err > 1e-14 * max(1.0, abs(value)):
        raise Nonconvergent(
            f"partial-sum extrapolation stalled at error {err:.3e} > tol {tol:.3e}"
        )
    return value, err, idx - start


def euler_transform_head(a: Callable[[int], complex], n_start: int,
                         k_diffs: int = 24) -> tuple[complex, float]:
    """Euler transform of E = sum_{m >= 0} (-1)^m a(n_start + m).

    E = sum_k (-1)^k Delta^k a(n_start) / 2^{k+1}; converges fast when a is
    smooth and slowly varying near n_start.  Returns (E, |last term kept|).
    """
    vals = [complex(a(n_start + i)) for i in range(k_diffs + 1)]
    total = 0.0 + 0.0j
    scale = 0.5
    sign = 1.0
    last = 0.0
    for _ in range(k_diffs + 1):
        term = sign * scale * vals[0]
        total += term
        last = abs(term)
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
        scale *= 0.5
        sign = -sign
        if not vals:
            break
    return total, last


def alternating_sum(a: Callable[[int], complex], start: int = 0, direct: int = 64,
                    k_diffs: int = 24) -> tuple[complex, float, int]:
    """sum_{n >= start} (-1)^(n - start) a(n), Euler-transformed tail.

    Returns (value, tail_bound_proxy, terms_used).
    """
    total = 0.0 + 0.0j
    sign = 1.0
    n = start
    for _ in range(direct):
        total += sign * complex(a(n))
        sign = -sign
        n += 1
    # remaining sum is sign * (a(n) - a(n+1) + ...) = sign * E
    tail, last = euler_transform_head(a, n, k_diffs)
    total += sign * tail
    return total, last, direct + k_diffs + 1


def em_power_tail(a: float, s: float, n_start: int, orders: int = 3) -> tuple[float, float]:
    """Euler-Maclaurin tail of sum_{k >= n_start} (k + a)^(-s), s > 1.

    sum_{k>=N} f(k) = int_N^inf f + f(N)/2 - sum_m B_2m/(2m)! f^(2m-1)(N);
    for f = (x+a)^(-s), f^(2m-1)(N) = -(s)_{2m-1} (N+a)^(-s-2m+1).
    Returns (tail, magnitude of first omitted correction).
    """
    x = n_start + a
    tail = x ** (1.0 - s) / (s - 1.0) + 0.5 * x ** (-s)
    bern = {2: 1.0 / 6, 4: -1.0 / 30, 6: 1.0 / 42, 8: -1.0 / 30}
    orders = min(orders, 3)
    corr_next = 0.0
    for m in range(1, orders + 2):
        rising = 1.0
        for j in range(2 * m - 1):
            rising *= s + j
        corr = bern[2 * m] / math.factorial(2 * m) * rising * x ** (-s - 2 * m + 1)
        if m <= orders:
            tail += corr
        else:
            corr_next = abs(corr)
    return tail, corr_next
