"""Matrix-valued Bessel generating function on the cyclic shift.

exp((x/2) (w * shift + (1/w) * shift^dagger)) is a circulant whose
coefficient of shift^m collects the orders congruent to m mod n of the
scalar generating function sum_k I_k(x) w^k.  Trace projections against
shift powers extract one residue class at a time, and three independent
routes to each class value are provided: the literal trace, the closed
scalar sum over roots of unity, and the truncated bilateral Bessel sum.
"""

from __future__ import annotations

import math

import numpy as np

from dataclasses import dataclass

from .algebra import dft_matrix, shift_power
from .bessel import bessel_table
from .errors import DomainError, require_index, require_level

ARG_MAX = 50.0


def _require_w(w) -> complex:
    w = complex(w)
    if w == 0:
        raise DomainError("invalid-argument: w must be nonzero")
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise DomainError(f"invalid-argument: w must be finite, got {w!r}")
    return w


def unit_scale(x: float, w: complex) -> float:
    """|x| * max(|w|, 1/|w|), the working magnitude of all the sums here."""
    return abs(float(x)) * max(abs(w), 1.0 / abs(w))


def _require_args(n, x, w):
    n = require_level(n)
    w = _require_w(w)
    x = float(x)
    if not math.isfinite(x) or unit_scale(x, w) > ARG_MAX:
        raise DomainError(
            f"overflow-domain: need |x|*max(|w|,1/|w|) <= {ARG_MAX}, got x={x!r}, w={w!r}"
        )
    return n, x, w


@dataclass(frozen=True)
class GeneratingMatrixEval:
    """exp((x/2)(w*shift + shift^dagger/w)) together with its parameters."""

    n: int
    x: float
    w: complex
    matrix: np.ndarray


def generating_matrix(n: int, x: float, w: complex) -> GeneratingMatrixEval:
    """Evaluate the matrix generating function spectrally.

    The eigenvalues are exp((x/2)(w s^k + s^(-k)/w)) over the n-th roots
    of unity s^k; only the first column is formed (O(n^2)) and the
    circulant is rolled out from it.
    """
    n, x, w = _require_args(n, x, w)
    k = np.arange(n)
    roots = np.exp(2j * np.pi * k / n)
    eig = np.exp((x / 2.0) * (w * roots + np.conj(roots) / w))
    col = dft_matrix(n) @ (eig / np.sqrt(n))
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return GeneratingMatrixEval(n=n, x=x, w=w, matrix=col[idx])


def trace_projection(n: int, x: float, w: complex, j: int) -> complex:
    """(1/n) tr(generating matrix @ shift^j), the literal trace route."""
    n, x, w = _require_args(n, x, w)
    j = require_index(j, n)
    m = generating_matrix(n, x, w).matrix
    return complex(np.trace(m @ shift_power(n, j)) / n)


def exponential_sum(n: int, x: float, w: complex, j: int) -> complex:
    """(1/n) sum_l s^(l*j) exp((x/2)(w s^l + s^(-l)/w)), the closed scalar form."""
    n, x, w = _require_args(n, x, w)
    j = require_index(j, n)
    l = np.arange(n)
    roots = np.exp(2j * np.pi * l / n)
    phases = np.exp(2j * np.pi * ((l * j) % n) / n)
    return complex((phases * np.exp((x / 2.0) * (w * roots + np.conj(roots) / w))).sum() / n)


def default_comb_truncation(n: int, x: float, w: complex, j: int) -> int:
    """Truncation order ending on a complete period: n*ceil((scale+30)/n) + j.

    Bumped by whole periods if needed so the bilateral-sum precondition
    K >= n + |x| + 20 always holds.
    """
    n = require_level(n)
    j = require_index(j, n)
    K = n * int(math.ceil((unit_scale(x, _require_w(w)) + 30.0) / n)) + j
    while K < n + abs(float(x)) + 20:
        K += n
    return K


def bessel_comb_series(n: int, x: float, w: complex, j: int, K: int) -> complex:
    """sum over k of I_{n*k-j}(x) w^(n*k-j), truncated to |n*k-j| <= K.

    Negative orders fold through I_{-m} = I_m.  K must be at least
    n + |x| + 20 so the discarded tails sit below the working scale.
    """
    n, x, w = _require_args(n, x, w)
    j = require_index(j, n)
    if K < n + abs(x) + 20:
        raise DomainError(f"invalid-index: need K >= n + |x| + 20, got {K}")
    values = bessel_table(int(K), x).values
    k_lo = math.ceil((-K + j) / n)
    k_hi = math.floor((K + j) / n)
    total = 0j
    for k in range(k_lo, k_hi + 1):
        m = n * k - j
        total += values[abs(m)] * w ** m
    return total
