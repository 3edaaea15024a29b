"""Shared numeric plumbing: compensated sums, checkpoint grids, quadrature.

Every floating-point reduction in the package goes through `ordered_sum`
on a block plan that is fixed by the input sizes alone, so results are
bitwise identical no matter how many worker threads ran the blocks.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

import numpy as np

SQRT10 = math.sqrt(10.0)


def ordered_sum(parts: Iterable[float]) -> float:
    """Correctly-rounded sum of per-block partials (compensated)."""
    return math.fsum(parts)


def run_blocks(fn: Callable[[int], object], nblocks: int, threads: int = 1) -> list:
    """Evaluate fn(0..nblocks-1) and return results in block order.

    The block plan never depends on `threads`; workers only change wall
    time, not the reduction order.
    """
    if nblocks <= 0:
        return []
    if threads <= 1 or nblocks == 1:
        return [fn(i) for i in range(nblocks)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(nblocks)))


def geometric_checkpoints(x: int, start: int = 1000, ratio: float = SQRT10) -> list[int]:
    """Checkpoint grid start, start*ratio, ... capped and ending at x."""
    if x < start:
        return [int(x)]
    pts: list[int] = []
    k = 0
    while True:
        v = int(round(start * ratio**k))
        if v > x:
            break
        pts.append(v)
        k += 1
    if not pts or pts[-1] != x:
        pts.append(int(x))
    return pts


# ---------------------------------------------------------------------------
# Gauss-Legendre panels
# ---------------------------------------------------------------------------

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)


def _gl_panel(f: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> float:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(_GL_WEIGHTS, f(mid + half * _GL_NODES)))


def li(y: float) -> float:
    """Logarithmic integral li(y) = PV int_0^y dt/log t.

    The integral is principal-valued at t = 1: the two sides of the
    singularity are paired symmetrically, li(y) = int_0^1 [1/log(1+s)
    + 1/log(1-s)] ds + int_2^y dt/log t, and the paired integrand has a
    finite limit 1 at s = 0. Panels shrink geometrically toward s = 1
    where the integrand loses smoothness. Absolute error is far below
    the 1e-9 * li(y) target for y >= 2.
    """
    if y <= 0.0:
        return 0.0
    if y == 1.0:
        return -math.inf

    def paired(s: np.ndarray) -> np.ndarray:
        out = np.empty_like(s)
        nz = s > 0
        out[nz] = 1.0 / np.log1p(s[nz]) + 1.0 / np.log1p(-s[nz])
        out[~nz] = 1.0
        return out

    if y < 2.0:
        # No symmetric pairing below t=1 alone; integrate the PV pair up to
        # s = y-1 and the unpaired remainder [0, 2-y] of the left side.
        if y < 1.0:
            total = 0.0
            hi = y
            lo = max(0.0, y - 0.5)
            while hi > 1e-300:
                total += _gl_panel(lambda t: 1.0 / np.log(t), lo, hi)
                hi = lo
                lo = max(0.0, hi * 0.5) if hi > 1e-12 else 0.0
                if hi <= 1e-12:
                    break
            return total
        s_hi = y - 1.0
        total = _gl_panel(paired, 0.0, s_hi)
        # left tail: t in [0, 1-s_hi] of 1/log t
        t_hi = 1.0 - s_hi
        lo, hi = t_hi * 0.5, t_hi
        while hi > 1e-300:
            total += _gl_panel(lambda t: 1.0 / np.log(t), lo, hi)
            hi = lo
            lo = hi * 0.5
        return total

    # PV core over [0, 2]: geometric panels toward s = 1.
    total = 0.0
    edge = 0.0
    step = 0.5
    while 1.0 - edge > 1e-15:
        nxt = min(1.0, edge + step)
        if 1.0 - nxt < 1e-15:
            nxt = 1.0
        total += _gl_panel(paired, edge, nxt)
        edge = nxt
        step *= 0.5
    # smooth part over [2, y] in u = log t
    u_lo, u_hi = math.log(2.0), math.log(y)
    n_panels = max(1, int(math.ceil(u_hi - u_lo)))
    edges = np.linspace(u_lo, u_hi, n_panels + 1)
    for lo, hi in zip(edges[:-1], edges[1:]):
        total += _gl_panel(lambda u: np.exp(u) / u, float(lo), float(hi))
    return total


def simpson_log_grid(f: Callable[[np.ndarray], np.ndarray], t_lo: float, t_hi: float,
                     nodes_per_decade: int = 256) -> float:
    """Composite Simpson for int f(t) dt on a log-spaced grid.

    Works in u = log t (so dt = e^u du) with an even number of uniform
    steps, at least `nodes_per_decade` per decade of [t_lo, t_hi].
    """
    if t_hi <= t_lo:
        return 0.0
    u_lo, u_hi = math.log(t_lo), math.log(t_hi)
    decades = (u_hi - u_lo) / math.log(10.0)
    n = max(2, int(math.ceil(decades * nodes_per_decade)))
    if n % 2:
        n += 1
    u = np.linspace(u_lo, u_hi, n + 1)
    t = np.exp(u)
    g = f(t) * t
    h = (u_hi - u_lo) / n
    return float(h / 3.0 * (g[0] + g[-1] + 4.0 * g[1:-1:2].sum() + 2.0 * g[2:-2:2].sum()))
