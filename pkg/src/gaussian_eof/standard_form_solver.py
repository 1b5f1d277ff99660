"""Solver for the coupled squeezing-factor equations of the standard form.

The reduced form of a two-mode CM carries one-mode squeezing factors
(r1, r2) >= 1 fixed by two coupled algebraic conditions:

* ratio constraint:   (n r1 - 1)/(m r2 - 1) = (n/r1 - 1)/(m/r2 - 1)
* balance constraint: |sqrt(r1 r2) kx| - |kp / sqrt(r1 r2)|
                      = sqrt((n r1 - 1)(m r2 - 1)) - sqrt((n/r1 - 1)(m/r2 - 1))

For fixed r1 the ratio constraint is a quadratic in r2, solved in closed
form; the balance residual is then driven to zero in r1 by a bracketed
scan plus Brent refinement.  Symmetric (n = m) and squeezed-thermal
(kx = -kp) inputs have closed-form shortcuts.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import Degenerate, DomainError, InvalidState, NoRoot
from .symplectic_core import StandardFormParams

TOL_ROOT = 1e-12
GRID_POINTS = 512

_MIN_R2 = 1.0 - 1e-12


@dataclass(frozen=True)
class SqueezingSolution:
    r1: float
    r2: float
    residual_ratio: float
    residual_balance: float
    branch: str = "general"          # which solve path produced the result
    multiple_brackets: bool = False  # more than one sign change was found

    @property
    def max_residual(self) -> float:
        return max(abs(self.residual_ratio), abs(self.residual_balance))


@dataclass(frozen=True)
class CriticalParams:
    """Critical Duan parameter a0 and the uncertainty floor b0 it induces."""
    a0: float
    b0: float


def _r2_roots(n: float, m: float, r1: float) -> list[float]:
    """Roots >= 1 of the ratio constraint, quadratic in r2 at fixed r1."""
    big = n * r1 - 1.0
    small = n / r1 - 1.0
    aq = small * m
    bq = big - small
    cq = -big * m
    if abs(aq) < 1e-300:
        if abs(bq) < 1e-300:
            return [1.0] if abs(cq) < 1e-12 else []
        roots = [-cq / bq]
    else:
        disc = bq * bq - 4.0 * aq * cq
        if disc < 0.0:
            return []
        sq = math.sqrt(disc)
        if bq == 0.0:
            val = -cq / aq
            roots = [math.sqrt(val)] if val >= 0.0 else []
        else:
            q = -0.5 * (bq + math.copysign(sq, bq))
            roots = [q / aq]
            if q != 0.0:
                roots.append(cq / q)
    return [r for r in roots if r >= _MIN_R2]


def _balance_residual(params: StandardFormParams, r1: float, r2: float) -> float | None:
    n, m, kx, kp = params.n, params.m, params.kx, params.kp
    s = math.sqrt(r1 * r2)
    t1 = max(n * r1 - 1.0, 0.0) * max(m * r2 - 1.0, 0.0)
    t2 = (n / r1 - 1.0) * (m / r2 - 1.0)
    if t2 < -1e-12:
        return None  # incompatible signs: not on the solution manifold
    t2 = max(t2, 0.0)
    return abs(s * kx) - abs(kp / s) - (math.sqrt(t1) - math.sqrt(t2))


def _residual_at(params: StandardFormParams, r1: float) -> float | None:
    best = None
    for r2 in _r2_roots(params.n, params.m, r1):
        val = _balance_residual(params, r1, r2)
        if val is None:
            continue
        if best is None or abs(val) < abs(best):
            best = val
    return best


def _pick_r2(params: StandardFormParams, r1: float) -> float:
    roots = _r2_roots(params.n, params.m, r1)
    if not roots:
        raise NoRoot(f"no admissible r2 at r1 = {r1}")
    return min(roots, key=lambda r2: abs(_balance_residual(params, r1, r2) or math.inf))


def _ratio_residual(params: StandardFormParams, r1: float, r2: float) -> float:
    n, m = params.n, params.m
    return (n * r1 - 1.0) * (m / r2 - 1.0) - (n / r1 - 1.0) * (m * r2 - 1.0)


def _sign_change_brackets(grid, vals):
    brackets = []
    for i in range(len(grid) - 1):
        lo, hi = vals[i], vals[i + 1]
        if lo is None or hi is None:
            continue
        if lo == 0.0:
            brackets.append((float(grid[i]), float(grid[i])))
        elif lo * hi < 0.0:
            brackets.append((float(grid[i]), float(grid[i + 1])))
    if vals[-1] == 0.0:
        brackets.append((float(grid[-1]), float(grid[-1])))
    return brackets


def _admissible_edge(params, grid, vals, iters=80):
    """Upper edge of the first admissible r1 window, by bisection."""
    first_bad = None
    for i in range(1, len(grid)):
        if vals[i] is None and vals[i - 1] is not None:
            first_bad = i
            break
    if first_bad is None:
        return None
    lo, hi = float(grid[first_bad - 1]), float(grid[first_bad])
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if _residual_at(params, mid) is None:
            hi = mid
        else:
            lo = mid
    return lo


def solve_squeezings(params: StandardFormParams,
                     use_closed_forms: bool = True) -> SqueezingSolution:
    """Solve for the squeezing factors (r1, r2) >= 1 of the reduced form.

    Args:
        params: canonical standard-form parameters with n, m >= 1 and
            kx >= -kp > 0 (not a product state).
        use_closed_forms: take the symmetric / squeezed-thermal shortcut
            branches when applicable; disable to force the general solver
            (used by cross-check tests).

    Returns:
        SqueezingSolution with both constraint residuals below TOL_ROOT.

    Raises:
        NoRoot: if the balance residual never changes sign on the bracket,
            which signals invalid input parameters.
    """
    n, m, kx, kp = params.n, params.m, params.kx, params.kp
    if n < 1.0 - 1e-12 or m < 1.0 - 1e-12:
        raise DomainError(f"n, m must be >= 1, got ({n}, {m})")
    if kx <= 0.0 or kp >= 0.0 or kx < -kp - 1e-12:
        raise DomainError(
            f"need kx >= -kp > 0 after canonicalization, got kx={kx}, kp={kp}")

    if use_closed_forms:
        if abs(n - m) <= 1e-12 * max(n, m):
            if n - kx <= 0.0:
                raise DomainError("symmetric state with kx >= n is not positive")
            r = math.sqrt((n + kp) / (n - kx))
            return _finish(params, r, r, "symmetric")
        if abs(kx + kp) <= 1e-12 * kx:
            return _finish(params, 1.0, 1.0, "squeezed_thermal")

    grid = np.geomspace(1.0, 10.0 * max(n, m), GRID_POINTS)
    vals = [_residual_at(params, float(r)) for r in grid]
    brackets = _sign_change_brackets(grid, vals)
    if not brackets:
        # the admissible r1 window (real r2 root >= 1 with compatible
        # signs) can be much narrower than the primary grid step; locate
        # its edge and rescan inside it
        edge = _admissible_edge(params, grid, vals)
        if edge is not None:
            grid = np.linspace(1.0, edge, GRID_POINTS)
            vals = [_residual_at(params, float(r)) for r in grid]
            brackets = _sign_change_brackets(grid, vals)
    if not brackets:
        raise NoRoot("balance residual has no sign change on the r1 bracket; "
                     "input parameters do not describe a reducible state")
    lo, hi = brackets[0]  # smallest-r1 root is the relevant one
    if lo == hi:
        r1 = lo
    else:
        def bracketed(r):
            val = _residual_at(params, r)
            if val is None:
                raise NoRoot(f"residual undefined inside the bracket at r1 = {r}")
            return val
        r1 = brentq(bracketed, lo, hi, xtol=1e-15, rtol=8.9e-16, maxiter=200)
    return _finish(params, r1, _pick_r2(params, r1), "general",
                   multiple=len(brackets) > 1)


def _finish(params: StandardFormParams, r1: float, r2: float, branch: str,
            multiple: bool = False) -> SqueezingSolution:
    res_ratio = _ratio_residual(params, r1, r2)
    res_balance = _balance_residual(params, r1, r2)
    if res_balance is None:
        raise NoRoot("solution left the admissible sign region")
    return SqueezingSolution(r1=r1, r2=r2, residual_ratio=res_ratio,
                             residual_balance=res_balance, branch=branch,
                             multiple_brackets=multiple)


def critical_params(params: StandardFormParams,
                    sol: SqueezingSolution) -> CriticalParams:
    """Critical Duan parameter a0 and floor b0 from a solved standard form.

    a0^2 is the square root of (m r2 - 1)/(n r1 - 1); the ratio constraint
    makes the r -> 1/r counterpart equal, which is verified here as a
    consistency check of the solve.

    Raises:
        Degenerate: pure-state limit n r1 - 1 <= 1e-12 (a0 indeterminate;
            callers fall back to a0 = 1).
    """
    n, m = params.n, params.m
    den = n * sol.r1 - 1.0
    num = m * sol.r2 - 1.0
    if den <= 1e-12 or num <= 1e-12:
        raise Degenerate("pure-state limit: critical parameter indeterminate")
    a0sq = math.sqrt(num / den)
    den_alt = n / sol.r1 - 1.0
    num_alt = m / sol.r2 - 1.0
    if abs(den_alt) > 1e-12 and num_alt / den_alt > 0.0:
        alt = math.sqrt(num_alt / den_alt)
        if abs(alt - a0sq) > 1e-9 * max(1.0, a0sq):
            raise InvalidState(
                f"critical-parameter consistency check failed: {a0sq} vs {alt}")
    b0 = math.sqrt(max(1.0 - 4.0 / (a0sq + 1.0 / a0sq) ** 2, 0.0))
    return CriticalParams(a0=math.sqrt(a0sq), b0=b0)
