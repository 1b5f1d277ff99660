"""Entanglement of formation: auxiliary function, pipeline, closed forms.

The pipeline reduces a state to standard-form parameters, solves the
squeezing-factor equations, evaluates the EPR-like uncertainty at the
critical Duan parameter and maps it through f to the EOF in bits.
"""

import math
from dataclasses import dataclass

from .epr_uncertainty import EprQuantities, delta0, delta_prime
from .errors import Degenerate, DomainError, InvalidState
from .standard_form_solver import (CriticalParams, SqueezingSolution,
                                   critical_params, solve_squeezings)
from .symplectic_core import (StandardFormParams, standard_form_cm,
                              symplectic_eigenvalues, validate_cm)

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class EofReport:
    params: StandardFormParams
    epr: EprQuantities
    eof: float
    method: str  # general | symmetric | squeezed_thermal | pure | separable

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "a0": self.epr.a0,
            "b0": self.epr.b0,
            "delta0": self.epr.delta0,
            "delta0_prime": self.epr.delta0_prime,
            "eof": self.eof,
            "method": self.method,
            "separable": self.epr.separable,
        }


def f_aux(delta: float) -> float:
    """Entanglement of the pure squeezed state with uncertainty delta, in bits.

    f(delta) = c+ log2 c+ - c- log2 c- with c± = (delta^-1/2 ± delta^1/2)^2 / 4.
    Since c+ - c- = 1 the evaluation uses s = c- = (1 - delta)^2 / (4 delta)
    and log1p, which stays accurate as delta -> 1 where c- underflows.
    """
    if not math.isfinite(delta) or delta <= 0.0:
        raise DomainError(f"f is defined on (0, 1], got {delta}")
    if delta > 1.0:
        if delta > 1.0 + 1e-12:
            raise DomainError(f"f is defined on (0, 1], got {delta}")
        delta = 1.0
    s = (1.0 - delta) ** 2 / (4.0 * delta)
    if s <= 0.0:
        return 0.0
    return (1.0 + s) * math.log1p(s) / _LN2 - s * math.log2(s)


def _check_canonical(params: StandardFormParams) -> None:
    n, m, kx, kp = params.n, params.m, params.kx, params.kp
    if not all(math.isfinite(v) for v in (n, m, kx, kp)):
        raise DomainError("parameters must be finite")
    if n < 1.0 - 1e-12 or m < 1.0 - 1e-12:
        raise DomainError(f"n, m must be >= 1, got ({n}, {m})")
    if kx < -1e-12 or kp > 1e-12 or kx < -kp - 1e-12:
        raise DomainError(
            f"parameters not canonical (need kx >= -kp >= 0): kx={kx}, kp={kp}")


def _separable_epr(a0: float = 1.0, b0: float = 0.0) -> EprQuantities:
    return EprQuantities(a0=a0, b0=b0, delta0=1.0, delta0_prime=1.0,
                         separable=True)


def eof(params: StandardFormParams) -> EofReport:
    """Entanglement of formation of the state with the given standard form.

    Dispatch: product states and separable states report 0; pure states use
    the exact entropy of the two-mode squeezed vacuum; everything else runs
    the squeezing solve, the critical-parameter evaluation and f.

    Raises:
        DomainError: parameters not canonical.
        InvalidState: parameters describe no bona fide CM.
    """
    _check_canonical(params)
    if params.is_product:
        return EofReport(params=params.with_squeezings(1.0, 1.0),
                         epr=_separable_epr(), eof=0.0, method="separable")
    report = validate_cm(standard_form_cm(params, 1.0, 1.0))
    if not report.is_bona_fide:
        raise InvalidState(
            f"parameters violate the uncertainty relation: nu = "
            f"{report.symplectic_eigenvalues}")
    if report.is_pure:
        # pure states reduce to the two-mode squeezed vacuum; its
        # uncertainty equals e^(-2r) and f reproduces the exact entropy
        dp = math.sqrt((params.n - params.kx) * (params.n + params.kp))
        epr = EprQuantities(a0=1.0, b0=0.0, delta0=dp, delta0_prime=dp,
                            separable=False)
        return EofReport(params=params.with_squeezings(1.0, 1.0), epr=epr,
                         eof=f_aux(dp), method="pure")
    sol = solve_squeezings(params)
    try:
        crit = critical_params(params, sol)
    except Degenerate:
        crit = CriticalParams(a0=1.0, b0=0.0)
    epr = delta0(params, sol, crit)
    solved = params.with_squeezings(sol.r1, sol.r2)
    if epr.separable:
        return EofReport(params=solved, epr=epr, eof=0.0, method="separable")
    return EofReport(params=solved, epr=epr, eof=f_aux(epr.delta0_prime),
                     method=sol.branch)


def symmetric_eof(n: float, kx: float, kp: float) -> EofReport:
    """Closed-form EOF of a symmetric state: f(sqrt((n - kx)(n + kp))).

    Zero when the argument reaches 1 (separable).  Physicality beyond
    positivity of the argument is the caller's responsibility.
    """
    if n < 1.0 - 1e-12:
        raise DomainError(f"n must be >= 1, got {n}")
    arg2 = (n - kx) * (n + kp)
    if arg2 <= 0.0:
        raise DomainError(
            f"(n - kx)(n + kp) = {arg2} <= 0: not a positive matrix")
    r = math.sqrt((n + kp) / (n - kx))
    params = StandardFormParams(n=n, m=n, kx=kx, kp=kp, r1=r, r2=r)
    d0 = math.sqrt(arg2)
    if d0 >= 1.0:
        return EofReport(params=params, epr=_separable_epr(), eof=0.0,
                         method="separable")
    epr = EprQuantities(a0=1.0, b0=0.0, delta0=d0, delta0_prime=d0,
                        separable=False)
    return EofReport(params=params, epr=epr, eof=f_aux(d0), method="symmetric")


def squeezed_thermal_eof(n: float, m: float, kx: float) -> EofReport:
    """Closed-form EOF of a squeezed thermal state (kx = -kp, n >= m >= 1)."""
    if not (n >= m >= 1.0 - 1e-12):
        raise DomainError(f"need n >= m >= 1, got ({n}, {m})")
    if kx <= 0.0:
        raise DomainError(f"need kx > 0, got {kx}")
    nt, mt = n - 1.0, m - 1.0
    if nt <= 1e-12 and mt <= 1e-12:
        raise Degenerate("n = m = 1 is the pure vacuum limit")
    report = validate_cm(standard_form_cm(
        StandardFormParams(n=n, m=m, kx=kx, kp=-kx), 1.0, 1.0))
    if not report.is_bona_fide:
        raise InvalidState(
            f"squeezed thermal parameters not bona fide: nu = "
            f"{report.symplectic_eigenvalues}")
    params = StandardFormParams(n=n, m=m, kx=kx, kp=-kx, r1=1.0, r2=1.0)
    b0 = (n - m) / (n + m - 2.0)
    cross = kx * math.sqrt(nt * mt)
    d0 = (n * mt + m * nt - 2.0 * cross) / (nt + mt)
    a0 = (mt / nt) ** 0.25 if nt > 1e-12 else 1.0
    if d0 >= 1.0:
        return EofReport(params=params, epr=_separable_epr(a0=a0, b0=b0),
                         eof=0.0, method="separable")
    rad1 = n * mt - cross
    rad2 = m * nt - cross
    scale = max(n * mt, m * nt, 1.0)
    if rad1 < -1e-9 * scale or rad2 < -1e-9 * scale:
        raise DomainError(f"negative radicand in the closed form: {rad1}, {rad2}")
    dp = ((math.sqrt(max(rad1, 0.0)) + math.sqrt(max(rad2, 0.0)))
          / (math.sqrt(nt) + math.sqrt(mt))) ** 2
    epr = EprQuantities(a0=a0, b0=b0, delta0=d0, delta0_prime=dp,
                        separable=False)
    return EofReport(params=params, epr=epr, eof=f_aux(dp),
                     method="squeezed_thermal")


def g_kappa(kappa: float) -> float:
    """kappa log2 kappa - (kappa - 1) log2 (kappa - 1), with the 0 log 0 limit."""
    if kappa < 1.0:
        raise DomainError(f"gain must be >= 1, got {kappa}")
    tail = 0.0 if kappa == 1.0 else (kappa - 1.0) * math.log2(kappa - 1.0)
    return kappa * math.log2(kappa) - tail


def giovannetti_family(kappa: float, nbar: float
                       ) -> tuple[StandardFormParams, EofReport, float]:
    """Amplifier-channel family: squeezed thermal states indexed by gain and photon number.

    Builds n = 2(nbar+1)kappa - 1, m = n - 2 nbar,
    kx = -kp = 2(nbar+1) sqrt(kappa(kappa-1)), evaluates the EOF through the
    squeezed-thermal closed form and returns g(kappa) for comparison.  At
    kappa = 1 the state is a product and the EOF is g(1) = 0; at nbar = 0 it
    is pure and the EOF equals g(kappa) exactly.
    """
    if kappa < 1.0 or nbar < 0.0:
        raise DomainError("need kappa >= 1 and nbar >= 0")
    n = 2.0 * (nbar + 1.0) * kappa - 1.0
    m = 2.0 * (nbar + 1.0) * kappa - (2.0 * nbar + 1.0)
    kx = 2.0 * (nbar + 1.0) * math.sqrt(kappa * (kappa - 1.0))
    params = StandardFormParams(n=n, m=m, kx=kx, kp=-kx)
    if kx < 1e-12:
        report = eof(params)  # product state at kappa = 1
    else:
        report = squeezed_thermal_eof(n, m, kx)
    return params, report, g_kappa(kappa)


def eof_from_cm(gamma) -> EofReport:
    """Convenience: reduce a raw CM and run the pipeline."""
    from .symplectic_core import reduce_to_standard_params
    return eof(reduce_to_standard_params(gamma))


# re-exported for pipelines composed by hand in tests and the CLI
__all__ = [
    "EofReport", "eof", "eof_from_cm", "f_aux", "g_kappa",
    "giovannetti_family", "squeezed_thermal_eof", "symmetric_eof",
    "SqueezingSolution", "delta_prime",
]
