"""Shared fixtures: benchmark data, random state generators, independent oracles.

The entanglement oracle used for generating test states is the partial
transpose criterion evaluated through the analytic two-mode formulas, which
is an independent code path from the library's matrix-based spectra.
"""

import math

import numpy as np
import pytest

from gaussian_eof import StandardFormParams
from gaussian_eof.cli import load_table1_reference


def analytic_nu_minus(n, m, kx, kp):
    """Smaller symplectic eigenvalue from the closed two-mode formula."""
    seralian = n * n + m * m + 2.0 * kx * kp
    det = (n * m - kx * kx) * (n * m - kp * kp)
    disc = max(seralian * seralian - 4.0 * det, 0.0)
    return math.sqrt(max(0.5 * (seralian - math.sqrt(disc)), 0.0))


def ppt_nu_minus(n, m, kx, kp):
    """Partial transposition flips the sign of kp."""
    return analytic_nu_minus(n, m, kx, -kp)


def is_bona_fide_params(n, m, kx, kp, margin=0.0):
    if n * m <= kx * kx or n * m <= kp * kp:
        return False
    return analytic_nu_minus(n, m, kx, kp) >= 1.0 + margin


def is_entangled_params(n, m, kx, kp, margin=1e-6):
    return ppt_nu_minus(n, m, kx, kp) < 1.0 - margin


def random_entangled_params(rng, n_lo=1.05, n_hi=5.0):
    """Rejection-sample canonical parameters of a bona fide entangled state."""
    while True:
        n = rng.uniform(n_lo, n_hi)
        m = rng.uniform(n_lo, n_hi)
        kx = rng.uniform(0.05, 1.0) * (math.sqrt(n * m) - 1e-9)
        kp = -rng.uniform(0.02, 1.0) * kx
        if not is_bona_fide_params(n, m, kx, kp, margin=1e-9):
            continue
        if not is_entangled_params(n, m, kx, kp):
            continue
        return StandardFormParams(n=n, m=m, kx=kx, kp=kp)


def random_symmetric_entangled_params(rng, n_lo=1.05, n_hi=5.0):
    while True:
        n = rng.uniform(n_lo, n_hi)
        kx = rng.uniform(0.05, 1.0) * (n - 1e-9)
        kp = -rng.uniform(0.02, 1.0) * kx
        if not is_bona_fide_params(n, n, kx, kp, margin=1e-9):
            continue
        if (n - kx) * (n + kp) >= 1.0 - 1e-6:
            continue
        return StandardFormParams(n=n, m=n, kx=kx, kp=kp)


def random_bona_fide_params(rng, n_lo=1.05, n_hi=5.0):
    """Bona fide but not necessarily entangled (still canonical kp <= 0)."""
    while True:
        n = rng.uniform(n_lo, n_hi)
        m = rng.uniform(n_lo, n_hi)
        kx = rng.uniform(0.02, 1.0) * (math.sqrt(n * m) - 1e-9)
        kp = -rng.uniform(0.02, 1.0) * kx
        if is_bona_fide_params(n, m, kx, kp, margin=1e-9):
            return StandardFormParams(n=n, m=m, kx=kx, kp=kp)


@pytest.fixture(scope="session")
def table1():
    return load_table1_reference()


@pytest.fixture(scope="session")
def table1_params(table1):
    return [StandardFormParams(n=r["n"], m=r["m"], kx=r["kx"], kp=r["kp"])
            for r in table1["rows"]]
