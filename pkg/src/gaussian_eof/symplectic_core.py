"""Covariance-matrix core: validation, constructors, standard-form reduction.

Conventions used throughout the package:

* quadrature ordering (x_A, p_A, x_B, p_B);
* the covariance matrix is dimensionless and vacuum-normalized, so the
  vacuum CM is the 4x4 identity (some texts use a 1/2 normalization);
* a matrix is a bona fide CM iff both symplectic eigenvalues are >= 1.

Standard form parameters (n, m, kx, kp) refer to the locally-equivalent CM
with diagonal blocks n*I, m*I and off-diagonal block diag(kx, kp); the
one-mode squeezing factors (r1, r2), when present, place the CM in the
fully reduced form used by the EPR-uncertainty pipeline.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import AmbiguousSigns, DomainError, InvalidState, NonFiniteEntry

TOL_SYM = 1e-12       # max allowed |gamma_ij - gamma_ji|
TOL_PSD = 1e-9        # bona fide / purity tolerance on symplectic eigenvalues
TOL_PRODUCT = 1e-12   # |kx|, |kp| below this means product state

J = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = np.block([[J, np.zeros((2, 2))], [np.zeros((2, 2)), J]])


@dataclass(frozen=True)
class StandardFormParams:
    """Standard-form description (n, m, kx, kp) plus optional squeezing factors.

    n and m are the local symplectic invariants sqrt(det A), sqrt(det B) of
    the two mode blocks; kx and kp are the x and p correlations after
    canonicalization (kx >= |kp|, kp <= 0 for entangled candidates).
    """

    n: float
    m: float
    kx: float
    kp: float
    r1: float | None = None
    r2: float | None = None

    @property
    def is_product(self) -> bool:
        return abs(self.kx) < TOL_PRODUCT and abs(self.kp) < TOL_PRODUCT

    def with_squeezings(self, r1: float, r2: float) -> "StandardFormParams":
        return replace(self, r1=r1, r2=r2)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "kx": self.kx, "kp": self.kp,
                "r1": self.r1, "r2": self.r2}


@dataclass(frozen=True)
class ValidityReport:
    is_symmetric_matrix: bool
    is_positive: bool
    symplectic_eigenvalues: tuple[float, float]
    is_bona_fide: bool
    is_pure: bool

    def to_dict(self) -> dict:
        return {
            "is_symmetric_matrix": self.is_symmetric_matrix,
            "is_positive": self.is_positive,
            "symplectic_eigenvalues": list(self.symplectic_eigenvalues),
            "is_bona_fide": self.is_bona_fide,
            "is_pure": self.is_pure,
        }


def symplectic_eigenvalues(gamma: np.ndarray) -> tuple[float, float]:
    """The two symplectic eigenvalues of a symmetric 4x4 CM.

    Computed from the spectrum of -(Omega gamma)^2, whose eigenvalues are the
    squared symplectic eigenvalues, each doubly degenerate.  This keeps the
    computation in real arithmetic.
    """
    og = OMEGA @ gamma
    m2 = -og @ og
    ev = np.linalg.eigvals(m2)
    ev = np.sort(np.abs(ev.real))
    nu_minus = float(np.sqrt(max(0.5 * (ev[0] + ev[1]), 0.0)))
    nu_plus = float(np.sqrt(max(0.5 * (ev[2] + ev[3]), 0.0)))
    return nu_minus, nu_plus


def validate_cm(gamma: np.ndarray) -> ValidityReport:
    """Check symmetry, positivity and the uncertainty relation for a CM.

    Bona fide means gamma + i*Omega >= 0, equivalently both symplectic
    eigenvalues >= 1 - TOL_PSD.  States on the boundary within tolerance are
    accepted and flagged pure.

    Raises:
        NonFiniteEntry: if any entry is NaN or infinite.
    """
    gamma = np.asarray(gamma, dtype=float)
    if gamma.shape != (4, 4):
        raise DomainError(f"expected a 4x4 matrix, got shape {gamma.shape}")
    if not np.all(np.isfinite(gamma)):
        raise NonFiniteEntry("covariance matrix has non-finite entries")
    sym = bool(np.max(np.abs(gamma - gamma.T)) <= TOL_SYM)
    gs = 0.5 * (gamma + gamma.T)
    positive = bool(np.linalg.eigvalsh(gs)[0] > 0.0)
    nu = symplectic_eigenvalues(gs)
    bona_fide = sym and positive and nu[0] >= 1.0 - TOL_PSD
    pure = bona_fide and abs(nu[0] - 1.0) <= TOL_PSD and abs(nu[1] - 1.0) <= TOL_PSD
    return ValidityReport(sym, positive, nu, bona_fide, pure)


def squeezed_vacuum_cm(r: float) -> np.ndarray:
    """CM of the standard two-mode squeezed vacuum with squeezing r >= 0."""
    if not np.isfinite(r) or r < 0.0:
        raise DomainError(f"squeezing parameter must be finite and >= 0, got {r}")
    c = np.cosh(2.0 * r)
    s = np.sinh(2.0 * r)
    return np.array([
        [c, 0.0, s, 0.0],
        [0.0, c, 0.0, -s],
        [s, 0.0, c, 0.0],
        [0.0, -s, 0.0, c],
    ])


def standard_form_cm(params: StandardFormParams,
                     r1: float | None = None,
                     r2: float | None = None) -> np.ndarray:
    """Assemble the standard-form CM, optionally with squeezing factors.

    With r1 = r2 = 1 this is the plain (n, m, kx, kp) form; otherwise the
    x entries are scaled up by the r's and the p entries down.
    """
    r1 = params.r1 if r1 is None else r1
    r2 = params.r2 if r2 is None else r2
    r1 = 1.0 if r1 is None else r1
    r2 = 1.0 if r2 is None else r2
    if r1 <= 0.0 or r2 <= 0.0:
        raise DomainError("squeezing factors must be positive")
    n, m, kx, kp = params.n, params.m, params.kx, params.kp
    s = np.sqrt(r1 * r2)
    return np.array([
        [n * r1, 0.0, s * kx, 0.0],
        [0.0, n / r1, 0.0, kp / s],
        [s * kx, 0.0, m * r2, 0.0],
        [0.0, kp / s, 0.0, m / r2],
    ])


def reduce_to_standard_params(gamma: np.ndarray) -> StandardFormParams:
    """Reduce a bona fide CM to its standard-form parameters (n, m, kx, kp).

    Uses the local symplectic invariants: n = sqrt(det A), m = sqrt(det B),
    det C = kx*kp and det gamma = (nm - kx^2)(nm - kp^2).  The result is
    canonicalized to kx >= |kp| and kp <= 0; for classically-correlated
    inputs (det C > 0) the sign flip on kp amounts to a partial transposition,
    which leaves every entanglement quantity unchanged because such states
    are separable whenever they are bona fide.

    Raises:
        InvalidState: if gamma is not a bona fide CM.
        AmbiguousSigns: if the invariants admit no real (kx, kp).
    """
    gamma = np.asarray(gamma, dtype=float)
    report = validate_cm(gamma)
    if not report.is_bona_fide:
        raise InvalidState(
            f"not a bona fide CM (symplectic eigenvalues {report.symplectic_eigenvalues})")
    a_blk = gamma[:2, :2]
    b_blk = gamma[2:, 2:]
    c_blk = gamma[:2, 2:]
    n = float(np.sqrt(np.linalg.det(a_blk)))
    m = float(np.sqrt(np.linalg.det(b_blk)))
    det_c = float(np.linalg.det(c_blk))
    det_g = float(np.linalg.det(gamma))
    nm = n * m
    # kx^2 + kp^2 from det gamma, kx^2 * kp^2 from det C
    ssum = (nm * nm + det_c * det_c - det_g) / nm
    prod2 = det_c * det_c
    if ssum < -1e-10:
        raise AmbiguousSigns(f"invariants give kx^2 + kp^2 = {ssum} < 0")
    ssum = max(ssum, 0.0)
    disc = ssum * ssum - 4.0 * prod2
    if disc < -1e-10 * max(ssum * ssum, 1.0):
        raise AmbiguousSigns("invariants admit no real correlation pair")
    disc = max(disc, 0.0)
    root = np.sqrt(disc)
    z_hi = 0.5 * (ssum + root)
    z_lo = max(0.5 * (ssum - root), 0.0)
    kx = float(np.sqrt(z_hi))
    kp = -float(np.sqrt(z_lo))
    if kx < TOL_PRODUCT and abs(kp) < TOL_PRODUCT:
        return StandardFormParams(n=n, m=m, kx=0.0, kp=0.0)
    return StandardFormParams(n=n, m=m, kx=kx, kp=kp)


# --- local symplectic generators (used by invariance tests and examples) ---

def local_rotation(theta_a: float, theta_b: float) -> np.ndarray:
    """Direct sum of single-mode phase rotations; symplectic."""
    def rot(t):
        c, s = np.cos(t), np.sin(t)
        return np.array([[c, s], [-s, c]])
    out = np.zeros((4, 4))
    out[:2, :2] = rot(theta_a)
    out[2:, 2:] = rot(theta_b)
    return out


def local_squeeze(s_a: float, s_b: float) -> np.ndarray:
    """Direct sum of single-mode squeezers diag(e^s, e^-s); symplectic."""
    return np.diag([np.exp(s_a), np.exp(-s_a), np.exp(s_b), np.exp(-s_b)])


def random_local_symplectic(rng: np.random.Generator,
                            max_squeeze: float = 0.8) -> np.ndarray:
    """Random element of the local symplectic group Sp(2,R) x Sp(2,R)."""
    t1, t2, t3, t4 = rng.uniform(0.0, 2.0 * np.pi, size=4)
    s1, s2 = rng.uniform(-max_squeeze, max_squeeze, size=2)
    return local_rotation(t1, t2) @ local_squeeze(s1, s2) @ local_rotation(t3, t4)


def params_from_json_dict(payload: dict) -> StandardFormParams:
    """Parse the CM JSON schema: {"gamma": [[...]]} or {"params": {...}}."""
    if "gamma" in payload:
        gamma = np.asarray(payload["gamma"], dtype=float)
        return reduce_to_standard_params(gamma)
    if "params" in payload:
        p = payload["params"]
        try:
            return StandardFormParams(n=float(p["n"]), m=float(p["m"]),
                                      kx=float(p["kx"]), kp=float(p["kp"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed params object: {exc}") from exc
    raise DomainError('input JSON must contain "gamma" or "params"')
