"""Closed-form two-qubit amplitude damping (2AD) in a common vacuum bath.

Basis conventions used throughout the package:

* computational index order is |00>, |01>, |10>, |11> with |0> the excited
  level |e> and |1> the ground level |g>, so the order is (ee, eg, ge, gg);
* the dressed order is (e, s, a, g) with s, a the symmetric/antisymmetric
  single-excitation states;
* density matrices are vectorized row-major, slot ``4*i + j`` holding rho[i, j].
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

import numpy as np

SQRT_HALF = 1.0 / math.sqrt(2.0)

# k0*r12 below which F is evaluated by its Taylor series
SPATIAL_SERIES_SWITCH = 0.1
# (Gamma - Gamma12)*t below which (1 - exp(-x))/x uses its Taylor series
RELAX_SERIES_SWITCH = 1e-4


class DivergentCouplingError(ValueError):
    """The dipole-dipole shift G(r12) diverges at zero separation."""


@dataclass(frozen=True)
class ChannelParams:
    """Physical inputs, in units with hbar = 1.

    ``gamma12`` and ``omega12`` override the geometric collective rates when
    given, e.g. to reach the exact collective limit ``gamma12 == gamma``.
    """

    gamma: float = 0.5
    omega0: float = 1.0
    k0: float = 1.0
    r12: float = 0.1
    alpha: float = 0.0
    t: float = 0.0
    gamma12: float | None = None
    omega12: float | None = None

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")
        if self.omega0 < 0:
            raise ValueError("omega0 must be nonnegative")
        if not self.k0 > 0:
            raise ValueError("k0 must be positive")
        if self.r12 < 0:
            raise ValueError("r12 must be nonnegative")
        if not 0 <= self.alpha <= 1:
            raise ValueError("alpha is a direction cosine in [0, 1]")
        if np.any(np.asarray(self.t) < 0):
            raise ValueError("t must be nonnegative")
        if self.gamma12 is not None and abs(self.gamma12) > self.gamma:
            raise ValueError("|gamma12| cannot exceed gamma")

    def replace(self, **changes) -> "ChannelParams":
        return ChannelParams(**{**asdict(self), **changes})

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ChannelParams":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown channel parameters: {sorted(unknown)}")
        return cls(**data)


def spatial_F(r12, k0: float = 1.0, alpha: float = 0.0):
    """Spatial profile of the collective decay rate; F(0) = 2/3."""
    x = np.asarray(k0 * np.asarray(r12, dtype=float))
    c = alpha * alpha
    small = x < SPATIAL_SERIES_SWITCH
    xs = np.where(small, 1.0, x)
    direct = (1 - c) * np.sin(xs) / xs + (1 - 3 * c) * (np.cos(xs) / xs**2 - np.sin(xs) / xs**3)
    # sin x / x and (x cos x - sin x) / x**3 expanded to x**14
    x2 = np.where(small, x, 0.0) ** 2
    sinc = 0.0
    bracket = 0.0
    for n in range(7, -1, -1):
        sinc = sinc * x2 + (-1) ** n / math.factorial(2 * n + 1)
        bracket = bracket * x2 + (-1) ** (n + 1) * 2 * (n + 1) / math.factorial(2 * n + 3)
    series = (1 - c) * sinc + (1 - 3 * c) * bracket
    out = np.where(small, series, direct)
    return float(out) if out.ndim == 0 else out


def spatial_G(r12, k0: float = 1.0, alpha: float = 0.0):
    """Spatial profile of the dipole-dipole shift; diverges like (k0 r12)**-3."""
    x = np.asarray(k0 * np.asarray(r12, dtype=float))
    if np.any(x <= 0):
        raise DivergentCouplingError("divergent dipole-dipole limit at r12 = 0")
    c = alpha * alpha
    out = -(1 - c) * np.cos(x) / x + (1 - 3 * c) * (np.sin(x) / x**2 + np.cos(x) / x**3)
    return float(out) if out.ndim == 0 else out


def collective_rates(params: ChannelParams) -> tuple[float, float]:
    """Return ``(Gamma12, Omega12)``."""
    if params.gamma12 is not None:
        gamma12 = params.gamma12
    else:
        gamma12 = 1.5 * params.gamma * spatial_F(params.r12, params.k0, params.alpha)
    if params.omega12 is not None:
        omega12 = params.omega12
    else:
        omega12 = 0.75 * params.gamma * spatial_G(params.r12, params.k0, params.alpha)
    return float(gamma12), float(omega12)


def _relax(x):
    """(1 - exp(-x)) / x, finite at x = 0."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < RELAX_SERIES_SWITCH
    xs = np.where(small, 1.0, x)
    direct = -np.expm1(-xs) / xs
    xm = np.where(small, x, 0.0)
    # 1 - x/2 + x^2/6 - ... through x^6
    series = 0.0
    for n in range(6, -1, -1):
        series = series * xm + (-1) ** n / math.factorial(n + 1)
    return np.where(small, series, direct)


@dataclass(frozen=True)
class Coefficients:
    """Time-dependent functions of the closed-form solution.

    Fields are scalars, or arrays when evaluated on a time grid.
    """

    A: object
    B: object
    C: object
    D: object
    E: object
    F: object
    G: object
    H: object
    J: object
    L: object
    M: object
    P: object
    Q: object
    T: object
    U: object
    V: object

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


COEFFICIENT_NAMES = tuple(f.name for f in fields(Coefficients))


def coefficients(params: ChannelParams, t=None) -> Coefficients:
    """Evaluate A..V at ``params.t``, or at every point of ``t`` if given."""
    t = np.asarray(params.t if t is None else t, dtype=float)
    if np.any(t < 0):
        raise ValueError("t must be nonnegative")
    g = params.gamma
    g12, w12 = collective_rates(params)
    w0 = params.omega0
    s = g + g12
    d = g - g12

    es = np.exp(-s * t)
    ed = np.exp(-d * t)
    e1 = np.exp(-g * t)
    e2 = np.exp(-2 * g * t)
    ratio = s * t * _relax(d * t)  # s (1 - exp(-d t)) / d

    A = e2
    B = es
    C = ratio * es
    D = ed
    E = d / s * (1 - es) * ed
    F = -np.expm1(-s * t)
    G = -np.expm1(-d * t)
    H = s / (2 * g) * (1 - es * (1 + ratio)) + d / s * (G - d / (2 * g) * (1 - e2))

    J = np.exp(-1j * (w0 - w12) * t - (3 * g + g12) * t / 2)
    L = np.exp(-2j * w0 * t - g * t)
    M = np.exp(-1j * (w0 + w12) * t - (3 * g - g12) * t / 2)
    P = np.exp(-2j * w12 * t - g * t)
    Q = np.exp(-1j * (w0 - w12) * t - d * t / 2)
    T = np.exp(-1j * (w0 + w12) * t - s * t / 2)

    denom = g * g + 4 * w12 * w12
    sn = np.sin(2 * w12 * t)
    cs = np.cos(2 * w12 * t)
    kick = 2 * w12 * e1 * sn + g * (1 - e1 * cs)
    turn = 2 * w12 * (1 - e1 * cs) - g * e1 * sn
    U = s / denom * np.exp(-1j * (w0 + w12) * t - s * t / 2) * (kick + 1j * turn)
    V = d / denom * np.exp(-1j * (w0 - w12) * t - d * t / 2) * (1j * turn - kick)

    def out(v):
        return v.item() if np.ndim(v) == 0 else v

    return Coefficients(*(out(v) for v in (A, B, C, D, E, F, G, H, J, L, M, P, Q, T, U, V)))


# (row, col) 1-based slots of the off-diagonal superoperator entries
_OFF_DIAGONAL = (
    ((6, 1), "C", False), ((8, 2), "U", False), ((11, 1), "E", False), ((12, 3), "V", False),
    ((14, 5), "U", True), ((15, 9), "V", True), ((16, 1), "H", False), ((16, 6), "F", False),
    ((16, 11), "G", False),
)
_DIAGONAL = (
    ("A", False), ("J", False), ("M", False), ("L", False), ("J", True), ("B", False),
    ("P", False), ("T", False), ("M", True), ("P", True), ("D", False), ("Q", False),
    ("L", True), ("T", True), ("Q", True), (None, False),
)


def superoperator(coeffs: Coefficients) -> np.ndarray:
    """16x16 dressed-basis superoperator, stacked along leading axes for array coefficients."""
    c = coeffs.as_dict()
    shape = np.shape(c["A"])
    S = np.zeros(shape + (16, 16), dtype=complex)
    for k, (name, conj) in enumerate(_DIAGONAL):
        if name is None:
            S[..., k, k] = 1.0
        else:
            S[..., k, k] = np.conj(c[name]) if conj else c[name]
    for (r, col), name, conj in _OFF_DIAGONAL:
        S[..., r - 1, col - 1] = np.conj(c[name]) if conj else c[name]
    return S


def dressed_transform() -> tuple[np.ndarray, np.ndarray]:
    """``(U_D, U_D^-1)``: U_D maps computational (ee, eg, ge, gg) to dressed (e, s, a, g)."""
    u = np.array(
        [[1, 0, 0, 0], [0, SQRT_HALF, SQRT_HALF, 0], [0, SQRT_HALF, -SQRT_HALF, 0], [0, 0, 0, 1]]
    )
    return u, u.T.copy()


def computational_superoperator(params: ChannelParams, t=None) -> np.ndarray:
    """Superoperator acting on row-major vectorized computational-basis matrices."""
    u, u_inv = dressed_transform()
    # row-major: vec(W r W^T) = kron(W, W) vec(r) for real W
    to_dressed = np.kron(u, u)
    back = np.kron(u_inv, u_inv)
    return back @ superoperator(coefficients(params, t)) @ to_dressed


def validate_density_matrix(rho: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if np.abs(rho - rho.conj().T).max() > tol:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise ValueError("density matrix does not have unit trace")
    if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < -tol:
        raise ValueError("density matrix is not positive semidefinite")
    return rho


def apply_linear(params: ChannelParams, op: np.ndarray, t=None) -> np.ndarray:
    """The channel as a linear map on any 4x4 operator (no state checks)."""
    S = computational_superoperator(params, t)
    op = np.asarray(op, dtype=complex)
    return (S @ op.reshape(16)).reshape(S.shape[:-2] + (4, 4))


def apply(params: ChannelParams, rho: np.ndarray) -> np.ndarray:
    """Evolve a two-qubit computational-basis density matrix for ``params.t``."""
    rho = validate_density_matrix(rho)
    if rho.shape != (4, 4):
        raise ValueError("expected a 4x4 two-qubit density matrix")
    return apply_linear(params, rho)


def apply_to_register(params: ChannelParams, rho: np.ndarray) -> np.ndarray:
    """Act on the two most significant qubits of a multi-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    rest = rho.shape[0] // 4
    S = computational_superoperator(params)
    blocks = rho.reshape(4, rest, 4, rest).transpose(0, 2, 1, 3).reshape(16, rest, rest)
    out = np.einsum("kl,lab->kab", S, blocks)
    return out.reshape(4, 4, rest, rest).transpose(0, 2, 1, 3).reshape(rho.shape)
