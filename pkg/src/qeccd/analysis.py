"""Correlation and discord measures on process matrices and two-qubit states."""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .channel import ChannelParams, apply_linear, validate_density_matrix
from .tomography import ProcessMatrix, chi_series

EIG_FLOOR = 1e-14
HERMITIAN_TOL = 1e-10

_SINGLE = np.array([[1, 0, 0, -1], [0, 1, 1j, 0], [0, -1j, 1, 0], [-1, 0, 0, 1]]) / 4
_COLLECTIVE_32 = np.array(
    [
        [4, 0, 0, -2, 0, -2, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0],
        [0, 1, 1j, 0, 1, 0, 0, -1, 1j, 0, 0, -1j, 0, -1, -1j, 0],
        [0, -1j, 1, 0, -1j, 0, 0, 1j, 1, 0, 0, -1, 0, 1j, -1, 0],
        [-2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2],
        [0, 1, 1j, 0, 1, 0, 0, -1, 1j, 0, 0, -1j, 0, -1, -1j, 0],
        [-2, 0, 0, 0, 0, 4, 2j, 0, 0, 2j, 0, 0, 0, 0, 0, 2],
        [0, 0, 0, 0, 0, -2j, 2, 0, 0, 2, 2j, 0, 0, 0, 0, 0],
        [0, -1, -1j, 0, -1, 0, 0, 1, -1j, 0, 0, 1j, 0, 1, 1j, 0],
        [0, -1j, 1, 0, -1j, 0, 0, 1j, 1, 0, 0, -1, 0, 1j, -1, 0],
        [0, 0, 0, 0, 0, -2j, 2, 0, 0, 2, 2j, 0, 0, 0, 0, 0],
        [-2, 0, 0, 0, 0, 0, -2j, 0, 0, -2j, 4, 0, 0, 0, 0, 2],
        [0, 1j, -1, 0, 1j, 0, 0, -1j, -1, 0, 0, 1, 0, -1j, 1, 0],
        [-2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2],
        [0, -1, -1j, 0, -1, 0, 0, 1, -1j, 0, 0, 1j, 0, 1, 1j, 0],
        [0, 1j, -1, 0, 1j, 0, 0, -1j, -1, 0, 0, 1, 0, -1j, 1, 0],
        [0, 0, 0, -2, 0, 2, 0, 0, 0, 0, 2, 0, -2, 0, 0, 4],
    ]
)


def _as_array(m) -> np.ndarray:
    return m.entries if isinstance(m, ProcessMatrix) else np.asarray(m, dtype=complex)


def _require_hermitian(m: np.ndarray, name: str) -> None:
    if np.abs(m - m.conj().swapaxes(-1, -2)).max() > HERMITIAN_TOL:
        raise ValueError(f"{name} is not Hermitian")


def trace_distance(m1, m2) -> float:
    """Half the sum of absolute eigenvalues of ``m1 - m2``."""
    a, b = _as_array(m1), _as_array(m2)
    _require_hermitian(a, "first argument")
    _require_hermitian(b, "second argument")
    diff = a - b
    return float(0.5 * np.abs(np.linalg.eigvalsh((diff + diff.conj().T) / 2)).sum())


def marginal_chi(chi, which: int) -> np.ndarray:
    """Partial trace of chi over the other qubit's Pauli index.

    Works on stacks of matrices with shape (..., 16, 16).
    """
    c = _as_array(chi)
    t = c.reshape(c.shape[:-2] + (4, 4, 4, 4))
    if which == 1:
        return np.einsum("...ajbj->...ab", t)
    if which == 2:
        return np.einsum("...jajb->...ab", t)
    raise ValueError("which must be 1 or 2")


def product_of_marginals(chi) -> np.ndarray:
    c1, c2 = marginal_chi(chi, 1), marginal_chi(chi, 2)
    return np.einsum("...ab,...cd->...acbd", c1, c2).reshape(c1.shape[:-2] + (16, 16))


def correlation_D(chi) -> np.ndarray | float:
    """Trace distance between chi and the product of its marginals."""
    c = _as_array(chi)
    diff = c - product_of_marginals(c)
    diff = (diff + diff.conj().swapaxes(-1, -2)) / 2
    out = 0.5 * np.abs(np.linalg.eigvalsh(diff)).sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def _entropy(m: np.ndarray) -> np.ndarray:
    w = np.linalg.eigvalsh((m + m.conj().swapaxes(-1, -2)) / 2)
    w = np.where(w > EIG_FLOOR, w, 1.0)
    return -(w * np.log(w)).sum(axis=-1)


def mutual_info_Dstar(chi) -> np.ndarray | float:
    """Von Neumann mutual information of chi read as a 4x4 bipartite state."""
    c = _as_array(chi)
    out = _entropy(marginal_chi(c, 1)) + _entropy(marginal_chi(c, 2)) - _entropy(c)
    out = np.maximum(out, 0.0) if np.all(out > -1e-12) else out
    return float(out) if out.ndim == 0 else out


def asymptotic_chi(regime: str) -> ProcessMatrix:
    """Long-time reference process matrices for the two coupling regimes."""
    if regime == "independent":
        return ProcessMatrix(np.kron(_SINGLE, _SINGLE))
    if regime == "collective":
        return ProcessMatrix(_COLLECTIVE_32 / 32)
    raise ValueError(f"unknown regime {regime!r}")


_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]]),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_I2 = np.eye(2)
_LOCAL1 = np.array([np.kron(s, _I2) for s in _PAULI])
_CORR = np.array([[np.kron(s, p) for p in _PAULI] for s in _PAULI])


def bloch_data(rho) -> tuple[np.ndarray, np.ndarray]:
    """Bloch vector of qubit 1 and the 3x3 correlation matrix, batched."""
    rho = np.asarray(rho, dtype=complex)
    x = np.einsum("kij,...ji->...k", _LOCAL1, rho).real
    T = np.einsum("klij,...ji->...kl", _CORR, rho).real
    return x, T


def geometric_discord(rho, validate: bool = True) -> np.ndarray | float:
    """Geometric discord (1/4)(|x|^2 + |T|^2 - k_max), measured on qubit 1."""
    rho = np.asarray(rho, dtype=complex)
    if validate:
        for r in rho.reshape(-1, 4, 4):
            validate_density_matrix(r)
    x, T = bloch_data(rho)
    K = np.einsum("...i,...j->...ij", x, x) + T @ T.swapaxes(-1, -2)
    k_max = np.linalg.eigvalsh(K)[..., -1]
    out = 0.25 * ((x**2).sum(axis=-1) + (T**2).sum(axis=(-1, -2)) - k_max)
    return float(out) if out.ndim == 0 else out


# --- sweeps ------------------------------------------------------------------

EXCITED_PRODUCT = np.diag([1.0, 0, 0, 0]).astype(complex)  # |ee>
GROUND_PRODUCT = np.diag([0, 0, 0, 1.0]).astype(complex)  # |gg>
INITIAL_STATES = {"ee": EXCITED_PRODUCT, "gg": GROUND_PRODUCT}


@dataclass
class AnalysisResult:
    t: float
    r12: float
    D: float | None = None
    Dstar: float | None = None
    discord: float | None = None

    def as_dict(self) -> dict:
        return asdict(self)


def default_t_grid(gamma: float, n_geometric: int = 100, n_linear: int = 300, gt_max: float = 20.0) -> np.ndarray:
    """400 times in Gamma*t: geometric on [1e-3, 0.5), then linear on [0.5, gt_max]."""
    head = np.geomspace(1e-3, 0.5, n_geometric, endpoint=False)
    tail = np.linspace(0.5, gt_max, n_linear)
    return np.concatenate([head, tail]) / gamma


def evolve_state(params: ChannelParams, rho0, t) -> np.ndarray:
    return apply_linear(params, np.asarray(rho0, dtype=complex), np.asarray(t, dtype=float))


def time_series(
    params: ChannelParams,
    t,
    quantities=("D", "Dstar", "discord"),
    initial_state=EXCITED_PRODUCT,
) -> list[AnalysisResult]:
    """Requested measures at every time in ``t`` for fixed ``params``."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    cols = {}
    if "D" in quantities or "Dstar" in quantities:
        chis = chi_series(params, t)
        if "D" in quantities:
            cols["D"] = np.atleast_1d(correlation_D(chis))
        if "Dstar" in quantities:
            cols["Dstar"] = np.atleast_1d(mutual_info_Dstar(chis))
    if "discord" in quantities:
        cols["discord"] = np.atleast_1d(geometric_discord(evolve_state(params, initial_state, t), validate=False))
    unknown = set(quantities) - {"D", "Dstar", "discord"}
    if unknown:
        raise ValueError(f"unknown quantities {sorted(unknown)}")
    return [
        AnalysisResult(float(tk), params.r12, **{k: float(v[i]) for k, v in cols.items()}) for i, tk in enumerate(t)
    ]


def sweep(
    base: ChannelParams,
    r12_values,
    quantities=("D",),
    t_grid=None,
    initial_state=EXCITED_PRODUCT,
) -> list[AnalysisResult]:
    """Per-separation maxima over a time grid; ``t`` in each result is the argmax time."""
    r12_values = list(r12_values)
    if not r12_values:
        raise ValueError("sweep needs at least one separation")
    t_grid = default_t_grid(base.gamma) if t_grid is None else np.asarray(t_grid, dtype=float)
    out = []
    for r in r12_values:
        series = time_series(base.replace(r12=float(r)), t_grid, quantities, initial_state)
        best = AnalysisResult(float("nan"), float(r))
        for q in quantities:
            vals = np.array([getattr(s, q) for s in series])
            k = int(np.argmax(vals))
            setattr(best, q, float(vals[k]))
            if q == quantities[0]:
                best.t = float(t_grid[k])
        out.append(best)
    return out

