"""The [[5,1]] stabilizer code that protects arbitrary errors on qubits 1-2.

Syndrome measurement is simulated with syndrome-subspace projectors rather
than an ancilla circuit.  Qubits 3-5 are taken to be noiseless.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .pauli import BASIS_LABELS, PauliString, commutes, error_basis, matrix, parse

N_QUBITS = 5
PROTECTED = 2
GENERATORS = ("IZZZZ", "XXXII", "ZXZIX", "ZZXXI")

_CODEWORD0 = {
    "00000": 1, "00110": 1, "01001": 1, "01111": -1,
    "10011": -1, "10101": 1, "11010": 1, "11100": 1,
}


class UncorrectableSyndrome(LookupError):
    """A syndrome outside the table (ancilla error or leakage)."""


Syndrome = tuple[int, int, int, int]


@dataclass(frozen=True)
class CodeSpec:
    n: int
    k: int
    p: int
    stabilizer_generators: tuple[PauliString, ...]
    codeword0: np.ndarray = field(repr=False)
    codeword1: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return 2**self.n

    def codespace_projector(self) -> np.ndarray:
        return np.outer(self.codeword0, self.codeword0.conj()) + np.outer(
            self.codeword1, self.codeword1.conj()
        )


@dataclass(frozen=True)
class SyndromeOutcome:
    bits: Syndrome
    error: str
    probability: float | None = None
    count: int | None = None


@lru_cache(maxsize=None)
def build_code() -> CodeSpec:
    zero = np.zeros(2**N_QUBITS, dtype=complex)
    for bits, sign in _CODEWORD0.items():
        zero[int(bits, 2)] = sign / (2 * math.sqrt(2))
    one = matrix(PauliString("XXXXX")) @ zero
    for v in (zero, one):
        v.setflags(write=False)
    gens = tuple(PauliString(g) for g in GENERATORS)
    return CodeSpec(N_QUBITS, 1, PROTECTED, gens, zero, one)


def check_hamming(n: int, k: int, p: int) -> bool:
    """Quantum Hamming bound ``2**k * 4**p <= 2**n`` for errors on ``p`` of ``n`` qubits."""
    if not (n >= p >= 1 and k >= 1):
        raise ValueError("need n >= p >= 1 and k >= 1")
    return 2**k * 4**p <= 2**n


def logical_state(beta0: complex = 1.0, beta1: complex = 0.0) -> np.ndarray:
    if abs(abs(beta0) ** 2 + abs(beta1) ** 2 - 1) > 1e-12:
        raise ValueError("logical amplitudes must be normalized")
    code = build_code()
    return beta0 * code.codeword0 + beta1 * code.codeword1


def register_error(label: str | PauliString) -> PauliString:
    """Extend a two-qubit error by identities on the ancilla qubits."""
    p = parse(label) if isinstance(label, str) else label
    return p.tensor(PauliString("I" * (N_QUBITS - p.n)))


def syndrome_of(error: str | PauliString) -> Syndrome:
    """Stabilizer signs picked up by an error on the register."""
    e = register_error(error)
    return tuple(1 if commutes(e, s) else -1 for s in build_code().stabilizer_generators)


@lru_cache(maxsize=None)
def syndrome_table() -> dict[str, Syndrome]:
    """Error label -> syndrome for the 16 basis errors, in basis order."""
    table = {label: syndrome_of(label) for label in BASIS_LABELS}
    if len(set(table.values())) != len(table):
        raise RuntimeError("basis errors do not have distinct syndromes")
    return table


@lru_cache(maxsize=None)
def _lookup() -> dict[Syndrome, str]:
    return {bits: label for label, bits in syndrome_table().items()}


def format_bits(bits: Syndrome) -> str:
    return "".join("+" if b > 0 else "-" for b in bits)


def parse_bits(text: str) -> Syndrome:
    if len(text) != 4 or set(text) - {"+", "-"}:
        raise ValueError(f"syndrome must be four signs, got {text!r}")
    return tuple(1 if c == "+" else -1 for c in text)


@lru_cache(maxsize=None)
def _projector(bits: Syndrome) -> np.ndarray:
    dim = 2**N_QUBITS
    proj = np.eye(dim, dtype=complex)
    for b, s in zip(bits, build_code().stabilizer_generators):
        proj = proj @ (np.eye(dim) + b * matrix(s)) / 2
    proj.setflags(write=False)
    return proj


def syndrome_projector(bits) -> np.ndarray:
    bits = tuple(int(b) for b in bits)
    if len(bits) != 4 or any(b not in (1, -1) for b in bits):
        raise ValueError("syndrome bits must be four values in {+1, -1}")
    return _projector(bits)


def syndrome_probabilities(rho: np.ndarray) -> np.ndarray:
    """Tr(Pi_x rho) for the 16 table syndromes, in error-basis order."""
    table = syndrome_table()
    return np.array([np.trace(_projector(table[lbl]) @ rho).real for lbl in BASIS_LABELS])


def sample_counts(probabilities: np.ndarray, shots: int, rng: np.random.Generator) -> np.ndarray:
    if shots <= 0:
        raise ValueError("sampled mode needs a positive number of shots")
    p = np.clip(np.asarray(probabilities, dtype=float), 0.0, None)
    return rng.multinomial(shots, p / p.sum())


def measure_syndrome(
    rho_register: np.ndarray,
    mode: str = "exact",
    shots: int | None = None,
    rng_seed=None,
) -> list[SyndromeOutcome]:
    """Syndrome statistics of a register state.

    ``rng_seed`` may be an int, a ``SeedSequence`` or a ``Generator``.
    """
    probs = syndrome_probabilities(rho_register)
    table = syndrome_table()
    if mode == "exact":
        return [SyndromeOutcome(table[l], l, probability=float(p)) for l, p in zip(BASIS_LABELS, probs)]
    if mode != "sampled":
        raise ValueError(f"unknown mode {mode!r}")
    if not shots:
        raise ValueError("sampled mode needs a positive number of shots")
    counts = sample_counts(probs, shots, np.random.default_rng(rng_seed))
    return [SyndromeOutcome(table[l], l, count=int(c)) for l, c in zip(BASIS_LABELS, counts)]


def recover(bits) -> PauliString:
    """Correction operator for a measured syndrome."""
    try:
        label = _lookup()[tuple(int(b) for b in bits)]
    except KeyError:
        raise UncorrectableSyndrome(f"syndrome {tuple(bits)} is not in the table") from None
    return register_error(label)


def correctable_errors() -> list[PauliString]:
    return [register_error(p) for p in error_basis(PROTECTED)]
