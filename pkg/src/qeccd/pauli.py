"""Pauli strings with exact phase tracking.

A :class:`PauliString` carries its phase as a power of ``i`` (0..3), so
products never touch floating point.  Dense matrices are produced only on
request and are exact in complex128 since every entry is in {0, ±1, ±i}.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

LETTERS = "IXYZ"

# (a, b) -> (power of i, c) with a*b = i**power * c
_PRODUCT = {
    ("I", "I"): (0, "I"), ("I", "X"): (0, "X"), ("I", "Y"): (0, "Y"), ("I", "Z"): (0, "Z"),
    ("X", "I"): (0, "X"), ("X", "X"): (0, "I"), ("X", "Y"): (1, "Z"), ("X", "Z"): (3, "Y"),
    ("Y", "I"): (0, "Y"), ("Y", "X"): (3, "Z"), ("Y", "Y"): (0, "I"), ("Y", "Z"): (1, "X"),
    ("Z", "I"): (0, "Z"), ("Z", "X"): (1, "Y"), ("Z", "Y"): (3, "X"), ("Z", "Z"): (0, "I"),
}

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_PHASE_TEXT = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_TEXT_PHASE = {v: k for k, v in _PHASE_TEXT.items()}
_PARSE = re.compile(r"^([+-]?)(i?)([IXYZ]+)$")


@dataclass(frozen=True)
class PauliString:
    """``i**power`` times a tensor product of single-qubit Paulis.

    ``letters[0]`` acts on the most significant qubit of the dense matrix.
    """

    letters: str
    power: int = 0

    def __post_init__(self):
        if not self.letters or any(c not in LETTERS for c in self.letters):
            raise ValueError(f"invalid Pauli letters {self.letters!r}")
        object.__setattr__(self, "power", self.power % 4)

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def phase(self) -> complex:
        return (1, 1j, -1, -1j)[self.power]

    def __str__(self) -> str:
        return _PHASE_TEXT[self.power] + self.letters

    def __mul__(self, other: "PauliString") -> "PauliString":
        return mul(self, other)

    def with_phase(self, power: int = 0) -> "PauliString":
        return PauliString(self.letters, power)

    def tensor(self, other: "PauliString") -> "PauliString":
        return PauliString(self.letters + other.letters, self.power + other.power)

    @property
    def matrix(self) -> np.ndarray:
        return matrix(self)


def parse(text: str) -> PauliString:
    """Inverse of ``str(p)``: ``"+iIY"``, ``"-XZ"``, and bare ``"ZZ"`` are accepted."""
    m = _PARSE.match(text.strip())
    if m is None:
        raise ValueError(f"cannot parse Pauli string {text!r}")
    sign, imag, letters = m.groups()
    return PauliString(letters, _TEXT_PHASE[(sign or "+") + imag])


def _check_lengths(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise ValueError(f"length mismatch: {p.n} vs {q.n} qubits")


def mul(p: PauliString, q: PauliString) -> PauliString:
    _check_lengths(p, q)
    power = p.power + q.power
    out = []
    for a, b in zip(p.letters, q.letters):
        k, c = _PRODUCT[a, b]
        power += k
        out.append(c)
    return PauliString("".join(out), power)


def commutes(p: PauliString, q: PauliString) -> bool:
    """True iff ``p q == q p``; parity of sites where the letters anticommute."""
    _check_lengths(p, q)
    clashes = sum(1 for a, b in zip(p.letters, q.letters) if a != "I" and b != "I" and a != b)
    return clashes % 2 == 0


@lru_cache(maxsize=None)
def _letters_matrix(letters: str) -> np.ndarray:
    m = np.ones((1, 1), dtype=complex)
    for c in letters:
        m = np.kron(m, _SINGLE[c])
    m.setflags(write=False)
    return m


def matrix(p: PauliString) -> np.ndarray:
    return p.phase * _letters_matrix(p.letters)


def error_basis(n: int = 2) -> list[PauliString]:
    """All ``4**n`` phase-free strings, ordered I<X<Y<Z with qubit 1 most significant."""
    if n < 1:
        raise ValueError("need at least one qubit")
    return [PauliString("".join(t)) for t in itertools.product(LETTERS, repeat=n)]


BASIS_LABELS: tuple[str, ...] = tuple(p.letters for p in error_basis(2))


def basis_index(label: str | PauliString) -> int:
    """Index of a two-qubit label (phase ignored) in :func:`error_basis`."""
    letters = label.letters if isinstance(label, PauliString) else label
    index = 0
    for c in letters:
        index = 4 * index + LETTERS.index(c)
    return index
