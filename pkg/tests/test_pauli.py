import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qeccd.pauli import BASIS_LABELS, PauliString, basis_index, commutes, error_basis, matrix, mul, parse

letters = st.text(alphabet="IXYZ", min_size=1, max_size=4)


def test_single_qubit_products():
    assert mul(PauliString("X"), PauliString("Y")) == PauliString("Z", 1)
    assert mul(PauliString("II"), PauliString("ZX")) == PauliString("ZX")
    assert mul(PauliString("IZ"), PauliString("IX")) == PauliString("IY", 1)


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        mul(PauliString("X"), PauliString("XY"))
    with pytest.raises(ValueError):
        commutes(PauliString("X"), PauliString("XY"))


def test_commutation_examples():
    assert not commutes(PauliString("IZ"), PauliString("IX"))
    assert commutes(PauliString("XX"), PauliString("ZZ"))
    assert all(commutes(PauliString("II"), p) for p in error_basis(2))


def test_matrix_examples():
    np.testing.assert_array_equal(matrix(PauliString("Z")), np.diag([1, -1]))
    np.testing.assert_array_equal(matrix(PauliString("Y", 1)), [[0, 1], [-1, 0]])
    swap = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])
    np.testing.assert_array_equal(matrix(PauliString("XI")), swap)


def test_basis_order():
    basis = error_basis(2)
    assert len(basis) == 16
    assert str(basis[0]) == "+II" and basis[6].letters == "XY" and basis[15].letters == "ZZ"
    assert BASIS_LABELS[basis_index("YX")] == "YX"


def test_products_and_commutation_exhaustive():
    basis = error_basis(2)
    for p, q in itertools.product(basis, repeat=2):
        mp, mq = matrix(p), matrix(q)
        np.testing.assert_array_equal(matrix(mul(p, q)), mp @ mq)
        assert commutes(p, q) == np.array_equal(mp @ mq, mq @ mp)


def test_trace_orthogonality():
    mats = [matrix(p) for p in error_basis(2)]
    gram = np.array([[np.trace(a.conj().T @ b) for b in mats] for a in mats])
    np.testing.assert_array_equal(gram, 4 * np.eye(16))


@given(letters, st.integers(0, 3))
def test_text_roundtrip(s, power):
    p = PauliString(s, power)
    assert parse(str(p)) == p


@given(letters.flatmap(lambda s: st.tuples(st.just(s), st.text(alphabet="IXYZ", min_size=len(s), max_size=len(s)))))
def test_mul_matches_matrices(pair):
    p, q = PauliString(pair[0]), PauliString(pair[1])
    np.testing.assert_array_equal(matrix(p * q), matrix(p) @ matrix(q))
    r = mul(p, p)
    assert r == PauliString("I" * p.n)
    m = matrix(p)
    np.testing.assert_allclose(m @ m.conj().T, np.eye(2**p.n))
