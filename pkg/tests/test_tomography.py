import itertools
import json

import numpy as np
import pytest

from qeccd.channel import ChannelParams
from qeccd.code import syndrome_probabilities
from qeccd.pauli import BASIS_LABELS, basis_index
from qeccd.tomography import (
    CORRECTED_DIAGONAL,
    T1_PARTITION,
    ProcessMatrix,
    Schedule,
    TogglePartition,
    analytic_diagonal,
    reference_schedule,
    audit_schedule,
    build_toggle,
    build_U,
    diagonal_chi,
    direct_chi,
    noisy_register,
    offdiag_invert,
    pauli_factors,
    qpt_chi,
    reconstruct,
    run_schedule,
)

BASE = ChannelParams()
GRID = [(gt, kr) for gt in (0.2, 1.0, 5.0) for kr in (0.1, 1.0, 100.0)]


def params(gt, kr):
    return BASE.replace(t=gt / BASE.gamma, r12=kr)


def test_identity_channel():
    unit = np.zeros((16, 16))
    unit[0, 0] = 1
    for chi in (direct_chi(BASE), qpt_chi(BASE), run_schedule(BASE)):
        np.testing.assert_allclose(chi.entries, unit, atol=1e-12)
    np.testing.assert_allclose(diagonal_chi(BASE), unit[0], atol=1e-12)


@pytest.mark.parametrize("gt,kr", GRID)
def test_three_routes_agree(gt, kr):
    p = params(gt, kr)
    d = direct_chi(p).entries
    assert np.abs(qpt_chi(p).entries - d).max() < 1e-10
    assert np.abs(run_schedule(p).entries - d).max() < 1e-9
    np.testing.assert_allclose(analytic_diagonal(p, CORRECTED_DIAGONAL), np.diag(d).real, atol=1e-12)


@pytest.mark.parametrize("gt,kr", GRID)
def test_process_matrix_invariants(gt, kr):
    checks = direct_chi(params(gt, kr)).check()
    assert all(ok for _, ok in checks.values()), checks


def test_state_independence():
    p = params(1.0, 0.1)
    s = 1 / np.sqrt(2)
    assert np.abs(direct_chi(p, 1, 0).entries - direct_chi(p, s, s).entries).max() < 1e-10
    assert np.abs(direct_chi(p, 1, 0).entries - direct_chi(p, 0.6, 0.8j).entries).max() < 1e-10


def test_swap_symmetric_diagonal():
    d = np.diag(direct_chi(params(1.0, 0.1)).entries).real
    for a, b in [("XI", "IX"), ("YI", "IY"), ("ZI", "IZ"), ("XY", "YX"), ("XZ", "ZX"), ("YZ", "ZY")]:
        assert d[basis_index(a)] == pytest.approx(d[basis_index(b)], abs=1e-15)


def test_register_support_in_error_ball():
    probs = syndrome_probabilities(noisy_register(params(1.0, 100.0)))
    assert abs(probs.sum() - 1) < 1e-12


def test_build_U_unitary_all_pairs():
    eye = np.eye(32)
    for a, b in itertools.permutations(BASIS_LABELS, 2):
        u = build_U(a, b)
        np.testing.assert_allclose(u @ u.conj().T, eye, atol=1e-12)
    with pytest.raises(ValueError):
        build_U("XI", "XI")


def test_pauli_factors():
    assert pauli_factors("IZ", "IX") == (1j, basis_index("IY"))
    assert pauli_factors("II", "ZY") == (1, basis_index("ZY"))
    assert pauli_factors("XX", "XX") == (1, 0)


def test_toggle_partitions():
    assert T1_PARTITION == TogglePartition.splitting("II", "IZ")
    with pytest.raises(ValueError):
        TogglePartition(frozenset(range(7)), frozenset(range(7, 16)))
    with pytest.raises(TypeError):
        build_toggle("T1")
    for part in reference_schedule().partitions.values():
        t = build_toggle(part)
        np.testing.assert_allclose(t @ t.conj().T, np.eye(32), atol=1e-12)


def test_toggle_keeps_diagonal_statistics():
    # a state diagonal in the erroneous-codeword basis
    from qeccd.tomography import _erroneous_codewords

    vecs = _erroneous_codewords(1.0, 0.0)
    w = np.linspace(1, 2, 16)
    rho = sum(wi * np.outer(v, v.conj()) for wi, v in zip(w / w.sum(), vecs))
    t = build_toggle(T1_PARTITION)
    np.testing.assert_allclose(syndrome_probabilities(t @ rho @ t.conj().T), syndrome_probabilities(rho), atol=1e-12)


def test_offdiag_invert():
    assert offdiag_invert(0.3, 0.25, 0.25, 1, 1) == ("re", pytest.approx(0.05))
    part, value = offdiag_invert(0.3, 0.25, 0.25, 1j, 1)
    assert part == "im" and value == pytest.approx(0.05)
    with pytest.raises(ValueError):
        offdiag_invert(0.3, 0.25, 0.25, 1, 1, "sideways")


def test_schedule_rows_stay_correctable():
    rho = noisy_register(params(1.0, 0.1))
    for a, b, _ in reference_schedule().configurations():
        u = build_U(a, b)
        assert abs(syndrome_probabilities(u @ rho @ u.conj().T).sum() - 1) < 1e-12


def test_schedule_covers_every_nonzero_pair():
    covered = {frozenset(r.target) | {r.part} for r in reference_schedule().rows}
    d = direct_chi(params(1.0, 0.1)).entries
    for l, m in zip(*np.nonzero(np.abs(d) > 1e-12)):
        if l == m:
            continue
        pair = frozenset((BASIS_LABELS[l], BASIS_LABELS[m]))
        if abs(d[l, m].real) > 1e-12:
            assert pair | {"re"} in covered
        if abs(d[l, m].imag) > 1e-12:
            assert pair | {"im"} in covered


def test_configuration_count():
    rec = reconstruct(params(1.0, 0.1))
    assert rec.n_configurations == 17
    assert 2 * (16 - 1) == 30


def test_schedule_json_roundtrip():
    sch = reference_schedule()
    doc = json.loads(sch.dumps())
    assert doc["version"] == 1
    assert all(len(r["syndrome"]) == 4 and set(r["syndrome"]) <= {"+", "-"} for r in doc["rows"])
    again = Schedule.from_json(doc)
    assert again.rows == sch.rows and again.partitions == sch.partitions
    doc["version"] = 99
    with pytest.raises(ValueError):
        Schedule.from_json(doc)


def test_sampled_mode():
    p = params(1.0, 0.1)
    d = direct_chi(p).entries
    a = run_schedule(p, "sampled", 10**6, 11).entries
    b = run_schedule(p, "sampled", 10**6, 11).entries
    np.testing.assert_array_equal(a, b)
    assert np.abs(a - d).max() < 5e-3
    with pytest.raises(ValueError):
        run_schedule(p, "sampled", None, 1)


def test_low_statistics_flagged():
    rec = reconstruct(params(0.2, 100.0), "sampled", 200, 5)
    assert rec.low_statistics_rows


def test_audit_identity_point():
    rows = audit_schedule(BASE)
    assert {r.status for r in rows} == {"ok", "undefined_symbol"}
    assert all(r.corrected_ok for r in rows if r.status == "undefined_symbol")


def test_audit_reports_known_rows():
    rows = audit_schedule(params(1.0, 0.7))
    xy = [r for r in rows if r.status == "undefined_symbol"]
    assert len(xy) == 3
    assert any(r.row.printed_target == ("YX", "YY") for r in xy)
    ok_izzz = [r for r in rows if set(r.row.printed_target) == {"IZ", "ZZ"} and r.row.analytic_expr.startswith("(A - 1")]
    assert ok_izzz and ok_izzz[0].ok


def test_process_matrix_access():
    chi = direct_chi(params(1.0, 0.1))
    assert chi["II", "II"] == chi.entries[0, 0]
    assert len(chi.to_rows()) == 256
    with pytest.raises(ValueError):
        ProcessMatrix(np.eye(4))
