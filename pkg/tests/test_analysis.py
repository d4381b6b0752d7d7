import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeccd.analysis import (
    EXCITED_PRODUCT,
    GROUND_PRODUCT,
    asymptotic_chi,
    correlation_D,
    default_t_grid,
    geometric_discord,
    marginal_chi,
    mutual_info_Dstar,
    sweep,
    time_series,
    trace_distance,
)
from qeccd.channel import ChannelParams
from qeccd.tomography import direct_chi

BASE = ChannelParams()


def random_density(rng, dim):
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    r = m @ m.conj().T
    return r / np.trace(r)


def random_hermitian(rng, dim=16):
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return m + m.conj().T


def test_trace_distance_examples():
    a = np.zeros((16, 16))
    b = np.zeros((16, 16))
    a[0, 0] = b[1, 1] = 1
    assert trace_distance(a, a) == 0
    assert trace_distance(a, b) == pytest.approx(1)
    with pytest.raises(ValueError):
        trace_distance(np.triu(np.ones((16, 16))), a)


def test_trace_distance_metric():
    rng = np.random.default_rng(0)
    for _ in range(20):
        x, y, z = (random_hermitian(rng) for _ in range(3))
        assert abs(trace_distance(x, y) - trace_distance(y, x)) < 1e-10
        assert trace_distance(x, z) <= trace_distance(x, y) + trace_distance(y, z) + 1e-10


def test_marginals():
    unit = np.zeros((16, 16))
    unit[0, 0] = 1
    np.testing.assert_allclose(marginal_chi(unit, 1), np.diag([1.0, 0, 0, 0]))
    ind = asymptotic_chi("independent")
    factor = np.array([[1, 0, 0, -1], [0, 1, 1j, 0], [0, -1j, 1, 0], [-1, 0, 0, 1]]) / 4
    np.testing.assert_allclose(marginal_chi(ind, 1), factor)
    np.testing.assert_allclose(marginal_chi(ind, 2), factor)
    chi = direct_chi(BASE.replace(t=2.0, r12=0.3))
    np.testing.assert_allclose(marginal_chi(chi, 1), marginal_chi(chi, 2), atol=1e-14)
    with pytest.raises(ValueError):
        marginal_chi(unit, 3)


def test_measures_vanish_on_products():
    rng = np.random.default_rng(1)
    for _ in range(10):
        prod = np.kron(random_density(rng, 4), random_density(rng, 4))
        assert correlation_D(prod) < 1e-12
        assert abs(mutual_info_Dstar(prod)) < 1e-10
    ind = asymptotic_chi("independent")
    assert correlation_D(ind) < 1e-15 and mutual_info_Dstar(ind) < 1e-12


def test_asymptotic_matrices():
    ind = asymptotic_chi("independent").entries
    col = asymptotic_chi("collective").entries
    assert ind[0, 0] == pytest.approx(1 / 16) and ind[0, 15] == pytest.approx(1 / 16)
    assert col[0, 0] == pytest.approx(4 / 32) and col[0, 3] == pytest.approx(-2 / 32)
    for m in (ind, col):
        np.testing.assert_allclose(m, m.conj().T)
        assert np.trace(m) == pytest.approx(1)
    with pytest.raises(ValueError):
        asymptotic_chi("mixed")


def test_geometric_discord_examples():
    rng = np.random.default_rng(2)
    for _ in range(5):
        assert abs(geometric_discord(np.kron(random_density(rng, 2), random_density(rng, 2)))) < 1e-12
    bell = np.array([0, 1, 1, 0]) / np.sqrt(2)
    assert geometric_discord(np.outer(bell, bell)) == pytest.approx(0.5)
    assert abs(geometric_discord(np.diag([0.1, 0.2, 0.3, 0.4]))) < 1e-15
    with pytest.raises(ValueError):
        geometric_discord(np.eye(4))


def test_discord_local_unitary_invariance():
    rng = np.random.default_rng(3)
    rho = random_density(rng, 4)
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    u = np.kron(np.eye(2), q)
    assert abs(geometric_discord(rho) - geometric_discord(u @ rho @ u.conj().T)) < 1e-10


def test_default_grid():
    t = default_t_grid(0.5)
    assert len(t) == 400 and t[0] > 0 and t[-1] * 0.5 == pytest.approx(20)
    assert np.all(np.diff(t) > 0)


@settings(max_examples=15, deadline=None)
@given(st.floats(0.05, 20), st.sampled_from([0.1, 0.5, 1.0, 10.0, 100.0]))
def test_measures_nonnegative(t, r):
    (res,) = time_series(BASE.replace(r12=r), [t])
    assert res.D >= -1e-12 and res.Dstar >= -1e-12 and res.discord >= -1e-12
    assert np.isfinite(res.Dstar)


def test_co_vanishing():
    p = ChannelParams(gamma12=0.0, omega12=0.0)
    for res in time_series(p, [0.5, 2.0, 9.0]):
        assert res.D < 1e-12 and res.Dstar < 1e-12
    for res in time_series(BASE.replace(r12=0.5), [0.5, 2.0]):
        assert res.D > 1e-6 and res.Dstar > 1e-6


def test_sweep_trend():
    res = sweep(BASE, [0.1, 1.0, 10.0, 1000.0], ("D", "discord"))
    d = [r.D for r in res]
    q = [r.discord for r in res]
    assert d == sorted(d, reverse=True) and q == sorted(q, reverse=True)
    assert res[0].D > 1e-3
    with pytest.raises(ValueError):
        sweep(BASE, [])


def test_ground_state_is_stationary():
    res = time_series(BASE.replace(r12=0.1), [0.3, 3.0], ("discord",), GROUND_PRODUCT)
    assert all(r.discord < 1e-15 for r in res)
    res = time_series(BASE.replace(r12=0.1), [0.3, 3.0], ("discord",), EXCITED_PRODUCT)
    assert all(r.discord > 1e-4 for r in res)
