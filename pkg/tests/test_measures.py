import math

import numpy as np
import pytest

from ptbeam import linalg, measures
from ptbeam.beamsplitter import QubitState, bs_output


def random_qubit(rng):
    p = float(rng.uniform(0, 1))
    r = math.sqrt(p * (1 - p)) * float(rng.uniform(0, 1))
    phase = float(rng.uniform(0, 2 * math.pi))
    return QubitState(p=p, x=r * complex(math.cos(phase), math.sin(phase)))


def random_density(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / rho.trace().real


def random_unitary(rng, dim=2):
    q, r = np.linalg.qr(rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def bell_state():
    ket = np.zeros(4, dtype=complex)
    ket[1] = ket[2] = 1 / math.sqrt(2)
    return np.outer(ket, ket.conj())


def brute_force_partial_transpose(rho):
    # independent index-level construction, distinct from linalg.partial_transpose
    out = np.zeros_like(rho)
    for ia in range(2):
        for ib in range(2):
            for ja in range(2):
                for jb in range(2):
                    out[2 * ia + ib, 2 * ja + jb] = rho[2 * ja + ib, 2 * ia + jb]
    return out


def test_entropy_pure_and_mixed():
    assert measures.entropy(np.diag([1.0, 0.0])) == pytest.approx(0.0, abs=1e-12)
    assert measures.entropy(np.eye(2) / 2) == pytest.approx(1.0)
    expected = 2 - 0.75 * math.log2(3)  # -(3/4)log2(3/4) - (1/4)log2(1/4)
    assert measures.entropy(np.diag([0.75, 0.25])) == pytest.approx(expected, abs=1e-12)
    assert expected == pytest.approx(0.811278, abs=1e-6)


def test_entropy_zero_iff_pure():
    rng = np.random.default_rng(41)
    for _ in range(20):
        rho = random_density(rng, 2)
        purity = np.abs(rho @ rho - rho).max()
        s = measures.entropy(rho)
        if purity < 1e-12:
            assert s < 1e-9
        if s < 1e-9:
            assert purity < 1e-6


def test_entropy_rejects_invalid():
    with pytest.raises(ValueError):
        measures.entropy(np.eye(2))


def test_mutual_information_product_and_bell():
    rng = np.random.default_rng(42)
    product = linalg.tensor(random_density(rng, 2), random_density(rng, 2))
    assert measures.mutual_information(product) == pytest.approx(0.0, abs=1e-10)
    assert measures.mutual_information(bell_state()) == pytest.approx(2.0, abs=1e-12)
    assert measures.mutual_information(bs_output(QubitState(p=1.0))) == pytest.approx(2.0, abs=1e-12)


def test_mid_classical_states_score_zero():
    diag = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    assert measures.mid(diag) == pytest.approx(0.0, abs=1e-12)
    rng = np.random.default_rng(43)
    product = linalg.tensor(random_density(rng, 2), random_density(rng, 2))
    assert measures.mid(product) == pytest.approx(0.0, abs=1e-9)


def test_mid_bell_like_output():
    # degenerate marginals fall back to computational-basis projectors,
    # leaving Pi(rho) = diag(0, 1/2, 1/2, 0) with mutual information 1
    assert measures.mid(bs_output(QubitState(p=1.0))) == pytest.approx(1.0, abs=1e-12)
    assert measures.mid(bs_output(QubitState(p=0.0))) == pytest.approx(0.0, abs=1e-12)


def test_mid_nonnegative_on_family():
    rng = np.random.default_rng(44)
    for _ in range(50):
        assert measures.mid(bs_output(random_qubit(rng))) > -1e-10


def test_mid_invariant_under_marginal_diagonal_unitaries():
    rng = np.random.default_rng(45)
    for _ in range(10):
        q = QubitState(p=float(rng.uniform(0.1, 0.8)), x=0.1)
        rho = bs_output(q)
        locals_ = []
        for tag in ("A", "B"):
            _, vecs = linalg.eig_hermitian(linalg.partial_trace(rho, tag))
            phases = np.exp(1j * rng.uniform(0, 2 * math.pi, 2))
            locals_.append(vecs @ np.diag(phases) @ vecs.conj().T)
        u = np.kron(locals_[0], locals_[1])
        rotated = u @ rho @ u.conj().T
        assert measures.mid(rotated) == pytest.approx(measures.mid(rho), abs=1e-9)


def test_concurrence_equals_population():
    rng = np.random.default_rng(46)
    for _ in range(100):
        q = random_qubit(rng)
        assert measures.concurrence(bs_output(q)) == pytest.approx(q.p, abs=1e-9)
    assert measures.concurrence(bs_output(QubitState(p=0.37, x=0.2))) == pytest.approx(0.37, abs=1e-9)


def test_concurrence_reference_states():
    assert measures.concurrence(np.diag([0.4, 0.3, 0.2, 0.1])) == pytest.approx(0.0, abs=1e-12)
    assert measures.concurrence(bell_state()) == pytest.approx(1.0, abs=1e-12)


def test_negativity_reference_states():
    assert measures.negativity(np.diag([0.4, 0.3, 0.2, 0.1])) == pytest.approx(0.0, abs=1e-12)
    assert measures.negativity(bs_output(QubitState(p=1.0))) == pytest.approx(0.5, abs=1e-12)
    assert measures.negativity(bs_output(QubitState(p=0.0))) == pytest.approx(0.0, abs=1e-12)


def test_negativity_dual_forms_agree():
    rng = np.random.default_rng(47)
    for _ in range(50):
        rho = random_density(rng, 4)
        spectrum = measures.negativity(rho, via="spectrum")
        trace_norm = measures.negativity(rho, via="trace-norm")
        assert spectrum == pytest.approx(trace_norm, abs=1e-10)
        assert 0 - 1e-12 <= spectrum <= 0.5 + 1e-12
    with pytest.raises(ValueError):
        measures.negativity(random_density(rng, 4), via="nope")


def test_entanglement_measures_invariant_under_local_unitaries():
    # 5e-8 window: rotating the rank-deficient state turns its exact zero
    # eigenvalues into O(eps) ones, and the Hermitian square root inside the
    # concurrence amplifies that noise to sqrt(eps)
    rng = np.random.default_rng(48)
    for _ in range(10):
        rho = bs_output(random_qubit(rng))
        u = np.kron(random_unitary(rng), random_unitary(rng))
        rotated = u @ rho @ u.conj().T
        assert measures.concurrence(rotated) == pytest.approx(measures.concurrence(rho), abs=5e-8)
        assert measures.negativity(rotated) == pytest.approx(measures.negativity(rho), abs=1e-10)


def test_concurrence_zero_iff_negativity_zero_on_family():
    rng = np.random.default_rng(49)
    for _ in range(50):
        rho = bs_output(random_qubit(rng))
        c = measures.concurrence(rho)
        n = measures.negativity(rho)
        assert (c < 1e-9) == (n < 1e-9)


def test_potentials():
    cp, npot = measures.potentials(QubitState(p=1.0))
    assert cp == pytest.approx(1.0, abs=1e-12)
    assert npot == pytest.approx(0.5, abs=1e-12)

    assert measures.potentials(QubitState(p=0.0)) == pytest.approx((0.0, 0.0), abs=1e-12)

    cp, npot = measures.potentials(QubitState(p=0.5))
    assert cp == pytest.approx(0.5, abs=1e-9)
    eigs = np.linalg.eigvalsh(brute_force_partial_transpose(bs_output(QubitState(p=0.5))))
    expected_n = float(((np.abs(eigs) - eigs) / 2).sum())
    assert npot == pytest.approx(expected_n, abs=1e-10)


def test_measure_report_bundles_all_three():
    rep = measures.measure_report(bs_output(QubitState(p=1.0)))
    assert rep.mid == pytest.approx(1.0, abs=1e-12)
    assert rep.concurrence == pytest.approx(1.0, abs=1e-12)
    assert rep.negativity == pytest.approx(0.5, abs=1e-12)


def test_mid_of_pure_state_equals_schmidt_entropy():
    # for a pure state with nondegenerate marginals the local measurement is
    # in the Schmidt bases, so Q = 2*h(alpha) - h(alpha) = h(alpha)
    from ptbeam.schmidt import AmplitudeMatrix, singular_values

    rng = np.random.default_rng(50)
    checked = 0
    while checked < 20:
        ket = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        ket /= np.linalg.norm(ket)
        s_plus, _ = singular_values(AmplitudeMatrix.from_ket(ket))
        alpha = s_plus**2
        if not 0.55 < alpha < 0.99:  # keep marginals clearly nondegenerate
            continue
        expected = -alpha * math.log2(alpha) - (1 - alpha) * math.log2(1 - alpha)
        rho = np.outer(ket, ket.conj())
        assert measures.mid(rho) == pytest.approx(expected, abs=1e-9)
        checked += 1


def test_concurrence_matches_general_eigenvalue_route():
    # alternative formulation: sqrt of the eigenvalues of rho * rho~ computed
    # with a general (non-Hermitian) eigensolver
    rng = np.random.default_rng(51)
    sy = np.array([[0, -1j], [1j, 0]])
    flip = np.kron(sy, sy)
    for _ in range(30):
        rho = bs_output(random_qubit(rng)) if rng.uniform() < 0.5 else random_density(rng, 4)
        rho_tilde = flip @ rho.conj() @ flip
        lam = np.sqrt(np.abs(np.linalg.eigvals(rho @ rho_tilde)))
        lam = np.sort(lam)[::-1]
        expected = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
        assert measures.concurrence(rho) == pytest.approx(expected, abs=5e-8)
