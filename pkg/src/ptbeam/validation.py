"""Cross-module validation: analytic identities checked against the pipeline.

Each check pairs an independent expectation (closed form, alternate
construction, or brute-force oracle) with the corresponding computed path and
reports the worst deviation against a fixed tolerance. All randomized checks
use fixed seeds, so a validation run is deterministic.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, TextIO

import numpy as np

from . import linalg, measures
from .beamsplitter import (
    QubitState,
    bs_output,
    bs_unitary,
    gate_decomposition,
    phase_aligned_distance,
)
from .channels import (
    AmplitudeDamping,
    PhaseDamping,
    RandomTelegraph,
    apply_two_arm,
    concurrence_analytic,
    kraus_at,
    rtn_kernel,
)
from .experiments import CHANNEL_TAGS, channel_grid, channel_pair, packaged_config
from .ptqubit import PhaseLabel, PTParams, eigenvalues, h_eff, propagator, rho_t
from .schmidt import AmplitudeMatrix, pd_bell_diagonal_concurrence, schmidt_decompose, singular_values


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _random_qubit(rng) -> QubitState:
    p = float(rng.uniform(0, 1))
    radius = math.sqrt(p * (1 - p)) * float(rng.uniform(0, 1))
    phase = float(rng.uniform(0, 2 * math.pi))
    return QubitState(p=p, x=radius * complex(math.cos(phase), math.sin(phase)))


def _random_density(rng, dim: int) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / rho.trace().real


def check_noiseless_concurrence_identity(cases: int = 1000) -> CheckResult:
    """Criterion 1: C(bs_output(p, x)) = p to 1e-9 on randomized valid inputs."""
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(cases):
        q = _random_qubit(rng)
        worst = max(worst, abs(measures.concurrence(bs_output(q)) - q.p))
    return CheckResult(
        "noiseless concurrence identity",
        worst < 1e-9,
        f"max |C - p| = {worst:.3e} over {cases} cases (tol 1e-9)",
    )


def check_channel_analytic_vs_numeric(cases_per_channel: int = 500) -> CheckResult:
    """Criterion 2: closed-form channel concurrence matches the Kraus pipeline to 1e-8.

    Random-telegraph arms are kept identical so the kernel product is a
    square; the closed form only equals the pipeline when the product is
    nonnegative (one negative kernel gives pipeline p*|f1*f2|).
    """
    rng = np.random.default_rng(202)
    worst = 0.0
    for _ in range(cases_per_channel):
        q = _random_qubit(rng)
        eta1, eta2 = rng.uniform(0.05, 1.5, 2)
        t = float(rng.uniform(0, (math.pi / 2) / max(eta1, eta2)))
        s1, s2 = PhaseDamping(float(eta1)), PhaseDamping(float(eta2))
        got = measures.concurrence(apply_two_arm(s1, s2, t, t, bs_output(q)))
        worst = max(worst, abs(got - concurrence_analytic(q, s1, s2, t, t)))
    for _ in range(cases_per_channel):
        q = _random_qubit(rng)
        s1 = AmplitudeDamping(float(rng.uniform(0.05, 2)))
        s2 = AmplitudeDamping(float(rng.uniform(0.05, 2)))
        t1, t2 = (float(v) for v in rng.uniform(0, 5, 2))
        got = measures.concurrence(apply_two_arm(s1, s2, t1, t2, bs_output(q)))
        worst = max(worst, abs(got - concurrence_analytic(q, s1, s2, t1, t2)))
    for _ in range(cases_per_channel):
        q = _random_qubit(rng)
        spec = RandomTelegraph(float(rng.uniform(0.05, 2)), float(rng.uniform(0.05, 2)))
        t = float(rng.uniform(0, 8))
        got = measures.concurrence(apply_two_arm(spec, spec, t, t, bs_output(q)))
        worst = max(worst, abs(got - concurrence_analytic(q, spec, spec, t, t)))
    return CheckResult(
        "channel analytic vs numeric concurrence",
        worst < 1e-8,
        f"max |closed form - pipeline| = {worst:.3e} over {3 * cases_per_channel} cases (tol 1e-8)",
    )


def check_beam_splitter_identity(cases: int = 1000, unitary_fn: Callable = bs_unitary) -> CheckResult:
    """Criterion 3: conjugating rho (x) |0><0| with the unitary reproduces bs_output."""
    rng = np.random.default_rng(303)
    u = unitary_fn()
    vacuum = np.diag([1.0, 0.0]).astype(complex)
    worst = 0.0
    for _ in range(cases):
        q = _random_qubit(rng)
        conjugated = u @ linalg.tensor(q.matrix(), vacuum) @ u.conj().T
        worst = max(worst, np.abs(conjugated - bs_output(q)).max())
    return CheckResult(
        "beam-splitter conjugation identity",
        worst < 1e-12,
        f"max entrywise deviation = {worst:.3e} over {cases} cases (tol 1e-12)",
    )


def check_pt_spectrum(cases: int = 300) -> CheckResult:
    """Criterion 4: spectrum roots, phase classifier, unitary limit, branch agreement."""
    rng = np.random.default_rng(404)
    worst_root = 0.0
    classifier_ok = True
    for _ in range(cases):
        p = PTParams(
            omega=float(rng.uniform(-2, 3)),
            phi=float(rng.uniform(0, 2 * math.pi)),
            gamma=float(rng.uniform(0, 2)),
        )
        h = h_eff(p)
        for e in eigenvalues(p):
            shifted = h - e * np.eye(2)
            det = shifted[0, 0] * shifted[1, 1] - shifted[0, 1] * shifted[1, 0]
            worst_root = max(worst_root, abs(det))
        gap = p.coupling - p.gamma
        if abs(gap) > 1e-9:
            expected = PhaseLabel.PTS if gap > 0 else PhaseLabel.PTSB
            classifier_ok = classifier_ok and p.phase() is expected

    worst_unitary = 0.0
    for _ in range(cases):
        p = PTParams(omega=float(rng.uniform(-2, 3)), phi=float(rng.uniform(0, 2 * math.pi)), gamma=0.0)
        u = propagator(p, float(rng.uniform(0, 10)))
        worst_unitary = max(worst_unitary, np.abs(u @ u.conj().T - np.eye(2)).max())

    worst_branch = 0.0
    gamma = 1.0
    for w in np.logspace(-6, -3, 13):
        for sign in (+1, -1):  # real (PTS side) and imaginary (PTSB side) frequency
            j = math.sqrt(gamma**2 + sign * w**2)
            p = PTParams(omega=1 - j, phi=0.0, gamma=gamma)
            for t in (0.5, 1.7):
                direct = propagator(p, t, series_threshold=0.0)
                series = propagator(p, t, series_threshold=math.inf)
                worst_branch = max(worst_branch, np.abs(direct - series).max())

    passed = worst_root < 1e-10 and classifier_ok and worst_unitary < 1e-10 and worst_branch < 1e-8
    return CheckResult(
        "PT spectrum, classifier, propagator branches",
        passed,
        f"max |det(H - E)| = {worst_root:.3e} (tol 1e-10), classifier ok = {classifier_ok}, "
        f"max unitarity dev at gamma=0 = {worst_unitary:.3e} (tol 1e-10), "
        f"max series-vs-direct dev = {worst_branch:.3e} (tol 1e-8)",
    )


def check_kraus_completeness_cptp(cases: int = 200) -> CheckResult:
    """Criterion 5: Kraus completeness and trace/PSD preservation of two-arm application."""
    rng = np.random.default_rng(505)
    worst_complete = 0.0
    worst_trace = 0.0
    worst_eig = 0.0
    eye = np.eye(2)
    for _ in range(cases):
        specs = [
            RandomTelegraph(float(rng.uniform(0, 2)), float(rng.uniform(0, 2))),
            PhaseDamping(float(rng.uniform(0, 1.5))),
            AmplitudeDamping(float(rng.uniform(0, 2))),
        ]
        for spec in specs:
            if isinstance(spec, PhaseDamping):
                t = float(rng.uniform(0, (math.pi / 2) / max(spec.rate, 1e-9)))
            else:
                t = float(rng.uniform(0, 10))
            k0, k1 = kraus_at(spec, t)
            worst_complete = max(
                worst_complete, np.abs(k0.conj().T @ k0 + k1.conj().T @ k1 - eye).max()
            )
        s_a, s_b = specs[0], specs[2]
        rho = _random_density(rng, 4)
        out = apply_two_arm(s_a, s_b, float(rng.uniform(0, 5)), float(rng.uniform(0, 5)), rho)
        worst_trace = max(worst_trace, abs(out.trace() - 1))
        worst_eig = max(worst_eig, -float(np.linalg.eigvalsh(out).min()))
    passed = worst_complete < 1e-10 and worst_trace < 1e-10 and worst_eig < 1e-10
    return CheckResult(
        "Kraus completeness and CPTP preservation",
        passed,
        f"max completeness dev = {worst_complete:.3e}, max trace dev = {worst_trace:.3e}, "
        f"most negative eigenvalue = {worst_eig:.3e} (tol 1e-10 each)",
    )


def check_rtn_regimes() -> CheckResult:
    """Criterion 6: kernel revivals in the non-Markovian regime, confinement in the
    Markovian one, and a flat start."""
    non_markov = RandomTelegraph(coupling=1.0, switch_rate=0.2)
    markov = RandomTelegraph(coupling=0.1, switch_rate=1.0)
    results = {}
    for tag, spec in (("non-markovian", non_markov), ("markovian", markov)):
        grid = np.linspace(0, 20 / spec.switch_rate, 4001)
        values = np.array([rtn_kernel(spec, float(t)) for t in grid])
        results[tag] = values
    nm_min = float(results["non-markovian"].min())
    m_vals = results["markovian"]
    m_confined = bool((m_vals > 0).all() and (m_vals <= 1 + 1e-12).all())
    at_zero = rtn_kernel(non_markov, 0.0)
    # one-sided second-order stencil keeps the probe inside t >= 0
    h = 1e-4
    derivs = [
        (-3 * rtn_kernel(s, 0.0) + 4 * rtn_kernel(s, h) - rtn_kernel(s, 2 * h)) / (2 * h)
        for s in (non_markov, markov)
    ]
    worst_deriv = max(abs(d) for d in derivs)
    passed = nm_min < 0 and m_confined and abs(at_zero - 1) < 1e-12 and worst_deriv < 1e-6
    return CheckResult(
        "RTN regime behavior",
        passed,
        f"non-Markovian min = {nm_min:.4f} (< 0), Markovian confined to (0, 1] = {m_confined}, "
        f"kernel(0) = {at_zero}, max |d kernel/dt (0)| = {worst_deriv:.3e} (tol 1e-6)",
    )


def check_pts_enhancement() -> CheckResult:
    """Criterion 7: time-averaged measures are strictly larger in the PTS phase."""
    cfg = packaged_config("measures-vs-time")
    grid = np.linspace(float(cfg["t_start"]), float(cfg["t_stop"]), int(cfg["t_steps"]))
    averages = {}
    for prefix, label in (("pts", "PTS"), ("ptsb", "PTSB")):
        params = PTParams(
            omega=float(cfg[f"{prefix}_omega"]),
            phi=float(cfg[f"{prefix}_phi"]),
            gamma=float(cfg[f"{prefix}_gamma"]),
        )
        totals = np.zeros(3)
        for t in grid:
            out = bs_output(QubitState.from_matrix(rho_t(params, float(t))))
            rep = measures.measure_report(out)
            totals += (rep.mid, rep.concurrence, rep.negativity)
        averages[label] = totals / len(grid)
    gaps = averages["PTS"] - averages["PTSB"]
    passed = bool((gaps > 0).all())
    detail = ", ".join(
        f"{name}: PTS {averages['PTS'][i]:.4f} vs PTSB {averages['PTSB'][i]:.4f}"
        for i, name in enumerate(("Q", "C", "N"))
    )
    return CheckResult("PTS enhancement of time-averaged measures", passed, detail)


def check_noise_degrades() -> CheckResult:
    """Criterion 8: with shipped configs, noisy measures never exceed noiseless ones
    pointwise (within 1e-9)."""
    cfg = packaged_config("mid-under-noise")
    sets = [
        ("PTS", PTParams(float(cfg["pts_omega"]), float(cfg["pts_phi"]), float(cfg["pts_gamma"]))),
        ("PTSB", PTParams(float(cfg["ptsb_omega"]), float(cfg["ptsb_phi"]), float(cfg["ptsb_gamma"]))),
    ]
    worst = -math.inf
    worst_at = ""
    for tag in CHANNEL_TAGS:
        pair = channel_pair(cfg, tag)
        grid = channel_grid(cfg, tag, pair)
        for label, params in sets:
            for t in grid:
                clean = bs_output(QubitState.from_matrix(rho_t(params, float(t))))
                noisy = apply_two_arm(pair[0], pair[1], float(t), float(t), clean)
                ref = measures.measure_report(clean)
                got = measures.measure_report(noisy)
                for name, delta in (
                    ("Q", got.mid - ref.mid),
                    ("C", got.concurrence - ref.concurrence),
                    ("N", got.negativity - ref.negativity),
                ):
                    if delta > worst:
                        worst = delta
                        worst_at = f"{name} at t={t:.3f} [{label}/{tag}]"
    return CheckResult(
        "noise degrades nonclassicality pointwise",
        worst <= 1e-9,
        f"max (noisy - noiseless) = {worst:.3e} ({worst_at}; tol 1e-9)",
    )


def check_schmidt_appendix(cases: int = 300) -> CheckResult:
    """Criterion 9: closed-form singular values vs eigensolver, the uniform-amplitude
    product state, and the dephased Bell-diagonal concurrence grid."""
    rng = np.random.default_rng(909)
    worst_sv = 0.0
    for _ in range(cases):
        ket = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        amp = AmplitudeMatrix.from_ket(ket / np.linalg.norm(ket))
        s_plus, s_minus = singular_values(amp)
        mat = amp.matrix()
        w, _ = linalg.eig_hermitian(mat.conj().T @ mat)
        ref = np.sqrt(np.clip(w, 0.0, None))
        worst_sv = max(worst_sv, abs(s_plus - ref[0]), abs(s_minus - ref[1]))

    uniform = AmplitudeMatrix(0.5, 0.5, 0.5, 0.5)
    form = schmidt_decompose(uniform)
    uniform_ok = (
        abs(form.alpha - 1.0) < 1e-12
        and np.abs(form.reconstruct() - uniform.ket()).max() < 1e-9
    )

    worst_pd = 0.0
    bell_like = bs_output(QubitState(p=1.0))
    for l1 in np.linspace(0, 1, 20):
        for l2 in np.linspace(0, 1, 20):
            # drive the Kraus pipeline at times realizing these damping strengths
            t1 = math.acos(math.sqrt(1 - l1))
            t2 = math.acos(math.sqrt(1 - l2))
            noisy = apply_two_arm(PhaseDamping(1.0), PhaseDamping(1.0), t1, t2, bell_like)
            got = measures.concurrence(noisy)
            worst_pd = max(worst_pd, abs(got - pd_bell_diagonal_concurrence(float(l1), float(l2))))

    passed = worst_sv < 1e-10 and uniform_ok and worst_pd < 1e-9
    return CheckResult(
        "Schmidt machinery and dephased Bell-diagonal concurrence",
        passed,
        f"max singular-value dev = {worst_sv:.3e} (tol 1e-10), uniform-amplitude product "
        f"state ok = {uniform_ok}, max Bell-diagonal dev = {worst_pd:.3e} (tol 1e-9, 20x20 grid)",
    )


def check_negativity_dual_form(cases: int = 500) -> CheckResult:
    """Criterion 10: the two negativity forms agree; the single-photon output has
    N = 1/2 and Q = 1 under the documented tie-break."""
    rng = np.random.default_rng(1010)
    worst = 0.0
    for _ in range(cases):
        rho = _random_density(rng, 4)
        worst = max(
            worst,
            abs(measures.negativity(rho, via="spectrum") - measures.negativity(rho, via="trace-norm")),
        )
    bell_like = bs_output(QubitState(p=1.0))
    n_val = measures.negativity(bell_like)
    q_val = measures.mid(bell_like)
    passed = worst < 1e-10 and abs(n_val - 0.5) < 1e-10 and abs(q_val - 1.0) < 1e-10
    return CheckResult(
        "negativity dual forms and single-photon output values",
        passed,
        f"max |spectrum - trace-norm| = {worst:.3e} (tol 1e-10), N(p=1) = {n_val:.12f}, "
        f"Q(p=1) = {q_val:.12f}",
    )


CHECKS: list[Callable[[], CheckResult]] = [
    check_noiseless_concurrence_identity,
    check_channel_analytic_vs_numeric,
    check_beam_splitter_identity,
    check_pt_spectrum,
    check_kraus_completeness_cptp,
    check_rtn_regimes,
    check_pts_enhancement,
    check_noise_degrades,
    check_schmidt_appendix,
    check_negativity_dual_form,
]


def gate_decomposition_report() -> str:
    """Informational: how far the standard-gate product is from the beam-splitter
    unitary, globally and after removing a photon-number dependent phase."""
    u = bs_unitary()
    g = gate_decomposition()
    aligned = phase_aligned_distance(u, g)
    number_phase = np.diag([1, 1j, 1j, -1]).astype(complex)  # i**n on the n-photon sectors
    residual = float(np.abs(g - number_phase @ u).max())
    return (
        f"gate decomposition vs beam-splitter unitary: phase-aligned distance = {aligned:.6f}; "
        f"after removing the photon-number phase i^n the residual is {residual:.3e}"
    )


def run_validation(stream: TextIO | None = None) -> list[CheckResult]:
    """Run every check, printing one pass/fail line each plus an info footer."""
    results = []
    for index, check in enumerate(CHECKS, start=1):
        start = time.perf_counter()
        result = check()
        result.seconds = time.perf_counter() - start
        results.append(result)
        if stream is not None:
            status = "PASS" if result.passed else "FAIL"
            stream.write(
                f"[{status}] {index:2d}. {result.name} ({result.seconds:.2f}s): {result.detail}\n"
            )
    if stream is not None:
        stream.write(f"[INFO] {gate_decomposition_report()}\n")
        failed = sum(1 for r in results if not r.passed)
        stream.write(f"SUMMARY: {len(results) - failed} passed, {failed} failed\n")
    return results
