"""PT-symmetric two-level dynamics, beam-splitter nonclassicality, and noise.

The pipeline: evolve a qubit under a non-Hermitian PT-symmetric generator,
mix it with vacuum on a balanced beam-splitter, quantify the output's
nonclassicality (MID, concurrence, negativity), and degrade it with
random-telegraph, phase-damping, or amplitude-damping channels, with
closed-form cross-checks throughout.
"""

__version__ = "0.1.0"

from .beamsplitter import QubitState, bs_output, bs_unitary, gate_decomposition
from .channels import (
    AmplitudeDamping,
    KrausPair,
    PhaseDamping,
    RandomTelegraph,
    apply_qubit,
    apply_two_arm,
    concurrence_analytic,
    concurrence_rtn_p1,
    kraus_at,
    rtn_kernel,
)
from .measures import (
    MeasureReport,
    concurrence,
    entropy,
    measure_report,
    mid,
    mutual_information,
    negativity,
    potentials,
)
from .ptqubit import (
    PhaseLabel,
    PTParams,
    ThreeLevelParams,
    effective_coupling,
    eigenvalues,
    h_eff,
    propagator,
    rho_t,
)
from .schmidt import (
    AmplitudeMatrix,
    SchmidtForm,
    pd_bell_diagonal_concurrence,
    schmidt_decompose,
    singular_values,
)

__all__ = [
    "__version__",
    "QubitState",
    "bs_output",
    "bs_unitary",
    "gate_decomposition",
    "AmplitudeDamping",
    "KrausPair",
    "PhaseDamping",
    "RandomTelegraph",
    "apply_qubit",
    "apply_two_arm",
    "concurrence_analytic",
    "concurrence_rtn_p1",
    "kraus_at",
    "rtn_kernel",
    "MeasureReport",
    "concurrence",
    "entropy",
    "measure_report",
    "mid",
    "mutual_information",
    "negativity",
    "potentials",
    "PhaseLabel",
    "PTParams",
    "ThreeLevelParams",
    "effective_coupling",
    "eigenvalues",
    "h_eff",
    "propagator",
    "rho_t",
    "AmplitudeMatrix",
    "SchmidtForm",
    "pd_bell_diagonal_concurrence",
    "schmidt_decompose",
    "singular_values",
]
