"""Irreversible entropy production for a qubit thermalizing through a
generalized amplitude damping channel: exact trajectories, geometric
upper/lower bounds (Bures and Wigner-Yanase), the triangle-inequality
verifier licensing the lower bound, and a photonic-circuit simulation with
shot-noise tomography.
"""

from .channels import (
    BathParams,
    DampingSchedule,
    KrausChannel,
    ad_channel,
    apply,
    bath_from_temperature,
    choi,
    choi_distance,
    compose,
    gad_channel,
    gad_family,
    gibbs_state,
    iad_channel,
    identity_channel,
    mixing_map,
    qubit_hamiltonian,
)
from .errors import GadBoundsError
from .geometry import (
    BoundPair,
    BoundsReport,
    MetricKind,
    bounds_report,
    geodesic_length,
    lower_bound,
    mixing_triangle_proof_check,
    relent_geometric_lower,
    triangle_slack,
    upper_bound,
)
from .photonic import (
    Branch,
    CircuitConfig,
    CountTable,
    TomographyRecord,
    damping_from_process,
    gad_from_circuit,
    monte_carlo_errors,
    reconstruct_state,
    run_tomography,
    simulate_branch,
    simulate_counts,
)
from .qmat import (
    BlochVector,
    DensityMatrix,
    HermEigen,
    bloch_to_rho,
    herm_eigen,
    mat_log,
    mat_sqrt,
    rho_to_bloch,
)
from .thermo import (
    delta_s_irr_relent,
    delta_s_irr_thermo,
    heat,
    relative_entropy,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "GadBoundsError",
    "BathParams",
    "BlochVector",
    "BoundPair",
    "BoundsReport",
    "Branch",
    "CircuitConfig",
    "CountTable",
    "DampingSchedule",
    "DensityMatrix",
    "HermEigen",
    "KrausChannel",
    "MetricKind",
    "TomographyRecord",
    "ad_channel",
    "apply",
    "bath_from_temperature",
    "bloch_to_rho",
    "bounds_report",
    "choi",
    "choi_distance",
    "compose",
    "damping_from_process",
    "delta_s_irr_relent",
    "delta_s_irr_thermo",
    "gad_channel",
    "gad_family",
    "gad_from_circuit",
    "geodesic_length",
    "gibbs_state",
    "heat",
    "herm_eigen",
    "iad_channel",
    "identity_channel",
    "lower_bound",
    "mat_log",
    "mat_sqrt",
    "mixing_map",
    "mixing_triangle_proof_check",
    "monte_carlo_errors",
    "qubit_hamiltonian",
    "reconstruct_state",
    "relative_entropy",
    "relent_geometric_lower",
    "rho_to_bloch",
    "run_tomography",
    "simulate_branch",
    "simulate_counts",
    "triangle_slack",
    "upper_bound",
    "von_neumann_entropy",
    "__version__",
]
