"""Quantum walks on bond-order-weighted aromatic hydrocarbon graphs.

Continuous-time walks (Laplacian generator, exact spectral propagator)
produce per-site MAXP/TRP observables, delocalization-mode matches and a
cross-molecule stability order; a directed discrete-time walk ranks
sites by reactivity. A small bond-order toolbox converts local-mode
force constants to relative bond strength orders.
"""

__version__ = "0.1.0"

from .bondorder import (
    badger_bond_order,
    badger_force_constant,
    load_matrix_file,
    local_force_constants,
    wilson_residual,
)
from .ctqw import (
    EvolutionSeries,
    Hamiltonian,
    Propagator,
    evolve_ensemble,
    hamiltonian,
    propagator,
    time_series,
    unitary,
)
from .dtqw import (
    DirectedWalkState,
    LineWalkState,
    NodeRanking,
    angle_coin,
    arc_order,
    degree_coin,
    directed_line_step,
    directed_step,
    directed_walk_state,
    line_step,
    localized_line_state,
    node_probabilities,
    rank_nodes,
)
from .errors import ComputationError
from .graphs import (
    CATALOG,
    MoleculeGraph,
    adjacency,
    degrees,
    equivalence_classes,
    laplacian,
    load_molecule,
    weighted_degrees,
)
from .metrics import (
    MODE_CATALOG,
    ModePattern,
    ModeReport,
    SiteReport,
    SiteSeries,
    StabilityEntry,
    StabilityReport,
    classify_modes,
    detect_period,
    maxp,
    overall_mean_trp,
    site_reports,
    site_series,
    stability_entry,
    stability_order,
    time_means,
    trp,
)

__all__ = [
    "CATALOG",
    "ComputationError",
    "DirectedWalkState",
    "EvolutionSeries",
    "Hamiltonian",
    "LineWalkState",
    "MODE_CATALOG",
    "ModePattern",
    "ModeReport",
    "MoleculeGraph",
    "NodeRanking",
    "Propagator",
    "SiteReport",
    "SiteSeries",
    "StabilityEntry",
    "StabilityReport",
    "adjacency",
    "angle_coin",
    "arc_order",
    "badger_bond_order",
    "badger_force_constant",
    "classify_modes",
    "degree_coin",
    "degrees",
    "detect_period",
    "directed_line_step",
    "directed_step",
    "directed_walk_state",
    "equivalence_classes",
    "evolve_ensemble",
    "hamiltonian",
    "laplacian",
    "line_step",
    "load_matrix_file",
    "load_molecule",
    "local_force_constants",
    "localized_line_state",
    "maxp",
    "node_probabilities",
    "overall_mean_trp",
    "propagator",
    "rank_nodes",
    "site_reports",
    "site_series",
    "stability_entry",
    "stability_order",
    "time_means",
    "time_series",
    "trp",
    "unitary",
    "weighted_degrees",
    "wilson_residual",
]
