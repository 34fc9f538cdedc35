"""Optimal resource costs of state transfer with quantum side information."""
from .catalog import catalog_report, classify
from .costs import (
    PartitionSpec,
    ResourceVector,
    convert_classical_to_quantum,
    convert_quantum_to_classical,
    cost_grid,
    merging_costs,
    redistribution_costs,
)
from .effects import EffectTable, additional_effect, chain_rule_audit, effect, theorem1_check, theorem2_check
from .entropy import fidelity, qcmi, qmi, von_neumann
from .hilbert import (
    Layout,
    MultipartiteState,
    PureState,
    Subsystem,
    density_from_pure,
    partial_trace,
    permute,
    purify,
)
from .recovery import is_markov, petz_recover, recovery_report

__version__ = "0.1.0"
