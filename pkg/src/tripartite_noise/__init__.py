"""GHZ and W states under correlated and non-correlated depolarizing noise."""
from .channels import (
    KrausOperatorList,
    NoiseScenario,
    apply_channel,
    apply_scenario,
    assemble_scenario,
    completeness_defect,
    depolarizing_kraus,
    scenario_for_kind,
)
from .negativity import (
    NegativityTriple,
    SweepResult,
    bipartite_negativity,
    detect_revival,
    find_death_point,
    sweep,
    tripartite_negativity,
)
from .states import DensityMatrix, density_from_pure, ghz_state, validate_density, w_state

__all__ = [
    "DensityMatrix",
    "KrausOperatorList",
    "NegativityTriple",
    "NoiseScenario",
    "SweepResult",
    "apply_channel",
    "apply_scenario",
    "assemble_scenario",
    "bipartite_negativity",
    "completeness_defect",
    "density_from_pure",
    "depolarizing_kraus",
    "detect_revival",
    "find_death_point",
    "ghz_state",
    "scenario_for_kind",
    "sweep",
    "tripartite_negativity",
    "validate_density",
    "w_state",
]
