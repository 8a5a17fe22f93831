"""Near-group fusion categories of type G+n and the modular data of their
Drinfeld centers: defining-equation solvers, center assembly, condensation
by Tannakian subgroups, and SL(2,Z) representation decomposition."""

from .groups import (
    Bicharacter,
    GroupSpec,
    QuadraticForm,
    enumerate_elements,
    gauss_sum,
    is_nondegenerate,
    pairing_eval,
    quadratic_forms_for,
)
from .solver import (
    NearGroupData,
    SolverOptions,
    dedupe_up_to_aut,
    dim_d,
    feasible_pairs,
    residual,
    solve_b,
)
from .halfbraiding import (
    HalfBraidingTriple,
    expected_count,
    solve_triples,
    solve_triples_report,
    triple_residual,
)
from .center import ModularData, build_center, global_dim_exact, pointed_part
from .mtc import (
    FusionError,
    GaloisElement,
    VerifyReport,
    balancing_check,
    centralizer,
    charge_conjugation,
    find_tannakian_subgroups,
    fusion_slice,
    galois_action,
    verify_modular,
    verlinde_fusion,
)
from .condense import (
    CondensationResult,
    condense,
    factor_pointed,
    invertible_action,
    invertible_permutation,
    orbit_decomposition,
)
from .sl2z import (
    CATALOG,
    DecompositionType,
    RepSpec,
    candidate_decompositions,
    projective_rep,
    shortlist,
    verify_decomposition,
)
from .compare import MatchReport, compare_modular_data
from .exact import ExactValue, QuadIrr, exactify
from .pipeline import PRESETS, run_pipeline

__all__ = [
    "Bicharacter",
    "GroupSpec",
    "QuadraticForm",
    "enumerate_elements",
    "gauss_sum",
    "is_nondegenerate",
    "pairing_eval",
    "quadratic_forms_for",
    "NearGroupData",
    "SolverOptions",
    "dedupe_up_to_aut",
    "dim_d",
    "feasible_pairs",
    "residual",
    "solve_b",
    "HalfBraidingTriple",
    "expected_count",
    "solve_triples",
    "solve_triples_report",
    "triple_residual",
    "ModularData",
    "build_center",
    "global_dim_exact",
    "pointed_part",
    "FusionError",
    "GaloisElement",
    "VerifyReport",
    "balancing_check",
    "centralizer",
    "charge_conjugation",
    "find_tannakian_subgroups",
    "fusion_slice",
    "galois_action",
    "verify_modular",
    "verlinde_fusion",
    "CondensationResult",
    "condense",
    "factor_pointed",
    "invertible_action",
    "invertible_permutation",
    "orbit_decomposition",
    "CATALOG",
    "DecompositionType",
    "RepSpec",
    "candidate_decompositions",
    "projective_rep",
    "shortlist",
    "verify_decomposition",
    "MatchReport",
    "compare_modular_data",
    "ExactValue",
    "QuadIrr",
    "exactify",
    "PRESETS",
    "run_pipeline",
]

__version__ = "0.1.0"
