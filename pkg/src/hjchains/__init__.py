"""Exact combinatorics of cyclic quotient singularities.

Hirzebruch-Jung continued fractions, blow-down simulation on weight
chains, core/T-chain structure of self-insertion-stable chains,
discrepancy and volume ledgers, and generators for the accumulation
sequences those ledgers produce.  Every computation is exact: integer
pairs, integer chains, and rationals, no floating point anywhere in
the core.
"""

from .chains import (
    Chain,
    Convergents,
    CyclicQuotient,
    convergents,
    dual_fraction,
    evaluate_chain,
    expand_fraction,
    format_chain,
    inverse_mod,
    is_admissible,
    parse_chain,
)
from .contraction import (
    ContractionStep,
    ContractionTrace,
    InsertionPattern,
    SurvivorReport,
    concat_with_ones,
    contract_fully,
    contract_once,
    is_admissible_for_chains,
    surviving_center,
)
from .errors import (
    DomainError,
    IncompleteLedger,
    IndexTooSmall,
    InvalidCenter,
    MalformedChain,
    MissingParameter,
    NegativeWeight,
    NotAContractibleEntry,
    NotAdmissible,
    NotAdmissibleForChains,
    NotAmple,
    TooFewTerms,
)
from .families import (
    AccumSequence,
    FamilyTerm,
    FormationStep,
    LimitReport,
    StarRecord,
    blowup_family,
    example210_family,
    formation_family,
    formation_rule,
    k2_step_value,
    limit_of,
    property_star,
)
from .geometry import (
    BoundCheck,
    BoundReport,
    DeltaCase,
    Discrepancies,
    VolumeLedger,
    bridge_degree,
    check_genT_delta_bound,
    check_main_bounds,
    correction_term,
    delta_from_case,
    discrepancies,
    k2_ledger,
)
from .tchains import (
    Decomposition,
    Side,
    apply_tstep,
    core_weight,
    decompose,
    enumerate_cores,
    enumerate_generalized_T,
    is_core,
    is_generalized_T,
    is_minimal_core,
    recognize_T,
    reduced_form,
    replay_decomposition,
    undo_tstep,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
