"""Semiring-based constraint logic programs: parsing, evaluation and
fixpoint semantics (minimal model, Kripke-Kleene, well-founded, stable) over
pluggable semirings."""

from .errors import (
    InconsistentPair,
    IntervalTooLarge,
    IterationCapExceeded,
    NoGlb,
    NonAscendingChain,
    NotCompleteLattice,
    NotEnumerable,
    NotPositiveProgram,
    NotPositivelyOrdered,
    ParseError,
    SearchSpaceTooLarge,
    SemiclpError,
    TableFormatError,
    UniverseMismatch,
    ValueNotInCarrier,
)
from .interpretations import (
    ApproximationPair,
    Interpretation,
    bottom_interpretation,
    bottom_pair,
    interp_from_text,
    interp_leq,
    interp_to_text,
    is_consistent,
    pair_from_text,
    pair_leq_precision,
    pair_leq_truth,
    pair_to_text,
    top_interpretation,
)
from .operators import (
    eval_body,
    eval_gatom,
    interval_interpretations,
    is_semiring_model,
    is_traditional_model,
    model_intersection,
    phi,
    tp,
    ultimate,
)
from .orders import ALL_CHECKS, CheckReport, c_leq, natural_leq, run_checks
from .program import (
    Atom,
    Clause,
    Constant,
    NegatedAtom,
    PositiveAtom,
    Program,
    format_program,
    parse_program,
)
from .render import emit_table, emit_value, result_to_doc
from .semantics import (
    FITTING,
    ULTIMATE,
    FixpointTrace,
    SemanticsResult,
    enumerate_stable_fixpoints,
    is_stable_fixpoint,
    kripke_kleene,
    minimal_model,
    stable_op,
    well_founded,
)
from .semirings import (
    INF,
    NEG_INF,
    SemiringSpec,
    builtin_names,
    get_semiring,
    load_table_semiring,
    validate_spec,
)

__version__ = "0.1.0"
