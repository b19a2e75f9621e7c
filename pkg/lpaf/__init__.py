#!/usr/bin/env python3

from .af import (
    ArgFramework,
    af_strongly_equivalent,
    attackers,
    is_conflict_free,
    range_of,
    restrict,
    stable_extensions,
    stable_kernel,
    union,
)
from .caf import ClaimFramework, caf_strongly_equivalent, caf_union, induced_af, is_well_formed, stable_claim_extensions
from .dynamics import head_update, head_update_program, id_update, id_update_program, refine
from .equivalence import (
    OracleBudget,
    apply_update,
    candidate_deltas,
    kernel_sanity,
    lp_kernel,
    oracle_se,
    replay,
    rr_se_atomic,
    rr_se_hunique,
    se_models,
    standard_se,
)
from .errors import (
    AlphabetError,
    ArgumentNameError,
    BudgetError,
    ClassViolation,
    EmptyFrameworkError,
    FrameworkError,
    GeneratorError,
    LpafError,
    ProgramError,
)
from .generate import RandomSpec, generate
from .lp import (
    InterpretationSet,
    Program,
    Rule,
    answer_sets,
    class_of,
    equivalent,
    is_answer_set,
    is_model,
    language,
    loop_rules,
    minimal_model,
    program_union,
    rank_by_head,
    reduct,
    strict_projection,
    ungrounded_vulnerabilities,
)
from .lpaf import detect_kind, load, loads, parse_af, parse_caf, parse_lp, render
from .parser import ParserError
from .translate import af_to_caf, af_to_lp, caf_to_af, caf_to_lp, lp_to_af, lp_to_caf
from .verdict import SEVerdict
