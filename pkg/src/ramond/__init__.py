"""Exact symbolic computation for smooth modules over the Ramond algebra."""

from .errors import (
    HypothesisViolation,
    ParseError,
    PhiValidationError,
    RamondError,
    SplitError,
    WeightBudgetError,
)
from .generators import (
    BOREL,
    C,
    G,
    Gen,
    L,
    R_MINUS,
    R_PLUS,
    R_ZERO,
    Subalgebra,
    b_truncated,
    grading_index,
    is_member,
    m_above,
    parity,
    whittaker_domain,
    window,
)
from .pbw import (
    AlgebraElement,
    PBWMonomial,
    adjoint_weight,
    bracket,
    canonical_rank,
    element,
    monomial_multiply,
    multiply,
    product_of,
    split_for_induction,
    super_commutator,
)
from .ordering import IndexPair, ZERO_PAIR, cmp_principal, cmp_revlex, pairs_of_weight
from .base_modules import (
    BaseModuleSpec,
    EvenPartFamily,
    WhittakerData,
    a_phi_submodule_witness,
    b0_module,
    b1_module,
    finite_top_induction,
    phi_validate,
    shift_family,
    validate_module,
    verma_top,
    whittaker_b_module,
    whittaker_finite_top,
)
from .induced import (
    InducedModule,
    ModuleVector,
    lemma31_check,
    level_dimension,
    simplicity_certificate,
    singular_vectors,
    verma_module,
    whittaker_module,
)
from .parsing import parse_expression, parse_module_spec, parse_rational, parse_vector

__all__ = [name for name in dir() if not name.startswith("_")]
