"""Skew constacyclic codes over F_q and over R_q = F_q[v]/(v^q - v)."""

__version__ = "0.1.0"

from .errors import (
    ConsistencyAlarm,
    DivisibilityError,
    DomainError,
    FieldError,
    GuardExceeded,
    MismatchError,
    NotAUnitError,
    NotCovered,
    ParseError,
    SkewCodesError,
    ZeroDivision,
)
from .gf import (
    FieldAutomorphism,
    FieldElement,
    GaloisField,
    apply_automorphism,
    enumerate_elements,
    field_arith,
    field_of_order,
    make_field,
)
from .ring import (
    IdealDescriptor,
    RingAutomorphism,
    RingElement,
    RingRq,
    apply_ring_automorphism,
    enumerate_automorphisms,
    from_poly_basis,
    idempotent,
    ideals,
    is_unit,
    make_ring,
    ring_arith,
    support,
    to_poly_basis,
)
from .skew_poly import (
    ZERO_DEGREE,
    SkewPolynomial,
    gcrd,
    lclm,
    left_divmod,
    left_monic_reciprocal,
    monic_normalize,
    right_divmod,
    right_divides,
    ring_skew_decompose,
    ring_skew_recompose,
    skew_mul,
    skew_reciprocal,
)
from .codes import (
    LinearCode,
    RingLinearCode,
    code_from_rows,
    component,
    dual,
    gray_dual_commutes,
    gray_image,
    gray_map,
    gray_weight,
    min_distance,
    ring_code_from_components,
    ring_dual,
)
from .constacyclic import (
    SkewConstacyclicCodeF,
    SkewConstacyclicCodeR,
    TwistSpec,
    code_from_components_ring,
    code_from_generator_field,
    dual_field,
    dual_ring,
    multi_twisted_shift,
    principal_generator,
    right_divisors,
    self_dual_constacyclic_classifier,
    self_dual_exists,
    shift_field,
    shift_ring,
    solve_reciprocal_equation,
)
from .checks import verify_paper
