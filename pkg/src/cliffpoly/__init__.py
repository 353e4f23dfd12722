"""cliffpoly: characteristic polynomials, determinants, adjugates, and
inverses of multivectors in real Clifford algebras Cl(p,q), computed with
algebra operations only and verifiable against a complex matrix
representation."""

from .algebra import (
    DIMENSION_CAP,
    LeftMul,
    Multivector,
    Signature,
    add,
    apply_grade_signs,
    basis_blade,
    blade,
    blade_mul,
    center_project,
    clifford_conjugation,
    from_coeffs,
    geometric_product,
    grade_involution,
    grade_project,
    make_algebra,
    norm_inf,
    quaternion_type_project,
    random_multivector,
    reversion,
    scalar,
    scalar_part,
    scale,
    zero,
)
from .bell import (
    bell_complete,
    bell_complete_determinant,
    bell_complete_partition_sum,
    bell_complete_sequence,
)
from .charpoly import (
    CharPoly,
    INVERTIBILITY_RTOL,
    PowerTraces,
    adjugate,
    bar_form_det,
    cayley_hamilton_residual,
    charpoly_eval,
    charpoly_via_bell,
    det_closed_form,
    det_closed_form_variants_n3,
    determinant,
    explicit_coeffs_low_dim,
    faddeev_leverrier,
    inverse,
    power_traces,
    rep_dimension,
)
from .conjugations import (
    SCALAR_SCHEMES,
    ConjugationSpec,
    bar_conj,
    bar_via_delta,
    center_part_via_conj,
    delta_conj,
    delta_superpose,
    grade_negate,
    num_special_conjugations,
    scalar_part_via_conj,
)
from .errors import (
    CliffordError,
    DimensionCapError,
    ExprSyntaxError,
    GradeRangeError,
    InternalCheckError,
    NotInvertibleError,
    SignatureMismatchError,
    UnsupportedDimensionError,
)
from .matrix_rep import (
    GeneratorRep,
    build_generators,
    mat_adjugate,
    mat_charpoly,
    mat_det,
    mat_trace,
    represent,
)
from .parsing import format_multivector, parse
from .selfcheck import run_selfcheck

__version__ = "0.1.0"
