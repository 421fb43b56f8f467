"""Skew-cyclic convolutional codes over A = GF(p^m)[x]/(x^n - 1)."""
from .circulant import (
    classical_circulant,
    p_sigma,
    poly_to_vec,
    shift_matrix,
    sigma_circulant,
    sigma_shift,
    vec_to_poly,
)
from .codes import (
    ConvCode,
    classify,
    code_from_generator,
    control_polynomial,
    dual_code,
    free_distance,
    heller_bound,
    minimal_generator_matrix,
    smallest_cyclic_module,
)
from .fzlinalg import (
    PolyMatrix,
    hermite_form,
    is_basic,
    is_minimal,
    module_classify,
    module_contains,
    module_equal,
    rank,
    right_kernel_basis,
    smith_form,
)
from .galois import FieldElement, GF, build_field
from .ring import Automorphism, RingContext, build_ring, sigma_hat
from .skew import SkewContext, SkewPoly, principal_generator, reduce_family
from .textio import format_skew, parse_poly, parse_ring

__version__ = "0.1.0"
