"""Exact construction, recognition and verification of Leonard pairs."""

from .canon import CanonicalPair, cross_product_check, is_lbub_canonical, is_tdd_canonical_shape, lb_ub, td_d
from .densemat import Matrix, constant_row_sum, diag_conjugate, primitive_idempotents, shape
from .exactfield import QQ, FieldSpec, Scalar, characteristic_guard, solve_quadratic_in_field
from .parray import (
    KrawtchoukParams,
    ParameterArray,
    QRacahParams,
    affine,
    d4_act,
    derived_identities,
    krawtchouk_array,
    orbit,
    qracah_array,
    validate,
)
from .recognize import (
    RecognitionReport,
    compute_eps_alpha,
    recognize_lbub,
    recognize_tdd,
    verify_leonard_oracle,
)
from .transition import TransitionData, hyper_2f1, hyper_4phi3, intertwine_check, script_p, transition_matrices, weights
