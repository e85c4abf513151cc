"""Entanglement-assisted quantum MDS codes from GRS codes over GF(q^2)."""

from ._backend import USE_NUMBA, backend_name
from .certify import Certificate, certify_gram_pattern, oracle_inner_sums, verify_small_scale
from .construction_a import ParamsA, emit_params_a, expected_pattern_a, max_d
from .construction_b import ParamsB, emit_params_b, expected_pattern_b
from .eaqec import EaqecParams, ea_singleton, eaqec_from_classical
from .field import FieldElem, FieldSpec, create_field, field_for_q
from .grs import GrsCode, generator_matrix
from .matrix import Matrix, gram, rank

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "Certificate",
    "EaqecParams",
    "FieldElem",
    "FieldSpec",
    "GrsCode",
    "Matrix",
    "ParamsA",
    "ParamsB",
    "backend_name",
    "certify_gram_pattern",
    "create_field",
    "ea_singleton",
    "eaqec_from_classical",
    "emit_params_a",
    "emit_params_b",
    "expected_pattern_a",
    "expected_pattern_b",
    "field_for_q",
    "generator_matrix",
    "gram",
    "max_d",
    "oracle_inner_sums",
    "rank",
    "verify_small_scale",
]
