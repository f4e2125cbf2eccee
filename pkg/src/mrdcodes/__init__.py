"""Rank-metric codes over F_{q^n}: Gabidulin, twisted and additive twisted
Gabidulin codes, two restricted error channels and their decoders."""

from .channels import (ErrorPattern, ModelAParams, ModelBParams, apply_error, model_a_setup,
                       sample_model_a_error, sample_model_b_error)
from .codes import CodeSpec, encode, eta_transform, new_code, verify_codeword
from .decoders import (DecodeReport, decode, decode_agtg, decode_gabidulin, decode_gtg,
                       decode_model_b_lowrate)
from .errors import *  # noqa: F401,F403
from .field import FieldContext, frobenius_pow, norm_to_base, solve_quadratic
from .linpoly import LinearizedPoly, random_rank_t

__all__ = [
    "CodeSpec", "DecodeReport", "ErrorPattern", "FieldContext", "LinearizedPoly",
    "ModelAParams", "ModelBParams", "apply_error", "decode", "decode_agtg", "decode_gabidulin",
    "decode_gtg", "decode_model_b_lowrate", "encode", "eta_transform", "frobenius_pow",
    "model_a_setup", "new_code", "norm_to_base", "random_rank_t", "sample_model_a_error",
    "sample_model_b_error", "solve_quadratic", "verify_codeword",
]
