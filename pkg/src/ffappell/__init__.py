"""Exact finite-field hypergeometric and Appell F2 functions, with an identity checker."""

from .appell import f1_def, f2_boundary_term, f2_charsum, f2_def
from .chars import Character, all_characters, char_eval, delta_char, delta_elem
from .cyclo import CycNum, cyclotomic_poly, zeta_pow
from .ff_core import FieldTable, build_field, field_of_order
from .hyper import binom, binomial_table, f21_charsum, f21_def, fpq_charsum, jacobi
from .identities import VerifyReport, check_all, check_identity, registry

__all__ = [
    "Character", "CycNum", "FieldTable", "VerifyReport", "all_characters", "binom",
    "binomial_table", "build_field", "char_eval", "check_all", "check_identity",
    "cyclotomic_poly", "delta_char", "delta_elem", "f1_def", "f21_charsum", "f21_def",
    "f2_boundary_term", "f2_charsum", "f2_def", "field_of_order", "fpq_charsum", "jacobi",
    "registry", "zeta_pow",
]
