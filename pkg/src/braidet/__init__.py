"""Knot determinants and Alexander polynomials of closed 3-braids."""

from .braid import BraidWord, TghwParams, expand_tghw, exponent_sum, invert, parse_params, parse_word, render_word
from .burau import AlexanderResult, MatL, alexander, burau, char_det, determinant_fast
from .classify import QaVerdict, p_colorable, quasi_alternating, recognize_family
from .closed_form import det_closed_form, matrix_oracle, trace_power
from .laurent import LaurentPoly, div_exact, eval_int, parse_laurent, unit_equivalent
from .sequences import lucas, m_lucas

__version__ = "0.1.0"
