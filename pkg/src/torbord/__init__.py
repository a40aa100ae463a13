"""Exact invariants of the canonical toric manifolds attached to simplicial complexes."""
from .errors import InputError, InternalMismatch, RangeError, TorbordError
from .simplicial import (
    SimplicialComplex,
    alexander_dual,
    euler_characteristic,
    f_vector,
    from_json,
    from_text,
    link,
    loads,
    parse_complex,
    to_json,
    to_text,
    void,
)
from .vectors import alpha, mu_vector
from .bier import bier_sphere, h_vector_bier
from .gamma import gamma_vector
from .charnum import chern_number, chi_y, milnor_number, report
from .bordism import bordant_unitary, decompose, is_polynomial_generator

__version__ = "0.1.0"
