"""Companion-matrix frequency-time hopping patterns over finite fields.

Modules
-------
gf       exact arithmetic in F_{p^k}
polyalg  polynomials over F_q, irreducibility, primitivity, canonical search
pattern  frame structures, companion and linear patterns, schedules
metrics  column period, maximal collision ratio, maximal continual collisions
oracle   brute-force verifiers that share nothing with the modules above
cli      command-line front end (``hoplattice``)
"""
from .gf import FieldParams, field_new
from .metrics import MetricsReport, evaluate, lower_bounds
from .pattern import CompanionPattern, LinearPattern, companion_matrix, relabel
from .polyalg import MonicPoly, find_primitive, is_primitive, monic

__version__ = "0.1.0"

__all__ = [
    "FieldParams", "field_new",
    "MonicPoly", "monic", "find_primitive", "is_primitive",
    "CompanionPattern", "LinearPattern", "companion_matrix", "relabel",
    "MetricsReport", "evaluate", "lower_bounds",
]
