"""Slopes of Hecke operators on harmonic cocycles for GL_3 over F_q(t)."""

from .algebra import RatFunc, field, inf_valuation, ratfunc_normalize, t_valuation
from .hecke import check_fp_entries, hecke_matrix, operator_A, operator_B, operator_C
from .representation import action_matrix, basis_indices, delta_matrix, level_subspace, vd_basis
from .slopes import Slope, SlopeTable, compute_table, format_table, newton_slopes

__version__ = "0.1.0"

__all__ = [
    "RatFunc", "field", "inf_valuation", "ratfunc_normalize", "t_valuation",
    "check_fp_entries", "hecke_matrix", "operator_A", "operator_B", "operator_C",
    "action_matrix", "basis_indices", "delta_matrix", "level_subspace", "vd_basis",
    "Slope", "SlopeTable", "compute_table", "format_table", "newton_slopes",
]
