"""Exact R-matrix blocks for Fock modules of quantum toroidal gl(1)."""
from .fock import FockBlock, assemble_full_block, norm_N
from .params import ToroidalParams, eps, epsbar, epsilon, params_from_context, symbolic_params
from .ratfunc import EvalContext, ModP, PoleError, RatFunc, rf_eval, rf_limit_t0
from .toroidal import L_table, a_skew, rbar_coeffs

__version__ = "0.1.0"

__all__ = ["RatFunc", "ModP", "EvalContext", "PoleError", "rf_eval", "rf_limit_t0",
           "ToroidalParams", "symbolic_params", "params_from_context", "epsilon", "eps", "epsbar",
           "a_skew", "L_table", "rbar_coeffs", "assemble_full_block", "FockBlock", "norm_N"]
