"""Executable pure type systems over named lambda-syntax.

The kernel keeps conventional named terms and makes substitution rename
every binder it passes, so alpha-equivalence is decided by normalizing with
the identity substitution.  On top sit a derivation checker for explicit
typing trees and a type synthesizer for functional instances.
"""

from .syntax import App, Const, Lam, Pi, Sort, Term, Var, VarT, decode, encode, fv, is_fresh
from .subst import Res, Sub, apply, chi_nat, chi_res, chi_var, compose, iota, res_eq, subst1, update
from .alpha import alpha_eq, alpha_structural, ctx_alpha_eq, sub_alpha_eq
from .beta import ConvCertificate, beta_conv, check_certificate, contract, normalize, reducts, whnf
from .typecheck import Ctx, PtsSpec, check_ctx, check_deriv, ctx_apply, infer, lambda_cube, subst_wt
from .parser import ParseError, parse_ctx, parse_spec, parse_term, print_ctx, print_term

__all__ = [
    "App", "Const", "Lam", "Pi", "Sort", "Term", "Var", "VarT",
    "decode", "encode", "fv", "is_fresh",
    "Res", "Sub", "apply", "chi_nat", "chi_res", "chi_var", "compose",
    "iota", "res_eq", "subst1", "update",
    "alpha_eq", "alpha_structural", "ctx_alpha_eq", "sub_alpha_eq",
    "ConvCertificate", "beta_conv", "check_certificate", "contract",
    "normalize", "reducts", "whnf",
    "Ctx", "PtsSpec", "check_ctx", "check_deriv", "ctx_apply", "infer",
    "lambda_cube", "subst_wt",
    "ParseError", "parse_ctx", "parse_spec", "parse_term", "print_ctx", "print_term",
]
