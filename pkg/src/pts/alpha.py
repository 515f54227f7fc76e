"""Alpha-conversion: decision by normalizing with the identity substitution.

Applying the identity substitution renames all binders canonically, so two
terms are alpha-convertible exactly when their normalized forms are
syntactically identical.  The recursive structural definitions are kept for
cross-checking that one-pass decision, not for production use.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Callable, Optional, Sequence

from .subst import Sub, chi_var, iota, apply, subst1
from .syntax import App, Const, Lam, Pi, Term, Var, VarT, concat, fv

if TYPE_CHECKING:
    from .typecheck import Ctx

ChooseFresh = Callable[[Term, Var, Term, Var], Var]

_inorm_cache: dict[Term, Term] = {}


def inorm(m: Term) -> Term:
    """Normal form under the identity substitution; canonical in each alpha class."""
    hit = _inorm_cache.get(m)
    if hit is None:
        hit = _inorm_cache[m] = apply(m, iota)
    return hit


def alpha_eq(m: Term, n: Term) -> bool:
    return inorm(m) == inorm(n)


def _default_choose(body: Term, x: Var, body_p: Term, x_p: Var) -> Var:
    return chi_var(concat(concat(fv(body_p), fv(body)), (x, x_p)))


def alpha_structural(
    m: Term,
    n: Term,
    recursive: bool = False,
    choose: Optional[ChooseFresh] = None,
) -> bool:
    """Check the inductive alpha relation directly.

    At binders a common fresh name y is picked (any y outside both bodies'
    free variables minus their binders is valid; `choose` overrides the
    default pick) and the bodies with x := v y are compared — syntactically
    when ``recursive`` is false, by a recursive call when true.
    """
    pick = choose or _default_choose
    match m, n:
        case (Const(k), Const(k_p)):
            return k == k_p
        case (VarT(x), VarT(x_p)):
            return x == x_p
        case (App(f, a), App(f_p, a_p)):
            return alpha_structural(f, f_p, recursive, choose) and alpha_structural(
                a, a_p, recursive, choose
            )
        case (Lam(x, ann, body), Lam(x_p, ann_p, body_p)) | (
            Pi(x, ann, body),
            Pi(x_p, ann_p, body_p),
        ):
            if type(m) is not type(n):
                return False
            if not alpha_structural(ann, ann_p, recursive, choose):
                return False
            y = pick(body, x, body_p, x_p)
            left = subst1(body, x, VarT(y))
            right = subst1(body_p, x_p, VarT(y))
            if recursive:
                return alpha_structural(left, right, recursive, choose)
            return left == right
    return False


def sub_alpha_eq(sigma: Sub, sigma_p: Sub, xs: Sequence[Var]) -> bool:
    """Pointwise alpha-equality of images over xs."""
    return all(alpha_eq(sigma(x), sigma_p(x)) for x in xs)


def ctx_alpha_eq(gamma: "Ctx", delta: "Ctx") -> bool:
    """Same variables in the same order, declared types alpha-equal."""
    if len(gamma.decls) != len(delta.decls):
        return False
    return all(
        x == y and alpha_eq(a, b)
        for (x, a), (y, b) in zip(gamma.decls, delta.decls)
    )
