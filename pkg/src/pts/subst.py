"""Simultaneous substitution with uniform renaming of bound variables.

A substitution is a total map variable -> term with finite support; outside
the support it is the identity.  Applying one renames *every* binder it
passes to the first name that is fresh for the images of the body's free
variables, so the operation is structurally recursive and capture-avoiding
by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .syntax import (
    App,
    Const,
    Lam,
    Pi,
    Term,
    Var,
    VarList,
    VarT,
    decode,
    delete,
    encode,
    fv,
)


@dataclass(frozen=True)
class Sub:
    """Finitely-supported substitution; identity outside the support.

    Entries mapping x to v x are allowed — they do not change behaviour,
    only the printed support.
    """

    support: Mapping[Var, Term] = field(default_factory=dict)

    def __call__(self, x: Var) -> Term:
        return self.support.get(x, VarT(x))

    def __repr__(self) -> str:
        inner = ", ".join(f"{x.name}:={img!r}" for x, img in self.support.items())
        return f"Sub({{{inner}}})"


iota = Sub({})


@dataclass(frozen=True)
class Res:
    """A substitution restricted to a scope list of variables."""

    sub: Sub
    scope: VarList


def update(sigma: Sub, x: Var, n: Term) -> Sub:
    """Pointwise update; a later update for the same variable shadows."""
    m = dict(sigma.support)
    m[x] = n
    return Sub(m)


def chi_nat(ns: Iterable[int]) -> int:
    """Least natural number not in ns."""
    taken = set(ns)
    k = 0
    while k in taken:
        k += 1
    return k


def chi_var(xs: Sequence[Var]) -> Var:
    """First canonical variable whose index is not taken by encode(xs)."""
    return decode(chi_nat(encode(x) for x in xs))


def chi_res(r: Res) -> Var:
    """A variable fresh for every image of the scope under the substitution."""
    avoid: list[Var] = []
    for z in r.scope:
        avoid.extend(fv(r.sub(z)))
    return chi_var(avoid)


def apply(m: Term, sigma: Sub) -> Term:
    """The substitution operator.

    Binders are renamed unconditionally: the new name is chosen fresh for
    the images of the body's free variables minus the binder, then the body
    is substituted under sigma updated to send the old binder there.
    """
    match m:
        case Const(_):
            return m
        case VarT(x):
            return sigma(x)
        case App(fn, arg):
            return App(apply(fn, sigma), apply(arg, sigma))
        case Lam(x, ann, body):
            y = chi_res(Res(sigma, delete(fv(body), x)))
            return Lam(y, apply(ann, sigma), apply(body, update(sigma, x, VarT(y))))
        case Pi(x, ann, body):
            y = chi_res(Res(sigma, delete(fv(body), x)))
            return Pi(y, apply(ann, sigma), apply(body, update(sigma, x, VarT(y))))
    raise TypeError(f"not a term: {m!r}")


def compose(sigma: Sub, sigma_p: Sub) -> Sub:
    """Composition: (sigma . sigma_p) x = apply(sigma_p x, sigma).

    The union support is materialized eagerly so the result stays finite
    and printable.
    """
    out: dict[Var, Term] = {}
    for x in list(sigma_p.support) + [x for x in sigma.support if x not in sigma_p.support]:
        out[x] = apply(sigma_p(x), sigma)
    return Sub(out)


def subst1(m: Term, x: Var, n: Term) -> Term:
    """Unary substitution m[x := n].

    Note this renames every binder of m even when x is not free in it;
    compare results up to alpha when that matters.
    """
    return apply(m, update(iota, x, n))


def res_eq(r: Res, r_p: Res) -> bool:
    """Equality of restrictions: mutual scope inclusion, pointwise identity."""
    s, s_p = set(r.scope), set(r_p.scope)
    if not (s <= s_p and s_p <= s):
        return False
    return all(r.sub(x) == r_p.sub(x) for x in r.scope)
