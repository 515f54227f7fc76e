"""Beta-reduction and conversion, fuel-bounded.

Conversion is the equivalence closure of one-step reduction together with
alpha; it is decided here by normalizing both sides (complete only for
terminating terms, hence the explicit ``unknown`` verdict), or validated
exactly via step-by-step certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alpha import alpha_eq
from .subst import subst1
from .syntax import App, Lam, Pi, Term

NORMAL = "normal"
FUEL_EXHAUSTED = "fuelExhausted"

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


def contract(m: Term) -> Optional[Term]:
    """Contract a redex at the root, if there is one."""
    match m:
        case App(Lam(x, _, body), arg):
            return subst1(body, x, arg)
    return None


def reducts(m: Term) -> list[Term]:
    """All one-step successors, one per redex, outermost and leftmost first.

    Only the contracted redex renames binders; the surrounding context is
    rebuilt unchanged.
    """
    out: list[Term] = []
    match m:
        case App(fn, arg):
            root = contract(m)
            if root is not None:
                out.append(root)
            out.extend(App(f2, arg) for f2 in reducts(fn))
            out.extend(App(fn, a2) for a2 in reducts(arg))
        case Lam(x, ann, body):
            out.extend(Lam(x, a2, body) for a2 in reducts(ann))
            out.extend(Lam(x, ann, b2) for b2 in reducts(body))
        case Pi(x, ann, body):
            out.extend(Pi(x, a2, body) for a2 in reducts(ann))
            out.extend(Pi(x, ann, b2) for b2 in reducts(body))
    return out


def _step(m: Term) -> Optional[Term]:
    """Leftmost-outermost one-step reduct, or None if m is normal."""
    match m:
        case App(fn, arg):
            root = contract(m)
            if root is not None:
                return root
            s = _step(fn)
            if s is not None:
                return App(s, arg)
            s = _step(arg)
            if s is not None:
                return App(fn, s)
        case Lam(x, ann, body):
            s = _step(ann)
            if s is not None:
                return Lam(x, s, body)
            s = _step(body)
            if s is not None:
                return Lam(x, ann, s)
        case Pi(x, ann, body):
            s = _step(ann)
            if s is not None:
                return Pi(x, s, body)
            s = _step(body)
            if s is not None:
                return Pi(x, ann, s)
    return None


def normalize(m: Term, fuel: int) -> tuple[Term, str]:
    """Repeated leftmost-outermost contraction; fuel counts contractions."""
    cur = m
    used = 0
    while True:
        nxt = _step(cur)
        if nxt is None:
            return cur, NORMAL
        if used >= fuel:
            return cur, FUEL_EXHAUSTED
        cur = nxt
        used += 1


def whnf(m: Term, fuel: int) -> tuple[Term, str]:
    """Head reduction only: stops at a Lam/Pi/Const/Var head."""
    cur = m
    used = 0
    while True:
        args: list[Term] = []
        head = cur
        while isinstance(head, App):
            args.append(head.arg)
            head = head.fn
        if not isinstance(head, Lam) or not args:
            return cur, NORMAL
        if used >= fuel:
            return cur, FUEL_EXHAUSTED
        used += 1
        cur = subst1(head.body, head.x, args[-1])
        for a in reversed(args[:-1]):
            cur = App(cur, a)


def beta_conv(m: Term, n: Term, fuel: int) -> str:
    """yes/no by comparing normal forms up to alpha; unknown if fuel ran out."""
    nm, fm = normalize(m, fuel)
    nn, fn_ = normalize(n, fuel)
    if fm == FUEL_EXHAUSTED or fn_ == FUEL_EXHAUSTED:
        return UNKNOWN
    return YES if alpha_eq(nm, nn) else NO


@dataclass(frozen=True)
class ConvCertificate:
    """A conversion witness: consecutive chain elements are alpha-equal or
    one reduction step apart (either direction)."""

    chain: tuple[Term, ...]


def check_certificate(cert: ConvCertificate) -> bool:
    if not cert.chain:
        return False
    for p, q in zip(cert.chain, cert.chain[1:]):
        if alpha_eq(p, q):
            continue
        if q in reducts(p) or p in reducts(q):
            continue
        return False
    return True
