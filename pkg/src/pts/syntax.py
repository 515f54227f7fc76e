"""Named first-order syntax: variables, sorts, terms, free variables.

Terms are plain trees; ``==`` is syntactic identity, never alpha-equivalence
(that lives in :mod:`pts.alpha`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

_CANONICAL = re.compile(r"x(0|[1-9][0-9]*)\Z")


@dataclass(frozen=True)
class Var:
    """A variable name: letters/digits/underscore, not starting with a digit."""

    name: str

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True)
class Sort:
    """A sort constant; which sorts exist is a property of a PTS instance."""

    name: str

    def __repr__(self) -> str:
        return f"Sort({self.name!r})"


def decode(n: int) -> Var:
    """The canonical variable family: 0 -> x0, 1 -> x1, ..."""
    return Var(f"x{n}")


def encode(x: Var) -> int:
    """Inverse of decode on canonical names; any other name maps to 0.

    Only encode(decode(n)) == n is ever relied on, so collapsing
    non-canonical names to 0 is harmless (it just blocks index 0 when
    choosing fresh names near them).
    """
    m = _CANONICAL.match(x.name)
    return int(m.group(1)) if m else 0


@dataclass(frozen=True)
class Const:
    sort: Sort


@dataclass(frozen=True)
class VarT:
    var: Var


@dataclass(frozen=True)
class Lam:
    x: Var
    ann: "Term"
    body: "Term"


@dataclass(frozen=True)
class Pi:
    x: Var
    ann: "Term"
    body: "Term"


@dataclass(frozen=True)
class App:
    fn: "Term"
    arg: "Term"


Term = Union[Const, VarT, Lam, Pi, App]

VarList = tuple[Var, ...]


def delete(xs: Sequence[Var], y: Var) -> VarList:
    """Remove every occurrence of y."""
    return tuple(x for x in xs if x != y)


def concat(xs: Sequence[Var], ys: Sequence[Var]) -> VarList:
    return tuple(xs) + tuple(ys)


def member(x: Var, xs: Iterable[Var]) -> bool:
    return x in xs


_fv_cache: dict[Term, VarList] = {}


def fv(m: Term) -> VarList:
    """Free variables, in order, duplicates kept.

    Binders delete their variable from the body's list only; the annotation
    contributes first.
    """
    hit = _fv_cache.get(m)
    if hit is not None:
        return hit
    match m:
        case Const(_):
            out: VarList = ()
        case VarT(x):
            out = (x,)
        case Lam(x, ann, body) | Pi(x, ann, body):
            out = fv(ann) + delete(fv(body), x)
        case App(fn, arg):
            out = fv(fn) + fv(arg)
        case _:
            raise TypeError(f"not a term: {m!r}")
    _fv_cache[m] = out
    return out


def is_fresh(x: Var, m: Term) -> bool:
    return x not in fv(m)


def is_free(x: Var, m: Term) -> bool:
    return x in fv(m)


def term_size(m: Term) -> int:
    """Number of constructor nodes."""
    match m:
        case Const(_) | VarT(_):
            return 1
        case Lam(_, ann, body) | Pi(_, ann, body):
            return 1 + term_size(ann) + term_size(body)
        case App(fn, arg):
            return 1 + term_size(fn) + term_size(arg)
    raise TypeError(f"not a term: {m!r}")
