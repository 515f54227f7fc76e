"""Brute-force reference implementations used only to cross-check the kernel.

Everything here deliberately works differently from the main modules: a
nameless (locally nameless) representation for alpha questions, the classic
non-structural unary substitution that renames only under threat of capture,
and an index-shifting reducer.  Agreement between the two routes is the
evidence the test suite is built on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .subst import chi_var
from .syntax import (
    App,
    Const,
    Lam,
    Pi,
    Sort,
    Term,
    Var,
    VarT,
    concat,
    fv,
)

ORACLE_VERSION = 1


@dataclass(frozen=True)
class DbConst:
    sort: Sort


@dataclass(frozen=True)
class BoundIdx:
    k: int


@dataclass(frozen=True)
class FreeName:
    var: Var


@dataclass(frozen=True)
class DbLam:
    ann: "DbTerm"
    body: "DbTerm"


@dataclass(frozen=True)
class DbPi:
    ann: "DbTerm"
    body: "DbTerm"


@dataclass(frozen=True)
class DbApp:
    fn: "DbTerm"
    arg: "DbTerm"


DbTerm = Union[DbConst, BoundIdx, FreeName, DbLam, DbPi, DbApp]


def to_debruijn(m: Term, _env: tuple[Var, ...] = ()) -> DbTerm:
    """Locally nameless image: bound occurrences become indices (innermost 0)."""
    match m:
        case Const(s):
            return DbConst(s)
        case VarT(x):
            if x in _env:
                return BoundIdx(_env.index(x))
            return FreeName(x)
        case Lam(x, ann, body):
            return DbLam(to_debruijn(ann, _env), to_debruijn(body, (x,) + _env))
        case Pi(x, ann, body):
            return DbPi(to_debruijn(ann, _env), to_debruijn(body, (x,) + _env))
        case App(fn, arg):
            return DbApp(to_debruijn(fn, _env), to_debruijn(arg, _env))
    raise TypeError(f"not a term: {m!r}")


def naive_subst(m: Term, x: Var, n: Term) -> Term:
    """Classic unary substitution: rename a binder only when capture threatens.

    Non-structural in the capture case (recurses on a renamed body), which is
    exactly why the kernel does not use it.
    """
    match m:
        case Const(_):
            return m
        case VarT(y):
            return n if y == x else m
        case App(fn, arg):
            return App(naive_subst(fn, x, n), naive_subst(arg, x, n))
        case Lam(y, ann, body) | Pi(y, ann, body):
            cons = Lam if isinstance(m, Lam) else Pi
            ann2 = naive_subst(ann, x, n)
            if y == x or x not in fv(body):
                return cons(y, ann2, body)
            if y not in fv(n):
                return cons(y, ann2, naive_subst(body, x, n))
            z = chi_var(concat(fv(body), fv(n)))
            return cons(z, ann2, naive_subst(naive_subst(body, y, VarT(z)), x, n))
    raise TypeError(f"not a term: {m!r}")


def enum_terms(max_size: int, variables: Sequence[Var], sorts: Sequence[Sort]) -> Iterator[Term]:
    """All terms of node count <= max_size over the given atoms, once each.

    Binder positions additionally draw from one variable outside the
    alphabet, so vacuous and shadowing binders are covered even with a
    single free variable.
    """
    binders = list(variables) + [chi_var(tuple(variables))]
    by_size: list[list[Term]] = [[] for _ in range(max_size + 1)]
    if max_size >= 1:
        by_size[1] = [Const(s) for s in sorts] + [VarT(x) for x in variables]
        yield from by_size[1]
    for size in range(2, max_size + 1):
        bucket: list[Term] = []
        splits = [(a, size - 1 - a) for a in range(1, size - 1)]
        for a, b in splits:
            for fn in by_size[a]:
                for arg in by_size[b]:
                    bucket.append(App(fn, arg))
        for x in binders:
            for a, b in splits:
                for ann in by_size[a]:
                    for body in by_size[b]:
                        bucket.append(Lam(x, ann, body))
        for x in binders:
            for a, b in splits:
                for ann in by_size[a]:
                    for body in by_size[b]:
                        bucket.append(Pi(x, ann, body))
        by_size[size] = bucket
        yield from bucket


def _db_shift(t: DbTerm, d: int, cutoff: int = 0) -> DbTerm:
    match t:
        case DbConst(_) | FreeName(_):
            return t
        case BoundIdx(k):
            return BoundIdx(k + d) if k >= cutoff else t
        case DbLam(ann, body):
            return DbLam(_db_shift(ann, d, cutoff), _db_shift(body, d, cutoff + 1))
        case DbPi(ann, body):
            return DbPi(_db_shift(ann, d, cutoff), _db_shift(body, d, cutoff + 1))
        case DbApp(fn, arg):
            return DbApp(_db_shift(fn, d, cutoff), _db_shift(arg, d, cutoff))
    raise TypeError(f"not a de Bruijn term: {t!r}")


def _db_replace(t: DbTerm, j: int, s: DbTerm) -> DbTerm:
    match t:
        case DbConst(_) | FreeName(_):
            return t
        case BoundIdx(k):
            return s if k == j else t
        case DbLam(ann, body):
            return DbLam(_db_replace(ann, j, s), _db_replace(body, j + 1, _db_shift(s, 1)))
        case DbPi(ann, body):
            return DbPi(_db_replace(ann, j, s), _db_replace(body, j + 1, _db_shift(s, 1)))
        case DbApp(fn, arg):
            return DbApp(_db_replace(fn, j, s), _db_replace(arg, j, s))
    raise TypeError(f"not a de Bruijn term: {t!r}")


def _db_beta(body: DbTerm, arg: DbTerm) -> DbTerm:
    return _db_shift(_db_replace(body, 0, _db_shift(arg, 1)), -1)


def _db_reducts(t: DbTerm) -> list[DbTerm]:
    out: list[DbTerm] = []
    match t:
        case DbApp(fn, arg):
            if isinstance(fn, DbLam):
                out.append(_db_beta(fn.body, arg))
            out.extend(DbApp(f2, arg) for f2 in _db_reducts(fn))
            out.extend(DbApp(fn, a2) for a2 in _db_reducts(arg))
        case DbLam(ann, body):
            out.extend(DbLam(a2, body) for a2 in _db_reducts(ann))
            out.extend(DbLam(ann, b2) for b2 in _db_reducts(body))
        case DbPi(ann, body):
            out.extend(DbPi(a2, body) for a2 in _db_reducts(ann))
            out.extend(DbPi(ann, b2) for b2 in _db_reducts(body))
    return out


def oracle_reducts(m: Term) -> list[DbTerm]:
    """One-step successors of m, computed entirely on the nameless image."""
    return _db_reducts(to_debruijn(m))
