"""Shared generators for the suite: hypothesis strategies and seeded random
term/substitution builders used by the exhaustive and randomized sweeps."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from pts.oracle import naive_subst, to_debruijn
from pts.subst import Sub, chi_var
from pts.syntax import App, Const, Lam, Pi, Sort, Term, Var, VarT, fv

VARS3 = (Var("x0"), Var("x1"), Var("x2"))
VARS2 = (Var("x0"), Var("x1"))
SORT_STAR = Sort("*")
SORT_BOX = Sort("#")
SORTS2 = (SORT_STAR, SORT_BOX)
SORTS1 = (SORT_STAR,)


def term_strategy(variables=VARS3, sorts=SORTS2, max_leaves=8):
    atoms = st.sampled_from(
        [Const(s) for s in sorts] + [VarT(x) for x in variables]
    )
    binders = tuple(variables) + (chi_var(variables),)

    def extend(children):
        return st.one_of(
            st.builds(App, children, children),
            st.builds(Lam, st.sampled_from(binders), children, children),
            st.builds(Pi, st.sampled_from(binders), children, children),
        )

    return st.recursive(atoms, extend, max_leaves=max_leaves)


def random_term(rng: random.Random, size: int, variables=VARS3, sorts=SORTS2) -> Term:
    """A term with roughly `size` nodes (exact for odd sizes >= 1)."""
    if size <= 2:
        pool = [Const(s) for s in sorts] + [VarT(x) for x in variables]
        return pool[rng.randrange(len(pool))]
    left = rng.randrange(1, size - 1)
    a = random_term(rng, left, variables, sorts)
    b = random_term(rng, size - 1 - left, variables, sorts)
    kind = rng.randrange(3)
    if kind == 0:
        return App(a, b)
    binders = tuple(variables) + (chi_var(variables),)
    x = binders[rng.randrange(len(binders))]
    return Lam(x, a, b) if kind == 1 else Pi(x, a, b)


def random_sub(rng: random.Random, variables=VARS3, sorts=SORTS2,
               max_entries: int = 3, image_size: int = 3) -> Sub:
    entries = {}
    for x in rng.sample(list(variables), rng.randint(0, min(max_entries, len(variables)))):
        entries[x] = random_term(rng, rng.choice([1, 3, image_size]), variables, sorts)
    return Sub(entries)


def sub_bank(n: int = 20, variables=VARS3, sorts=SORTS1, seed: int = 7) -> list[Sub]:
    """A deterministic bank of substitutions, identity first."""
    rng = random.Random(seed)
    bank = [Sub({})]
    while len(bank) < n:
        bank.append(random_sub(rng, variables, sorts, max_entries=3, image_size=5))
    return bank


def alpha_variant(m: Term, rng: random.Random) -> Term:
    """An alpha-equal term with randomly renamed binders.

    Renaming goes through the classic capture-avoiding substitution so the
    rest of the structure is untouched; the result is asserted alpha-equal
    on the nameless oracle image.
    """
    fresh_pool = [Var(f"r{rng.randrange(50)}") for _ in range(3)]
    match m:
        case Const(_) | VarT(_):
            return m
        case App(fn, arg):
            return App(alpha_variant(fn, rng), alpha_variant(arg, rng))
        case Lam(x, ann, body) | Pi(x, ann, body):
            cons = Lam if isinstance(m, Lam) else Pi
            ann2 = alpha_variant(ann, rng)
            body2 = alpha_variant(body, rng)
            candidates = [y for y in fresh_pool if y == x or y not in fv(body2)]
            if candidates and rng.random() < 0.7:
                y = rng.choice(candidates)
                out = cons(y, ann2, naive_subst(body2, x, VarT(y)))
            else:
                out = cons(x, ann2, body2)
            assert to_debruijn(out) == to_debruijn(cons(x, ann2, body2))
            return out
    raise TypeError(m)
