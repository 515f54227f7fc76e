"""Pure type system instances, derivation checking, and type synthesis.

Two executable faces of the same rules:

* :func:`check_deriv` validates explicit finite derivation trees node by
  node against any instance; conversion steps are justified by certificates,
  so nothing here assumes conversion is decidable.
* :func:`infer` synthesizes a type syntax-directedly.  It needs the instance
  to be functional (axioms and rules are partial functions of their leading
  sorts) and uses fuel-bounded conversion, surfacing exhaustion as a
  distinct error.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .beta import FUEL_EXHAUSTED, NO, UNKNOWN, YES, ConvCertificate, beta_conv, check_certificate, whnf
from .subst import Sub, apply, chi_var, subst1
from .syntax import App, Const, Lam, Pi, Sort, Term, Var, VarList, VarT, delete, fv


# ---------------------------------------------------------------------------
# instances and contexts

@dataclass(frozen=True)
class PtsSpec:
    """A PTS instance: sorts, axiom pairs, rule triples."""

    sorts: frozenset[Sort]
    axioms: frozenset[tuple[Sort, Sort]]
    rules: frozenset[tuple[Sort, Sort, Sort]]

    def __post_init__(self) -> None:
        for pair in self.axioms:
            if any(s not in self.sorts for s in pair):
                raise ValueError(f"axiom mentions undeclared sort: {pair}")
        for triple in self.rules:
            if any(s not in self.sorts for s in triple):
                raise ValueError(f"rule mentions undeclared sort: {triple}")


STAR = Sort("*")
BOX = Sort("#")

CUBE_CORNERS = ("arrow", "two", "P", "omega", "omega_u", "P2", "P_omega", "C")

_CUBE_EXTRA_RULES: dict[str, tuple[tuple[Sort, Sort], ...]] = {
    "arrow": (),
    "two": ((BOX, STAR),),
    "P": ((STAR, BOX),),
    "omega_u": ((BOX, BOX),),
    "omega": ((BOX, STAR), (BOX, BOX)),
    "P2": ((BOX, STAR), (STAR, BOX)),
    "P_omega": ((BOX, BOX), (STAR, BOX)),
    "C": ((BOX, STAR), (BOX, BOX), (STAR, BOX)),
}


def lambda_cube(corner: str) -> PtsSpec:
    """The eight lambda-cube instances over sorts * and #."""
    if corner not in _CUBE_EXTRA_RULES:
        raise ValueError(f"unknown cube corner: {corner!r}")
    rules = {(STAR, STAR, STAR)}
    rules.update((s1, s2, s2) for s1, s2 in _CUBE_EXTRA_RULES[corner])
    return PtsSpec(
        sorts=frozenset({STAR, BOX}),
        axioms=frozenset({(STAR, BOX)}),
        rules=frozenset(rules),
    )


@dataclass(frozen=True)
class Ctx:
    """Ordered declarations, outermost first, innermost last."""

    decls: tuple[tuple[Var, Term], ...] = ()

    def dom(self) -> VarList:
        return tuple(x for x, _ in self.decls)

    def snoc(self, x: Var, a: Term) -> "Ctx":
        return Ctx(self.decls + ((x, a),))

    def lookup(self, x: Var) -> Optional[Term]:
        for y, a in reversed(self.decls):
            if y == x:
                return a
        return None


def ctx_apply(gamma: Ctx, sigma: Sub) -> Ctx:
    """Apply a substitution to every declared type; the domain is unchanged."""
    return Ctx(tuple((x, apply(a, sigma)) for x, a in gamma.decls))


# ---------------------------------------------------------------------------
# inference errors

class InferError(Exception):
    code = "inferError"


class NonFunctionalSpec(InferError):
    code = "nonFunctionalSpec"


class UnboundVariable(InferError):
    code = "unboundVariable"


class NotAPi(InferError):
    code = "notAPi"


class SortExpected(InferError):
    code = "sortExpected"


class RuleMissing(InferError):
    code = "ruleMissing"

    def __init__(self, s1: Sort, s2: Sort):
        super().__init__(f"ruleMissing({s1.name},{s2.name})")
        self.s1, self.s2 = s1, s2


class AxiomMissing(InferError):
    code = "axiomMissing"

    def __init__(self, s: Sort):
        super().__init__(f"axiomMissing({s.name})")
        self.s = s


class TypeMismatch(InferError):
    code = "typeMismatch"

    def __init__(self, expected: Term, got: Term):
        super().__init__(f"typeMismatch(expected={expected!r}, got={got!r})")
        self.expected, self.got = expected, got


class FuelExhausted(InferError):
    code = "fuelExhausted"


class IllFormedContext(InferError):
    code = "illFormedContext"


# ---------------------------------------------------------------------------
# derivations

@dataclass(frozen=True)
class NilNode:
    pass


@dataclass(frozen=True)
class ConsNode:
    ctx: Ctx
    x: Var
    ty: Term
    s: Sort
    sub_ok: "CtxDeriv"
    sub_ty: "Deriv"


CtxDeriv = Union[NilNode, ConsNode]


@dataclass(frozen=True)
class SortNode:
    ctx: Ctx
    s1: Sort
    s2: Sort
    sub_ok: CtxDeriv


@dataclass(frozen=True)
class VarNode:
    ctx: Ctx
    x: Var
    ty: Term
    sub_ok: CtxDeriv


@dataclass(frozen=True)
class ProdNode:
    """Pi-formation: concludes ctx |- Pi(x, dom, cod) : s3.

    y is the premise variable: sub_cod concludes under ctx, y:dom for the
    renamed codomain.
    """

    ctx: Ctx
    x: Var
    y: Var
    dom: Term
    cod: Term
    s1: Sort
    s2: Sort
    s3: Sort
    sub_dom: "Deriv"
    sub_cod: "Deriv"


@dataclass(frozen=True)
class AbsNode:
    """Abstraction: concludes ctx |- Lam(x, dom, body) : Pi(y, dom, cod)."""

    ctx: Ctx
    x: Var
    y: Var
    z: Var
    dom: Term
    body: Term
    cod: Term
    s1: Sort
    s2: Sort
    s3: Sort
    sub_dom: "Deriv"
    sub_cod: "Deriv"
    sub_body: "Deriv"


@dataclass(frozen=True)
class AppNode:
    """Application: concludes ctx |- App(fn, arg) : cod[x := arg].

    sub_inst, when present, is the extra premise typing the instantiated
    codomain at a sort; the checker accepts the node with or without it.
    """

    ctx: Ctx
    fn: Term
    arg: Term
    x: Var
    dom: Term
    cod: Term
    sub_fn: "Deriv"
    sub_arg: "Deriv"
    sub_inst: Optional["Deriv"] = None


@dataclass(frozen=True)
class ConvNode:
    ctx: Ctx
    subject: Term
    ty_from: Term
    ty_to: Term
    s: Sort
    sub_subject: "Deriv"
    cert: ConvCertificate
    sub_ty: "Deriv"


Deriv = Union[SortNode, VarNode, ProdNode, AbsNode, AppNode, ConvNode]


def ctx_conclusion(d: CtxDeriv) -> Ctx:
    match d:
        case NilNode():
            return Ctx(())
        case ConsNode(ctx, x, ty, _, _, _):
            return ctx.snoc(x, ty)
    raise TypeError(f"not a context derivation: {d!r}")


def conclusion(d: Deriv) -> tuple[Ctx, Term, Term]:
    """The judgment a derivation claims: (context, subject, type)."""
    match d:
        case SortNode(ctx, s1, s2, _):
            return ctx, Const(s1), Const(s2)
        case VarNode(ctx, x, ty, _):
            return ctx, VarT(x), ty
        case ProdNode():
            return d.ctx, Pi(d.x, d.dom, d.cod), Const(d.s3)
        case AbsNode():
            return d.ctx, Lam(d.x, d.dom, d.body), Pi(d.y, d.dom, d.cod)
        case AppNode():
            return d.ctx, App(d.fn, d.arg), subst1(d.cod, d.x, d.arg)
        case ConvNode():
            return d.ctx, d.subject, d.ty_to
    raise TypeError(f"not a derivation: {d!r}")


@dataclass(frozen=True)
class Verdict:
    ok: bool
    path: tuple[int, ...] = ()
    rule: str = ""
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


VALID = Verdict(True)


def _invalid(path: tuple[int, ...], rule: str, reason: str) -> Verdict:
    return Verdict(False, path, rule, reason)


def check_ctx(spec: PtsSpec, d: CtxDeriv) -> Verdict:
    return _check_ctx(spec, d, ())


def _check_ctx(spec: PtsSpec, d: CtxDeriv, path: tuple[int, ...]) -> Verdict:
    match d:
        case NilNode():
            return VALID
        case ConsNode(ctx, x, ty, s, sub_ok, sub_ty):
            v = _check_ctx(spec, sub_ok, path + (0,))
            if not v:
                return v
            if ctx_conclusion(sub_ok) != ctx:
                return _invalid(path, "cons", "context premise concludes a different context")
            if x in ctx.dom():
                return _invalid(path, "cons", f"{x.name} already declared")
            if s not in spec.sorts:
                return _invalid(path, "cons", f"{s.name} is not a sort of this instance")
            return _expect(spec, sub_ty, path, 1, "cons", ctx, ty, Const(s))
    return _invalid(path, "?", f"not a context derivation: {d!r}")


def _expect(
    spec: PtsSpec,
    sub: Deriv,
    path: tuple[int, ...],
    idx: int,
    rule: str,
    want_ctx: Ctx,
    want_subject: Term,
    want_type: Term,
) -> Verdict:
    v = _check(spec, sub, path + (idx,))
    if not v:
        return v
    got = conclusion(sub)
    if got != (want_ctx, want_subject, want_type):
        return _invalid(path, rule, f"premise {idx} concludes {got!r}, required "
                                    f"{(want_ctx, want_subject, want_type)!r}")
    return VALID


def check_deriv(spec: PtsSpec, d: Deriv) -> Verdict:
    """Validate every node locally; premise conclusions must match exactly."""
    return _check(spec, d, ())


def _check(spec: PtsSpec, d: Deriv, path: tuple[int, ...]) -> Verdict:
    match d:
        case SortNode(ctx, s1, s2, sub_ok):
            v = _check_ctx(spec, sub_ok, path + (0,))
            if not v:
                return v
            if ctx_conclusion(sub_ok) != ctx:
                return _invalid(path, "sort", "context premise concludes a different context")
            if (s1, s2) not in spec.axioms:
                return _invalid(path, "sort", f"axiom ({s1.name},{s2.name}) missing")
            return VALID

        case VarNode(ctx, x, ty, sub_ok):
            v = _check_ctx(spec, sub_ok, path + (0,))
            if not v:
                return v
            if ctx_conclusion(sub_ok) != ctx:
                return _invalid(path, "var", "context premise concludes a different context")
            if (x, ty) not in ctx.decls:
                return _invalid(path, "var", f"({x.name}, {ty!r}) not declared")
            return VALID

        case ProdNode():
            if (d.s1, d.s2, d.s3) not in spec.rules:
                return _invalid(path, "prod",
                                f"rule ({d.s1.name},{d.s2.name},{d.s3.name}) missing")
            if d.y in delete(fv(d.cod), d.x):
                return _invalid(path, "prod", f"{d.y.name} not fresh for the codomain")
            v = _expect(spec, d.sub_dom, path, 0, "prod", d.ctx, d.dom, Const(d.s1))
            if not v:
                return v
            return _expect(spec, d.sub_cod, path, 1, "prod",
                           d.ctx.snoc(d.y, d.dom),
                           subst1(d.cod, d.x, VarT(d.y)), Const(d.s2))

        case AbsNode():
            if (d.s1, d.s2, d.s3) not in spec.rules:
                return _invalid(path, "abs",
                                f"rule ({d.s1.name},{d.s2.name},{d.s3.name}) missing")
            if d.z in delete(fv(d.body), d.x):
                return _invalid(path, "abs", f"{d.z.name} not fresh for the body")
            if d.z in delete(fv(d.cod), d.y):
                return _invalid(path, "abs", f"{d.z.name} not fresh for the codomain")
            v = _expect(spec, d.sub_dom, path, 0, "abs", d.ctx, d.dom, Const(d.s1))
            if not v:
                return v
            inner = d.ctx.snoc(d.z, d.dom)
            cod_z = subst1(d.cod, d.y, VarT(d.z))
            v = _expect(spec, d.sub_cod, path, 1, "abs", inner, cod_z, Const(d.s2))
            if not v:
                return v
            return _expect(spec, d.sub_body, path, 2, "abs", inner,
                           subst1(d.body, d.x, VarT(d.z)), cod_z)

        case AppNode():
            v = _expect(spec, d.sub_fn, path, 0, "app", d.ctx, d.fn,
                        Pi(d.x, d.dom, d.cod))
            if not v:
                return v
            v = _expect(spec, d.sub_arg, path, 1, "app", d.ctx, d.arg, d.dom)
            if not v:
                return v
            if d.sub_inst is not None:
                v = _check(spec, d.sub_inst, path + (2,))
                if not v:
                    return v
                got_ctx, got_subject, got_type = conclusion(d.sub_inst)
                want_subject = subst1(d.cod, d.x, d.arg)
                if got_ctx != d.ctx or got_subject != want_subject:
                    return _invalid(path, "app",
                                    "instance premise types a different judgment")
                if not (isinstance(got_type, Const) and got_type.sort in spec.sorts):
                    return _invalid(path, "app",
                                    "instance premise must conclude a sort")
            return VALID

        case ConvNode():
            v = _expect(spec, d.sub_subject, path, 0, "conv",
                        d.ctx, d.subject, d.ty_from)
            if not v:
                return v
            if not check_certificate(d.cert):
                return _invalid(path, "conv", "broken conversion certificate")
            if d.cert.chain[0] != d.ty_from or d.cert.chain[-1] != d.ty_to:
                return _invalid(path, "conv",
                                "certificate does not relate the two types")
            if d.s not in spec.sorts:
                return _invalid(path, "conv", f"{d.s.name} is not a sort of this instance")
            return _expect(spec, d.sub_ty, path, 1, "conv", d.ctx, d.ty_to, Const(d.s))

    return _invalid(path, "?", f"not a derivation: {d!r}")


# ---------------------------------------------------------------------------
# type synthesis for functional instances

def _functional_maps(
    spec: PtsSpec,
) -> tuple[dict[Sort, Sort], dict[tuple[Sort, Sort], Sort]]:
    axioms: dict[Sort, Sort] = {}
    for s1, s2 in spec.axioms:
        if axioms.setdefault(s1, s2) != s2:
            raise NonFunctionalSpec(f"two axioms for {s1.name}")
    rules: dict[tuple[Sort, Sort], Sort] = {}
    for s1, s2, s3 in spec.rules:
        if rules.setdefault((s1, s2), s3) != s3:
            raise NonFunctionalSpec(f"two rules for ({s1.name},{s2.name})")
    return axioms, rules


class _Synth:
    """One inference run: spec tables, fuel, and the recursion."""

    def __init__(self, spec: PtsSpec, fuel: int):
        self.spec = spec
        self.fuel = fuel
        self.axioms, self.rules = _functional_maps(spec)

    def as_sort(self, ty: Term) -> Sort:
        w, flag = whnf(ty, self.fuel)
        if flag == FUEL_EXHAUSTED:
            raise FuelExhausted("while head-normalizing a type")
        if isinstance(w, Const) and w.sort in self.spec.sorts:
            return w.sort
        raise SortExpected(f"expected a sort, got {w!r}")

    def sort_of(self, ctx: Ctx, t: Term) -> Sort:
        return self.as_sort(self.infer(ctx, t))

    def check_ctx_wf(self, ctx: Ctx) -> None:
        seen: set[Var] = set()
        prefix = Ctx(())
        for x, a in ctx.decls:
            if x in seen:
                raise IllFormedContext(f"{x.name} declared twice")
            try:
                self.sort_of(prefix, a)
            except IllFormedContext:
                raise
            except InferError as e:
                raise IllFormedContext(
                    f"declared type of {x.name} is not well-sorted: {e}"
                ) from e
            seen.add(x)
            prefix = prefix.snoc(x, a)

    def infer(self, ctx: Ctx, m: Term) -> Term:
        match m:
            case Const(s):
                s2 = self.axioms.get(s)
                if s2 is None:
                    raise AxiomMissing(s)
                return Const(s2)

            case VarT(x):
                a = ctx.lookup(x)
                if a is None:
                    raise UnboundVariable(x.name)
                return a

            case Pi(x, ann, body):
                s1 = self.sort_of(ctx, ann)
                y = chi_var(ctx.dom() + fv(body))
                s2 = self.sort_of(ctx.snoc(y, ann), subst1(body, x, VarT(y)))
                s3 = self.rules.get((s1, s2))
                if s3 is None:
                    raise RuleMissing(s1, s2)
                return Const(s3)

            case Lam(x, ann, body):
                s1 = self.sort_of(ctx, ann)
                z = chi_var(ctx.dom() + fv(body) + fv(ann))
                inner = ctx.snoc(z, ann)
                body_ty = self.infer(inner, subst1(body, x, VarT(z)))
                s2 = self.sort_of(inner, body_ty)
                if (s1, s2) not in self.rules:
                    raise RuleMissing(s1, s2)
                return Pi(z, ann, body_ty)

            case App(fn, arg):
                fn_ty, flag = whnf(self.infer(ctx, fn), self.fuel)
                if flag == FUEL_EXHAUSTED:
                    raise FuelExhausted("while exposing a function type")
                if not isinstance(fn_ty, Pi):
                    raise NotAPi(f"applied term has type {fn_ty!r}")
                arg_ty = self.infer(ctx, arg)
                verdict = beta_conv(arg_ty, fn_ty.ann, self.fuel)
                if verdict == UNKNOWN:
                    raise FuelExhausted("while comparing argument types")
                if verdict == NO:
                    raise TypeMismatch(fn_ty.ann, arg_ty)
                return subst1(fn_ty.body, fn_ty.x, arg)

        raise TypeError(f"not a term: {m!r}")


def infer(spec: PtsSpec, ctx: Ctx, m: Term, fuel: int = 10000) -> Term:
    """Synthesize the type of m under ctx, or raise an InferError.

    The context is checked well-formed once, up front; extensions made
    during the run are well-formed by construction.
    """
    synth = _Synth(spec, fuel)
    synth.check_ctx_wf(ctx)
    return synth.infer(ctx, m)


def subst_wt(spec: PtsSpec, sigma: Sub, gamma: Ctx, delta: Ctx, fuel: int = 10000) -> Verdict:
    """Is sigma a well-typed substitution from gamma to delta?

    Every declared (x, A) must give delta |- sigma x : A . sigma, up to
    conversion of the inferred type.
    """
    for x, a in gamma.decls:
        try:
            got = infer(spec, delta, sigma(x), fuel)
        except InferError as e:
            return _invalid((), "subst_wt", f"image of {x.name}: {e.code}: {e}")
        verdict = beta_conv(got, apply(a, sigma), fuel)
        if verdict == UNKNOWN:
            return _invalid((), "subst_wt", f"image of {x.name}: fuelExhausted")
        if verdict == NO:
            return _invalid((), "subst_wt", f"image of {x.name} has the wrong type")
    return VALID
