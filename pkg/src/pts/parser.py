r"""Concrete syntax: parse and print terms, contexts, and instance files.

Grammar (whitespace insignificant between tokens)::

    term  := lam | pi | app
    lam   := "\" "(" ident ":" term ")" "->" term
    pi    := "Pi" "(" ident ":" term ")" "->" term
    app   := atom { atom }              -- left-associative
    atom  := ident | sort | "(" term ")"
    sort  := "*" | "#" | "'" ident      -- user sorts are quoted
    ident := [A-Za-z_][A-Za-z0-9_]*, excluding the keyword "Pi"

Application binds tighter than the "->" bodies, which extend maximally to
the right.  Printing is exact: names are preserved and reparsing yields the
identical term.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .syntax import App, Const, Lam, Pi, Sort, Term, Var, VarT
from .typecheck import Ctx, PtsSpec


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(Exception):
    def __init__(self, message: str, span: SourceSpan, expected: frozenset[str] = frozenset()):
        at = f" at {span.start}..{span.end}"
        hint = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(message + at + hint)
        self.span = span
        self.expected = expected


class UndeclaredSort(ParseError):
    pass


_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PUNCT = {"->": "ARROW", "\\": "LAM", "(": "LPAREN", ")": "RPAREN",
          ":": "COLON", ",": "COMMA", "*": "STAR", "#": "HASH"}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    span: SourceSpan


def _lex(src: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i, n = 0, len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if src.startswith("->", i):
            toks.append(_Tok("ARROW", "->", SourceSpan(i, i + 2)))
            i += 2
            continue
        if c in _PUNCT:
            toks.append(_Tok(_PUNCT[c], c, SourceSpan(i, i + 1)))
            i += 1
            continue
        if c == "'":
            m = _IDENT.match(src, i + 1)
            if not m:
                raise ParseError("bad sort name after quote", SourceSpan(i, i + 1),
                                 frozenset({"ident"}))
            toks.append(_Tok("USORT", m.group(0), SourceSpan(i, m.end())))
            i = m.end()
            continue
        m = _IDENT.match(src, i)
        if m:
            text = m.group(0)
            kind = "PI" if text == "Pi" else "IDENT"
            toks.append(_Tok(kind, text, SourceSpan(i, m.end())))
            i = m.end()
            continue
        raise ParseError(f"unexpected character {c!r}", SourceSpan(i, i + 1))
    toks.append(_Tok("EOF", "", SourceSpan(n, n)))
    return toks


@dataclass
class _P:
    toks: list[_Tok]
    pos: int = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self, kind: str) -> _Tok:
        t = self.toks[self.pos]
        if t.kind != kind:
            raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.span,
                             frozenset({kind}))
        self.pos += 1
        return t

    def term(self) -> Term:
        t = self.peek()
        if t.kind == "LAM":
            return self.binder(Lam, "LAM")
        if t.kind == "PI":
            return self.binder(Pi, "PI")
        return self.app()

    def binder(self, cons, opener: str) -> Term:
        self.take(opener)
        self.take("LPAREN")
        x = Var(self.take("IDENT").text)
        self.take("COLON")
        ann = self.term()
        self.take("RPAREN")
        self.take("ARROW")
        body = self.term()
        return cons(x, ann, body)

    def app(self) -> Term:
        t = self.atom()
        while self.peek().kind in ("IDENT", "STAR", "HASH", "USORT", "LPAREN"):
            t = App(t, self.atom())
        return t

    def atom(self) -> Term:
        t = self.peek()
        if t.kind == "IDENT":
            self.pos += 1
            return VarT(Var(t.text))
        if t.kind == "STAR":
            self.pos += 1
            return Const(Sort("*"))
        if t.kind == "HASH":
            self.pos += 1
            return Const(Sort("#"))
        if t.kind == "USORT":
            self.pos += 1
            return Const(Sort(t.text))
        if t.kind == "LPAREN":
            self.pos += 1
            inner = self.term()
            self.take("RPAREN")
            return inner
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.span,
                         frozenset({"ident", "sort", "("}))


def parse_term(src: str) -> Term:
    p = _P(_lex(src))
    t = p.term()
    p.take("EOF")
    return t


def parse_ctx(src: str) -> Ctx:
    """Comma-separated ``ident : term`` declarations, outermost first."""
    toks = _lex(src)
    if toks[0].kind == "EOF":
        return Ctx(())
    p = _P(toks)
    decls: list[tuple[Var, Term]] = []
    while True:
        x = Var(p.take("IDENT").text)
        p.take("COLON")
        decls.append((x, p.term()))
        if p.peek().kind == "EOF":
            break
        p.take("COMMA")
    return Ctx(tuple(decls))


def _print_sort(s: Sort) -> str:
    if s.name in ("*", "#"):
        return s.name
    return f"'{s.name}"


def print_term(m: Term) -> str:
    """Canonical rendering with minimal parentheses.

    A variable actually named "Pi" would collide with the keyword and not
    round-trip; nothing here constructs such a name.
    """
    match m:
        case Const(s):
            return _print_sort(s)
        case VarT(x):
            return x.name
        case Lam(x, ann, body):
            return f"\\({x.name} : {print_term(ann)}) -> {print_term(body)}"
        case Pi(x, ann, body):
            return f"Pi ({x.name} : {print_term(ann)}) -> {print_term(body)}"
        case App(fn, arg):
            left = print_term(fn) if isinstance(fn, App) else _atomic(fn)
            return f"{left} {_atomic(arg)}"
    raise TypeError(f"not a term: {m!r}")


def _atomic(m: Term) -> str:
    s = print_term(m)
    return s if isinstance(m, (Const, VarT)) else f"({s})"


def print_ctx(gamma: Ctx) -> str:
    return ", ".join(f"{x.name} : {print_term(a)}" for x, a in gamma.decls)


def parse_spec(src: str) -> PtsSpec:
    """Line-oriented instance files: ``sort s`` / ``axiom s1 s2`` / ``rule s1 s2 s3``.

    A line whose first non-blank character is ``#`` is a comment (``#`` is
    also the box sort's name, so only leading ``#`` comments are possible).
    """
    sorts: list[Sort] = []
    axioms: list[tuple[Sort, Sort]] = []
    rules: list[tuple[Sort, Sort, Sort]] = []
    offset = 0
    for lineno, line in enumerate(src.splitlines(), start=1):
        span = SourceSpan(offset, offset + len(line))
        offset += len(line) + 1
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words = stripped.split()
        directive, args = words[0], words[1:]
        if directive == "sort" and len(args) == 1:
            sorts.append(Sort(args[0]))
        elif directive == "axiom" and len(args) == 2:
            axioms.append((Sort(args[0]), Sort(args[1])))
        elif directive == "rule" and len(args) == 3:
            rules.append((Sort(args[0]), Sort(args[1]), Sort(args[2])))
        else:
            raise ParseError(f"line {lineno}: bad directive {stripped!r}", span,
                             frozenset({"sort", "axiom", "rule"}))
    if not sorts:
        raise ParseError("no sorts declared", SourceSpan(0, len(src)))
    declared = set(sorts)
    for pair in axioms:
        for s in pair:
            if s not in declared:
                raise UndeclaredSort(f"axiom mentions undeclared sort {s.name!r}",
                                     SourceSpan(0, len(src)))
    for triple in rules:
        for s in triple:
            if s not in declared:
                raise UndeclaredSort(f"rule mentions undeclared sort {s.name!r}",
                                     SourceSpan(0, len(src)))
    return PtsSpec(frozenset(sorts), frozenset(axioms), frozenset(rules))
