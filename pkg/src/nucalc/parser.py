"""Recursive-descent parser for the concrete ν-calculus grammar.

    type  := "B" | "N" | type "->" type | "(" type ")"
    term  := "\\" ident ":" type "." term
           | "nu" ident "." term
           | "if" term "then" term "else" term
           | app "==" app | app
    app   := atom atom*
    atom  := "true" | "false" | ident | "@" | "(" term ")"

`λ` and `ν` are accepted as synonyms of `\\` and `nu`; `--` starts a comment.
Binders are renamed apart as they are read, so every binder in the result
carries a distinct identifier.
"""
from __future__ import annotations

import re
from typing import Mapping

from .errors import ParseError
from .syntax import (BOOL, FALSE, NAME, TRUE, App, Arrow, Eq, Hole, If, Lam,
                     NameLit, Nu, Term, Type, Var)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+|--[^\n]*)
  | (?P<arrow>->)
  | (?P<eq>==)
  | (?P<lam>\\|λ)
  | (?P<nusym>ν)
  | (?P<punct>[:.()@])
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
""", re.VERBOSE)

KEYWORDS = {"true", "false", "nu", "if", "then", "else"}


class _Tok:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind, self.text, self.line, self.col = kind, text, line, col


def tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        s = m.group()
        col = pos - line_start + 1
        if kind == "ws":
            nl = s.count("\n")
            if nl:
                line += nl
                line_start = pos + s.rindex("\n") + 1
        else:
            if kind == "nusym":
                kind, s = "nu", "nu"
            elif kind == "ident" and s in KEYWORDS:
                kind = s
            elif kind in ("punct", "lam", "arrow", "eq"):
                kind = s if kind == "punct" else kind
            toks.append(_Tok(kind, s, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text, public, allow_hole):
        self.toks = tokenize(text)
        self.i = 0
        self.public = dict(public)
        self.allow_hole = allow_hole
        # Identifiers already taken: everything in the text plus public labels.
        self.used = {t.text for t in self.toks if t.kind == "ident"} | set(self.public)
        self.bound = set()
        self.scope: list[tuple[str, str]] = []

    @property
    def tok(self):
        return self.toks[self.i]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def advance(self):
        t = self.tok
        self.i += 1
        return t

    def expect(self, kind):
        if self.tok.kind != kind:
            shown = self.tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {shown!r}")
        return self.advance()

    # -- binders

    def bind(self, name):
        if name in self.bound or name in self.public:
            k = 1
            while f"{name}_{k}" in self.used:
                k += 1
            unique = f"{name}_{k}"
        else:
            unique = name
        self.used.add(unique)
        self.bound.add(unique)
        self.scope.append((name, unique))
        return unique

    def unbind(self):
        self.scope.pop()

    def lookup(self, name):
        for src, unique in reversed(self.scope):
            if src == name:
                return Var(unique)
        if name in self.public:
            return NameLit(self.public[name])
        return Var(name)

    # -- types

    def type(self) -> Type:
        dom = self.type_atom()
        if self.tok.kind == "arrow":
            self.advance()
            return Arrow(dom, self.type())
        return dom

    def type_atom(self) -> Type:
        tok = self.tok
        if tok.kind == "ident" and tok.text in ("B", "N"):
            self.advance()
            return BOOL if tok.text == "B" else NAME
        if tok.kind == "(":
            self.advance()
            ty = self.type()
            self.expect(")")
            return ty
        raise self.error(f"expected a type, found {tok.text or 'end of input'!r}")

    # -- terms

    def term(self) -> Term:
        kind = self.tok.kind
        if kind == "lam":
            self.advance()
            name = self.expect("ident").text
            self.expect(":")
            ty = self.type()
            self.expect(".")
            ident = self.bind(name)
            body = self.term()
            self.unbind()
            return Lam(ident, ty, body)
        if kind == "nu":
            self.advance()
            name = self.expect("ident").text
            self.expect(".")
            ident = self.bind(name)
            body = self.term()
            self.unbind()
            return Nu(ident, body)
        if kind == "if":
            self.advance()
            cond = self.term()
            self.expect("then")
            then = self.term()
            self.expect("else")
            return If(cond, then, self.term())
        left = self.app()
        if self.tok.kind == "eq":
            self.advance()
            right = self.app()
            if self.tok.kind == "eq":
                raise self.error("== is non-associative; add parentheses")
            return Eq(left, right)
        return left

    def app(self) -> Term:
        fn = self.atom()
        while self.tok.kind in ("true", "false", "ident", "(", "@"):
            fn = App(fn, self.atom())
        return fn

    def atom(self) -> Term:
        tok = self.tok
        if tok.kind == "true":
            self.advance()
            return TRUE
        if tok.kind == "false":
            self.advance()
            return FALSE
        if tok.kind == "ident":
            self.advance()
            return self.lookup(tok.text)
        if tok.kind == "@":
            if not self.allow_hole:
                raise self.error("hole `@` is only allowed in contexts")
            self.advance()
            return Hole()
        if tok.kind == "(":
            self.advance()
            t = self.term()
            self.expect(")")
            return t
        raise self.error(f"expected a term, found {tok.text or 'end of input'!r}")


def _public_map(public) -> dict:
    if public is None:
        return {}
    if isinstance(public, Mapping):
        return dict(public)
    return {str(a): a for a in public}


def parse(text: str, public=None, allow_hole=False) -> Term:
    """Parse a term.

    `public` maps free identifiers to name atoms (a mapping, or an iterable of
    labelled atoms); other free identifiers stay as variables.
    """
    p = _Parser(text, _public_map(public), allow_hole)
    t = p.term()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r} after end of term")
    return t


def parse_type(text: str) -> Type:
    p = _Parser(text, {}, False)
    ty = p.type()
    if p.tok.kind != "eof":
        raise p.error(f"unexpected {p.tok.text!r} after end of type")
    return ty


def parse_context(text: str, public=None) -> Term:
    """Parse a program context; `@` marks the hole."""
    return parse(text, public, allow_hole=True)
