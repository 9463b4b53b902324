"""Syntax-directed typing judgment Γ ⊢ M : τ."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (NotAFunction, TypeMismatch, UnboundVariable,
                     UnknownName)
from .names import NameSet
from .printer import pretty
from .syntax import (BOOL, NAME, Ambient, App, Arrow, BoolLit, Eq, Hole, If,
                     Lam, NameLit, Nu, Term, Type, Var, first_order)


@dataclass(frozen=True)
class Context:
    """Typed identifiers plus the ambient names (all of type N)."""

    vars: dict = field(default_factory=dict)
    names: NameSet = field(default_factory=NameSet)
    hole: Type | None = None

    def bind(self, ident, ty) -> "Context":
        return Context({**self.vars, ident: ty}, self.names, self.hole)


def infer(ctx: Context | None, t: Term) -> Type:
    if ctx is None:
        ctx = Context()
    if isinstance(t, Var):
        try:
            return ctx.vars[t.ident]
        except KeyError:
            raise UnboundVariable(t.ident) from None
    if isinstance(t, BoolLit):
        return BOOL
    if isinstance(t, NameLit):
        if t.name not in ctx.names:
            raise UnknownName(t.name)
        return NAME
    if isinstance(t, Ambient):
        return Arrow(NAME, BOOL)
    if isinstance(t, Hole):
        if ctx.hole is None:
            raise UnboundVariable("@")
        return ctx.hole
    if isinstance(t, Eq):
        _expect(ctx, t.left, NAME)
        _expect(ctx, t.right, NAME)
        return BOOL
    if isinstance(t, If):
        _expect(ctx, t.cond, BOOL)
        ty = infer(ctx, t.then)
        _expect(ctx, t.orelse, ty)
        return ty
    if isinstance(t, Nu):
        return infer(ctx.bind(t.ident, NAME), t.body)
    if isinstance(t, Lam):
        return Arrow(t.annotation, infer(ctx.bind(t.ident, t.annotation), t.body))
    if isinstance(t, App):
        fty = infer(ctx, t.fn)
        if not isinstance(fty, Arrow):
            raise NotAFunction(fty, pretty(t))
        _expect(ctx, t.arg, fty.domain)
        return fty.codomain
    raise TypeError(f"not a term: {t!r}")


def _expect(ctx, t, ty):
    found = infer(ctx, t)
    if found != ty:
        raise TypeMismatch(ty, found, pretty(t))


def typecheck(t: Term, names=(), vars=None) -> Type:
    """Infer the type of t with the given ambient names and typed variables."""
    return infer(Context(dict(vars or {}), NameSet(names)), t)


__all__ = ["Context", "infer", "typecheck", "first_order"]
