"""Abstract syntax of the ν-calculus: types, terms, substitution, α-equality."""
from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass

from .names import NameSet, Span

# ---------------------------------------------------------------- types


class Type:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Ground(Type):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Arrow(Type):
    domain: Type
    codomain: Type

    def __str__(self):
        dom = f"({self.domain})" if isinstance(self.domain, Arrow) else str(self.domain)
        return f"{dom} -> {self.codomain}"


BOOL = Ground("B")
NAME = Ground("N")


def arrow(*types: Type) -> Type:
    """Right-nested arrow: arrow(N, N, B) is N -> N -> B."""
    out = types[-1]
    for t in reversed(types[:-1]):
        out = Arrow(t, out)
    return out


def is_ground(ty: Type) -> bool:
    return isinstance(ty, Ground)


def first_order(ty: Type) -> bool:
    """True for B, N and non-nested arrows τ₁ → … → τₙ with every τᵢ ground."""
    while isinstance(ty, Arrow):
        if not is_ground(ty.domain):
            return False
        ty = ty.codomain
    return True


# ---------------------------------------------------------------- terms


class Term:
    __slots__ = ()

    def __str__(self):
        from .printer import pretty
        return pretty(self)


@dataclass(frozen=True, slots=True, repr=False)
class Var(Term):
    ident: str

    def __repr__(self):
        return f"Var({self.ident!r})"


@dataclass(frozen=True, slots=True, repr=False)
class NameLit(Term):
    name: object  # Atom, or RandomName under the sampling semantics

    def __repr__(self):
        return f"NameLit({self.name})"


@dataclass(frozen=True, slots=True, repr=False)
class BoolLit(Term):
    value: bool

    def __repr__(self):
        return "True" if self.value else "False"


TRUE = BoolLit(True)
FALSE = BoolLit(False)


@dataclass(frozen=True, slots=True)
class Eq(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class If(Term):
    cond: Term
    then: Term
    orelse: Term


@dataclass(frozen=True, slots=True)
class Lam(Term):
    ident: str
    annotation: Type
    body: Term


@dataclass(frozen=True, slots=True)
class App(Term):
    fn: Term
    arg: Term


@dataclass(frozen=True, slots=True)
class Nu(Term):
    ident: str
    body: Term


@dataclass(frozen=True, slots=True)
class Ambient(Term):
    """A constant of type N -> B mapping a random name r to (r < threshold).

    Only meaningful under the sampling semantics.
    """

    label: str
    threshold: float


@dataclass(frozen=True, slots=True)
class Hole(Term):
    """The `@` placeholder of a program context."""


def is_value(t: Term) -> bool:
    return isinstance(t, (BoolLit, NameLit, Lam, Ambient))


# ---------------------------------------------------------------- identifiers

_ident_counter = itertools.count(1)
_ident_lock = threading.Lock()
_SUFFIX = re.compile(r"_\d+$")


def fresh_ident(base="x", avoid=()) -> str:
    """A new identifier `base_k`, k from a global counter, not in `avoid`."""
    base = _SUFFIX.sub("", base) or "x"
    while True:
        with _ident_lock:
            k = next(_ident_counter)
        cand = f"{base}_{k}"
        if cand not in avoid:
            return cand


# ---------------------------------------------------------------- traversals


def children(t: Term):
    if isinstance(t, Eq):
        return (t.left, t.right)
    if isinstance(t, If):
        return (t.cond, t.then, t.orelse)
    if isinstance(t, (Lam, Nu)):
        return (t.body,)
    if isinstance(t, App):
        return (t.fn, t.arg)
    return ()


def subterms(t: Term):
    """Pre-order, left-to-right traversal."""
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(children(u)))


def free_names(t: Term) -> NameSet:
    """Name atoms occurring in t, in first-occurrence order."""
    return NameSet.union_of(u.name for u in subterms(t) if isinstance(u, NameLit))


def free_vars(t: Term) -> set:
    if isinstance(t, Var):
        return {t.ident}
    if isinstance(t, (Lam, Nu)):
        return free_vars(t.body) - {t.ident}
    out = set()
    for c in children(t):
        out |= free_vars(c)
    return out


def idents(t: Term) -> set:
    """Every identifier, bound or free, occurring in t."""
    out = set()
    for u in subterms(t):
        if isinstance(u, Var):
            out.add(u.ident)
        elif isinstance(u, (Lam, Nu)):
            out.add(u.ident)
    return out


def size(t: Term) -> int:
    return sum(1 for _ in subterms(t))


def depth(t: Term) -> int:
    cs = children(t)
    return 1 + (max(depth(c) for c in cs) if cs else 0)


# ---------------------------------------------------------------- substitution


def substitute(body: Term, ident: str, v: Term) -> Term:
    """Capture-avoiding substitution body[v/ident].

    Values produced by evaluation are closed, so renaming only happens when
    v carries free variables (as in the normalizer's re-binding step).
    """
    fv = free_vars(v)
    return _subst(body, ident, v, fv)


def _subst(t, ident, v, fv):
    if isinstance(t, Var):
        return v if t.ident == ident else t
    if isinstance(t, (NameLit, BoolLit, Ambient, Hole)):
        return t
    if isinstance(t, Eq):
        return Eq(_subst(t.left, ident, v, fv), _subst(t.right, ident, v, fv))
    if isinstance(t, If):
        return If(_subst(t.cond, ident, v, fv), _subst(t.then, ident, v, fv),
                  _subst(t.orelse, ident, v, fv))
    if isinstance(t, App):
        return App(_subst(t.fn, ident, v, fv), _subst(t.arg, ident, v, fv))
    if isinstance(t, (Lam, Nu)):
        if t.ident == ident:
            return t
        binder, body = t.ident, t.body
        if binder in fv:
            new = fresh_ident(binder, fv | idents(body))
            body = _subst(body, binder, Var(new), {new})
            binder = new
        body = _subst(body, ident, v, fv)
        if isinstance(t, Lam):
            return Lam(binder, t.annotation, body)
        return Nu(binder, body)
    raise TypeError(f"not a term: {t!r}")


def replace_name(t: Term, name, replacement: Term) -> Term:
    """Replace every occurrence of a name atom; replacement should be closed or fresh."""
    if isinstance(t, NameLit):
        return replacement if t.name == name else t
    if isinstance(t, Eq):
        return Eq(replace_name(t.left, name, replacement), replace_name(t.right, name, replacement))
    if isinstance(t, If):
        return If(replace_name(t.cond, name, replacement), replace_name(t.then, name, replacement),
                  replace_name(t.orelse, name, replacement))
    if isinstance(t, App):
        return App(replace_name(t.fn, name, replacement), replace_name(t.arg, name, replacement))
    if isinstance(t, Lam):
        return Lam(t.ident, t.annotation, replace_name(t.body, name, replacement))
    if isinstance(t, Nu):
        return Nu(t.ident, replace_name(t.body, name, replacement))
    return t


def rename_names(t: Term, mapping: dict) -> Term:
    """Apply an injective renaming of name atoms."""
    if not mapping:
        return t
    if isinstance(t, NameLit):
        return NameLit(mapping.get(t.name, t.name))
    if isinstance(t, Eq):
        return Eq(rename_names(t.left, mapping), rename_names(t.right, mapping))
    if isinstance(t, If):
        return If(rename_names(t.cond, mapping), rename_names(t.then, mapping),
                  rename_names(t.orelse, mapping))
    if isinstance(t, App):
        return App(rename_names(t.fn, mapping), rename_names(t.arg, mapping))
    if isinstance(t, Lam):
        return Lam(t.ident, t.annotation, rename_names(t.body, mapping))
    if isinstance(t, Nu):
        return Nu(t.ident, rename_names(t.body, mapping))
    return t


def plug(context: Term, t: Term) -> Term:
    """Fill every hole of a context with t (no capture: t is closed)."""
    if isinstance(context, Hole):
        return t
    if isinstance(context, Eq):
        return Eq(plug(context.left, t), plug(context.right, t))
    if isinstance(context, If):
        return If(plug(context.cond, t), plug(context.then, t), plug(context.orelse, t))
    if isinstance(context, App):
        return App(plug(context.fn, t), plug(context.arg, t))
    if isinstance(context, Lam):
        return Lam(context.ident, context.annotation, plug(context.body, t))
    if isinstance(context, Nu):
        return Nu(context.ident, plug(context.body, t))
    return context


# ---------------------------------------------------------------- α-equality


def alpha_eq(a: Term, b: Term, name_bijection: Span | None = None) -> bool:
    """Equality up to renaming bound variables and renaming free names along a span.

    With no span, free names must coincide.
    """
    return _alpha(a, b, {}, {}, 0, name_bijection)


def _alpha(a, b, env_a, env_b, level, span):
    if type(a) is not type(b):
        return False
    if isinstance(a, Var):
        la, lb = env_a.get(a.ident), env_b.get(b.ident)
        if la is None and lb is None:
            return a.ident == b.ident
        return la == lb
    if isinstance(a, NameLit):
        if span is None:
            return a.name == b.name
        return span.relates(a.name, b.name)
    if isinstance(a, (BoolLit, Ambient, Hole)):
        return a == b
    if isinstance(a, (Lam, Nu)):
        if isinstance(a, Lam) and a.annotation != b.annotation:
            return False
        env_a = {**env_a, a.ident: level}
        env_b = {**env_b, b.ident: level}
        return _alpha(a.body, b.body, env_a, env_b, level + 1, span)
    return all(_alpha(x, y, env_a, env_b, level, span)
               for x, y in zip(children(a), children(b)))
