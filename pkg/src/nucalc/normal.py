"""Normal forms for privacy and the first-order equivalence decision.

`normalize` eliminates private names by induction on a first-order type:

* ground values are kept;
* a value of type B → τ becomes λx. if x then |M[true/x]| else |M[false/x]|;
* a value of type N → τ becomes a ladder
  λx. if x == n₁ then |M[n₁/x]| else … else |M[x/x], s ⊕ {x}| over the
  public names nᵢ, the default branch treating x as a new public name;
* an expression evaluates to (w)V, keeps only the least set u ⊆ w of
  leaked names, and becomes ν u. |V, s ⊕ u|.

Two normal forms of equivalent terms agree up to renaming bound variables
and names.  The ν-prefix is commutative, so the order in which leaked names
are listed is not determined by the term; to get one representative per
renaming class every ordering of u is tried and the one whose rendering
(with outer names shown by position) is least is kept.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import NotSafe, TypeMismatch
from .evaluation import DEFAULT_FUEL, evaluate
from .logrel import DEFAULT_MAX_PRIV, Relation, leak
from .names import NameSet, Span, fresh_atom
from .printer import pretty
from .syntax import (BOOL, NAME, BoolLit, Eq, If, Lam, NameLit, Nu,
                     Term, Type, Var, first_order, fresh_ident, free_names,
                     idents, replace_name, substitute, children)
from .typecheck import typecheck
from . import errors


@dataclass(frozen=True)
class NormalTerm:
    """ν leaked. body, where body mentions only public and leaked names."""

    body: Term
    leaked: NameSet
    public: NameSet

    @property
    def term(self) -> Term:
        return bind_names(self.leaked, self.body)

    def __str__(self):
        return pretty(canonicalize(self))


def bind_names(names, body: Term) -> Term:
    """ν n₁. … ν nₖ. body, turning each name atom into a ν-bound variable."""
    for n in reversed(list(names)):
        ident = fresh_ident(getattr(n, "label", None) or "n", idents(body))
        body = Nu(ident, replace_name(body, n, Var(ident)))
    return body


class _Normalizer:
    def __init__(self, fuel, max_priv):
        self.fuel = fuel
        self.max_priv = max_priv
        self.rel = Relation(fuel)

    def expression(self, m: Term, s: tuple, ty: Type):
        """Returns (ordered leaked names, normalized value over s ⊕ leaked)."""
        r = evaluate(None, m, self.fuel)
        v = r.value
        priv = free_names(v).minus(s)
        u = leak(v, s, priv, ty, max_priv=self.max_priv, relation=self.rel)
        if not u.issubset(r.generated):
            raise NotSafe(f"`{pretty(m)}` leaks names {u} that were not generated by it")
        if len(u) < 2:
            return tuple(u), self.value(v, s + tuple(u), ty)
        best = None
        for order in itertools.permutations(u):
            body = self.value(v, s + order, ty)
            key = _render(bind_names(order, body), s)
            if best is None or key < best[0]:
                best = (key, order, body)
        return best[1], best[2]

    def value(self, v: Term, s: tuple, ty: Type) -> Term:
        if ty == BOOL:
            return v
        if ty == NAME:
            if v.name not in s:
                raise NotSafe(f"name {v.name} escapes without being public")
            return v
        if not isinstance(v, Lam):
            raise errors.Stuck(f"expected a function value, got `{pretty(v)}`")
        if ty.domain == BOOL:
            branches = [bind_names(*self.expression(substitute(v.body, v.ident, BoolLit(b)),
                                                    s, ty.codomain))
                        for b in (True, False)]
            x = fresh_ident(v.ident, set().union(*map(idents, branches)))
            return Lam(x, BOOL, If(Var(x), *branches))
        star = fresh_atom(v.ident)
        default = bind_names(*self.expression(substitute(v.body, v.ident, NameLit(star)),
                                              s + (star,), ty.codomain))
        x = fresh_ident(v.ident, idents(default))
        ladder = replace_name(default, star, Var(x))
        for n in reversed(s):
            branch = bind_names(*self.expression(substitute(v.body, v.ident, NameLit(n)),
                                                 s, ty.codomain))
            ladder = If(Eq(Var(x), NameLit(n)), branch, ladder)
        return Lam(x, NAME, ladder)


def normalize(t: Term, s=(), priv=None, ty: Type | None = None, *,
              fuel=DEFAULT_FUEL, max_priv=DEFAULT_MAX_PRIV) -> NormalTerm:
    """The privacy normal form |t, s|.

    `priv` defaults to the names of t outside s; `ty` is inferred when omitted.
    """
    s = NameSet(s)
    if priv is None:
        priv = free_names(t).minus(s)
    priv = NameSet(priv)
    if ty is None:
        ty = typecheck(t, s + priv)
    if not first_order(ty):
        raise errors.NotFirstOrder(ty)
    u, body = _Normalizer(fuel, max_priv).expression(t, tuple(s), ty)
    return NormalTerm(body, NameSet(u), s)


# ---------------------------------------------------------------- canonical form


def canonical_binders(t: Term) -> Term:
    """Rename λ-binders to v0, v1, … and ν-binders to l0, l1, … in pre-order."""
    counters = {"v": 0, "l": 0}

    def go(t, env):
        if isinstance(t, Var):
            return Var(env.get(t.ident, t.ident))
        if isinstance(t, (Lam, Nu)):
            kind = "v" if isinstance(t, Lam) else "l"
            new = f"{kind}{counters[kind]}"
            counters[kind] += 1
            body = go(t.body, {**env, t.ident: new})
            return Lam(new, t.annotation, body) if isinstance(t, Lam) else Nu(new, body)
        if isinstance(t, Eq):
            return Eq(go(t.left, env), go(t.right, env))
        if isinstance(t, If):
            return If(go(t.cond, env), go(t.then, env), go(t.orelse, env))
        if children(t):
            return type(t)(*(go(c, env) for c in children(t)))
        return t

    return go(t, {})


def canonicalize(nf: NormalTerm) -> Term:
    return canonical_binders(nf.term)


def canonical_text(nf: NormalTerm) -> str:
    return pretty(canonicalize(nf))


def _render(t: Term, s) -> str:
    labels = {n: f"s{i}" for i, n in enumerate(s)}
    return pretty(canonical_binders(t), labels)


# ---------------------------------------------------------------- verdicts


class VerdictKind(enum.Enum):
    EQUIVALENT = "Equivalent"
    INEQUIVALENT = "Inequivalent"
    NOT_FIRST_ORDER = "NotFirstOrder"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    reason: str | None = None

    @property
    def equivalent(self) -> bool:
        return self.kind is VerdictKind.EQUIVALENT

    def __str__(self):
        return self.kind.value if self.reason is None else f"{self.kind.value}: {self.reason}"


EQUIVALENT = Verdict(VerdictKind.EQUIVALENT)


def equivalent(m1: Term, m2: Term, s=(), ty: Type | None = None, *,
               fuel=DEFAULT_FUEL, max_priv=DEFAULT_MAX_PRIV) -> Verdict:
    """Decide m1 ≈_τ m2 over public names s by comparing canonical normal forms."""
    s = NameSet(s)
    t1 = typecheck(m1, s)
    t2 = typecheck(m2, s)
    if ty is None:
        ty = t1
    for found in (t1, t2):
        if found != ty:
            raise TypeMismatch(ty, found, "equivalence query")
    if not first_order(ty):
        return Verdict(VerdictKind.NOT_FIRST_ORDER, f"type {ty} is not first-order")
    c1 = canonicalize(normalize(m1, s, (), ty, fuel=fuel, max_priv=max_priv))
    c2 = canonicalize(normalize(m2, s, (), ty, fuel=fuel, max_priv=max_priv))
    if c1 == c2:
        return EQUIVALENT
    reason = Relation(fuel).explain(Span.identity(s), ty, m1, m2)
    if reason is None:
        reason = f"normal forms differ: {pretty(c1)}  vs  {pretty(c2)}"
    return Verdict(VerdictKind.INEQUIVALENT, reason)
