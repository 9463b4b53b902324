"""Stark's logical relation at first-order types, and leaked-name computation.

The relation R_τ between terms over name sets s₁, s₂ is indexed by a span
R : s₁ ⇌ s₂.  At ground types values are related when equal booleans or
span-paired names.  At function types the definition quantifies over every
extension R' of the span and every pair of related arguments; at
expressions it asks for some extension R' over the generated names that
relates the resulting values.

Deciding the function case
--------------------------
The universal quantifier is replaced by a finite test set:

* for a boolean argument, the pairs (true, true) and (false, false);
* for a name argument, every pair (n₁, n₂) already in the span, plus one
  pair (★, ★) where ★ is a globally fresh atom and the span is extended by
  {(★, ★)}.

Arguments must be related at N, so each is either a span pair or a pair from
the extension R'.  The relation is invariant under injective renamings of
names not occurring in the terms, and adding pairs of names that occur in
neither term does not change it; so every test with a fresh pair is a
renaming of the single ★ test, and extra unused pairs in R' are irrelevant.
The brute-force quantification in `nucalc.oracle` is kept as an independent
check on this reduction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ExponentialBlowup, NotFirstOrder, NotSafe
from .evaluation import DEFAULT_FUEL, evaluate
from .names import NameSet, Span, fresh_atom, partial_bijections
from .printer import name_labels, pretty
from .syntax import (BOOL, NAME, TRUE, FALSE, App, Arrow, BoolLit, Lam, NameLit,
                     Term, Type, first_order, free_names,
                     substitute)

DEFAULT_MAX_PRIV = 16


class Relation:
    """One decision session: a memo table plus evaluation settings.

    If `trace` is a list, every function-value subquery (span, type, V₁, V₂)
    is appended to it.
    """

    def __init__(self, fuel=DEFAULT_FUEL, trace=None):
        self.fuel = fuel
        self.trace = trace
        self._memo = {}

    # -- expressions

    def exp(self, span: Span, ty: Type, m1: Term, m2: Term) -> bool:
        key = (span, ty, m1, m2)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        r1 = evaluate(None, m1, self.fuel)
        r2 = evaluate(None, m2, self.fuel)
        ok = any(self.val(span + ext, ty, r1.value, r2.value)
                 for ext in self._extensions(ty, r1, r2))
        self._memo[key] = ok
        return ok

    def _extensions(self, ty, r1, r2):
        v1, v2 = r1.value, r2.value
        if ty == BOOL:
            return (Span(),)
        if ty == NAME:
            if v1.name in r1.generated and v2.name in r2.generated:
                return (Span([(v1.name, v2.name)]),)
            return (Span(),)
        # Generated names absent from a value cannot affect the relation.
        w1 = [n for n in r1.generated if n in free_names(v1)]
        w2 = [n for n in r2.generated if n in free_names(v2)]
        return partial_bijections(w1, w2)

    # -- values

    def val(self, span: Span, ty: Type, v1: Term, v2: Term) -> bool:
        if ty == BOOL:
            return isinstance(v1, BoolLit) and v1 == v2
        if ty == NAME:
            return span.relates(v1.name, v2.name)
        if self.trace is not None:
            self.trace.append((span, ty, v1, v2))
        return all(self.exp(sp, ty.codomain, a1, a2)
                   for _, sp, a1, a2 in _argument_tests(span, ty, v1, v2))

    # -- explanation

    def explain(self, span: Span, ty: Type, m1: Term, m2: Term, path=()) -> str | None:
        """Describe the first failing probe, or None when the terms are related."""
        if self.exp(span, ty, m1, m2):
            return None
        r1 = evaluate(None, m1, self.fuel)
        r2 = evaluate(None, m2, self.fuel)
        where = " then ".join(path) if path else "as given"
        labels = name_labels(App(r1.value, r2.value), list(r1.generated) + list(r2.generated))

        def show(r):
            gen = ", ".join(labels[n] for n in r.generated)
            return f"({gen}){pretty(r.value, labels)}"

        head = f"probe [{where}]: left evaluates to {show(r1)}, right evaluates to {show(r2)}"
        if not isinstance(ty, Arrow):
            return f"{head}; not related at {ty}"
        # Most permissive extensions first: a failure there is the informative one.
        exts = sorted(self._extensions(ty, r1, r2), key=len, reverse=True)
        span2 = span + exts[0]
        for label, sp, a1, a2 in _argument_tests(span2, ty, r1.value, r2.value):
            if not self.exp(sp, ty.codomain, a1, a2):
                return self.explain(sp, ty.codomain, a1, a2, path + (f"apply to {label}",))
        return f"{head}; no span over the generated names relates them at {ty}"


def _argument_tests(span, ty, v1, v2):
    """The finite set of argument probes for related function values."""
    if not (isinstance(v1, Lam) and isinstance(v2, Lam)):
        raise TypeError(f"expected function values, got {pretty(v1)} and {pretty(v2)}")
    if ty.domain == BOOL:
        for b in (TRUE, FALSE):
            yield (pretty(b), span, substitute(v1.body, v1.ident, b),
                   substitute(v2.body, v2.ident, b))
        return
    for a, b in span:
        yield (f"{a}/{b}", span, substitute(v1.body, v1.ident, NameLit(a)),
               substitute(v2.body, v2.ident, NameLit(b)))
    star = fresh_atom("fresh")
    arg = NameLit(star)
    yield ("a fresh name", span + Span([(star, star)]),
           substitute(v1.body, v1.ident, arg), substitute(v2.body, v2.ident, arg))


@dataclass(frozen=True)
class RelQuery:
    span: Span
    type: Type
    left: Term
    right: Term

    def decide(self, fuel=DEFAULT_FUEL) -> bool:
        return related(self.span, self.type, self.left, self.right, fuel=fuel)


def related(span: Span, ty: Type, left: Term, right: Term, *, fuel=DEFAULT_FUEL,
            relation: Relation | None = None) -> bool:
    """Decide left R_τ right for a first-order τ."""
    if not first_order(ty):
        raise NotFirstOrder(ty)
    rel = relation or Relation(fuel)
    return rel.exp(span, ty, left, right)


def self_related(s, t: Term, ty: Type, *, fuel=DEFAULT_FUEL,
                 relation: Relation | None = None) -> bool:
    """M (id_s)_τ M: t leaks nothing beyond s."""
    return related(Span.identity(s), ty, t, t, fuel=fuel, relation=relation)


def leak(t: Term, s, priv, ty: Type, *, max_priv=DEFAULT_MAX_PRIV, fuel=DEFAULT_FUEL,
         relation: Relation | None = None) -> NameSet:
    """Least u ⊆ priv with t (id_{s⊕u}) t.

    Subsets are tried by increasing size; safe subsets are closed under
    intersection, so the first success is the least one.  Private names that
    do not occur in t can never be needed and are skipped.
    """
    if not first_order(ty):
        raise NotFirstOrder(ty)
    s = NameSet(s)
    occurring = free_names(t)
    cands = [n for n in priv if n in occurring and n not in s]
    if len(cands) > max_priv:
        raise ExponentialBlowup(f"{len(cands)} private names exceed the bound {max_priv}")
    rel = relation or Relation(fuel)
    for k in range(len(cands) + 1):
        for u in itertools.combinations(cands, k):
            if rel.exp(Span.identity(s + u), ty, t, t):
                return NameSet(u)
    raise NotSafe(f"`{pretty(t)}` is not self-related even with every name public")


def private(t: Term, s, priv, ty: Type, **kw) -> NameSet:
    """priv minus the leaked names."""
    return NameSet(priv).minus(leak(t, s, priv, ty, **kw))
