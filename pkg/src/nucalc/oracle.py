"""Brute-force logical relation used to cross-check `nucalc.logrel`.

Function values are tested against every extension R' of the span by
partial bijections between two fresh atoms on each side, and every pair of
arguments drawn from the names in scope plus those fresh atoms (or both
booleans), keeping the pairs that R ⊕ R' relates.  Expressions search every
partial bijection between the full generated sets.  Nothing here relies on
the equivariance argument that licenses the finite test set.
"""
from __future__ import annotations

from .evaluation import DEFAULT_FUEL, evaluate
from .names import NameSet, Span, fresh_atom, partial_bijections
from .syntax import (BOOL, FALSE, NAME, TRUE, BoolLit, NameLit, Term, Type,
                     free_names, substitute)

FRESH_PER_SIDE = 2


def brute_exp(span: Span, ty: Type, m1: Term, m2: Term, fuel=DEFAULT_FUEL) -> bool:
    r1 = evaluate(None, m1, fuel)
    r2 = evaluate(None, m2, fuel)
    return any(brute_val(span + ext, ty, r1.value, r2.value, fuel)
               for ext in partial_bijections(r1.generated, r2.generated))


def brute_val(span: Span, ty: Type, v1: Term, v2: Term, fuel=DEFAULT_FUEL) -> bool:
    if ty == BOOL:
        return isinstance(v1, BoolLit) and v1 == v2
    if ty == NAME:
        return span.relates(v1.name, v2.name)
    fresh1 = [fresh_atom("f") for _ in range(FRESH_PER_SIDE)]
    fresh2 = [fresh_atom("g") for _ in range(FRESH_PER_SIDE)]
    scope1 = list(NameSet.union_of(free_names(v1), (a for a, _ in span))) + fresh1
    scope2 = list(NameSet.union_of(free_names(v2), (b for _, b in span))) + fresh2
    for ext in partial_bijections(fresh1, fresh2):
        big = span + ext
        if ty.domain == BOOL:
            pairs = [(a, b) for a in (TRUE, FALSE) for b in (TRUE, FALSE) if a == b]
        else:
            pairs = [(NameLit(a), NameLit(b)) for a in scope1 for b in scope2
                     if big.relates(a, b)]
        for a1, a2 in pairs:
            if not brute_exp(big, ty.codomain, substitute(v1.body, v1.ident, a1),
                             substitute(v2.body, v2.ident, a2), fuel):
                return False
    return True
