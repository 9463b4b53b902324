"""Big-step, substitution-based evaluator s ⊢ M ⇓ (s')V."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import FuelExhausted, Stuck
from .names import GLOBAL_SUPPLY, NameSet, Span
from .printer import pretty
from .syntax import (FALSE, TRUE, Ambient, App, BoolLit, Eq, If, Lam, NameLit,
                     Nu, Term, alpha_eq, free_names, is_value, substitute)

DEFAULT_FUEL = 10**6


@dataclass(frozen=True)
class EvalResult:
    generated: NameSet
    value: Term

    def __str__(self):
        return f"({', '.join(str(n) for n in self.generated)}){pretty(self.value)}"


class _Machine:
    __slots__ = ("fuel", "supply", "generated")

    def __init__(self, fuel, supply):
        self.fuel = fuel
        self.supply = supply
        self.generated = []

    def run(self, t: Term) -> Term:
        self.fuel -= 1
        if self.fuel < 0:
            raise FuelExhausted("evaluation exceeded its fuel budget")
        if is_value(t):
            return t
        if isinstance(t, Eq):
            a = self.run(t.left)
            b = self.run(t.right)
            if not (isinstance(a, NameLit) and isinstance(b, NameLit)):
                raise Stuck(f"comparing non-names in `{pretty(t)}`")
            return TRUE if a.name == b.name else FALSE
        if isinstance(t, If):
            c = self.run(t.cond)
            if not isinstance(c, BoolLit):
                raise Stuck(f"non-boolean condition in `{pretty(t)}`")
            return self.run(t.then if c.value else t.orelse)
        if isinstance(t, Nu):
            n = self.supply.fresh(t.ident)
            self.generated.append(n)
            return self.run(substitute(t.body, t.ident, NameLit(n)))
        if isinstance(t, App):
            f = self.run(t.fn)
            v = self.run(t.arg)
            if isinstance(f, Lam):
                return self.run(substitute(f.body, f.ident, v))
            if isinstance(f, Ambient):
                if not (isinstance(v, NameLit) and hasattr(v.name, "value")):
                    raise Stuck(f"{f.label} applied to a non-random name")
                return TRUE if v.name.value < f.threshold else FALSE
            raise Stuck(f"applying a non-function in `{pretty(t)}`")
        raise Stuck(f"cannot evaluate `{pretty(t)}`")


def evaluate(s, t: Term, fuel: int = DEFAULT_FUEL, supply=None) -> EvalResult:
    """Evaluate a closed term whose names lie in s.

    Fresh names come from `supply` (the global monotone supply by default), so
    generated names never clash with names in scope.
    """
    m = _Machine(fuel, supply or GLOBAL_SUPPLY)
    v = m.run(t)
    return EvalResult(NameSet(m.generated), v)


def results_match(r1: EvalResult, r2: EvalResult) -> bool:
    """True iff some bijection between the generated sets makes the values α-equal."""
    g1, g2 = list(r1.generated), list(r2.generated)
    if len(g1) != len(g2):
        return False
    fixed = free_names(r1.value).minus(g1)
    if fixed != free_names(r2.value).minus(g2):
        return False
    # A witnessing bijection must pair names by first occurrence in the values;
    # generated names absent from the values can be paired arbitrarily.
    gs1, gs2 = set(g1), set(g2)
    occ1 = [n for n in free_names(r1.value) if n in gs1]
    occ2 = [n for n in free_names(r2.value) if n in gs2]
    if len(occ1) != len(occ2):
        return False
    return alpha_eq(r1.value, r2.value, Span.identity(fixed) + Span(zip(occ1, occ2)))
