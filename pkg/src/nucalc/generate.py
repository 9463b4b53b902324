"""Random well-typed first-order terms, for property tests and corpora.

`depth` bounds the nesting of compound constructs (if, ==, ν, λ,
application); once it runs out the generator emits the smallest term of the
requested type, which may still need a λ or a ν around a leaf.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .names import NameSet, fresh_atom
from .syntax import (BOOL, FALSE, NAME, TRUE, App, Arrow, Eq, If, Lam,
                     NameLit, Nu, Term, Type, Var, arrow)

FIRST_ORDER_TYPES = (
    BOOL, NAME,
    arrow(BOOL, BOOL), arrow(NAME, BOOL), arrow(BOOL, NAME), arrow(NAME, NAME),
    arrow(NAME, NAME, BOOL), arrow(BOOL, NAME, NAME),
)


class TermGenerator:
    def __init__(self, rng: random.Random, public=()):
        self.rng = rng
        self.public = list(public)
        self._k = 0

    def _ident(self, base):
        self._k += 1
        return f"{base}{self._k}"

    def term(self, ty: Type, depth: int = 4, nus: int = 0) -> Term:
        """A term of type ty; `nus` leading ν-binders count against the depth."""
        nus = min(nus, depth)
        binders = [self._ident("k") for _ in range(nus)]
        t = self._gen(ty, [(Var(k), NAME) for k in binders], depth - nus)
        for k in reversed(binders):
            t = Nu(k, t)
        return t

    def _gen(self, ty, env, d):
        if d <= 0:
            return self._leaf(ty, env)
        options = ["leaf", "if", "nu", "app"]
        if ty == BOOL:
            options += ["eq", "eq"]
        if isinstance(ty, Arrow):
            options += ["lam", "lam", "lam"]
        pick = self.rng.choice(options)
        if pick == "leaf":
            return self._leaf(ty, env)
        if pick == "if":
            return If(self._gen(BOOL, env, d - 1), self._gen(ty, env, d - 1),
                      self._gen(ty, env, d - 1))
        if pick == "eq":
            return Eq(self._gen(NAME, env, d - 1), self._gen(NAME, env, d - 1))
        if pick == "nu":
            k = self._ident("k")
            return Nu(k, self._gen(ty, env + [(Var(k), NAME)], d - 1))
        if pick == "app":
            dom = self.rng.choice((BOOL, NAME))
            return App(self._gen(Arrow(dom, ty), env, d - 1), self._gen(dom, env, d - 1))
        x = self._ident("x")
        return Lam(x, ty.domain, self._gen(ty.codomain, env + [(Var(x), ty.domain)], d - 1))

    def _leaf(self, ty, env):
        if isinstance(ty, Arrow):
            x = self._ident("x")
            return Lam(x, ty.domain, self._leaf(ty.codomain, env + [(Var(x), ty.domain)]))
        pool = [t for t, t_ty in env if t_ty == ty]
        if ty == BOOL:
            pool += [TRUE, FALSE]
        else:
            pool += [NameLit(a) for a in self.public]
        if not pool:
            k = self._ident("k")
            return Nu(k, Var(k))
        return self.rng.choice(pool)


@dataclass
class CorpusEntry:
    term: Term
    type: Type
    public: NameSet


def make_public(count: int):
    return [fresh_atom(lab) for lab in "abcdefgh"[:count]]


def corpus(seed: int, size: int, depth: int = 4, max_public: int = 2,
           types=FIRST_ORDER_TYPES) -> list[CorpusEntry]:
    """`size` random terms, spread over the first-order types and 0..max_public
    public names; entries sharing (type, public) are comparable."""
    rng = random.Random(seed)
    publics = [NameSet(make_public(k)) for k in range(max_public + 1)]
    out = []
    for i in range(size):
        ty = types[i % len(types)]
        s = publics[(i // len(types)) % len(publics)]
        gen = TermGenerator(rng, s)
        nus = rng.choice((0, 0, 1, 2)) if isinstance(ty, Arrow) else 0
        out.append(CorpusEntry(gen.term(ty, depth, nus), ty, s))
    return out
