"""Name atoms, ordered name sets, fresh-name supplies, and spans.

A name is an opaque atom supporting only equality.  Atoms are allocated
from a monotone counter, so an atom fresh from a supply differs from every
atom that supply produced before.
"""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import NameClash


@dataclass(frozen=True, slots=True)
class Atom:
    """A generated name.  Identity is the integer tag; the label is cosmetic."""

    id: int
    label: str | None = field(default=None, compare=False)

    def __str__(self):
        return self.label or f"n{self.id}"

    def __repr__(self):
        return f"Atom({self.id}, {self.label!r})"


class NameSupply:
    """Thread-safe monotone source of fresh atoms.

    Concurrent evaluations that must not share atoms should use supplies
    with disjoint ``[start, stop)`` ranges.
    """

    def __init__(self, start=0, stop=None):
        self._counter = itertools.count(start)
        self._stop = stop
        self._lock = threading.Lock()

    def fresh(self, label=None) -> Atom:
        with self._lock:
            n = next(self._counter)
        if self._stop is not None and n >= self._stop:
            raise RuntimeError("name supply range exhausted")
        return Atom(n, label)


GLOBAL_SUPPLY = NameSupply()


def fresh_atom(label=None) -> Atom:
    return GLOBAL_SUPPLY.fresh(label)


class NameSet:
    """Duplicate-free sequence of names; iteration follows introduction order.

    Equality and hashing ignore order, as for mathematical sets.
    """

    __slots__ = ("_items", "_members")

    def __init__(self, names: Iterable = ()):
        items = []
        seen = set()
        for n in names:
            if n in seen:
                raise NameClash(f"duplicate name {n} in name set")
            seen.add(n)
            items.append(n)
        self._items = tuple(items)
        self._members = frozenset(seen)

    @classmethod
    def union_of(cls, *sets: Iterable) -> "NameSet":
        """Ordered union that tolerates overlap (first occurrence wins)."""
        out = []
        seen = set()
        for s in sets:
            for n in s:
                if n not in seen:
                    seen.add(n)
                    out.append(n)
        return cls(out)

    def __iter__(self) -> Iterator:
        return iter(self._items)

    def __len__(self):
        return len(self._items)

    def __contains__(self, n):
        return n in self._members

    def __getitem__(self, i):
        return self._items[i]

    def __eq__(self, other):
        if isinstance(other, NameSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return self._members == other
        return NotImplemented

    def __hash__(self):
        return hash(self._members)

    def __repr__(self):
        return "{" + ", ".join(str(n) for n in self._items) + "}"

    def as_frozenset(self) -> frozenset:
        return self._members

    def disjoint_union(self, other: Iterable) -> "NameSet":
        """The s ⊕ t of the calculus; raises NameClash on overlap."""
        other = list(other)
        clash = [n for n in other if n in self._members]
        if clash:
            raise NameClash(f"names {clash} already present in {self!r}")
        return NameSet(self._items + tuple(other))

    __add__ = disjoint_union

    def minus(self, other: Iterable) -> "NameSet":
        drop = set(other)
        return NameSet(n for n in self._items if n not in drop)

    def intersect(self, other: Iterable) -> "NameSet":
        keep = set(other)
        return NameSet(n for n in self._items if n in keep)

    def isdisjoint(self, other: Iterable) -> bool:
        return self._members.isdisjoint(other)

    def issubset(self, other: Iterable) -> bool:
        return self._members.issubset(other)


EMPTY = NameSet()


class Span:
    """A partial bijection between two name sets.

    Stored as a frozenset of (left, right) pairs; no name may occur twice on
    either side.
    """

    __slots__ = ("pairs", "_fwd", "_bwd")

    def __init__(self, pairs: Iterable = ()):
        pairs = frozenset(pairs)
        fwd, bwd = {}, {}
        for a, b in pairs:
            if a in fwd or b in bwd:
                raise ValueError(f"not a partial bijection: {a} or {b} repeated")
            fwd[a] = b
            bwd[b] = a
        self.pairs = pairs
        self._fwd = fwd
        self._bwd = bwd

    @classmethod
    def identity(cls, names: Iterable) -> "Span":
        return cls((n, n) for n in names)

    @property
    def domain(self) -> frozenset:
        return frozenset(self._fwd)

    @property
    def codomain(self) -> frozenset:
        return frozenset(self._bwd)

    def relates(self, a, b) -> bool:
        return self._fwd.get(a, _MISSING) == b

    def image(self, a):
        return self._fwd.get(a)

    def inverse(self) -> "Span":
        return Span((b, a) for a, b in self.pairs)

    def compose(self, other: "Span") -> "Span":
        """Relational composition: a (R;S) c iff a R b and b S c for some b."""
        return Span((a, other._fwd[b]) for a, b in self.pairs if b in other._fwd)

    def restrict(self, names: Iterable) -> "Span":
        keep = set(names)
        return Span((a, b) for a, b in self.pairs if a in keep)

    def extend(self, other: "Span") -> "Span":
        """Disjoint union R ⊕ R' of spans over disjoint names."""
        return Span(self.pairs | other.pairs)

    __add__ = extend

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs, key=lambda p: (_sort_key(p[0]), _sort_key(p[1]))))

    def __eq__(self, other):
        return isinstance(other, Span) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "Span{" + ", ".join(f"{a}↦{b}" for a, b in self) + "}"


_MISSING = object()


def _sort_key(n):
    return getattr(n, "id", 0)


def partial_bijections(left, right) -> Iterator[Span]:
    """Every partial bijection between two finite name collections, smallest first."""
    left = list(left)
    right = list(right)
    for k in range(min(len(left), len(right)) + 1):
        for dom in itertools.combinations(left, k):
            for cod in itertools.permutations(right, k):
                yield Span(zip(dom, cod))
