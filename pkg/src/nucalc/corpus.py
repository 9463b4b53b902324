"""Bundled example pairs and distinguishing contexts.

Each context lists the public names it mentions; it applies to a pair when
its type matches and the pair declares those names.
"""
from __future__ import annotations

from dataclasses import dataclass

from .names import NameSet, fresh_atom
from .parser import parse, parse_context, parse_type
from .syntax import Term, Type


@dataclass(frozen=True)
class ExamplePair:
    label: str
    left: str
    right: str
    type: str
    equivalent: bool
    public: tuple = ()

    def load(self):
        """Parse both sides over shared public atoms: (left, right, type, public)."""
        atoms = {lab: fresh_atom(lab) for lab in self.public}
        return (parse(self.left, atoms), parse(self.right, atoms),
                parse_type(self.type), NameSet(atoms.values()), atoms)


@dataclass(frozen=True)
class Context:
    text: str
    type: str
    public: tuple = ()

    def applies_to(self, pair: ExamplePair) -> bool:
        return (parse_type(self.type) == parse_type(pair.type)
                and set(self.public) <= set(pair.public))

    def load(self, atoms) -> Term:
        return parse_context(self.text, atoms)


EXAMPLES = (
    ExamplePair("fresh names differ", "nu m. nu n. m == n", "false", "B", True),
    ExamplePair("a name equals itself", "nu n. n == n", "true", "B", True),
    ExamplePair("unused names vanish", "nu n. true", "true", "B", True),
    ExamplePair("lambda and nu do not commute", r"nu n. \x:B. n", r"\x:B. nu n. n",
                "B -> N", False),
    ExamplePair("privacy", r"nu n. \x:N. x == n", r"\x:N. false", "N -> B", True),
    ExamplePair("public names are guessable", r"\x:N. x == a", r"\x:N. false", "N -> B",
                False, ("a",)),
    ExamplePair("transposition", r"nu a. nu b. \x:N. if x == a then b else if x == b then a else x",
                r"\x:N. x", "N -> N", True),
    ExamplePair("call-twice, swapped", r"nu m. nu n. \x:N. if x == m then m else n",
                r"nu n. \x:N. n", "N -> N", True),
    ExamplePair("call-twice", r"nu m. nu n. \x:N. if x == m then n else m",
                r"nu n. \x:N. n", "N -> N", False),
    ExamplePair("shared versus per-call name", r"nu n. \x:N. n", r"\x:N. nu n. n",
                "N -> N", False),
    ExamplePair("nu prefixes commute", r"nu a. nu b. \y:B. if y then a else b",
                r"nu b. nu a. \y:B. if y then a else b", "B -> N", True),
    ExamplePair("public versus fresh name", "a", "nu n. n", "N", False, ("a",)),
    ExamplePair("fresh names are alike", "nu n. n", "nu m. (\\x:B. m) true", "N", True),
    ExamplePair("equality is symmetric", r"\x:N. \y:N. x == y", r"\x:N. \y:N. y == x",
                "N -> N -> B", True),
    ExamplePair("equality is not constant", r"\x:N. \y:N. x == y", r"\x:N. \y:N. false",
                "N -> N -> B", False),
)

CONTEXTS = (
    Context("@", "B"),
    Context("if @ then false else true", "B"),
    Context(r"(\x:N. x == x) @", "N"),
    Context(r"(\x:N. nu m. x == m) @", "N"),
    Context(r"(\x:N. x == a) @", "N", ("a",)),
    Context(r"(\f:B->N. (f true) == (f true)) @", "B -> N"),
    Context(r"(\f:B->N. (f true) == (f false)) @", "B -> N"),
    Context(r"(\f:B->N. nu m. (f true) == m) @", "B -> N"),
    Context(r"(\g:N->B. nu m. g m) @", "N -> B"),
    Context(r"(\g:N->B. g a) @", "N -> B", ("a",)),
    Context(r"(\g:N->N. nu m. (g m) == m) @", "N -> N"),
    Context(r"(\g:N->N. nu m. (g m) == (g m)) @", "N -> N"),
    Context(r"(\g:N->N. nu m. nu k. (g m) == (g k)) @", "N -> N"),
    Context(r"(\g:N->N. nu k. (g k) == (g (g k))) @", "N -> N"),
    Context(r"(\g:N->N. nu m. (g (g m)) == m) @", "N -> N"),
    Context(r"(\g:N->N->B. nu m. g m m) @", "N -> N -> B"),
    Context(r"(\g:N->N->B. nu m. nu k. g m k) @", "N -> N -> B"),
)


def contexts_for(pair: ExamplePair):
    return [c for c in CONTEXTS if c.applies_to(pair)]


def example(label: str) -> ExamplePair:
    for p in EXAMPLES:
        if p.label == label:
            return p
    raise KeyError(label)


def example_type(pair: ExamplePair) -> Type:
    return parse_type(pair.type)
