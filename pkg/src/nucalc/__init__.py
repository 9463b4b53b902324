"""A workbench for the ν-calculus: typing, evaluation, privacy normal forms,
first-order equivalence, and a Monte Carlo sampling semantics."""

__version__ = "0.1.0"

from .errors import NuError
from .evaluation import EvalResult, evaluate, results_match
from .logrel import leak, related, self_related
from .names import Atom, NameSet, Span, fresh_atom
from .normal import (NormalTerm, Verdict, VerdictKind, canonical_text,
                     canonicalize, equivalent, normalize)
from .parser import parse, parse_context, parse_type
from .printer import pretty
from .randsem import AmbientPredicate, SampleReport, distinguish, estimate, rand_eval
from .syntax import (BOOL, NAME, Arrow, alpha_eq, arrow, first_order,
                     free_names, substitute)
from .typecheck import infer, typecheck

__all__ = [
    "NuError", "EvalResult", "evaluate", "results_match", "leak", "related",
    "self_related", "Atom", "NameSet", "Span", "fresh_atom", "NormalTerm",
    "Verdict", "VerdictKind", "canonical_text", "canonicalize", "equivalent",
    "normalize", "parse", "parse_context", "parse_type", "pretty",
    "AmbientPredicate", "SampleReport", "distinguish", "estimate", "rand_eval",
    "BOOL", "NAME", "Arrow", "alpha_eq", "arrow", "first_order", "free_names",
    "substitute", "infer", "typecheck",
]
