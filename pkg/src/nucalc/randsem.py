"""Sampling semantics: ν draws a name uniformly from [0, 1).

Names are 64-bit floats compared exactly.  Every trial gets its own
generator derived from (seed, stream, trial index), so reports are
reproducible and trials could run in any order.
"""
from __future__ import annotations

import json
import math
import zlib
from dataclasses import asdict, dataclass

import numpy as np

from .errors import HoleTypeMismatch, NuTypeError
from .evaluation import DEFAULT_FUEL, evaluate
from .names import NameSet
from .syntax import (BOOL, NAME, Ambient, Arrow, BoolLit, NameLit, Term,
                     free_names, plug, replace_name, substitute)
from .typecheck import typecheck


@dataclass(frozen=True, slots=True)
class RandomName:
    value: float

    def __str__(self):
        return f"r{self.value:.6f}"


@dataclass(frozen=True)
class AmbientPredicate:
    """The constant r ↦ (r < threshold) of type N -> B."""

    label: str
    threshold: float

    def __post_init__(self):
        if not 0.0 < self.threshold < 1.0:
            raise ValueError("threshold must lie strictly inside (0, 1)")

    @classmethod
    def parse(cls, spec: str) -> "AmbientPredicate":
        """Read `label:threshold`, e.g. `step:0.5`."""
        label, _, thr = spec.partition(":")
        if not label or not thr:
            raise ValueError(f"bad predicate {spec!r}; expected label:threshold")
        return cls(label, float(thr))

    def as_term(self) -> Ambient:
        return Ambient(self.label, self.threshold)


class RandomSupply:
    """Name supply drawing uniform floats from a numpy Generator."""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng
        self.drawn = []

    def fresh(self, label=None) -> RandomName:
        n = RandomName(float(self.rng.random()))
        self.drawn.append(n.value)
        return n


@dataclass(frozen=True)
class SampleReport:
    trials: int
    successes: int
    estimate: float
    std_error: float
    seed: int

    @classmethod
    def from_counts(cls, trials, successes, seed):
        p = successes / trials
        return cls(trials, successes, p, math.sqrt(p * (1 - p) / trials), seed)

    def to_json(self) -> str:
        return json.dumps(asdict(self))


def trial_rng(seed: int, trial: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(stream, trial)))


def bind_predicates(t: Term, predicates=()) -> Term:
    for p in predicates:
        t = substitute(t, p.label, p.as_term())
    return t


def bind_public(t: Term, seed: int) -> Term:
    """Replace the term's symbolic public names by fixed random names.

    Each value depends only on the seed and the name's label, so both sides of
    a distinguishing experiment see the same public names.
    """
    for n in list(free_names(t)):
        if isinstance(n, RandomName):
            continue
        key = zlib.crc32(str(n).encode())
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(2**31, key)))
        t = replace_name(t, n, NameLit(RandomName(float(rng.random()))))
    return t


def rand_eval(t: Term, rng: np.random.Generator, predicates=(), fuel=DEFAULT_FUEL) -> Term:
    """Run t once, drawing each fresh name from rng."""
    t = bind_predicates(t, predicates)
    return evaluate(None, t, fuel, RandomSupply(rng)).value


def check_boolean_program(t: Term, predicates=(), public=()) -> None:
    vars = {p.label: Arrow(NAME, BOOL) for p in predicates}
    ty = typecheck(t, NameSet(public) if public else free_names(t), vars)
    if ty != BOOL:
        raise NuTypeError(f"sampled programs must have type B, not {ty}")


def estimate(t: Term, trials: int, seed: int, predicates=(), *, stream=0,
             fuel=DEFAULT_FUEL) -> SampleReport:
    """Monte Carlo estimate of the probability that t evaluates to true."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    check_boolean_program(t, predicates)
    t = bind_public(bind_predicates(t, predicates), seed)
    hits = 0
    for i in range(trials):
        v = evaluate(None, t, fuel, RandomSupply(trial_rng(seed, i, stream))).value
        if not isinstance(v, BoolLit):
            raise NuTypeError("program did not produce a boolean")
        hits += v.value
    return SampleReport.from_counts(trials, hits, seed)


@dataclass(frozen=True)
class Distinction:
    left: SampleReport
    right: SampleReport
    separated: bool

    def __iter__(self):
        return iter((self.left, self.right, self.separated))


def separated(a: SampleReport, b: SampleReport, sigmas: float = 4.0) -> bool:
    return abs(a.estimate - b.estimate) > sigmas * (a.std_error + b.std_error)


def distinguish(m1: Term, m2: Term, context: Term, trials: int, seed: int,
                predicates=(), *, fuel=DEFAULT_FUEL) -> Distinction:
    """Estimate C[m1] and C[m2] on independent streams and test for a 4σ gap."""
    programs = []
    for m in (m1, m2):
        prog = plug(context, m)
        try:
            check_boolean_program(prog, predicates)
        except NuTypeError as e:
            raise HoleTypeMismatch(f"context does not close to a boolean program: {e}") from e
        programs.append(prog)
    r1 = estimate(programs[0], trials, seed, predicates, stream=1, fuel=fuel)
    r2 = estimate(programs[1], trials, seed, predicates, stream=2, fuel=fuel)
    return Distinction(r1, r2, separated(r1, r2))
