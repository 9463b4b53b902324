import itertools

from hypothesis import assume, given, settings

import pytest

from nucalc.errors import ExponentialBlowup, NotFirstOrder, NotSafe
from nucalc.evaluation import evaluate
from nucalc.logrel import Relation, leak, private, related, self_related
from nucalc.names import NameSet, Span, fresh_atom
from nucalc.oracle import brute_exp, brute_val
from nucalc.parser import parse, parse_type
from nucalc.syntax import NAME, NameLit, first_order, rename_names

from strategies import typed_pairs, typed_terms

N_B = parse_type("N -> B")
N_N = parse_type("N -> N")
SWAP = r"\x:N. if x == a then b else if x == b then a else x"


def test_guess_public_name_is_unrelated_to_false_under_empty_span(names):
    left = parse(r"\x:N. x == a", names)
    assert related(Span(), N_B, left, parse(r"\x:N. false"))


def test_transposition_not_self_related_with_one_public(names):
    t = parse(SWAP, names)
    assert not related(Span.identity([names["a"]]), N_N, t, t)


def test_paired_names(names):
    n = names["n"]
    assert related(Span.identity([n]), NAME, NameLit(n), NameLit(n))
    assert not related(Span(), NAME, NameLit(n), NameLit(n))


def test_non_first_order_rejected():
    with pytest.raises(NotFirstOrder):
        related(Span(), parse_type("(N -> B) -> B"), parse(r"\f:N->B. true"),
                parse(r"\f:N->B. true"))


@pytest.mark.parametrize("s,text,ty,expected", [
    ((), r"\x:N. x == a", "N -> B", True),
    ((), r"\x:N. if x == m then m else n", "N -> N", False),
    (("a",), "a", "N", True),
])
def test_self_related(names, s, text, ty, expected):
    pub = [names[k] for k in s]
    assert self_related(pub, parse(text, names), parse_type(ty)) is expected


@pytest.mark.parametrize("s,text,ty", [
    ((), r"\x:N. x == a", "N -> B"),
    ((), r"\x:N. if x == m then m else n", "N -> N"),
    (("a",), "a", "N"),
])
def test_self_related_matches_oracle(names, s, text, ty):
    pub = [names[k] for k in s]
    t = parse(text, names)
    assert self_related(pub, t, parse_type(ty)) == brute_exp(Span.identity(pub), parse_type(ty), t, t)


def test_leak_examples(names):
    a, b, m, n = (names[k] for k in "abmn")
    assert leak(parse(r"\x:N. x == a", names), (), [a], N_B) == NameSet()
    assert private(parse(r"\x:N. x == a", names), (), [a], N_B) == NameSet([a])
    assert leak(parse(SWAP, names), (), [a, b], N_N) == NameSet()
    call_twice = parse(r"\x:N. if x == m then n else m", names)
    assert leak(call_twice, (), [m, n], N_N) == NameSet([m, n])


def _safe(t, s, u, ty):
    return brute_exp(Span.identity(list(s) + list(u)), ty, t, t)


def test_call_twice_leak_by_subset_enumeration(names):
    m, n = names["m"], names["n"]
    t = parse(r"\x:N. if x == m then n else m", names)
    safe = [set(u) for k in range(3) for u in itertools.combinations([m, n], k)
            if _safe(t, (), u, N_N)]
    assert safe == [{m, n}]


def test_safe_subsets_not_upward_closed(names):
    a, b = names["a"], names["b"]
    t = parse(r"\x:N. if x == a then b else x", names)
    assert _safe(t, (), [], N_N)
    assert not _safe(t, (), [a], N_N)
    assert leak(t, (), [a, b], N_N) == NameSet()


def test_leak_errors(names):
    atoms = [fresh_atom() for _ in range(3)]
    big = parse(r"\x:N. if x == p then q else r", {"p": atoms[0], "q": atoms[1], "r": atoms[2]})
    with pytest.raises(ExponentialBlowup):
        leak(big, (), atoms, N_N, max_priv=2)
    # non-occurring private names do not count against the bound
    assert leak(parse(r"\x:N. x"), (), atoms, N_N, max_priv=0) == NameSet()


def test_not_safe_without_all_names():
    # a term mentioning a name in neither set cannot be self-related
    stray = fresh_atom("z")
    with pytest.raises(NotSafe):
        leak(NameLit(stray), (), (), NAME)


# -- properties

def _oracle_agrees(trace, fuel=10**6):
    for span, ty, v1, v2 in trace:
        if Relation(fuel).val(span, ty, v1, v2) != brute_val(span, ty, v1, v2, fuel):
            return False
    return True


@settings(max_examples=150, deadline=None)
@given(typed_pairs(max_depth=4))
def test_oracle_equivalence(pair):
    m1, m2, ty, public = pair
    trace = []
    rel = Relation(trace=trace)
    fast = rel.exp(Span.identity(public), ty, m1, m2)
    assert fast == brute_exp(Span.identity(public), ty, m1, m2)
    assert _oracle_agrees(trace)


@settings(max_examples=100, deadline=None)
@given(typed_pairs(max_depth=3), typed_terms(max_depth=3))
def test_transitivity(pair, third):
    m0, m1, ty, public = pair
    assume(third[1] == ty and len(third[2]) == len(public))
    # rename the third term's public names onto the pair's
    m2 = rename_names(third[0], dict(zip(third[2], public)))
    ident = Span.identity(public)
    if related(ident, ty, m0, m1) and related(ident, ty, m1, m2):
        assert related(ident.compose(ident), ty, m0, m2)


@settings(max_examples=100, deadline=None)
@given(typed_pairs(max_depth=3))
def test_transitivity_through_renaming(pair):
    m0, m1, ty, public = pair
    # S relates public names to a fresh copy of them
    copies = [fresh_atom(str(a)) for a in public]
    m2 = rename_names(m1, dict(zip(public, copies)))
    r, s = Span.identity(public), Span(zip(public, copies))
    assert related(s, ty, m1, m2)
    if related(r, ty, m0, m1):
        assert related(r.compose(s), ty, m0, m2)


@settings(max_examples=150, deadline=None)
@given(typed_terms(max_depth=4, types=tuple(t for t in map(parse_type, (
    "N -> B", "N -> N", "B -> N", "N -> N -> B", "B -> N -> N")))))
def test_leak_minimal_and_within_generated(sample):
    t, ty, public = sample
    assume(first_order(ty))
    r = evaluate(public, t)
    w = list(r.generated)
    u = leak(r.value, public, w, ty)
    assert set(u) <= set(w)
    assert self_related(list(public) + list(u), r.value, ty)
    for k in range(len(u)):
        for sub in itertools.combinations(u, k):
            assert not self_related(list(public) + list(sub), r.value, ty)
