from hypothesis import given, settings

import pytest

from nucalc.errors import ParseError
from nucalc.names import Span
from nucalc.parser import parse, parse_context, parse_type
from nucalc.printer import pretty
from nucalc.syntax import (BOOL, FALSE, NAME, TRUE, App, Arrow, Eq, Hole, If, Lam,
                           NameLit, Nu, Var, alpha_eq, free_names, idents, plug,
                           subterms, substitute)
from nucalc.typecheck import typecheck

from strategies import typed_terms


# -- parse

def test_parse_privacy_left():
    assert parse(r"nu n. \x:N. x == n") == Nu("n", Lam("x", NAME, Eq(Var("x"), Var("n"))))


def test_parse_literal():
    assert parse("true") == TRUE


def test_parse_identity_application():
    assert parse(r"(\x:B. x) false") == App(Lam("x", BOOL, Var("x")), FALSE)


def test_parse_unicode_binders_and_comments():
    t = parse("-- comment\nν n. λx:N. x == n")
    assert t == parse(r"nu n. \x:N. x == n")


def test_free_identifier_becomes_name(names):
    a = names["a"]
    assert parse(r"\x:N. x == a", names) == Lam("x", NAME, Eq(Var("x"), NameLit(a)))


def test_binders_renamed_apart():
    t = parse(r"\x:N. \x:N. x")
    assert len(idents(t)) == 2
    assert alpha_eq(t, parse(r"\x:N. \y:N. y"))


def test_binder_shadowing_public_name_is_renamed(names):
    t = parse(r"\a:N. a", names)
    assert t.ident != "a"
    assert not free_names(t)


@pytest.mark.parametrize("text", ["", "nu . true", r"\x. x", "true ==", "(true", "a == b == c"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_location():
    with pytest.raises(ParseError) as e:
        parse("true\n  )")
    assert (e.value.line, e.value.column) == (2, 3)


def test_hole_only_in_contexts():
    with pytest.raises(ParseError):
        parse("@")
    assert parse_context("if @ then true else false") == If(Hole(), TRUE, FALSE)


def test_parse_type_right_associative():
    assert parse_type("N -> N -> B") == Arrow(NAME, Arrow(NAME, BOOL))
    assert parse_type("(N -> B) -> B") == Arrow(Arrow(NAME, BOOL), BOOL)


# -- pretty

def test_pretty_inverse_of_parse():
    assert pretty(Nu("n", Lam("x", NAME, Eq(Var("x"), Var("n"))))) == r"nu n. \x:N. x == n"
    assert pretty(TRUE) == "true"


def test_pretty_application_left_associative():
    f, x, y = Var("f"), Var("x"), Var("y")
    assert pretty(App(App(f, x), y)) == "f x y"
    assert pretty(App(f, App(x, y))) == "f (x y)"
    assert pretty(App(Lam("z", BOOL, Var("z")), TRUE)) == r"(\z:B. z) true"


def test_pretty_disambiguates_same_label():
    from nucalc.names import fresh_atom
    a1, a2 = fresh_atom("a"), fresh_atom("a")
    text = pretty(Eq(NameLit(a1), NameLit(a2)))
    left, right = text.split(" == ")
    assert left != right


# -- alpha equivalence

def test_alpha_bound_renaming():
    assert alpha_eq(parse(r"\x:N. x"), parse(r"\y:N. y"), Span())


def test_alpha_free_name_renaming(names):
    a, b = names["a"], names["b"]
    l = parse(r"\x:N. x == a", names)
    r = parse(r"\x:N. x == b", names)
    assert alpha_eq(l, r, Span([(a, b)]))
    assert not alpha_eq(l, r)


def test_alpha_distinct_privacy_sides(names):
    a = names["a"]
    assert not alpha_eq(parse(r"\x:N. x == a", names), parse(r"\x:N. false"), Span([(a, a)]))


def test_alpha_respects_binding_structure():
    assert not alpha_eq(parse(r"\x:N. \y:N. x"), parse(r"\x:N. \y:N. y"))
    assert alpha_eq(parse(r"nu m. nu n. m == n"), parse(r"nu a. nu b. a == b"))
    assert not alpha_eq(parse(r"nu m. nu n. m == n"), parse(r"nu a. nu b. b == a"))


# -- substitution and free names

def test_substitute_examples(names):
    m, n = NameLit(names["m"]), NameLit(names["n"])
    assert substitute(Eq(Var("x"), n), "x", m) == Eq(m, n)
    ident = parse(r"\y:N. y")
    assert substitute(ident, "x", TRUE) == ident
    t = If(Var("x"), Var("x"), FALSE)
    assert substitute(t, "x", TRUE) == If(TRUE, TRUE, FALSE)


def test_substitute_avoids_capture():
    # the value mentions y free; the binder must move out of its way
    t = Lam("y", NAME, Var("x"))
    out = substitute(t, "x", Var("y"))
    assert isinstance(out, Lam) and out.ident != "y" and out.body == Var("y")


def test_free_names_examples(names):
    a, m, n = names["a"], names["m"], names["n"]
    assert set(free_names(parse(r"\x:N. x == a", names))) == {a}
    assert not free_names(TRUE)
    assert set(free_names(parse("if x == m then n else m", names))) == {m, n}


def test_plug():
    ctx = parse_context(r"(\f:B->N. (f true) == (f true)) @")
    t = parse(r"\x:B. nu n. n")
    assert Hole() not in list(subterms(plug(ctx, t)))


# -- properties

@settings(max_examples=200, deadline=None)
@given(typed_terms(max_depth=5))
def test_round_trip(sample):
    t, _, public = sample
    labels = {str(a): a for a in public}
    assert alpha_eq(parse(pretty(t), labels), t, Span.identity(public))


@settings(max_examples=100, deadline=None)
@given(typed_terms(), typed_terms(), typed_terms())
def test_alpha_is_equivalence(x, y, z):
    ts = [x[0], y[0], z[0]]
    for a in ts:
        assert alpha_eq(a, a)
        for b in ts:
            assert alpha_eq(a, b) == alpha_eq(b, a)
            for c in ts:
                if alpha_eq(a, b) and alpha_eq(b, c):
                    assert alpha_eq(a, c)


@settings(max_examples=200, deadline=None)
@given(typed_terms())
def test_alpha_variant_of_self(sample):
    t, _, public = sample
    # reparsing freshens every binder
    labels = {str(a): a for a in public}
    assert alpha_eq(t, parse(pretty(t), labels), Span.identity(public))


@settings(max_examples=200, deadline=None)
@given(typed_terms(types=(Arrow(BOOL, BOOL), Arrow(NAME, BOOL), Arrow(BOOL, NAME),
                          Arrow(NAME, NAME), Arrow(NAME, Arrow(NAME, BOOL)))),
       typed_terms(types=(BOOL, NAME)))
def test_substitute_preserves_typing(fn, arg):
    (f, fty, fpub), (v, vty, _) = fn, arg
    if not isinstance(f, Lam):
        return
    from nucalc.evaluation import evaluate
    val = evaluate(None, v).value
    names = list(fpub) + [n for n in free_names(val) if n not in fpub]
    if vty != f.annotation:
        return
    assert typecheck(substitute(f.body, f.ident, val), names) == fty.codomain
