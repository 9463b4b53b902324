"""Minimal-parenthesis pretty printer, inverse to `parser.parse`."""
from __future__ import annotations

from collections import Counter

from .syntax import (Ambient, App, BoolLit, Eq, Hole, If, Lam, NameLit, Nu,
                     Term, Var, idents, subterms)

# precedence levels: 0 full term, 1 application chain, 2 atom
_TERM, _APP, _ATOM = 0, 1, 2


def name_labels(t: Term, extra=()) -> dict:
    """Display string for every name atom in t.

    Labels are used as-is unless two atoms share one or a label collides with
    an identifier, in which case the atom id is appended.
    """
    atoms = []
    seen = set()
    for u in subterms(t):
        if isinstance(u, NameLit) and u.name not in seen:
            seen.add(u.name)
            atoms.append(u.name)
    for a in extra:
        if a not in seen:
            seen.add(a)
            atoms.append(a)
    base = {a: str(a) for a in atoms}
    counts = Counter(base.values())
    taken = idents(t)
    out = {}
    for a in atoms:
        lab = base[a]
        if counts[lab] > 1 or lab in taken:
            lab = f"{lab}_{getattr(a, 'id', '')}".rstrip("_")
        out[a] = lab
    return out


def pretty(t: Term, labels: dict | None = None) -> str:
    if labels is None:
        labels = name_labels(t)
    return _pp(t, _TERM, labels)


def _pp(t, level, labels):
    if isinstance(t, Var):
        return t.ident
    if isinstance(t, BoolLit):
        return "true" if t.value else "false"
    if isinstance(t, NameLit):
        return labels.get(t.name, str(t.name))
    if isinstance(t, Ambient):
        return t.label
    if isinstance(t, Hole):
        return "@"
    if isinstance(t, App):
        s = f"{_pp(t.fn, _APP, labels)} {_pp(t.arg, _ATOM, labels)}"
        return s if level <= _APP else f"({s})"
    if isinstance(t, Eq):
        s = f"{_pp(t.left, _ATOM if _is_app(t.left) else _APP, labels)} == " \
            f"{_pp(t.right, _ATOM if _is_app(t.right) else _APP, labels)}"
        return s if level == _TERM else f"({s})"
    if isinstance(t, Lam):
        s = f"\\{t.ident}:{t.annotation}. {_pp(t.body, _TERM, labels)}"
    elif isinstance(t, Nu):
        s = f"nu {t.ident}. {_pp(t.body, _TERM, labels)}"
    elif isinstance(t, If):
        s = (f"if {_pp(t.cond, _TERM, labels)} then {_pp(t.then, _TERM, labels)} "
             f"else {_pp(t.orelse, _TERM, labels)}")
    else:
        raise TypeError(f"not a term: {t!r}")
    return s if level == _TERM else f"({s})"


def _is_app(t):
    # operands of == are application chains; only binders and == need parentheses
    return not isinstance(t, (App, Var, BoolLit, NameLit, Ambient, Hole))
