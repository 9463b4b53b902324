"""A generated name that never escapes cannot be guessed.

`nu n. \\x:N. x == n` keeps n to itself, so no caller can ever make it return
true. The decider agrees with `\\x:N. false`, and so does sampling.
"""
from nucalc import (distinguish, equivalent, estimate, fresh_atom, normalize, parse,
                    parse_context)

hidden = parse(r"nu n. \x:N. x == n")
constant = parse(r"\x:N. false")

print("normal form:", normalize(hidden))
print("verdict:    ", equivalent(hidden, constant))

probe = parse_context(r"(\g:N->B. nu m. g m) @")
left, right, separated = distinguish(hidden, constant, probe, trials=2000, seed=1)
print(f"probing with a fresh name: {left.estimate} vs {right.estimate}, separated={separated}")

# Once the name is public the guess succeeds.
a = fresh_atom("a")
guess = parse(r"\x:N. x == a", {"a": a})
print("with a public:", equivalent(guess, constant, [a]))
print("sanity, two fresh names collide with probability",
      estimate(parse("nu m. nu n. m == n"), 10_000, seed=1).estimate)
