"""Beyond first order the decider refuses; sampling still tells programs apart.

The program hands two private names to an argument f and asks whether f
treats them alike. Against the threshold predicate r < 0.5 it answers true
about half the time, while the constant program always answers true.
"""
from nucalc import AmbientPredicate, equivalent, estimate, parse

program = r"nu a. nu b. \f:N->B. if f a then f b else (if f b then false else true)"
constant = r"\f:N->B. true"
print(equivalent(parse(program), parse(constant)))

step = AmbientPredicate.parse("step:0.5")
for label, text in (("program", program), ("constant", constant)):
    r = estimate(parse(f"({text}) step"), 10_000, seed=7, predicates=[step])
    print(f"{label:9} P(true) = {r.estimate:.4f} ± {r.std_error:.4f}")
