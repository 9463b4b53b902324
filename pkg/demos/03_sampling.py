"""Where nu is read as drawing a uniform random name."""
from nucalc import distinguish, estimate, parse, parse_context

shared = parse(r"nu n. \x:B. n")
per_call = parse(r"\x:B. nu n. n")
twice = parse_context(r"(\f:B->N. (f true) == (f true)) @")

for seed in (1, 2, 3):
    left, right, separated = distinguish(shared, per_call, twice, trials=1000, seed=seed)
    print(f"seed {seed}: shared {left.estimate:.3f}  per-call {right.estimate:.3f}"
          f"  separated={separated}")

r = estimate(parse("nu n. nu m. if n == m then true else false"), 10_000, seed=4)
print("collision rate:", r.to_json())
