"""Normal forms remove private names and expose what a caller can learn."""
from nucalc import equivalent, normalize, parse

programs = {
    "transposition": r"nu a. nu b. \x:N. if x == a then b else if x == b then a else x",
    "call-twice": r"nu m. nu n. \x:N. if x == m then n else m",
    "call-twice, swapped": r"nu m. nu n. \x:N. if x == m then m else n",
    "boolean switch": r"nu a. nu b. \y:B. if y then a else b",
}
for label, text in programs.items():
    nf = normalize(parse(text))
    print(f"{label:22} {nf}   leaked={len(nf.leaked)}")

# The swapped variant reveals m only to a caller that already holds m,
# so it behaves like a single shared name.
print(equivalent(parse(programs["call-twice, swapped"]), parse(r"nu n. \x:N. n")))
print(equivalent(parse(programs["call-twice"]), parse(r"nu n. \x:N. n")))
