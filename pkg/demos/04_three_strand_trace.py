"""
Three-strand braids on one qubit
================================

Traces of a 2x2 representation recover the bracket of 3-braid closures.
"""

import math

from knotamp import braid_to_morse, parse_braid
from knotamp.jones3 import bracket_via_trace, in_unitary_union, make_rep, representation_is_unitary, tl_identities
from knotamp.models import bracket_model
from knotamp.statesum import bracket_polynomial

b = parse_braid("3: s1 s2^-1 s1 s2^-1")
exact = bracket_polynomial(braid_to_morse(b), bracket_model())

for theta in (0.2, 1.2, 2.0, 3.0):
    p = make_rep(theta)
    tr = bracket_via_trace(b, p)
    unit = representation_is_unitary(p)["representation"]
    print(f"theta={theta:.2f} d={p.d:+.4f} unitary={unit} trace={tr:.6f} exact={exact.eval(p.A):.6f}")

p = make_rep(math.pi / 2)
for name, res in tl_identities(p).items():
    print(f"{name:>16}: {res:.2e}")

# Between the intervals |d| < 1; the lenient mode uses complex entries.
theta = math.pi / 4 + 0.2
p = make_rep(theta, strict=False)
print("inside union:", in_unitary_union(theta), "| unitary:", representation_is_unitary(p))
