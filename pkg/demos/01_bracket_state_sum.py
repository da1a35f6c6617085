"""
Bracket amplitudes from Morse diagrams
======================================

Build closed braids, contract them slice by slice, and compare with the
state expansion.
"""

from knotamp import braid_to_morse, parse_braid
from knotamp.diagram import circle, writhe
from knotamp.models import bracket_model
from knotamp.skein_oracle import skein_bracket
from knotamp.statesum import bracket_polynomial, evaluate, normalized

model = bracket_model()

# A lone circle evaluates to the loop value.
print("circle:", evaluate(circle(), model).pretty())

# Right-handed trefoil as the closure of s1^3.
trefoil = braid_to_morse(parse_braid("2: s1 s1 s1"))
print("trefoil events:", trefoil.to_word())
print("amplitude:", evaluate(trefoil, model).pretty())
print("expansion:", skein_bracket(trefoil).pretty())

# Dividing by the loop value and removing the writhe factor.
print("writhe:", writhe(trefoil))
print("bracket:", bracket_polynomial(trefoil, model).pretty())
print("normalized:", normalized(trefoil, model).pretty())

# The figure-eight is amphichiral: its bracket is symmetric in A.
fig8 = braid_to_morse(parse_braid("3: s1 s2^-1 s1 s2^-1"))
b = bracket_polynomial(fig8, model)
print("figure-eight:", b.pretty(), "| symmetric:", b == b.bar())
