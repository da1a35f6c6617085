"""
Swap and product models
=======================

The swap model sees linking parity but no knotting. The product model sees
nothing once normalized.
"""

import random

from knotamp.braid import braid_to_morse, parse_braid, random_braid
from knotamp.diagram import components, curl_unknot, random_equivalent, unlink, writhe
from knotamp.models import product_model, swap_fg_model
from knotamp.statesum import evaluate, normalized

swap = swap_fg_model()
print("Hopf link:", evaluate(braid_to_morse(parse_braid("2: s1 s1")), swap))
print("2-unlink:", evaluate(unlink(2), swap))
for k in range(1, 7):
    word = "2: " + " ".join(["s1"] * (2 * k))
    print(f"  s1^{2 * k}:", evaluate(braid_to_morse(parse_braid(word)), swap))

# Every knot agrees with a curled unknot of the same writhe.
rng = random.Random(0)
for _ in range(5):
    d = braid_to_morse(random_braid(rng, 3, 9))
    if components(d).count == 1:
        print("knot w =", writhe(d), ":", evaluate(d, swap), "vs", evaluate(curl_unknot(writhe(d)), swap))

# Product model with s = -1 is trivial after normalization, even after moves.
m = product_model(2)
d = braid_to_morse(parse_braid("3: s1 s2^-1 s1 s2^-1"))
d2 = random_equivalent(d, 20, seed=3)
print("figure-eight normalized:", normalized(d, m), "| after 20 moves:", normalized(d2, m))

# With s = i the slide equations fail, so moves can change the value.
mi = product_model(1)
print("s = i before/after moves:", evaluate(d, mi).pretty(), "/", evaluate(d2, mi).pretty())
