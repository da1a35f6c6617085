"""
Virtual crossings
=================
"""

from knotamp import braid_to_morse, parse_braid
from knotamp.diagram import components, writhe
from knotamp.models import virtual_model
from knotamp.statesum import evaluate

m = virtual_model()
words = [
    "2: s1 s1 s1",
    "3: s1 s2^-1 s1 s2^-1",
    "3: s1 s1^-1 s1 s1 s1^-1 v1 s2^-1 v1",
    "3: s1 v2 s1^-1 s1^-1 v2 s1^-1 s1 s2",
]
for w in words:
    d = braid_to_morse(parse_braid(w))
    print(f"{w:40s} comps={components(d).count} w={writhe(d):+d} value={evaluate(d, m).pretty()}")
