"""
Entangling gates and Yang-Baxter operators
==========================================
"""

import cmath
import math

import numpy as np

from knotamp.linalg import to_numeric
from knotamp.models import bracket_model, virtual_r_matrix
from knotamp.yangbaxter import check_ybe, is_entangling_2q, solve_mu

# At A = i the bracket crossing is a swap composed with local gates.
R = to_numeric(bracket_model().R, 1j)
v = is_entangling_2q(R)
print("bracket R at A=i:", "entangling" if v.entangling else f"{v.decomposition.form} form")
print(np.round(v.decomposition.A, 6))
print(np.round(v.decomposition.B, 6))

# The virtual operator entangles for generic theta.
theta = math.pi / 4
Rv = virtual_r_matrix(cmath.exp(1j * theta))
print("YBE residual:", check_ybe(Rv))
v = is_entangling_2q(Rv)
print("witness amplitudes:", np.round(v.witness, 6))
print("image determinant:", v.witness_determinant)

# No cup matrix yields mu = diag(1, -1).
r = solve_mu(((1, 0), (0, -1)))
print("mu = diag(1, -1) feasible:", r.feasible, "| basis:", r.groebner_basis)
