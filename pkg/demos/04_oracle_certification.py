"""
Certifying the formulas with linear algebra
===========================================

The combinatorial Hom formulas are checked against explicit matrix
representations over a prime field.
"""

import numpy as np

from nakayama_sms import AlgebraParams, IndecModule, hom_dim, stable_hom_dim
from nakayama_sms import oracle
from nakayama_sms.certify import oracle_check

A = AlgebraParams(4, 4)
M = IndecModule(1, 3)
R = oracle.realize(A, M)
print(f"{M} over {A}: dims {R.dims}")
for v, arrow in enumerate(R.arrows, start=1):
    print(f"  arrow {v} -> {v % A.n + 1}:", arrow.tolist())

# A single Hom space, by solving the intertwining equations
N = IndecModule(2, 4)
basis = oracle.hom_space(R, oracle.realize(A, N))
print(f"\nHom({M}, {N}) has dimension {len(basis)}; formula says {hom_dim(A, M, N)}")
print("stable part:", oracle.stable_hom_dim(A, M, N), "formula:", stable_hom_dim(A, M, N))

# Stable endomorphism dimensions of every module of A_2^6, as a matrix
B = AlgebraParams(2, 6)
ends = np.array([[oracle.stable_hom_dim(B, IndecModule(t, L), IndecModule(t, L)) for L in range(1, 7)] for t in (1, 2)])
print(f"\nstable End dimensions over {B} (rows top, columns length):")
print(ends)

# Same answers in characteristic 2
print("char 2 agrees:", all(
    oracle.stable_hom_dim(B, X, Y, p=2) == stable_hom_dim(B, X, Y) for X in B.modules() for Y in B.modules()
))

for r in oracle_check(3, 6):
    print(f"{r.name}: {r.checked} pairs, ok={r.ok}")
