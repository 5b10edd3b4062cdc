"""
The CD-word basis and the singularity order
===========================================

Flag vectors of degree ``d`` live in a space of dimension Fib(d).  The
polytopes named by CD-words, with ``D = IC - CC``, give a basis.
"""

import numpy as np

from gcomplete import decompose, evaluate
from gcomplete.basis import basis_matrix
from gcomplete.sorder import build_order, hasse
from gcomplete.words import enumerate_indexes

for d in range(1, 9):
    m = np.array(basis_matrix(d), dtype=object).astype(float)
    print(d, "rank", np.linalg.matrix_rank(m), "of", len(enumerate_indexes(d)))

###############################################################################
# Any polytope decomposes with integer coefficients.

lam = decompose(evaluate("BIC^3"))
print({str(k): int(v) for k, v in lam.coefficients.items() if v})

###############################################################################
# The order on indexes, as covering pairs.

for k, l in hasse(5):
    print(f"{k.word:>6} <. {l.word}")

rel = build_order(8)
print("degree 8:", len(rel.comparable_pairs()), "comparable pairs")
