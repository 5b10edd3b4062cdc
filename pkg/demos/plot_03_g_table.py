"""
The complete g-vector of BCBCBCBC
=================================

g is the decomposition summed over the up-set of each index.  Most
entries are nonnegative, but not all.
"""

from gcomplete import evaluate, g_vector, toric_g

g = g_vector(evaluate("BCBCBCBC"))
for k, v in g.values.items():
    flag = "  <-- negative" if v < 0 else ""
    print(f"{str(k):>14} {k.word:>9} {v:>5}{flag}")

###############################################################################
# The slice at indexes ``[i; d-2i]`` is a toric g-vector (of the polar).

print("toric slice:", toric_g(evaluate("BCBCBCBC")))
