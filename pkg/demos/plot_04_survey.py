"""
Surveying every word of a given length
======================================

For each ``d`` we evaluate all ``3^(d-1)`` words ending in C and collect
the indexes where some g value is negative.
"""

from gcomplete.survey import survey

for d in range(1, 9):
    rep = survey(d)
    exc = " ".join(k.compact() for k in rep.exceptional) or "none"
    print(f"d={d}: {len(rep.records):>5} words, exceptional: {exc}")

###############################################################################
# The worst witness for each exceptional index at d = 7.

print(survey(7).to_text())
