"""
Flag vectors of pyramids, prisms and bipyramids
===============================================

A word such as ``BIC`` names a polytope: start from a point, take the
pyramid (C), then the prism (I), then the bipyramid (B).  Its flag vector
counts chains of faces by their set of dimensions.
"""

from gcomplete import evaluate, dual
from gcomplete.lattice import flags_of_lattice, lattice_of_word

# the square pyramid, counted two ways
f = evaluate("CIC")
print("operators:", f.as_dict())

lat = lattice_of_word("CIC")
print("face lattice:", len(lat), "faces, f =", lat.face_counts())
print("chain count agrees:", flags_of_lattice(lat) == f)

###############################################################################
# Reversing the rank sets gives the flag vector of the polar polytope.
# The polar of the cube is the octahedron.

cube, octahedron = evaluate("IIC"), evaluate("BBC")
print("dual(cube) == octahedron:", dual(cube) == octahedron)

###############################################################################
# Exact integers all the way, so long words stay exact.

big = evaluate("BCBCBCBC")
print("face numbers of BCBCBCBC:", [big[{i}] for i in range(8)])
print("complete flags:", big[range(8)])
