"""Complete g-vectors of convex polytopes built from pyramids, prisms and bipyramids.

Typical use::

    >>> from gcomplete import evaluate, g_vector
    >>> g = g_vector(evaluate("BIC^3"))
    >>> {str(k): v for k, v in g.negative().items()}
    {'[0,0;1,1]': -2}
"""

from .basis import Decomposition, OutsideSpanError, basis_vectors, decompose, recompose
from .flagops import FlagVector, bipyramid, cone, dee, dual, evaluate, point, prism, sparse_flags
from .gvec import (
    GVector,
    IndexSet,
    effective_closure_check,
    flag_from_g,
    g_dual,
    g_vector,
    is_effective,
    toric_g,
)
from .lattice import FaceLattice, flags_of_lattice, is_eulerian, lattice_of_word
from .sorder import build_order, hasse, leq
from .survey import survey
from .words import (
    FibonacciIndex,
    enumerate_indexes,
    format_word,
    index_of_word,
    parse_index,
    parse_word,
    word_of_index,
)

__version__ = "0.1.0"
