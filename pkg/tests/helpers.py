import itertools

from gcomplete.lattice import FaceLattice


def brute_force_flags(lat: FaceLattice) -> dict:
    """Enumerate every chain of proper nonempty faces explicitly; ``{rank tuple: count}``."""
    leq = lat.order_matrix
    d = lat.dim
    proper = [x for x in range(len(lat)) if 0 <= lat.ranks[x] < d]
    counts = {(): 1}

    def extend(chain):
        for y in proper:
            if lat.ranks[y] > lat.ranks[chain[-1]] and leq[chain[-1], y]:
                key = tuple(lat.ranks[z] for z in chain + [y])
                counts[key] = counts.get(key, 0) + 1
                extend(chain + [y])

    for x in proper:
        counts[(lat.ranks[x],)] = counts.get((lat.ranks[x],), 0) + 1
        extend([x])
    for size in range(d + 1):
        for combo in itertools.combinations(range(d), size):
            counts.setdefault(combo, 0)
    return counts


def words_up_to(n):
    for length in range(1, n + 1):
        for w in itertools.product("BCI", repeat=length - 1):
            yield "".join(w) + "C"
