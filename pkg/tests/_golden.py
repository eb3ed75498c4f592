"""Frozen reference data and hypothesis strategies shared by the tests.

The three example datasets below were verified by hand against the
independent slow engine; tests compare every code path back to them.
Occurrence sets are given as sorted tuples of value triples in position
order.
"""

from hypothesis import strategies as st

from meshperm import MeshPattern, Permutation

# involution on the value suffix after the entry 1
PHI_EXAMPLE = {
    "sigma": "461928753",
    "image": "461293578",
    "sets": {
        "P1": [(1, 2, 8)],
        "P2": [(1, 5, 3), (1, 9, 2)],
        "P3": [(1, 2, 8)],
        "P4": [(1, 5, 3), (1, 7, 3), (1, 8, 3), (1, 9, 2)],
        "P5": [(1, 2, 8)],
        "P6": [(1, 9, 2), (2, 5, 3)],
        "P7": [(1, 2, 8)],
        "P8": [(1, 9, 2), (2, 5, 3), (2, 7, 3), (2, 8, 3)],
    },
    "image_sets": {
        "P1": [(1, 2, 9), (4, 7, 8)],
        "P2": [(1, 9, 3)],
        "P3": [(1, 2, 9), (1, 3, 8), (4, 5, 8), (4, 7, 8)],
        "P4": [(1, 9, 3)],
        "P5": [(1, 2, 9), (5, 7, 8)],
        "P6": [(2, 9, 3)],
        "P7": [(1, 2, 9), (2, 3, 8), (3, 5, 8), (5, 7, 8)],
        "P8": [(2, 9, 3)],
    },
    # refined window vectors, bucketed by the gap between the final pair
    "vec3": (1, 0, 0, 0, 0, 0, 0),
    "vec4": (2, 1, 1, 0, 0, 0, 0),
}

# involution complementing values inside the active zone
PSI_EXAMPLE = {
    "sigma": "13,15,4,11,2,5,10,1,14,8,6,12,3,9,7",
    "image": "13,15,4,6,2,12,7,1,14,9,11,5,3,8,10",
    "zone": (5, 12),
    "sets": {
        "P9": [(4, 5, 7), (5, 6, 7)],
        "P10": [(4, 11, 7), (5, 8, 7), (5, 10, 7)],
        "P11": [(1, 6, 7), (2, 5, 7)],
        "P12": [(1, 8, 7), (4, 11, 7), (5, 10, 7)],
    },
    "image_sets": {
        "P9": [(4, 6, 10), (6, 7, 10), (7, 9, 10)],
        "P10": [(6, 12, 10), (9, 11, 10)],
        "P11": [(1, 9, 10), (2, 7, 10), (4, 6, 10)],
        "P12": [(2, 12, 10), (9, 11, 10)],
    },
}

# involution flipping interior 0s and 1s of the inversion code
THETA_EXAMPLE = {
    "sigma": "3,5,2,6,1,4,12,8,9,7,11,14,13,10",
    "code": (2, 3, 1, 2, 0, 0, 5, 1, 1, 0, 1, 2, 1, 0),
    "flipped": (2, 3, 1, 2, 0, 1, 5, 0, 0, 1, 0, 2, 0, 0),
    "image": "3,5,2,6,1,7,12,4,8,10,9,14,11,13",
    "m0": {6, 10},
    "m1": {8, 9, 11, 13},
    "sets": {
        "P13": [(1, 4, 7), (4, 7, 10)],
        "P14": [(4, 8, 7), (4, 9, 7), (7, 11, 10), (7, 13, 10)],
    },
    "image_sets": {
        "P13": [(1, 4, 8), (4, 8, 9), (8, 9, 11), (9, 11, 13)],
        "P14": [(1, 7, 4), (8, 10, 9)],
    },
}


def perms(min_n: int = 0, max_n: int = 8):
    """Strategy yielding Permutation objects with min_n <= n <= max_n."""

    def build(n):
        if n == 0:
            return st.just(Permutation(()))
        return st.permutations(range(1, n + 1)).map(lambda v: Permutation(tuple(v)))

    return st.integers(min_n, max_n).flatmap(build)


def mesh_patterns(max_m: int = 3):
    """Strategy yielding small MeshPattern objects with random shadings."""

    def build(m):
        cells = [(a, b) for a in range(m + 1) for b in range(m + 1)]
        word = st.permutations(range(1, m + 1)).map(lambda v: Permutation(tuple(v)))
        shading = st.sets(st.sampled_from(cells)).map(frozenset)
        return st.tuples(word, shading).map(lambda t: MeshPattern(t[0], t[1]))

    return st.integers(1, max_m).flatmap(build)
