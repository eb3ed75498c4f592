"""Fast pattern statistics via structural characterizations.

Occurrences of the fourteen catalog patterns can be read off a host
permutation directly, without running mesh containment:

  P1/P5    an adjacent pair (x, y): x > 1 a right-to-left minimum
           immediately followed by a right-to-left maximum y;
  P2/P6    an adjacent pair (x, y): x a right-to-left maximum immediately
           followed by a right-to-left minimum y > 1;
  P3/P7    a pair x = sigma_j, y = sigma_k (j < k): x > 1 a right-to-left
           minimum, y a right-to-left maximum, and every entry strictly
           between positions j and k has value strictly between x and y;
  P4/P8    the mirror pair: x a right-to-left maximum before a
           right-to-left minimum y > 1 with all values between them;
  P9-P12   occurrences end at the last entry; the middle entry y ranges
           over values in the active zone visible from the left in the
           appropriate sense;
  P13/P14  interior zeros / interior ones of the Lehmer code.

Siblings share the pair (P1=P5 etc.) because the completing third entry
always exists and is unique on each side.  The refined vectors split
P3/P4/P7/P8 occurrences by the number of host positions strictly between
the two anchor entries.
"""

from __future__ import annotations

from typing import Iterable

from . import mesh as _mesh
from .codes import active_zone, lehmer, m0_set, m1_set
from .perms import Permutation

PAIR_INDICES = (1, 2, 3, 4, 5, 6, 7, 8)
ZONE_INDICES = (9, 10, 11, 12)
CODE_INDICES = (13, 14)

STAT_NAMES = ("lrmin",) + tuple(f"P{i}" for i in range(1, 15)) + (
    "vecP3", "vecP4", "vecP7", "vecP8",
)


def _rl_flags(p: Permutation) -> tuple[list[bool], list[bool]]:
    n = len(p)
    is_min = [False] * n
    is_max = [False] * n
    mn, mx = n + 1, 0
    for i in range(n - 1, -1, -1):
        if p[i] < mn:
            is_min[i] = True
            mn = p[i]
        if p[i] > mx:
            is_max[i] = True
            mx = p[i]
    return is_min, is_max


def active_pairs(p: Permutation, i: int) -> set[tuple[int, int]]:
    """The (x, y) value pairs anchoring occurrences of P_i, i in 1..8.
    Every occurrence of P_i has exactly one completing third entry, so
    len(active_pairs(p, i)) == count of P_i in p."""
    return {(p[j - 1], p[k - 1]) for j, k in active_pair_positions(p, i)}


def active_pair_positions(p: Permutation, i: int) -> set[tuple[int, int]]:
    """Same pairs as active_pairs but as 1-based (position of x, position
    of y)."""
    if i not in PAIR_INDICES:
        raise ValueError(f"pattern index {i} has no pair characterization")
    n = len(p)
    is_min, is_max = _rl_flags(p)
    out: set[tuple[int, int]] = set()
    if i in (1, 5):
        for j in range(n - 1):
            if p[j] > 1 and is_min[j] and is_max[j + 1]:
                out.add((j + 1, j + 2))
    elif i in (2, 6):
        for j in range(n - 1):
            if is_max[j] and p[j + 1] > 1 and is_min[j + 1]:
                out.add((j + 1, j + 2))
    elif i in (3, 7):
        for j in range(n):
            if p[j] > 1 and is_min[j]:
                maxmid = 0
                for k in range(j + 1, n):
                    if is_max[k] and maxmid < p[k]:
                        out.add((j + 1, k + 1))
                    if p[k] > maxmid:
                        maxmid = p[k]
    else:
        for j in range(n):
            if is_max[j]:
                minmid = n + 1
                for k in range(j + 1, n):
                    if is_min[k] and p[k] > 1 and minmid > p[k]:
                        out.add((j + 1, k + 1))
                    if p[k] < minmid:
                        minmid = p[k]
    return out


def zone_middles(p: Permutation) -> tuple[set[int], set[int]]:
    """Middle-entry values of occurrences of P9 (equivalently P11) and of
    P10 (equivalently P12).  Empty sets when the last entry is 1."""
    n = len(p)
    if n == 0 or p[n - 1] == 1:
        return set(), set()
    zone = active_zone(p)
    last = p[n - 1]
    rising: set[int] = set()
    falling: set[int] = set()
    below_max = 0
    above_min = n + 1
    for v in p[: n - 1]:
        if v < last:
            if v >= zone.a and v > below_max:
                rising.add(v)
            below_max = max(below_max, v)
        else:
            if v <= zone.b and v < above_min:
                falling.add(v)
            above_min = min(above_min, v)
    return rising, falling


def p13_p14_fast(p: Permutation) -> tuple[int, int]:
    """(interior zeros, interior ones) of the Lehmer code.

    >>> p13_p14_fast(Permutation.parse("3,5,2,6,1,4,12,8,9,7,11,14,13,10"))
    (2, 4)
    """
    s = lehmer(p)
    return len(m0_set(s)), len(m1_set(s))


def fast_count(p: Permutation, i: int) -> int:
    """Occurrences of catalog pattern P_i via its characterization."""
    if i in PAIR_INDICES:
        return len(active_pair_positions(p, i))
    if i in ZONE_INDICES:
        rising, falling = zone_middles(p)
        return len(rising) if i in (9, 11) else len(falling)
    if i in CODE_INDICES:
        z, o = p13_p14_fast(p)
        return z if i == 13 else o
    raise ValueError(f"no catalog pattern P{i}")


def lrmin(p: Permutation) -> int:
    """Number of left-to-right minima."""
    return len(p.left_to_right_minima())


def refined_vector(p: Permutation, i: int, method: str = "fast") -> tuple[int, ...]:
    """Occurrences of P_i (i in {3, 4, 7, 8}) split by gap: entry g counts
    anchor pairs with exactly g host positions strictly between them.
    Length max(n-2, 0); entry 0 recovers the adjacent patterns P1/P2/P5/P6
    and the entries sum to the plain count."""
    if i not in (3, 4, 7, 8):
        raise ValueError(f"P{i} has no refined vector")
    n = len(p)
    size = max(n - 2, 0)
    vec = [0] * size
    if method == "fast":
        for j, k in active_pair_positions(p, i):
            vec[k - j - 1] += 1
    elif method == "mesh":
        for occ in _mesh.occurrences(p, _mesh.catalog(f"P{i}")):
            a, b = _anchor_positions(i, occ.positions)
            vec[b - a - 1] += 1
    else:
        raise ValueError(f"unknown method {method!r}")
    return tuple(vec)


def _anchor_positions(i: int, positions: tuple[int, int, int]) -> tuple[int, int]:
    # Occurrences of P3/P4/P7/P8 are (z, x, y) in position order, with the
    # completing entry z first; the anchor pair is the last two positions.
    del i
    return positions[1], positions[2]


def stat_tuple(p: Permutation, names: Iterable[str] = STAT_NAMES, method: str = "fast") -> dict:
    """Evaluate named statistics; names from STAT_NAMES.  method="mesh"
    recomputes the P-counts through mesh containment instead of the
    characterizations (slower; used for cross-checks)."""
    out = {}
    for name in names:
        if name == "lrmin":
            out[name] = lrmin(p)
        elif name.startswith("vecP"):
            out[name] = refined_vector(p, int(name[4:]), method=method)
        elif name.startswith("P"):
            i = int(name[1:])
            if i not in range(1, 15):
                raise ValueError(f"unknown statistic {name!r}")
            if method == "fast":
                out[name] = fast_count(p, i)
            elif method == "mesh":
                out[name] = _mesh.count(p, _mesh.catalog(name))
            else:
                raise ValueError(f"unknown method {method!r}")
        else:
            raise ValueError(f"unknown statistic {name!r}")
    return out
