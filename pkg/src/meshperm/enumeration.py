"""Avoidance classes and their closed-form counts.

enumerate_class counts (and optionally lists) the permutations of length n
avoiding every pattern in a query.  Queries that include the classical
pattern 132 are routed through a Catalan-decomposition generator of the
132-avoiders instead of scanning all of S_n: every 132-avoider splits as
sigma = alpha n beta where alpha occupies the values above beta, both
parts again 132-avoiding.

Closed forms covered here, each verified exhaustively by the claim
harness:

  S_n(A, D)            empty for n >= 2 (exactly {1} at n = 1)
  S_n(A, D3)           the n - 1 rotations a(a+1)...n 1 2...(a-1), a >= 2
  S_n(A3, D3)          2^(n-1) permutations, closed under reversal
  S_n(132, A)          C_n - C_(n-1) for n >= 2, and exactly {1} at n = 1
  S_n(132, Ak), k >= 3 C_n - C_(n-1) + |S_(n-1)(132, 12...(k-1))|
  S_n(132, D)          C_(n-1)
  S_n(132, D3)         C_(n-1) + n - 1
  S_n(132, D4)         C_(n-1) + (n-1)(2n^2-7n+12)/6
  S_(n-1)(132, 321)    binom(n-1, 2) + 1

A and D abbreviate the two-corner monotone mesh patterns of size 2; the
corner proposition (avoiding the two-corner pattern equals avoiding the
four-corner one) is checked by check_corner_proposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels as K
from . import mesh as _mesh
from .mesh import MeshPattern
from .perms import Permutation, catalan, rank_chunks

_SWEEP_LIMIT = 13  # 13! ranks is already out of desk range
_BLOCK = 65536


@dataclass(frozen=True)
class AvoidanceQuery:
    patterns: tuple[MeshPattern, ...]
    n: int
    want_list: bool = False


@dataclass(frozen=True)
class ClassResult:
    n: int
    count: int
    members: tuple[Permutation, ...] | None = None


def _classical_132_index(patterns: Sequence[MeshPattern]) -> int | None:
    for i, p in enumerate(patterns):
        if not p.shading and tuple(p.underlying) == (1, 3, 2):
            return i
    return None


@lru_cache(maxsize=32)
def _avoider_shapes_132(m: int) -> tuple[tuple[int, ...], ...]:
    """All 132-avoiding permutations of {1..m}; C_m of them."""
    if m == 0:
        return ((),)
    out = []
    for left in range(m):
        # left entries take the values m-left .. m-1, in 132-avoiding order
        hi_vals = tuple(range(m - left, m))
        lo_vals = tuple(range(1, m - left))
        for a in _avoider_shapes_132(left):
            alpha = tuple(hi_vals[v - 1] for v in a)
            for b in _avoider_shapes_132(m - 1 - left):
                beta = tuple(lo_vals[v - 1] for v in b)
                out.append(alpha + (m,) + beta)
    return tuple(out)


def avoiders_132(n: int) -> Iterator[Permutation]:
    """The 132-avoiding permutations of length n (Catalan many)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for shape in _avoider_shapes_132(n):
        yield Permutation._trusted(shape)


def enumerate_class(
    patterns: Iterable[MeshPattern],
    n: int,
    want_list: bool | None = None,
    jobs: int = 1,
) -> ClassResult:
    """Count the permutations of length n avoiding every pattern.

    want_list defaults to True for n <= 8 and False above; pass a bool to
    override.  Members, when collected, are sorted lexicographically.
    """
    pats = tuple(patterns)
    if not pats:
        raise ValueError("need at least one pattern")
    if n < 0:
        raise ValueError("n must be >= 0")
    if want_list is None:
        want_list = n <= 8
    idx = _classical_132_index(pats)
    if idx is not None:
        rest = pats[:idx] + pats[idx + 1 :]
        return _enumerate_within_132(rest, n, want_list)
    if n > _SWEEP_LIMIT:
        raise ValueError(f"full S_{n} scan out of range (max {_SWEEP_LIMIT})")
    vflat, voffs, cflat, coffs = _mesh.pattern_pack(pats)
    if want_list:
        members = []
        for lo, hi in _block_ranges(math.factorial(n)):
            block = K._fill_block(n, lo, hi - lo)
            mask = K._avoids_mask_block(block, vflat, voffs, cflat, coffs)
            for row in block[np.asarray(mask, dtype=bool)]:
                members.append(Permutation._trusted(tuple(int(v) for v in row)))
        return ClassResult(n, len(members), tuple(members))
    total = 0
    chunks = rank_chunks(n, jobs) if jobs > 1 else [(0, math.factorial(n))]
    if jobs > 1 and len(chunks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futs = [
                pool.submit(_count_avoiders_chunk, n, lo, hi, pats)
                for lo, hi in chunks
            ]
            total = sum(f.result() for f in futs)
    else:
        for lo, hi in chunks:
            total += int(K._count_avoiders_range(n, lo, hi, vflat, voffs, cflat, coffs))
    return ClassResult(n, total, None)


def _count_avoiders_chunk(n: int, lo: int, hi: int, pats: tuple[MeshPattern, ...]) -> int:
    vflat, voffs, cflat, coffs = _mesh.pattern_pack(pats)
    return int(K._count_avoiders_range(n, lo, hi, vflat, voffs, cflat, coffs))


def _block_ranges(total: int, block: int = _BLOCK) -> Iterator[tuple[int, int]]:
    lo = 0
    while lo < total:
        hi = min(lo + block, total)
        yield (lo, hi)
        lo = hi


def _enumerate_within_132(
    rest: tuple[MeshPattern, ...], n: int, want_list: bool
) -> ClassResult:
    shapes = _avoider_shapes_132(n)
    if not rest:
        keep = list(shapes)
    elif n == 0:
        keep = [s for s in shapes if _mesh.avoids(Permutation._trusted(s), rest)]
    else:
        arr = np.array(shapes, dtype=np.int64).reshape(len(shapes), n)
        vflat, voffs, cflat, coffs = _mesh.pattern_pack(rest)
        mask = K._avoids_mask_block(arr, vflat, voffs, cflat, coffs)
        keep = [s for s, ok in zip(shapes, mask) if ok]
    if want_list:
        members = tuple(Permutation._trusted(s) for s in sorted(keep))
        return ClassResult(n, len(members), members)
    return ClassResult(n, len(keep), None)


# ------------------------------------------------------------ structure

def ad3_members_formula(n: int) -> set[Permutation]:
    """The claimed members of S_n(A, D3) for n >= 2: rotations
    a (a+1) ... n 1 2 ... (a-1) for 2 <= a <= n."""
    if n < 2:
        raise ValueError("structure form needs n >= 2")
    out = set()
    for a in range(2, n + 1):
        word = tuple(range(a, n + 1)) + tuple(range(1, a))
        out.add(Permutation(word))
    return out


def check_ad3_structure(n: int) -> bool:
    """Exact member-set equality of S_n(A, D3) with the rotation form."""
    res = enumerate_class([_mesh.catalog("A"), _mesh.catalog("D", 3)], n, want_list=True)
    return set(res.members) == ad3_members_formula(n)


def check_corner_proposition(k: int, n: int, jobs: int = 1) -> bool:
    """Containment of the two-corner monotone pattern of size k agrees
    with its four-corner variant on every permutation of length n, for
    the ascending and descending families alike.  Requires n >= k >= 2."""
    if k < 2:
        raise ValueError("corner patterns need k >= 2")
    if n < k:
        raise ValueError(f"corner check needs n >= k, got n={n} k={k}")
    return _corner_first_bad(k, n) < 0


def _corner_first_bad(k: int, n: int) -> int:
    pv_a, c_a = _mesh.pattern_arrays(_mesh.catalog("A", k))
    pv_at, c_at = _mesh.pattern_arrays(_mesh.catalog("At", k))
    pv_d, c_d = _mesh.pattern_arrays(_mesh.catalog("D", k))
    pv_dt, c_dt = _mesh.pattern_arrays(_mesh.catalog("Dt", k))
    if n > _SWEEP_LIMIT:
        raise ValueError(f"full S_{n} scan out of range (max {_SWEEP_LIMIT})")
    return int(
        K._check_corners(
            n, 0, math.factorial(n), pv_a, c_a, pv_at, c_at, pv_d, c_d, pv_dt, c_dt
        )
    )


def formula_132_family(which: str, n: int, k: int | None = None) -> int:
    """Closed-form |S_n(132, X)| for X in {A, Ak, D, D3, D4}.

    "Ak" needs k >= 3 and computes its correction term by brute force
    over the 132-avoiders of length n-1 (with the empty permutation
    counting once at n = 1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    key = which.strip().upper()
    if key == "A":
        return 1 if n == 1 else catalan(n) - catalan(n - 1)
    if key == "AK":
        if k is None or k < 3:
            raise ValueError("Ak form needs k >= 3")
        inc = MeshPattern(Permutation(range(1, k)), frozenset())
        aux = enumerate_class([_classical_132(), inc], n - 1, want_list=False)
        return catalan(n) - catalan(n - 1) + aux.count
    if key == "D":
        return catalan(n - 1)
    if key == "D3":
        return catalan(n - 1) + n - 1
    if key == "D4":
        num = (n - 1) * (2 * n * n - 7 * n + 12)
        assert num % 6 == 0, f"cubic term not divisible by 6 at n={n}"
        return catalan(n - 1) + num // 6
    raise ValueError(f"unknown family {which!r}")


def _classical_132() -> MeshPattern:
    return MeshPattern(Permutation((1, 3, 2)), frozenset())


def count_132_with(extra: MeshPattern, n: int) -> int:
    """|S_n(132, extra)| by exhaustive filtering of the 132-avoiders."""
    return enumerate_class([_classical_132(), extra], n, want_list=False).count


def check_132_321_auxiliary(n: int) -> bool:
    """|S_(n-1)(132, 321)| == binom(n-1, 2) + 1 for n >= 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    m = n - 1
    got = count_132_with(MeshPattern(Permutation((3, 2, 1)), frozenset()), m)
    return got == math.comb(m, 2) + 1
