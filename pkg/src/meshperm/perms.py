"""Permutations of {1,...,n} in one-line notation.

Construction and parsing, the classical symmetries (reverse, complement,
inverse), extremal-entry positions, Catalan numbers, and lexicographic
iteration over the whole symmetric group with support for splitting the
stream into contiguous rank chunks.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator


class Permutation(tuple):
    """A permutation of {1,...,n}, stored as a tuple of 1-based values.

    The empty permutation (n = 0) is a valid value.

    >>> Permutation((2, 1, 3))
    Permutation('213')
    >>> Permutation.parse("461928753").inverse()
    Permutation('359182764')
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "Permutation":
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if sorted(vals) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {vals!r}")
        return super().__new__(cls, vals)

    @classmethod
    def _trusted(cls, vals: tuple) -> "Permutation":
        # skips validation; callers must guarantee vals is a permutation
        return tuple.__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    # ---------------------------------------------------------------- text
    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse either text form: compact digits ("461928753", n <= 9)
        or comma-separated values ("13,15,4,11,...")."""
        s = "".join(text.split())
        if not s:
            return cls(())
        if "," in s:
            try:
                return cls(int(tok) for tok in s.split(","))
            except ValueError:
                raise ValueError(f"cannot parse permutation from {text!r}") from None
        if not s.isdigit():
            raise ValueError(f"cannot parse permutation from {text!r}")
        return cls(int(ch) for ch in s)

    def compact(self) -> str:
        """Digit string when n <= 9, comma form otherwise."""
        if self.n <= 9:
            return "".join(str(v) for v in self)
        return self.comma()

    def comma(self) -> str:
        """Comma-separated value string (the canonical JSON form)."""
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Permutation({self.compact()!r})"

    # ---------------------------------------------------------- symmetries
    def reverse(self) -> "Permutation":
        return Permutation._trusted(self[::-1])

    def complement(self) -> "Permutation":
        n = self.n
        return Permutation._trusted(tuple(n + 1 - v for v in self))

    def inverse(self) -> "Permutation":
        n = self.n
        inv = [0] * n
        for i, v in enumerate(self):
            inv[v - 1] = i + 1
        return Permutation._trusted(tuple(inv))

    # ------------------------------------------------------ extremal sets
    # All four return 1-based positions.
    def left_to_right_minima(self) -> set[int]:
        out: set[int] = set()
        mn = self.n + 1
        for i, v in enumerate(self, start=1):
            if v < mn:
                out.add(i)
                mn = v
        return out

    def left_to_right_maxima(self) -> set[int]:
        out: set[int] = set()
        mx = 0
        for i, v in enumerate(self, start=1):
            if v > mx:
                out.add(i)
                mx = v
        return out

    def right_to_left_minima(self) -> set[int]:
        out: set[int] = set()
        mn = self.n + 1
        for i in range(self.n, 0, -1):
            v = self[i - 1]
            if v < mn:
                out.add(i)
                mn = v
        return out

    def right_to_left_maxima(self) -> set[int]:
        out: set[int] = set()
        mx = 0
        for i in range(self.n, 0, -1):
            v = self[i - 1]
            if v > mx:
                out.add(i)
                mx = v
        return out


def generalized_complement(seq: Iterable[int]) -> tuple[int, ...]:
    """Complement a sequence of distinct integers within its own value set:
    the j-th smallest value is replaced by the j-th largest.

    >>> generalized_complement((4, 1, 8, 9))
    (8, 9, 4, 1)
    """
    entries = tuple(int(v) for v in seq)
    if len(set(entries)) != len(entries):
        raise ValueError(f"entries must be distinct: {entries!r}")
    srt = sorted(entries)
    rank = {v: i for i, v in enumerate(srt)}
    m = len(srt)
    return tuple(srt[m - 1 - rank[v]] for v in entries)


def catalan(n: int) -> int:
    """n-th Catalan number, exact.

    >>> [catalan(k) for k in range(7)]
    [1, 1, 2, 5, 14, 42, 132]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def iterate_sn(n: int) -> Iterator[Permutation]:
    """All permutations of {1,...,n} in lexicographic order of their
    value sequences.  iterate_sn(0) yields the empty permutation once."""
    if n < 0:
        raise ValueError("n must be >= 0")
    for tup in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(tup)


def perm_at_rank(n: int, r: int) -> Permutation:
    """The permutation of lexicographic rank r (0-based) in S_n."""
    if n < 0 or not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for n={n}")
    avail = list(range(1, n + 1))
    out = []
    for i in range(n):
        f = math.factorial(n - 1 - i)
        idx, r = divmod(r, f)
        out.append(avail.pop(idx))
    return Permutation._trusted(tuple(out))


def _advance(vals: list[int]) -> bool:
    # in-place lexicographic successor; False at the last permutation
    n = len(vals)
    i = n - 2
    while i >= 0 and vals[i] >= vals[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while vals[j] <= vals[i]:
        j -= 1
    vals[i], vals[j] = vals[j], vals[i]
    vals[i + 1 :] = vals[i + 1 :][::-1]
    return True


def iterate_sn_range(n: int, lo: int, hi: int) -> Iterator[Permutation]:
    """Permutations of ranks lo <= r < hi, in lexicographic order."""
    total = math.factorial(n)
    if not 0 <= lo <= hi <= total:
        raise ValueError(f"bad rank range [{lo}, {hi}) for n={n}")
    if lo == hi:
        return
    cur = list(perm_at_rank(n, lo))
    for _ in range(hi - lo):
        yield Permutation._trusted(tuple(cur))
        if not _advance(cur):
            break


def rank_chunks(n: int, parts: int) -> list[tuple[int, int]]:
    """Split the rank interval [0, n!) into at most `parts` contiguous,
    nonempty, disjoint chunks that cover it."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    total = math.factorial(n)
    parts = min(parts, total) if total else 1
    step, extra = divmod(total, parts)
    chunks = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        if hi > lo:
            chunks.append((lo, hi))
        lo = hi
    return chunks or [(0, 0)]
