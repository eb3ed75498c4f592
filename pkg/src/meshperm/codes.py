"""Subexceedant codes and three involutions on permutations.

The Lehmer code of sigma records at position i the number of entries to
the right of sigma_i that are smaller; a sequence s is subexceedant when
0 <= s_i <= n - i.  Position i is a right-to-left minimum exactly when
s_i = 0.

The involutions:

  phi    complements the part after the entry 1 within its own values,
         leaving the prefix (and hence every left-to-right minimum) alone;
  psi    reverses the values inside the "active zone", an interval of
         values around the last entry determined by the first entry that
         goes below it;
  theta  flips 0 <-> 1 in the Lehmer code at the positions that lie
         strictly between the first and the last zero of the code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .perms import Permutation, generalized_complement


class SubexceedantFunction(tuple):
    """A sequence (s_1,...,s_n) with 0 <= s_i <= n - i.

    >>> SubexceedantFunction((2, 0, 0))
    SubexceedantFunction('(2,0,0)')
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "SubexceedantFunction":
        vals = tuple(int(v) for v in values)
        n = len(vals)
        for i, v in enumerate(vals, start=1):
            if not 0 <= v <= n - i:
                raise ValueError(f"entry s_{i}={v} outside [0, {n - i}]")
        return super().__new__(cls, vals)

    @classmethod
    def parse(cls, text: str) -> "SubexceedantFunction":
        s = "".join(text.split()).strip("()")
        if not s:
            return cls(())
        return cls(int(tok) for tok in s.split(","))

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self) + ")"

    def __repr__(self) -> str:
        return f"SubexceedantFunction({str(self)!r})"


def lehmer(p: Permutation) -> SubexceedantFunction:
    """Code of p: s_i = #{j > i : p_j < p_i}.

    >>> str(lehmer(Permutation.parse("352614")))
    '(2,3,1,2,0,0)'
    """
    n = len(p)
    out = []
    for i in range(n):
        c = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                c += 1
        out.append(c)
    return SubexceedantFunction(out)


def unlehmer(s: SubexceedantFunction) -> Permutation:
    """Inverse of lehmer(): rebuild the permutation left to right, taking
    each time the (s_i + 1)-st smallest value not yet used."""
    s = SubexceedantFunction(s)
    avail = list(range(1, len(s) + 1))
    return Permutation._trusted(tuple(avail.pop(v) for v in s))


def m0_set(s: SubexceedantFunction) -> set[int]:
    """1-based positions j with s_j = 0 having some zero strictly before
    and some zero strictly after (interior zeros)."""
    return _interior_positions(s, 0)


def m1_set(s: SubexceedantFunction) -> set[int]:
    """1-based positions j with s_j = 1 lying strictly between two zeros."""
    return _interior_positions(s, 1)


def _interior_positions(s, value: int) -> set[int]:
    zeros = [j for j, v in enumerate(s, start=1) if v == 0]
    if len(zeros) < 2:
        return set()
    lo, hi = zeros[0], zeros[-1]
    return {j for j in range(lo + 1, hi) if s[j - 1] == value}


def theta_code(s: SubexceedantFunction) -> SubexceedantFunction:
    """Flip 0 <-> 1 on the interior positions.  The result is again
    subexceedant, and theta_code is an involution with
    m0_set(theta_code(s)) == m1_set(s) and vice versa."""
    s = SubexceedantFunction(s)
    flip0 = m0_set(s)
    flip1 = m1_set(s)
    out = list(s)
    for j in flip0:
        out[j - 1] = 1
    for j in flip1:
        out[j - 1] = 0
    return SubexceedantFunction(out)


def big_theta(p: Permutation) -> Permutation:
    """Conjugate theta_code through the Lehmer code."""
    return unlehmer(theta_code(lehmer(p)))


# ------------------------------------------------------------- phi / psi

def phi(p: Permutation) -> Permutation:
    """Write p = alpha 1 beta and complement beta within its own value
    set.  Defined for n >= 1 only.

    >>> phi(Permutation.parse("461928753")).compact()
    '461293578'
    """
    n = len(p)
    if n == 0:
        raise ValueError("phi is undefined on the empty permutation")
    at = p.index(1)
    beta = p[at + 1 :]
    return Permutation._trusted(p[: at + 1] + generalized_complement(beta))


@dataclass(frozen=True)
class ActiveZone:
    """Value interval [a, b] used by psi; empty when the last entry is 1."""

    a: int | None = None
    b: int | None = None

    @property
    def is_empty(self) -> bool:
        return self.a is None

    def __contains__(self, v: int) -> bool:
        return not self.is_empty and self.a <= v <= self.b


def active_zone(p: Permutation) -> ActiveZone:
    """Zone of p (n >= 1): empty when p ends in 1; otherwise a = 1 + the
    first entry smaller than the last, and b = n when that entry is
    first, else one less than the minimum of the entries before it."""
    n = len(p)
    if n == 0:
        raise ValueError("active zone is undefined on the empty permutation")
    last = p[n - 1]
    if last == 1:
        return ActiveZone()
    j = next(i for i, v in enumerate(p) if v < last)
    a = p[j] + 1
    b = n if j == 0 else min(p[:j]) - 1
    return ActiveZone(a, b)


def psi(p: Permutation) -> Permutation:
    """Complement the entries whose values lie in the active zone, fixing
    everything else.  The empty permutation and every permutation with an
    empty zone are fixed points."""
    if len(p) == 0:
        return p
    zone = active_zone(p)
    if zone.is_empty:
        return p
    a, b = zone.a, zone.b
    return Permutation._trusted(tuple(a + b - v if a <= v <= b else v for v in p))
