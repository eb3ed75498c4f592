"""Exact distribution polynomials for the code statistics and for the
corner statistic on 132-avoiders.

F_n(s, t) sums s^P13 t^P14 over all of S_n.  It satisfies

    F_1 = 1,  F_2 = 2,
    F_n = n (n-2)! + (n - 2 + s + t) (F_(n-1) - (n-2)!)   for n >= 3,

is symmetric in s and t, has constant term F_n(0,0) = 2 (n-1)! for
n >= 2, and is a nonnegative integer combination of powers of (s + t).

S_n(t) sums t^A over the 132-avoiders, where A counts occurrences of the
two-corner ascending mesh pattern.  It satisfies the step form

    S_0 = 1,  S_n = (C_n - C_(n-1)) + t^(n-1) S_(n-1)   for n >= 1,

which is the coefficient-of-x^n content of the functional equation
S(x, t) = (1 - x) C(x) + x S(xt, t) with C the Catalan series.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from . import _kernels as K
from . import mesh as _mesh
from .enumeration import avoiders_132
from .perms import catalan


class BivariatePolynomial:
    """Polynomial in s and t with exact integer coefficients, stored
    sparsely as {(deg_s, deg_t): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if c:
                clean[(int(a), int(b))] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def s_plus_t(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1, (0, 1): 1})

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePolynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    def __sub__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            other = BivariatePolynomial.constant(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return BivariatePolynomial(out)

    def __mul__(self, other) -> "BivariatePolynomial":
        if isinstance(other, int):
            return BivariatePolynomial({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def evaluate(self, s: int, t: int) -> int:
        return sum(c * s**a * t**b for (a, b), c in self.terms.items())

    def mirrored(self) -> "BivariatePolynomial":
        return BivariatePolynomial({(b, a): c for (a, b), c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.mirrored()

    def total_degree(self) -> int:
        return max((a + b for a, b in self.terms), default=0)

    def s_plus_t_coordinates(self) -> list[int]:
        """Coefficients c_d with self == sum c_d (s+t)^d; raises
        ValueError when no such integer combination exists."""
        deg = self.total_degree()
        u = BivariatePolynomial.s_plus_t()
        powers = [BivariatePolynomial.constant(1)]
        for _ in range(deg):
            powers.append(powers[-1] * u)
        rem = BivariatePolynomial(dict(self.terms))
        coords = [0] * (deg + 1)
        for d in range(deg, -1, -1):
            c = rem.terms.get((d, 0), 0)
            coords[d] = c
            if c:
                rem = rem - powers[d] * c
            # the whole degree-d slice must be gone now
            if any(a + b == d for (a, b) in rem.terms):
                raise ValueError("not a combination of (s+t) powers")
        if rem.terms:
            raise ValueError("not a combination of (s+t) powers")
        return coords

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(a, b, self.terms[(a, b)]) for a, b in sorted(self.terms)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for a, b, c in self.sorted_terms():
            mono = ("" if a == 0 else f"s^{a}") + ("" if b == 0 else f"t^{b}")
            bits.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.terms!r})"


class UnivariatePolynomial:
    """Dense polynomial in t with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> "UnivariatePolynomial":
        return cls((c,))

    def __eq__(self, other) -> bool:
        return isinstance(other, UnivariatePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "UnivariatePolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UnivariatePolynomial(out)

    def shifted(self, k: int) -> "UnivariatePolynomial":
        """Multiply by t^k."""
        return UnivariatePolynomial((0,) * k + self.coeffs)

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if d < len(self.coeffs) else 0

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}" if d == 0 else f"{c}*t^{d}"
            for d, c in enumerate(self.coeffs)
            if c
        )

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({self.coeffs!r})"


# ----------------------------------------------------------------- F side

def f_poly_bruteforce(n: int) -> BivariatePolynomial:
    """F_n by a sweep over all of S_n (kernel-backed)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 12:
        raise ValueError("bruteforce F needs n <= 12")
    dists, _singles = K._sweep_stats14(n, 0, math.factorial(n), 0)
    mat = dists[6]
    terms: dict[tuple[int, int], int] = {}
    for a in range(mat.shape[0]):
        for b in range(mat.shape[1]):
            if mat[a, b]:
                terms[(a, b)] = int(mat[a, b])
    return BivariatePolynomial(terms)


def f_poly_recurrence(n: int) -> BivariatePolynomial:
    """F_n from the three-term recurrence (exact integers)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return BivariatePolynomial.constant(1)
    f = BivariatePolynomial.constant(1)
    for m in range(2, n + 1):
        if m == 2:
            f = BivariatePolynomial.constant(2)
            continue
        fac = math.factorial(m - 2)
        step = BivariatePolynomial.constant(m - 2) + BivariatePolynomial.s_plus_t()
        f = BivariatePolynomial.constant(m * fac) + step * (f - fac)
    return f


# ----------------------------------------------------------------- S side

def _corner_ascent_pattern():
    return _mesh.catalog("A")


def s_poly_bruteforce(n: int) -> UnivariatePolynomial:
    """S_n by listing the 132-avoiders and counting the corner-ascent
    statistic on each."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 14:
        raise ValueError("bruteforce S needs n <= 14")
    if n == 0:
        return UnivariatePolynomial.constant(1)
    shapes = [tuple(p) for p in avoiders_132(n)]
    arr = np.array(shapes, dtype=np.int64).reshape(len(shapes), n)
    pv, cells = _mesh.pattern_arrays(_corner_ascent_pattern())
    counts = K._count_mesh_block(arr, pv, cells)
    # the identity realizes the maximal statistic value n(n-1)/2
    coeffs = [0] * (n * (n - 1) // 2 + 1)
    for c in counts:
        coeffs[int(c)] += 1
    return UnivariatePolynomial(coeffs)


def s_poly_recurrence(n: int) -> UnivariatePolynomial:
    """S_n from the step form S_m = (C_m - C_(m-1)) + t^(m-1) S_(m-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    s = UnivariatePolynomial.constant(1)
    for m in range(1, n + 1):
        s = UnivariatePolynomial.constant(catalan(m) - catalan(m - 1)) + s.shifted(m - 1)
    return s


def catalan_series_consistent(max_n: int) -> bool:
    """Coefficientwise check of x C(x)^2 - C(x) + 1 = 0 up to x^max_n."""
    for n in range(max_n + 1):
        conv = sum(catalan(i) * catalan(n - 1 - i) for i in range(n)) if n >= 1 else 0
        if conv - catalan(n) + (1 if n == 0 else 0) != 0:
            return False
    return True


def functional_equation_first_bad(max_n: int) -> int:
    """First n in 1..max_n where the brute-force S_n differs from the
    coefficient-of-x^n form of S(x,t) = (1-x) C(x) + x S(xt, t);
    -1 when the identity holds on the whole range."""
    prev = s_poly_bruteforce(0)
    for n in range(1, max_n + 1):
        brute = s_poly_bruteforce(n)
        rhs = UnivariatePolynomial.constant(catalan(n) - catalan(n - 1)) + prev.shifted(n - 1)
        if brute != rhs:
            return n
        prev = brute
    return -1


def verify_functional_equation(max_n: int):
    """Claim-harness wrapper; returns the report for thm-S-functional."""
    from .verify import ClaimSpec, run_claim

    return run_claim(ClaimSpec(claim_id="thm-S-functional", max_n=max_n))
