"""Mesh patterns and their containment semantics.

A mesh pattern is a permutation pattern of length m together with a set of
shaded cells of the (m+1) x (m+1) grid drawn around its plot.  Cells are
(column, row) pairs counted from the bottom-left corner, so cell (j, k)
is the open region between the j-th and (j+1)-st chosen positions and
between the k-th and (k+1)-st smallest chosen values (with 0 and n+1
sentinels on the host side).

An occurrence of (pi, R) in sigma is a classical occurrence of pi whose
shaded regions contain no entry of sigma at all.

This module holds the data types, the textual pattern language, the
catalog of named patterns, and a direct reference implementation of
occurrence listing.  Bulk counting is delegated to the kernel backend.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .perms import Permutation

Cell = tuple[int, int]


@dataclass(frozen=True)
class MeshPattern:
    underlying: Permutation
    shading: frozenset[Cell]

    def __post_init__(self):
        if not isinstance(self.underlying, Permutation):
            object.__setattr__(self, "underlying", Permutation(self.underlying))
        cells = frozenset((int(a), int(b)) for a, b in self.shading)
        m = len(self.underlying)
        for a, b in cells:
            if not (0 <= a <= m and 0 <= b <= m):
                raise ValueError(f"cell {(a, b)} outside [0,{m}]^2")
        object.__setattr__(self, "shading", cells)

    @property
    def length(self) -> int:
        return len(self.underlying)

    def __str__(self) -> str:
        return render_pattern(self)


@dataclass(frozen=True)
class Occurrence:
    """One occurrence: host positions (1-based, increasing) and the host
    values sitting at them."""

    positions: tuple[int, ...]
    values: tuple[int, ...]


class PatternParseError(ValueError):
    """Raised on malformed pattern text; `position` is the 0-based index
    into the original string where parsing failed."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at index {position})")
        self.position = position


# --------------------------------------------------------------- catalog
#
# The fourteen named patterns of length 3 come in sibling pairs that share
# a shading: odd indices sit over 123, even indices over 132.

_SHADE_P1 = frozenset({(0, 0), (0, 1), (2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 3)})
_SHADE_P3 = frozenset(_SHADE_P1 - {(2, 2)})
_SHADE_P5 = frozenset({(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 3)})
_SHADE_P7 = frozenset(_SHADE_P5 - {(2, 2)})
_SHADE_P9 = frozenset({(0, 1), (0, 2), (1, 1), (1, 2), (3, 0), (3, 1), (3, 2), (3, 3)})
_SHADE_P11 = frozenset({(1, 0), (0, 2), (1, 1), (1, 2), (3, 0), (3, 1), (3, 2), (3, 3)})
_SHADE_P13 = frozenset({(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2)})

_P_SHADINGS = {
    1: _SHADE_P1, 2: _SHADE_P1,
    3: _SHADE_P3, 4: _SHADE_P3,
    5: _SHADE_P5, 6: _SHADE_P5,
    7: _SHADE_P7, 8: _SHADE_P7,
    9: _SHADE_P9, 10: _SHADE_P9,
    11: _SHADE_P11, 12: _SHADE_P11,
    13: _SHADE_P13, 14: _SHADE_P13,
}

_OF_123 = Permutation((1, 2, 3))
_OF_132 = Permutation((1, 3, 2))

CATALOG_NAMES = tuple(f"P{i}" for i in range(1, 15)) + ("A", "D", "At", "Dt")


def catalog(name: str, k: int | None = None) -> MeshPattern:
    """Named patterns: P1..P14 (no parameter), and the monotone families
    A, D (two shaded opposite corners) and At, Dt (all four corners),
    with optional size parameter k >= 2 (default 2).

    >>> str(catalog("A"))
    'mesh(12;{(0,2),(2,0)})'
    """
    key = name.strip().upper()
    if key.startswith("P"):
        if k is not None:
            raise ValueError("P-patterns take no size parameter")
        try:
            i = int(key[1:])
        except ValueError:
            raise ValueError(f"unknown pattern name {name!r}") from None
        if not 1 <= i <= 14:
            raise ValueError(f"unknown pattern name {name!r}")
        word = _OF_123 if i % 2 == 1 else _OF_132
        return MeshPattern(word, _P_SHADINGS[i])
    if key in ("A", "D", "AT", "DT"):
        kk = 2 if k is None else int(k)
        if kk < 2:
            raise ValueError(f"size parameter must be >= 2, got {kk}")
        if key[0] == "A":
            word = Permutation(range(1, kk + 1))
            cells = {(0, kk), (kk, 0)}
        else:
            word = Permutation(range(kk, 0, -1))
            cells = {(0, 0), (kk, kk)}
        if key.endswith("T"):
            cells |= {(0, 0), (kk, kk), (0, kk), (kk, 0)}
        return MeshPattern(word, frozenset(cells))
    raise ValueError(f"unknown pattern name {name!r}")


# ---------------------------------------------------------------- parser

def parse_pattern(text: str) -> MeshPattern:
    """Parse the pattern language.  Accepted forms (case-insensitive,
    whitespace ignored):

      P7  A  A3  At3  D  D4  Dt2          catalog names
      132  123                            classical pattern, digit word
      1,3,2                               classical pattern, comma word
      mesh(132;{(0,0),(2,3)})             explicit shading ({} allowed)
    """
    src = text
    stripped = [(ch, i) for i, ch in enumerate(src) if not ch.isspace()]
    s = "".join(ch for ch, _ in stripped)
    pos = [i for _, i in stripped]

    def fail(msg: str, at: int):
        where = pos[at] if at < len(pos) else len(src)
        raise PatternParseError(msg, where)

    if not s:
        fail("empty pattern", 0)

    low = s.lower()
    if low.startswith("mesh"):
        return _parse_mesh_form(s, low, fail)

    if s[0].lower() in "pad" and not s.isdigit():
        return _parse_name(s, fail)

    # classical pattern word
    try:
        word = Permutation.parse(s)
    except ValueError:
        fail(f"not a pattern name, word, or mesh(...) form: {s!r}", 0)
    return MeshPattern(word, frozenset())


def _parse_name(s: str, fail) -> MeshPattern:
    head = s[0].upper()
    rest = s[1:]
    if head == "P":
        if not rest.isdigit():
            fail("P must be followed by an index 1..14", 1)
        try:
            return catalog("P" + rest)
        except ValueError as e:
            fail(str(e), 1)
    tilde = rest[:1].lower() == "t"
    if tilde:
        rest = rest[1:]
        if not rest:
            fail(f"{head}t requires a size parameter, e.g. {head}t3", len(s))
    if rest and not rest.isdigit():
        fail(f"bad size parameter {rest!r}", 1)
    k = int(rest) if rest else None
    try:
        return catalog(head + ("t" if tilde else ""), k)
    except ValueError as e:
        fail(str(e), 0)


def _parse_mesh_form(s: str, low: str, fail) -> MeshPattern:
    # mesh(word;{(a,b),...})
    i = 4
    if i >= len(s) or s[i] != "(":
        fail("expected '(' after mesh", i)
    j = s.find(";", i)
    if j < 0:
        fail("expected ';' separating word and shading", len(s) - 1)
    word_text = s[i + 1 : j]
    if not word_text:
        fail("empty pattern word", i + 1)
    try:
        word = Permutation.parse(word_text)
    except ValueError:
        fail(f"bad pattern word {word_text!r}", i + 1)
    k = j + 1
    if k >= len(s) or s[k] != "{":
        fail("expected '{' opening the shading set", k)
    end = s.find("}", k)
    if end < 0:
        fail("unterminated shading set", len(s) - 1)
    body = s[k + 1 : end]
    cells: set[Cell] = set()
    m = len(word)
    if body:
        at = k + 1
        for chunk in body.split("),"):
            chunk = chunk if chunk.endswith(")") else chunk + ")"
            if not (chunk.startswith("(") and chunk.endswith(")")):
                fail(f"bad cell {chunk!r}", at)
            inner = chunk[1:-1].split(",")
            if len(inner) != 2 or not all(t.lstrip("-").isdigit() for t in inner):
                fail(f"bad cell {chunk!r}", at)
            a, b = int(inner[0]), int(inner[1])
            if not (0 <= a <= m and 0 <= b <= m):
                fail(f"cell {(a, b)} outside [0,{m}]^2", at)
            cells.add((a, b))
            at += len(chunk) + 1
    tail = end + 1
    if s[tail : tail + 1] != ")" or tail + 1 != len(s):
        fail("expected ')' closing mesh(...)", tail)
    return MeshPattern(word, frozenset(cells))


def render_pattern(p: MeshPattern) -> str:
    """Canonical text form; parse_pattern round-trips it."""
    word = p.underlying.compact() if p.length <= 9 else p.underlying.comma()
    cells = ",".join(f"({a},{b})" for a, b in sorted(p.shading))
    return f"mesh({word};{{{cells}}})"


# ------------------------------------------------------------ containment

def _order_isomorphic(vals: Sequence[int], pat: Sequence[int]) -> bool:
    m = len(pat)
    for a in range(m):
        for b in range(a + 1, m):
            if (vals[a] < vals[b]) != (pat[a] < pat[b]):
                return False
    return True


def _shading_clear(host: Sequence[int], combo: Sequence[int], vals: Sequence[int], cells) -> bool:
    n = len(host)
    ps = (0,) + tuple(combo) + (n + 1,)
    ws = (0,) + tuple(sorted(vals)) + (n + 1,)
    for j, k in cells:
        wl, wh = ws[k], ws[k + 1]
        for q in range(ps[j] + 1, ps[j + 1]):
            if wl < host[q - 1] < wh:
                return False
    return True


def occurrences(host: Permutation, pattern: MeshPattern) -> list[Occurrence]:
    """All occurrences of `pattern` in `host`, sorted lexicographically by
    position tuple.  Direct definition-level implementation; prefer
    count()/contains() for bulk work."""
    n, m = len(host), pattern.length
    cells = sorted(pattern.shading)
    out = []
    for combo in itertools.combinations(range(1, n + 1), m):
        vals = tuple(host[i - 1] for i in combo)
        if not _order_isomorphic(vals, pattern.underlying):
            continue
        if _shading_clear(host, combo, vals, cells):
            out.append(Occurrence(combo, vals))
    return out


def pattern_arrays(pattern: MeshPattern) -> tuple[np.ndarray, np.ndarray]:
    """Kernel-side encoding: (values, cells) as int64 arrays."""
    pv = np.array(pattern.underlying, dtype=np.int64)
    if pattern.shading:
        cells = np.array(sorted(pattern.shading), dtype=np.int64)
    else:
        cells = np.zeros((0, 2), dtype=np.int64)
    return pv, cells


def pattern_pack(patterns: Iterable[MeshPattern]):
    """Flatten several patterns for the multi-pattern kernels: returns
    (values_flat, value_offsets, cells_flat, cell_offsets)."""
    pvs, cello = [], []
    voffs, coffs = [0], [0]
    for p in patterns:
        pv, cells = pattern_arrays(p)
        pvs.append(pv)
        cello.append(cells)
        voffs.append(voffs[-1] + len(pv))
        coffs.append(coffs[-1] + len(cells))
    vflat = np.concatenate(pvs) if pvs else np.zeros(0, dtype=np.int64)
    cflat = np.concatenate(cello) if cello else np.zeros((0, 2), dtype=np.int64)
    return (
        vflat.astype(np.int64),
        np.array(voffs, dtype=np.int64),
        cflat.astype(np.int64).reshape(-1, 2),
        np.array(coffs, dtype=np.int64),
    )


def count(host: Permutation, pattern: MeshPattern) -> int:
    """Number of occurrences of `pattern` in `host`."""
    from . import _kernels as K

    hv = np.array(host, dtype=np.int64)
    pv, cells = pattern_arrays(pattern)
    return int(K._count_mesh(hv, pv, cells, 0))


def contains(host: Permutation, pattern: MeshPattern) -> bool:
    from . import _kernels as K

    hv = np.array(host, dtype=np.int64)
    pv, cells = pattern_arrays(pattern)
    return bool(K._count_mesh(hv, pv, cells, 1))


def avoids(host: Permutation, patterns: Iterable[MeshPattern]) -> bool:
    """True when `host` contains none of `patterns`."""
    return all(not contains(host, p) for p in patterns)


def flip_diagonal(p: MeshPattern) -> MeshPattern:
    """Reflect a pattern across the main diagonal: the underlying pattern
    is inverted and each cell (j, k) becomes (k, j).  Occurrence counts
    satisfy count(sigma, p) == count(sigma.inverse(), flip_diagonal(p))."""
    return MeshPattern(p.underlying.inverse(), frozenset((k, j) for j, k in p.shading))
