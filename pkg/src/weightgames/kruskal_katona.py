"""Canonical binomial representations, pseudopowers, and the
Kruskal-Katona feasibility test for f-vectors.

Every integer f >= 1 has a unique i-canonical (Macaulay) representation
f = C(n_i, i) + C(n_{i-1}, i-1) + ... with strictly decreasing tops and
consecutive descending bottoms. Replacing the bottoms by j, j-1, ...
gives the jth pseudopower, and the Kruskal-Katona theorem characterizes
f-vectors of simplicial complexes by pseudopower inequalities between
consecutive entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class CanonicalRep:
    """The i-canonical representation of an integer.

    ``terms`` holds (top, bottom) pairs with bottoms index, index-1, ...
    consecutive descending and tops strictly decreasing; the represented
    value is the sum of the binomials.
    """

    index: int
    terms: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return sum(math.comb(top, bottom) for top, bottom in self.terms)

    def pseudopower(self, j: int) -> int:
        """Replace each bottom index-t by j-t and evaluate; C(m,0) = 1 and
        a negative bottom contributes 0."""
        if j < 1:
            raise ValueError(f"pseudopower index must be >= 1, got {j}")
        return sum(_binom(top, j - (self.index - bottom)) for top, bottom in self.terms)

    def __str__(self) -> str:
        return "+".join(f"C({top},{bottom})" for top, bottom in self.terms)


def _largest_top(f: int, j: int) -> int:
    """Largest n with C(n, j) <= f, for f >= 1 and j >= 1."""
    lo, hi = j, j + 1
    while math.comb(hi, j) <= f:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, j) <= f:
            lo = mid
        else:
            hi = mid
    return lo


def canonical_rep(f: int, i: int) -> CanonicalRep:
    """Greedy i-canonical representation of f >= 1.

    Take the largest C(top, i) that fits, subtract, and recurse with
    bottom i-1 on the remainder; the representation is unique, so the
    greedy choice is the only one.
    """
    if f < 1:
        raise ValueError(f"canonical representations need f >= 1, got {f}")
    if i < 1:
        raise ValueError(f"representation index must be >= 1, got {i}")
    terms = []
    remainder = f
    bottom = i
    while remainder > 0:
        top = _largest_top(remainder, bottom)
        terms.append((top, bottom))
        remainder -= math.comb(top, bottom)
        bottom -= 1
    return CanonicalRep(index=i, terms=tuple(terms))


def pseudopower(f: int, i: int, j: int) -> int:
    """jth pseudopower of f taken through its i-canonical representation."""
    return canonical_rep(f, i).pseudopower(j)


def _normalize(fv) -> tuple[int, ...]:
    entries = tuple(int(x) for x in fv)
    if not entries:
        raise ValueError("empty f-vector")
    if any(e < 0 for e in entries):
        raise ValueError(f"f-vector entries must be non-negative, got {entries}")
    end = len(entries)
    while end > 0 and entries[end - 1] == 0:
        end -= 1
    return entries[:end]


def fvector_violation(fv) -> str | None:
    """First constraint an alleged f-vector breaks, or None if it is the
    f-vector of a non-empty simplicial complex.

    Trailing zeros are trimmed first. A zero entry followed by a positive
    one can never happen in a complex (faces have all their subsets), and
    consecutive entries must satisfy f_{i+1} <= f_i^(i+1).
    """
    entries = _normalize(fv)
    if not entries or entries[0] != 1:
        got = entries[0] if entries else 0
        return f"f0 = {got} (must be 1)"
    for idx in range(1, len(entries)):
        if entries[idx] == 0:
            return f"f{idx} = 0 with positive later entries"
    for i in range(1, len(entries) - 1):
        bound = pseudopower(entries[i], i, i + 1)
        if entries[i + 1] > bound:
            return f"f{i + 1} = {entries[i + 1]} exceeds f{i}^({i + 1}) = {bound}"
    return None


def is_valid_fvector(fv) -> bool:
    """Kruskal-Katona feasibility via the upper chain f_{i+1} <= f_i^(i+1)."""
    return fvector_violation(fv) is None


def is_valid_fvector_via_iii(fv) -> bool:
    """Kruskal-Katona feasibility via the lower chain f_j >= f_{j+1}^(j);
    agrees with :func:`is_valid_fvector` on every input."""
    entries = _normalize(fv)
    if not entries or entries[0] != 1:
        return False
    for idx in range(1, len(entries)):
        if entries[idx] == 0:
            return False
    for j in range(1, len(entries) - 1):
        if entries[j] < pseudopower(entries[j + 1], j + 1, j):
            return False
    return True
