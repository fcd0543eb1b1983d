"""Closed-form face counts for weight games on paths, cycles, and
complete graphs, plus the weight-1 bound and the complete-graph sandwich
bounds.

All counts are exact arbitrary-precision integers. A binomial whose top
is smaller than its bottom (or negative) is 0, which absorbs the
hopeless placements uniformly; the explicit case guards are kept anyway
so each branch of a piecewise count is visible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def binom(n: int, k: int) -> int:
    """C(n, k), defined as 0 when k < 0, n < 0, or k > n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class PairCounts:
    """Two-piece position counts split by who owns the pieces."""

    n_ll: int
    n_lr: int
    n_rr: int

    @property
    def total(self) -> int:
        return self.n_ll + self.n_lr + self.n_rr


def _check_weights(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"piece weights must be >= 1, got a={a}, b={b}")


def _check_path(n: int) -> None:
    if n < 1:
        raise ValueError(f"a path needs n >= 1, got n={n}")


def _check_cycle(n: int) -> None:
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got n={n}")


def _exact_div(value: int, divisor: int) -> int:
    q, r = divmod(value, divisor)
    assert r == 0, f"{value} not divisible by {divisor}"
    return q


def weight1_bound(n: int, i: int) -> int:
    """C(n,i) * 2^i: positions with i weight-1 pieces when nothing else
    restricts play, hence an upper bound for any weight-1 game."""
    if n < 1:
        raise ValueError(f"board size must be >= 1, got n={n}")
    if i < 0:
        raise ValueError(f"piece count must be >= 0, got {i}")
    return binom(n, i) * 2**i


def path_f1(n: int, a: int, b: int) -> int:
    """One-piece position count on the n-vertex path."""
    _check_path(n)
    _check_weights(a, b)
    if a > n and b > n:
        return 0
    if a <= n and b > n:
        return n - a + 1
    if a > n and b <= n:
        return n - b + 1
    return 2 * n - a - b + 2


def path_f2_parts(n: int, a: int, b: int) -> PairCounts:
    """Two-piece position counts on the n-vertex path, split LL/LR/RR.

    n_ll = C(n-2a+2, 2) when 2a <= n, n_rr symmetric, and
    n_lr = 2*C(n-a-b+2, 2) when a+b <= n (either player may sit left).
    """
    _check_path(n)
    _check_weights(a, b)
    n_ll = binom(n - 2 * a + 2, 2) if 2 * a <= n else 0
    n_rr = binom(n - 2 * b + 2, 2) if 2 * b <= n else 0
    n_lr = 2 * binom(n - a - b + 2, 2) if a + b <= n else 0
    return PairCounts(n_ll=n_ll, n_lr=n_lr, n_rr=n_rr)


def path_f2(n: int, a: int, b: int) -> int:
    """Two-piece position count on the n-vertex path."""
    return path_f2_parts(n, a, b).total


def cycle_f1(n: int, a: int, b: int) -> int:
    """One-piece position count on the n-cycle: n placements per player
    whose weight fits."""
    _check_cycle(n)
    _check_weights(a, b)
    if a > n and b > n:
        return 0
    if a <= n and b <= n:
        return 2 * n
    return n


def cycle_f2_parts(n: int, a: int, b: int) -> PairCounts:
    """Two-piece position counts on the n-cycle, split LL/LR/RR.

    n_ll = n(n-2a+1)/2 when 2a <= n, n_rr symmetric, and
    n_lr = n(n-a-b+1) when a+b <= n.
    """
    _check_cycle(n)
    _check_weights(a, b)
    n_ll = _exact_div(n * (n - 2 * a + 1), 2) if 2 * a <= n else 0
    n_rr = _exact_div(n * (n - 2 * b + 1), 2) if 2 * b <= n else 0
    n_lr = n * (n - a - b + 1) if a + b <= n else 0
    return PairCounts(n_ll=n_ll, n_lr=n_lr, n_rr=n_rr)


def cycle_f2(n: int, a: int, b: int) -> int:
    """Two-piece position count on the n-cycle."""
    return cycle_f2_parts(n, a, b).total


def complete_fk_terms(n: int, a: int, b: int, k: int) -> list[int]:
    """Per-split contributions to the k-piece count on the complete graph.

    Entry l counts positions with k-l Left and l Right pieces: place the
    Left pieces one by one (each removes a vertices), divide by (k-l)! to
    forget the order, then the Right pieces likewise.
    """
    if n < 1:
        raise ValueError(f"board size must be >= 1, got n={n}")
    _check_weights(a, b)
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    terms = []
    for l in range(k + 1):
        left = 1
        for i in range(k - l):
            left *= binom(n - i * a, a)
            if left == 0:
                break
        right = 1
        if left:
            placed = (k - l) * a
            for j in range(l):
                right *= binom(n - placed - j * b, b)
                if right == 0:
                    break
        if left == 0 or right == 0:
            terms.append(0)
            continue
        # ordered placements split evenly into unordered ones
        terms.append(
            _exact_div(left, math.factorial(k - l)) * _exact_div(right, math.factorial(l))
        )
    return terms


def complete_fk(n: int, a: int, b: int, k: int) -> int:
    """k-piece position count on the complete graph with n vertices."""
    return sum(complete_fk_terms(n, a, b, k))


def complete_fk_equal(n: int, a: int, k: int) -> int:
    """k-piece count on the complete graph when both weights equal a:
    n! / ((n-ka)! k! (a!)^k) * 2^k, or 0 once the pieces cannot fit."""
    if n < 1:
        raise ValueError(f"board size must be >= 1, got n={n}")
    _check_weights(a, a)
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    if k * a > n:
        return 0
    numerator = math.factorial(n) * 2**k
    denominator = math.factorial(n - k * a) * math.factorial(k) * math.factorial(a) ** k
    return _exact_div(numerator, denominator)


def complete_fk_sandwich(n: int, a: int, b: int, k: int) -> tuple[int, int]:
    """Bracketing bounds for the k-piece count on the complete graph.

    With a <= b (swapped internally otherwise): lower uses the larger
    weight everywhere a weight appears in a denominator slot, upper the
    smaller. A bound whose factorial argument would go negative is 0.
    The exact values can be non-integral for a < b; they are returned
    floored (lower) and ceiled (upper), which preserves the bracketing.
    """
    if n < 1:
        raise ValueError(f"board size must be >= 1, got n={n}")
    _check_weights(a, b)
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    if a > b:
        a, b = b, a
    if k * a > n:
        lower = 0
    else:
        lower = math.floor(
            Fraction(
                math.factorial(n) * 2**k,
                math.factorial(n - k * a) * math.factorial(k) * math.factorial(b) ** k,
            )
        )
    if k * b > n:
        upper = 0
    else:
        upper = math.ceil(
            Fraction(
                math.factorial(n) * 2**k,
                math.factorial(n - k * b) * math.factorial(k) * math.factorial(a) ** k,
            )
        )
    return lower, upper
