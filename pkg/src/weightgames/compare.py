"""Closed-form two-piece counts versus the generic pseudopower bound.

For each board size the exact f2 from the closed forms is put next to
f1^(2), the best bound Kruskal-Katona gives knowing only f1. Sweeping n
shows how quickly the exact count pulls away from the generic bound.
Everything is computed exactly; only the ratio column is rendered as a
decimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .board import COMPLETE, CYCLE, PATH
from .formulas import complete_fk, cycle_f1, cycle_f2, path_f1, path_f2
from .kruskal_katona import pseudopower

CSV_HEADER = "board,n,a,b,k,paper,kk,ratio,strict"

_SWEEP_KINDS = (PATH, CYCLE, COMPLETE)


@dataclass(frozen=True)
class BoundRow:
    """One comparison point: exact count against the pseudopower bound.

    ``kk_bound`` is None when f1 = 0, where the bound is undefined.
    """

    board_kind: str
    n: int
    a: int
    b: int
    k: int
    exact: int
    kk_bound: int | None

    @property
    def ratio(self) -> Fraction | None:
        if self.kk_bound is None or self.kk_bound == 0:
            return None
        return Fraction(self.exact, self.kk_bound)

    @property
    def strict(self) -> bool | None:
        if self.kk_bound is None:
            return None
        return self.exact < self.kk_bound

    def csv(self) -> str:
        kk = "" if self.kk_bound is None else str(self.kk_bound)
        ratio = "" if self.ratio is None else format(float(self.ratio), ".6g")
        strict = "" if self.strict is None else ("true" if self.strict else "false")
        return f"{self.board_kind},{self.n},{self.a},{self.b},{self.k},{self.exact},{kk},{ratio},{strict}"


def _f1(kind: str, n: int, a: int, b: int) -> int:
    if kind == PATH:
        return path_f1(n, a, b)
    if kind == CYCLE:
        return cycle_f1(n, a, b)
    return complete_fk(n, a, b, 1)


def _f2(kind: str, n: int, a: int, b: int) -> int:
    if kind == PATH:
        return path_f2(n, a, b)
    if kind == CYCLE:
        return cycle_f2(n, a, b)
    return complete_fk(n, a, b, 2)


def compare_f2(board_kind: str, n: int, a: int, b: int) -> BoundRow:
    """Exact f2 next to the bound f1^(2) for one parameter point."""
    if board_kind not in _SWEEP_KINDS:
        raise ValueError(f"unsupported board kind {board_kind!r} for comparisons")
    f1 = _f1(board_kind, n, a, b)
    f2 = _f2(board_kind, n, a, b)
    kk = pseudopower(f1, 1, 2) if f1 >= 1 else None
    return BoundRow(board_kind=board_kind, n=n, a=a, b=b, k=2, exact=f2, kk_bound=kk)


def sweep(board_kind: str, a: int, b: int, n_from: int, n_to: int) -> list[BoundRow]:
    """Comparison rows for every n in the inclusive range, ordered by n."""
    if n_from > n_to:
        raise ValueError(f"empty sweep range {n_from}..{n_to}")
    return [compare_f2(board_kind, n, a, b) for n in range(n_from, n_to + 1)]


def render_csv(rows) -> str:
    """CSV table with header; counts stay decimal strings."""
    return "\n".join([CSV_HEADER, *(row.csv() for row in rows)])
