"""Legal complexes built by brute force.

Legal positions are enumerated level by level: a k-piece position is
extended only by basic positions that come later in the canonical order
and are disjoint from everything placed, so each face is generated
exactly once. These enumerated face counts are the oracle that all
closed-form counts are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import Board
from .game import BasicPosition, Position, WeightGame, basic_positions


@dataclass(frozen=True)
class LegalComplex:
    """All legal positions of a weight game on a board, grouped by size.

    ``vertices`` are the basic positions; ``faces_by_size[k]`` holds the
    k-piece legal positions in canonical order. Levels stop at the last
    nonempty one, so the face counts carry no trailing zeros.
    """

    game: WeightGame
    board: Board
    vertices: tuple[BasicPosition, ...]
    faces_by_size: tuple[tuple[Position, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.faces_by_size) - 1

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.faces_by_size)


def _support_masks(pieces) -> list[int]:
    return [sum(1 << v for v in p.support) for p in pieces]


def _index_levels(masks: list[int], up_to: int | None):
    """Yield, for k = 0, 1, ..., the index tuples of all pairwise-disjoint
    k-selections in lexicographic order, stopping after the first empty
    level (or after level ``up_to``)."""
    level: list[tuple[tuple[int, ...], int]] = [((), 0)]
    k = 0
    while level:
        yield [idxs for idxs, _ in level]
        if up_to is not None and k == up_to:
            return
        nxt = []
        for idxs, occupied in level:
            start = idxs[-1] + 1 if idxs else 0
            for j in range(start, len(masks)):
                if occupied & masks[j] == 0:
                    nxt.append((idxs + (j,), occupied | masks[j]))
        level = nxt
        k += 1


def legal_positions(game: WeightGame, board: Board, k: int) -> list[Position]:
    """Every legal position with exactly k pieces, canonically ordered."""
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    basics = basic_positions(game, board)
    masks = _support_masks(basics)
    for depth, level in enumerate(_index_levels(masks, up_to=k)):
        if depth == k:
            return [Position(tuple(basics[j] for j in idxs)) for idxs in level]
    return []


def legal_complex(game: WeightGame, board: Board) -> LegalComplex:
    """Enumerate every legal position, level by level."""
    basics = basic_positions(game, board)
    masks = _support_masks(basics)
    faces = []
    for level in _index_levels(masks, up_to=None):
        faces.append(tuple(Position(tuple(basics[j] for j in idxs)) for idxs in level))
    return LegalComplex(
        game=game, board=board, vertices=tuple(basics), faces_by_size=tuple(faces)
    )


def f_vector(c: LegalComplex) -> tuple[int, ...]:
    """Face counts (f0, f1, ..., fk) of an enumerated complex."""
    return c.f_vector()


def all_complex_fvectors(m: int) -> set[tuple[int, ...]]:
    """f-vectors of every non-empty simplicial complex on <= m labeled
    vertices.

    Complexes are enumerated through their facet sets, i.e. all nonempty
    antichains of subsets of {1..m}; each is closed downward and its face
    counts recorded. Capped at m = 5, where the antichain count (~7.5k)
    is still desk scale.
    """
    if not 1 <= m <= 5:
        raise ValueError(f"vertex count must be in 1..5, got {m}")
    n_masks = 1 << m
    results: set[tuple[int, ...]] = set()

    def record(chain: list[int]) -> None:
        faces: set[int] = set()
        for facet in chain:
            sub = facet
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & facet
        counts = [0] * (max(f.bit_count() for f in faces) + 1)
        for f in faces:
            counts[f.bit_count()] += 1
        results.add(tuple(counts))

    def extend(start: int, chain: list[int]) -> None:
        for s in range(start, n_masks):
            if all((s & t) not in (s, t) for t in chain):
                chain.append(s)
                record(chain)
                extend(s + 1, chain)
                chain.pop()

    extend(0, [])
    return results
