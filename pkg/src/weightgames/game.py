"""Weight games and their positions.

Two players, Left and Right, place pieces covering connected sets of a
and b empty vertices respectively. The only rule is placement on empty
vertices, so a position is legal exactly when the occupied sets are
pairwise disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .board import Board, connected_subsets, is_connected_subset


class Player(Enum):
    LEFT = "L"
    RIGHT = "R"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class WeightGame:
    """Fixed piece weights: Left covers a vertices per piece, Right covers b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError(f"piece weights must be >= 1, got a={self.a}, b={self.b}")

    def weight(self, player: Player) -> int:
        return self.a if player is Player.LEFT else self.b


@dataclass(frozen=True)
class BasicPosition:
    """One piece: a player occupying a connected vertex set of a board."""

    player: Player
    support: frozenset[int]
    board: Board

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        if not self.support:
            raise ValueError("a piece must cover at least one vertex")
        if not is_connected_subset(self.board, self.support):
            raise ValueError(f"support {sorted(self.support)} is not connected on {self.board}")

    @property
    def sort_key(self) -> tuple:
        return (self.player is Player.RIGHT, tuple(sorted(self.support)))

    def notation(self) -> str:
        return f"{self.player.value}{{{','.join(str(v) for v in sorted(self.support))}}}"

    def __str__(self) -> str:
        return self.notation()


@dataclass(frozen=True)
class Position:
    """A set of pieces on one board.

    Construction deduplicates and sorts the pieces into canonical order
    (Left before Right, then by sorted support) and rejects pieces from
    different boards. Overlapping pieces are representable; use
    :func:`is_legal` to test disjointness.
    """

    pieces: tuple[BasicPosition, ...] = ()

    def __post_init__(self):
        pieces = tuple(sorted(set(self.pieces), key=lambda p: p.sort_key))
        if pieces:
            board = pieces[0].board
            for piece in pieces[1:]:
                if piece.board is not board and piece.board != board:
                    raise ValueError("pieces from different boards in one position")
        object.__setattr__(self, "pieces", pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    @property
    def board(self) -> Board | None:
        return self.pieces[0].board if self.pieces else None

    @property
    def sort_key(self) -> tuple:
        return tuple(p.sort_key for p in self.pieces)

    def notation(self) -> str:
        if not self.pieces:
            return "-"
        return " ".join(p.notation() for p in self.pieces)

    def __str__(self) -> str:
        return self.notation()


def is_legal(pos: Position) -> bool:
    """Whether the pieces occupy pairwise disjoint vertex sets."""
    occupied: set[int] = set()
    for piece in pos.pieces:
        if occupied & piece.support:
            return False
        occupied |= piece.support
    return True


def basic_positions(game: WeightGame, board: Board) -> list[BasicPosition]:
    """All single-piece positions, Left placements first, canonically ordered.

    The length of this list is the number of one-piece legal positions.
    A player whose weight exceeds every connected component simply
    contributes nothing.
    """
    left = [BasicPosition(Player.LEFT, s, board) for s in connected_subsets(board, game.a)]
    right = [BasicPosition(Player.RIGHT, s, board) for s in connected_subsets(board, game.b)]
    return left + right


def max_pieces(game: WeightGame, board: Board) -> int:
    """Upper bound on how many pieces any legal position can hold."""
    return max(board.n // game.a, board.n // game.b)
