"""Graph boards for placement games.

A board is an undirected simple graph on vertices 1..n. Pieces occupy
connected vertex sets, so everything downstream leans on the
connected-subset enumerator in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

PATH = "path"
CYCLE = "cycle"
COMPLETE = "complete"
CUSTOM = "custom"
_KINDS = (PATH, CYCLE, COMPLETE, CUSTOM)


class BoardSpecError(ValueError):
    """A board description string or board file could not be parsed."""


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _path_edges(n: int) -> frozenset[tuple[int, int]]:
    return frozenset((i, i + 1) for i in range(1, n))


def _cycle_edges(n: int) -> frozenset[tuple[int, int]]:
    return _path_edges(n) | {(1, n)}


def _complete_edges(n: int) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@dataclass(frozen=True)
class Board:
    """Undirected simple graph on vertices 1..n.

    ``kind`` tags how the board was built (path/cycle/complete/custom) and
    is used only for display and closed-form dispatch; the edge set is the
    actual structure.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    kind: str = CUSTOM

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"board needs at least one vertex, got n={self.n}")
        if self.kind not in _KINDS:
            raise ValueError(f"unknown board kind {self.kind!r}")
        object.__setattr__(self, "edges", frozenset(_edge(u, v) for u, v in self.edges))
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{self.n}")
        if self.kind == PATH and self.edges != _path_edges(self.n):
            raise ValueError("kind=path requires exactly the consecutive edges")
        if self.kind == CYCLE:
            if self.n < 3:
                raise ValueError(f"a cycle needs n >= 3, got n={self.n}")
            if self.edges != _cycle_edges(self.n):
                raise ValueError("kind=cycle requires exactly the cycle edges")
        if self.kind == COMPLETE and self.edges != _complete_edges(self.n):
            raise ValueError("kind=complete requires all vertex pairs as edges")

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(s) for v, s in adj.items()}

    def __str__(self) -> str:
        return f"{self.kind}:{self.n}"


def path(n: int) -> Board:
    """Path board: vertices 1..n with edges {i, i+1}."""
    return Board(n, _path_edges(n), PATH)


def cycle(n: int) -> Board:
    """Cycle board: the path edges plus {1, n}; needs n >= 3."""
    if n < 3:
        raise ValueError(f"a cycle needs n >= 3, got n={n}")
    return Board(n, _cycle_edges(n), CYCLE)


def complete(n: int) -> Board:
    """Complete board: all C(n,2) vertex pairs are edges."""
    return Board(n, _complete_edges(n), COMPLETE)


def from_edge_list(n: int, edges) -> Board:
    """Custom board from explicit edges; duplicates are collapsed."""
    return Board(n, frozenset(_edge(u, v) for u, v in edges), CUSTOM)


def is_connected_subset(board: Board, vertices) -> bool:
    """Whether the induced subgraph on ``vertices`` is connected.

    Single vertices count as connected; the empty set does not.
    """
    vs = frozenset(vertices)
    if not vs:
        return False
    if not all(1 <= v <= board.n for v in vs):
        raise ValueError(f"vertices {sorted(vs)} out of range 1..{board.n}")
    adj = board.neighbors
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u] & vs:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def connected_subsets(board: Board, w: int) -> list[frozenset[int]]:
    """All w-element vertex sets whose induced subgraph is connected.

    Each set is generated exactly once, grown from its smallest vertex:
    only larger vertices may be added, and a vertex becomes a candidate
    the first time the growing set reaches one of its neighbours. Output
    is sorted by the sorted vertex tuples.
    """
    if w < 1:
        raise ValueError(f"subset size must be >= 1, got {w}")
    if w > board.n:
        return []
    adj = board.neighbors
    found: list[frozenset[int]] = []
    if w == 1:
        return [frozenset((v,)) for v in range(1, board.n + 1)]
    for anchor in range(1, board.n + 1):
        ext = [u for u in adj[anchor] if u > anchor]
        _grow((anchor,), ext, {anchor} | set(adj[anchor]), w, anchor, adj, found)
    found.sort(key=lambda s: tuple(sorted(s)))
    return found


def _grow(sub, ext, closed, w, anchor, adj, out):
    # closed = sub plus every vertex already reachable in one step, so a
    # candidate is offered at most once per branch.
    if len(sub) == w:
        out.append(frozenset(sub))
        return
    remaining = list(ext)
    while remaining:
        u = remaining.pop()
        fresh = [x for x in adj[u] if x > anchor and x not in closed]
        _grow(sub + (u,), remaining + fresh, closed | adj[u], w, anchor, adj, out)


def parse_board(spec: str) -> Board:
    """Build a board from a text spec.

    Accepted forms: ``path:N``, ``cycle:N``, ``complete:N``, ``file:PATH``.
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise BoardSpecError(f"board spec {spec!r} needs the form kind:value")
    if kind == "file":
        return load_board_file(rest)
    if kind not in (PATH, CYCLE, COMPLETE):
        raise BoardSpecError(f"unknown board kind {kind!r} in {spec!r}")
    try:
        n = int(rest)
    except ValueError:
        raise BoardSpecError(f"board size {rest!r} is not an integer") from None
    return {PATH: path, CYCLE: cycle, COMPLETE: complete}[kind](n)


def load_board_file(filename) -> Board:
    """Read a board file: first line the vertex count, then one `u v` edge
    per line; blank lines and ``#`` comments are skipped."""
    try:
        text = Path(filename).read_text()
    except OSError as exc:
        raise BoardSpecError(f"cannot read board file {filename!r}: {exc}") from None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise BoardSpecError(
                f"{filename}:{lineno}: expected integers, got {line!r}"
            ) from None
        rows.append((lineno, values))
    if not rows:
        raise BoardSpecError(f"board file {filename!r} has no content")
    first_lineno, first = rows[0]
    if len(first) != 1:
        raise BoardSpecError(f"{filename}:{first_lineno}: first line must be the vertex count")
    edges = []
    for lineno, values in rows[1:]:
        if len(values) != 2:
            raise BoardSpecError(f"{filename}:{lineno}: expected an edge `u v`")
        edges.append((values[0], values[1]))
    return from_edge_list(first[0], edges)
