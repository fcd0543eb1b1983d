import random

import pytest

from weightgames import (
    Board,
    BoardSpecError,
    complete,
    connected_subsets,
    cycle,
    from_edge_list,
    is_connected_subset,
    parse_board,
    path,
)

from oracles import naive_connected_subsets, random_board

# 9-vertex board with a 4-cycle hanging off a path and two pendants
BRANCHED_9 = [(1, 2), (2, 3), (3, 4), (2, 4), (2, 5), (5, 7), (7, 8), (5, 6), (7, 9)]


def test_path_boards():
    assert path(1).n == 1 and path(1).edges == frozenset()
    assert path(2).edges == {(1, 2)}
    assert path(5).edges == {(1, 2), (2, 3), (3, 4), (4, 5)}
    assert path(5).kind == "path"
    with pytest.raises(ValueError):
        path(0)


def test_cycle_boards():
    assert cycle(3).edges == {(1, 2), (2, 3), (1, 3)}
    assert len(cycle(5).edges) == 5
    with pytest.raises(ValueError):
        cycle(2)


def test_complete_boards():
    assert complete(1).n == 1 and complete(1).edges == frozenset()
    assert len(complete(4).edges) == 6
    assert complete(3).edges == cycle(3).edges
    assert complete(3).kind != cycle(3).kind
    with pytest.raises(ValueError):
        complete(0)


def test_from_edge_list():
    b = from_edge_list(9, BRANCHED_9)
    assert b.n == 9 and len(b.edges) == 9 and b.kind == "custom"
    assert from_edge_list(3, []).edges == frozenset()
    # unordered input and duplicates collapse
    assert from_edge_list(3, [(2, 1), (1, 2)]).edges == {(1, 2)}
    with pytest.raises(ValueError):
        from_edge_list(2, [(1, 3)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(2, 2)])


def test_board_kind_consistency_enforced():
    with pytest.raises(ValueError):
        Board(3, frozenset({(1, 3)}), kind="path")
    with pytest.raises(ValueError):
        Board(4, frozenset({(1, 2)}), kind="complete")


def test_connected_subsets_on_small_boards():
    assert connected_subsets(path(5), 2) == [
        frozenset(s) for s in [{1, 2}, {2, 3}, {3, 4}, {4, 5}]
    ]
    assert len(connected_subsets(complete(4), 2)) == 6
    arcs = connected_subsets(cycle(5), 3)
    assert [tuple(sorted(s)) for s in arcs] == [
        (1, 2, 3), (1, 2, 5), (1, 4, 5), (2, 3, 4), (3, 4, 5),
    ]


def test_connected_subsets_branched_board():
    b = from_edge_list(9, BRANCHED_9)
    size4 = connected_subsets(b, 4)
    assert frozenset({1, 2, 3, 4}) in size4
    assert frozenset({1, 3, 5, 6}) not in size4


def test_connected_subsets_counts():
    for n in range(1, 9):
        for w in range(1, n + 1):
            assert len(connected_subsets(path(n), w)) == n - w + 1
            assert len(connected_subsets(complete(n), w)) == len(
                naive_connected_subsets(complete(n), w)
            )
    for n in range(3, 9):
        for w in range(1, n):
            assert len(connected_subsets(cycle(n), w)) == n
        assert len(connected_subsets(cycle(n), n)) == 1


def test_connected_subsets_edge_cases():
    assert connected_subsets(path(3), 7) == []
    with pytest.raises(ValueError):
        connected_subsets(path(3), 0)


def test_connected_subsets_match_naive_filter():
    rng = random.Random(1105)
    boards = [path(n) for n in range(1, 11)]
    boards += [cycle(n) for n in range(3, 11)]
    boards += [complete(n) for n in range(1, 11)]
    boards += [from_edge_list(9, BRANCHED_9)]
    boards += [random_board(n, rng) for n in range(2, 10) for _ in range(2)]
    for board in boards:
        for w in range(1, board.n + 1):
            got = connected_subsets(board, w)
            assert got == naive_connected_subsets(board, w)
            assert len(got) == len(set(got))


def test_connected_subsets_deterministic():
    b = from_edge_list(9, BRANCHED_9)
    assert connected_subsets(b, 4) == connected_subsets(b, 4)


def test_is_connected_subset():
    b = from_edge_list(9, BRANCHED_9)
    assert is_connected_subset(b, {1, 2, 3, 4})
    assert not is_connected_subset(b, {1, 3, 5, 6})
    assert is_connected_subset(b, {6})
    with pytest.raises(ValueError):
        is_connected_subset(b, {10})


def test_parse_board_specs():
    assert parse_board("path:5") == path(5)
    assert parse_board("cycle:6") == cycle(6)
    assert parse_board("complete:4") == complete(4)
    with pytest.raises(BoardSpecError):
        parse_board("path")
    with pytest.raises(BoardSpecError):
        parse_board("path:x")
    with pytest.raises(BoardSpecError):
        parse_board("triangle:3")
    with pytest.raises(ValueError):
        parse_board("cycle:2")


def test_parse_board_file(tmp_path):
    f = tmp_path / "board.txt"
    f.write_text("# branched sample\n9\n1 2\n2 3\n3 4\n2 4\n2 5\n5 7\n7 8\n5 6\n7 9  # pendant\n")
    b = parse_board(f"file:{f}")
    assert b == from_edge_list(9, BRANCHED_9)

    isolated = tmp_path / "isolated.txt"
    isolated.write_text("3\n")
    assert parse_board(f"file:{isolated}").edges == frozenset()

    bad = tmp_path / "bad.txt"
    bad.write_text("3\n1 2 3\n")
    with pytest.raises(BoardSpecError):
        parse_board(f"file:{bad}")
    with pytest.raises(BoardSpecError):
        parse_board(f"file:{tmp_path / 'missing.txt'}")
