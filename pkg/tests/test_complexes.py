import math
import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from weightgames import (
    Position,
    WeightGame,
    all_complex_fvectors,
    basic_positions,
    complete,
    cycle,
    f_vector,
    is_valid_fvector,
    legal_complex,
    legal_positions,
    max_pieces,
    path,
)

from oracles import naive_legal_positions, random_connected_board


def small_grid():
    boards = [path(n) for n in range(1, 7)]
    boards += [cycle(n) for n in range(3, 7)]
    boards += [complete(n) for n in range(1, 6)]
    games = [WeightGame(a, b) for a in (1, 2, 3) for b in (1, 2, 3)]
    return [(g, b) for b in boards for g in games]


def test_golden_fvectors():
    assert legal_complex(WeightGame(2, 3), path(5)).f_vector() == (1, 7, 5)
    assert legal_complex(WeightGame(2, 3), cycle(5)).f_vector() == (1, 10, 10)
    assert legal_complex(WeightGame(2, 2), complete(4)).f_vector() == (1, 12, 12)


def test_legal_positions_level_examples():
    got = legal_positions(WeightGame(2, 3), path(5), 2)
    assert [p.notation() for p in got] == [
        "L{1,2} L{3,4}",
        "L{1,2} L{4,5}",
        "L{1,2} R{3,4,5}",
        "L{2,3} L{4,5}",
        "L{4,5} R{1,2,3}",
    ]
    assert legal_positions(WeightGame(2, 3), path(5), 0) == [Position(())]
    assert len(legal_positions(WeightGame(2, 2), complete(4), 2)) == 12
    assert legal_positions(WeightGame(2, 3), path(5), 9) == []
    with pytest.raises(ValueError):
        legal_positions(WeightGame(1, 1), path(3), -1)


def test_complex_shapes_match_known_pictures():
    c = legal_complex(WeightGame(2, 3), path(5))
    assert (len(c.vertices), len(c.faces_by_size[2])) == (7, 5)
    c = legal_complex(WeightGame(2, 3), cycle(5))
    assert (len(c.vertices), len(c.faces_by_size[2])) == (10, 10)


def test_k4_complex_is_three_squares():
    # the 12 edges on 12 vertices split into three disjoint 4-cycles
    c = legal_complex(WeightGame(2, 2), complete(4))
    index = {p: i for i, p in enumerate(c.vertices)}
    adj = {i: set() for i in range(len(c.vertices))}
    for pos in c.faces_by_size[2]:
        i, j = (index[p] for p in pos.pieces)
        adj[i].add(j)
        adj[j].add(i)
    assert all(len(nbrs) == 2 for nbrs in adj.values())
    seen = set()
    components = []
    for start in adj:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u] - comp:
                comp.add(w)
                stack.append(w)
        seen |= comp
        components.append(comp)
    assert sorted(len(c) for c in components) == [4, 4, 4]


def test_empty_complex_fvector():
    assert legal_complex(WeightGame(9, 9), path(5)).f_vector() == (1,)
    assert legal_complex(WeightGame(6, 7), path(5)).f_vector() == (1,)


def test_f1_equals_basic_position_count():
    for game, board in small_grid():
        fv = legal_complex(game, board).f_vector()
        f1 = fv[1] if len(fv) > 1 else 0
        assert f1 == len(basic_positions(game, board))


def test_enumeration_matches_naive_filter():
    for game, board in small_grid():
        for k in range(max_pieces(game, board) + 2):
            assert legal_positions(game, board, k) == naive_legal_positions(game, board, k)


def test_downward_closure_and_dimension():
    for game, board in small_grid():
        c = legal_complex(game, board)
        fv = c.f_vector()
        assert fv[0] == 1 and fv[-1] > 0
        assert is_valid_fvector(fv)
        assert c.dim <= max_pieces(game, board)
        levels = [set(level) for level in c.faces_by_size]
        for k in range(1, len(levels)):
            for pos in c.faces_by_size[k]:
                for drop in range(k):
                    sub = Position(pos.pieces[:drop] + pos.pieces[drop + 1:])
                    assert sub in levels[k - 1]


def test_weight1_game_counts_exactly():
    rng = random.Random(40507)
    boards = [path(6), cycle(6), complete(6)]
    boards += [random_connected_board(rng.randint(1, 7), rng) for _ in range(8)]
    game = WeightGame(1, 1)
    for board in boards:
        fv = legal_complex(game, board).f_vector()
        assert len(fv) == board.n + 1
        for i, fi in enumerate(fv):
            assert fi == math.comb(board.n, i) * 2**i


def test_deterministic_and_thread_safe():
    game, board = WeightGame(2, 3), cycle(6)
    first = legal_complex(game, board)
    assert first == legal_complex(game, board)
    with ThreadPoolExecutor(max_workers=2) as pool:
        futures = [pool.submit(legal_complex, game, board) for _ in range(4)]
        assert all(f.result() == first for f in futures)
    assert f_vector(first) == first.f_vector()


def test_all_complex_fvectors_small():
    assert all_complex_fvectors(1) == {(1,), (1, 1)}
    assert all_complex_fvectors(2) == {(1,), (1, 1), (1, 2), (1, 2, 1)}
    three = all_complex_fvectors(3)
    assert (1, 3, 3, 1) in three
    assert (1, 2, 1) in three
    for m in (1, 2, 3, 4):
        assert (1, 1, 1) not in all_complex_fvectors(m)
    with pytest.raises(ValueError):
        all_complex_fvectors(0)
    with pytest.raises(ValueError):
        all_complex_fvectors(6)
