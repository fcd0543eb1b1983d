"""Command-line surface: enumeration, f-vectors, closed forms, canonical
representations, oracle diffs, bound sweeps, and complex exports.

Exit codes: 0 success, 1 domain error (bad parameter values), 2 parse
error (malformed flags or input files), 3 oracle/formula mismatch from
``diff``. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .board import COMPLETE, CYCLE, PATH, Board, BoardSpecError, complete, cycle, parse_board, path
from .compare import render_csv, sweep
from .complexes import LegalComplex, legal_complex, legal_positions
from .formulas import (
    PairCounts,
    complete_fk,
    complete_fk_terms,
    cycle_f1,
    cycle_f2_parts,
    path_f1,
    path_f2_parts,
)
from .game import Player, WeightGame, max_pieces
from .kruskal_katona import canonical_rep, fvector_violation, pseudopower

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_DIFF = 3

_BOARD_BUILDERS = {PATH: path, CYCLE: cycle, COMPLETE: complete}


def _weights_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"weights must look like a,b; got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be integers; got {text!r}") from None


def _range_arg(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            n = int(text)
            return n, n
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like lo..hi or n; got {text!r}") from None


def _fvector_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"f-vector must be comma-separated integers; got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightgames",
        description="Weight games on graph boards: legal positions, f-vectors, "
        "closed-form counts, and Kruskal-Katona checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def board_flag(p, with_n: bool):
        if with_n:
            p.add_argument("--board", required=True, help="path:N, cycle:N, complete:N, or file:PATH")
        else:
            p.add_argument("--board", required=True, choices=[PATH, CYCLE, COMPLETE], help="board family")

    def weights_flag(p):
        p.add_argument("--weights", required=True, type=_weights_arg, metavar="A,B",
                       help="piece weights, Left first")

    p = sub.add_parser("fvector", help="f-vector of the legal complex, by enumeration")
    board_flag(p, with_n=True)
    weights_flag(p)
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_fvector)

    p = sub.add_parser("enumerate", help="list the legal positions with k pieces")
    board_flag(p, with_n=True)
    weights_flag(p)
    p.add_argument("--k", required=True, type=int, help="piece count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("formula", help="closed-form count with its case trace")
    board_flag(p, with_n=True)
    weights_flag(p)
    p.add_argument("--k", required=True, type=int, help="piece count")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("kk", help="canonical representations and f-vector checks")
    kksub = p.add_subparsers(dest="kk_command", required=True)
    q = kksub.add_parser("rep", help="i-canonical representation of f")
    q.add_argument("f", type=int)
    q.add_argument("i", type=int)
    q.set_defaults(func=cmd_kk_rep)
    q = kksub.add_parser("pseudo", help="jth pseudopower of f at index i")
    q.add_argument("f", type=int)
    q.add_argument("i", type=int)
    q.add_argument("j", type=int)
    q.set_defaults(func=cmd_kk_pseudo)
    q = kksub.add_parser("check", help="test whether a vector is a complex f-vector")
    q.add_argument("fvector", type=_fvector_arg, metavar="F0,F1,...")
    q.set_defaults(func=cmd_kk_check)

    p = sub.add_parser("diff", help="closed forms against brute-force enumeration")
    board_flag(p, with_n=False)
    weights_flag(p)
    p.add_argument("--n", required=True, type=_range_arg, metavar="LO..HI", help="board sizes")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("compare", help="CSV sweep of exact f2 against the pseudopower bound")
    board_flag(p, with_n=False)
    weights_flag(p)
    p.add_argument("--n", required=True, type=_range_arg, metavar="LO..HI", help="board sizes")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("export", help="dump the whole legal complex")
    board_flag(p, with_n=True)
    weights_flag(p)
    p.add_argument("--format", choices=["faces", "json"], default="faces")
    p.set_defaults(func=cmd_export)

    return parser


def _board_and_game(args) -> tuple[Board, WeightGame]:
    board = parse_board(args.board)
    a, b = args.weights
    return board, WeightGame(a, b)


def cmd_fvector(args) -> int:
    board, game = _board_and_game(args)
    fv = legal_complex(game, board).f_vector()
    if args.json:
        payload = {
            "board": str(board),
            "weights": [game.a, game.b],
            "f_vector": [str(x) for x in fv],
        }
        print(json.dumps(payload))
    else:
        print(",".join(str(x) for x in fv))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    board, game = _board_and_game(args)
    if args.k < 0:
        raise ValueError(f"piece count must be >= 0, got {args.k}")
    positions = legal_positions(game, board, args.k)
    for pos in positions:
        print(pos.notation())
    print(f"# count={len(positions)}")
    return EXIT_OK


def _path_f1_case(n: int, a: int, b: int) -> str:
    if a > n and b > n:
        return "a,b>n"
    if a <= n and b > n:
        return "a<=n, b>n"
    if a > n and b <= n:
        return "b<=n, a>n"
    return "a,b<=n"


def _cycle_f1_case(n: int, a: int, b: int) -> str:
    if a > n and b > n:
        return "a,b>n"
    if a <= n and b <= n:
        return "a,b<=n"
    return "exactly one of a,b<=n"


def cmd_formula(args) -> int:
    board, game = _board_and_game(args)
    n, a, b, k = board.n, game.a, game.b, args.k
    if k < 0:
        raise ValueError(f"piece count must be >= 0, got {k}")
    if board.kind == COMPLETE:
        terms = complete_fk_terms(n, a, b, k)
        print(f"f{k} = {sum(terms)}")
        print("terms: " + " ".join(f"l={l}:{t}" for l, t in enumerate(terms)))
        return EXIT_OK
    if board.kind not in (PATH, CYCLE):
        raise ValueError("no closed form for custom boards")
    if k >= 3:
        raise ValueError(f"no closed form for k={k} on {board.kind} boards (k must be 0..2)")
    if k == 0:
        print("f0 = 1")
        print("case: empty position")
    elif k == 1:
        if board.kind == PATH:
            print(f"f1 = {path_f1(n, a, b)}")
            print(f"case: {_path_f1_case(n, a, b)}")
        else:
            print(f"f1 = {cycle_f1(n, a, b)}")
            print(f"case: {_cycle_f1_case(n, a, b)}")
    else:
        parts = path_f2_parts(n, a, b) if board.kind == PATH else cycle_f2_parts(n, a, b)
        print(f"f2 = {parts.total}")
        print(f"N_LL={parts.n_ll} N_LR={parts.n_lr} N_RR={parts.n_rr}")
    return EXIT_OK


def cmd_kk_rep(args) -> int:
    print(str(canonical_rep(args.f, args.i)))
    return EXIT_OK


def cmd_kk_pseudo(args) -> int:
    print(pseudopower(args.f, args.i, args.j))
    return EXIT_OK


def cmd_kk_check(args) -> int:
    violation = fvector_violation(args.fvector)
    print("valid" if violation is None else f"invalid: {violation}")
    return EXIT_OK


def _oracle_pair_counts(game: WeightGame, board: Board) -> PairCounts:
    counts = {"LL": 0, "LR": 0, "RR": 0}
    for pos in legal_positions(game, board, 2):
        lefts = sum(1 for p in pos.pieces if p.player is Player.LEFT)
        counts[{2: "LL", 1: "LR", 0: "RR"}[lefts]] += 1
    return PairCounts(n_ll=counts["LL"], n_lr=counts["LR"], n_rr=counts["RR"])


def _diff_point(kind: str, n: int, game: WeightGame) -> list[str]:
    board = _BOARD_BUILDERS[kind](n)
    problems = []
    if kind == COMPLETE:
        c = legal_complex(game, board)
        fv = c.f_vector()
        for k in range(max_pieces(game, board) + 1):
            formula = complete_fk(n, game.a, game.b, k)
            oracle = fv[k] if k < len(fv) else 0
            if formula != oracle:
                problems.append(f"f{k}: formula={formula} oracle={oracle}")
        return problems
    f1_formula = path_f1(n, game.a, game.b) if kind == PATH else cycle_f1(n, game.a, game.b)
    f1_oracle = len(legal_positions(game, board, 1))
    if f1_formula != f1_oracle:
        problems.append(f"f1: formula={f1_formula} oracle={f1_oracle}")
    parts = path_f2_parts(n, game.a, game.b) if kind == PATH else cycle_f2_parts(n, game.a, game.b)
    oracle_parts = _oracle_pair_counts(game, board)
    for label, got, want in (
        ("N_LL", parts.n_ll, oracle_parts.n_ll),
        ("N_LR", parts.n_lr, oracle_parts.n_lr),
        ("N_RR", parts.n_rr, oracle_parts.n_rr),
        ("f2", parts.total, oracle_parts.total),
    ):
        if got != want:
            problems.append(f"{label}: formula={got} oracle={want}")
    return problems


def cmd_diff(args) -> int:
    kind = args.board
    a, b = args.weights
    game = WeightGame(a, b)
    lo, hi = args.n
    if lo > hi:
        raise ValueError(f"empty size range {lo}..{hi}")
    bad = 0
    total = 0
    for n in range(lo, hi + 1):
        total += 1
        problems = _diff_point(kind, n, game)
        if problems:
            bad += 1
            for problem in problems:
                print(f"MISMATCH board={kind} n={n} a={a} b={b} {problem}")
    if bad:
        print(f"FAIL {total - bad}/{total}")
        return EXIT_DIFF
    print(f"OK {total}/{total}")
    return EXIT_OK


def cmd_compare(args) -> int:
    a, b = args.weights
    lo, hi = args.n
    rows = sweep(args.board, a, b, lo, hi)
    print(render_csv(rows))
    return EXIT_OK


def _faces_text(c: LegalComplex) -> str:
    fv = ",".join(str(x) for x in c.f_vector())
    lines = [f"# board={c.board} weights={c.game.a},{c.game.b} f_vector={fv}"]
    for k, level in enumerate(c.faces_by_size):
        lines.append(f"# k={k}")
        lines.extend(pos.notation() for pos in level)
    return "\n".join(lines)


def _complex_json(c: LegalComplex) -> str:
    index = {piece: i for i, piece in enumerate(c.vertices)}
    payload = {
        "board": {
            "kind": c.board.kind,
            "n": c.board.n,
            "edges": [[u, v] for u, v in sorted(c.board.edges)],
        },
        "weights": [c.game.a, c.game.b],
        "f_vector": [str(x) for x in c.f_vector()],
        "vertices": [piece.notation() for piece in c.vertices],
        "faces": [
            [[index[piece] for piece in pos.pieces] for pos in level]
            for level in c.faces_by_size
        ],
    }
    return json.dumps(payload, indent=2)


def cmd_export(args) -> int:
    board, game = _board_and_game(args)
    c = legal_complex(game, board)
    print(_faces_text(c) if args.format == "faces" else _complex_json(c))
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except BoardSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
