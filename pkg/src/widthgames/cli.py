"""Command line front end.

Exit codes: 0 when the requested object exists or the check passes, 1
when the answer is negative (robber wins, nothing found, check failed),
2 for unreadable or malformed input, 3 when a size limit is hit.
"""

import argparse
import json
import sys

from . import oracle, serialize
from .connectivity import carving_fn, cut_rank_fn, delta_fn, lambda_fn
from .decomposition import (
    bdec_to_tdec_cubed,
    find_bdec,
    find_tdec,
    search_tree_to_tdec,
    tdec_to_bdec,
    tdec_to_search_tree,
)
from .errors import LimitExceededError, ParseError, WidthGamesError
from .game import (
    CAPTAIN,
    Position,
    find_bramble,
    legal_robber_moves,
    solve,
)
from .graphs import Graph
from .matroids import Matroid
from .partitions import Partition
from .scenario import check_axioms, check_weak_submodularity
from .widths import (
    matroid_tree_width,
    optimal_graph_tdec,
    vf_tree_width,
    width_parameter,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except LimitExceededError as exc:
        print("limit exceeded: %s" % exc, file=sys.stderr)
        return EXIT_LIMIT
    except (ParseError, json.JSONDecodeError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print("cannot read input: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except (WidthGamesError, ValueError, TypeError, KeyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="widthgames",
        description="Partition search games, their decompositions and "
        "the width parameters built on them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-scenario", help="validate a scenario file")
    p.add_argument("scenario")
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_check_scenario)

    p = sub.add_parser("solve", help="decide the game on a scenario")
    p.add_argument("scenario")
    p.add_argument("--monotone", action="store_true",
                   help="restrict announcements to refine the robber space")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH",
                   help="write the winning strategy as DOT")
    p.set_defaults(run=_cmd_solve)

    for name, help_text in (
        ("tdec", "search for a tree decomposition"),
        ("bdec", "search for a branch decomposition"),
        ("bramble", "search for a bramble"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("scenario")
        p.add_argument("--json", action="store_true")
        if name != "bramble":
            p.add_argument("--dot", metavar="PATH")
        p.set_defaults(run=_cmd_find, what=name)

    p = sub.add_parser("convert", help="convert between decomposition shapes")
    p.add_argument("--from", dest="src", required=True,
                   choices=["tdec", "bdec", "searchtree"])
    p.add_argument("--to", dest="dst", required=True,
                   choices=["tdec", "bdec", "searchtree"])
    p.add_argument("--scenario", required=True,
                   help="scenario file the object lives over")
    p.add_argument("object", help="JSON file holding the object")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(run=_cmd_convert)

    p = sub.add_parser("width", help="compute a width parameter")
    p.add_argument("--param", required=True,
                   choices=["tw", "mtw", "vf-tw", "bw", "tw-f",
                            "rank-width", "carving-width"])
    p.add_argument("--fn", choices=["delta", "cutrank", "carving", "lambda"],
                   help="connectivity function for bw and tw-f")
    p.add_argument("input", help="edge list, graph JSON or matrix JSON")
    p.add_argument("--json", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.set_defaults(run=_cmd_width)

    p = sub.add_parser("verify", help="run a brute-force agreement suite")
    p.add_argument("--suite", required=True,
                   choices=["cor5", "monotonicity", "props", "fact5"])
    p.add_argument("--max-n", type=int, default=5,
                   help="largest ground size for the scenario corpus")
    p.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    p.add_argument("--json", action="store_true")
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("play", help="play the captain against an optimal robber")
    p.add_argument("scenario")
    p.add_argument("--monotone", action="store_true")
    p.set_defaults(run=_cmd_play)

    return parser


# ---------------------------------------------------------------------------
# input loading


def _load_json(path):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_scenario(path):
    return serialize.scenario_from_json(_load_json(path))


def _load_graph(path):
    """A graph, either as JSON or as an edge list.

    Edge list lines hold two vertex names; a single name on a line is an
    isolated vertex; '#' starts a comment.
    """
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if not isinstance(obj, dict) or "edges" not in obj:
            raise ParseError("graph JSON needs an 'edges' list")
        vertices = obj.get("vertices")
        edges = [tuple(e) for e in obj["edges"]]
        if vertices is None:
            vertices = _vertex_order(edges)
        return Graph(vertices, edges)
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            if tokens[0] not in vertices:
                vertices.append(tokens[0])
        elif len(tokens) == 2:
            for v in tokens:
                if v not in vertices:
                    vertices.append(v)
            edges.append((tokens[0], tokens[1]))
        else:
            raise ParseError("line %d: expected one or two names" % lineno)
    if not vertices:
        raise ParseError("no vertices in %s" % path)
    return Graph(vertices, edges)


def _vertex_order(edges):
    seen = []
    for u, v in edges:
        for x in (u, v):
            if x not in seen:
                seen.append(x)
    return seen


def _load_matroid(path):
    """A matroid: a matrix JSON, or the cycle space of a graph input."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if isinstance(obj, dict) and "rows" in obj:
            return serialize.matroid_from_json(obj)
    return Matroid.graphic(_load_graph(path))


def _write_dot(path, text):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)


def _emit(args, obj, plain_lines):
    if args.json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for line in plain_lines:
            print(line)


# ---------------------------------------------------------------------------
# commands


def _cmd_check_scenario(args):
    scenario = _load_scenario(args.scenario)
    axioms = check_axioms(scenario)
    ws = check_weak_submodularity(scenario)
    covering = scenario.simple_union_covers_ground()
    report = {
        "partitions": len(scenario.partition_members()),
        "simple_sets": len(scenario.simple_members()),
        "coarsening_closed": axioms.sc1,
        "blocks_stay_simple": axioms.sc2,
        "splits_feasible": axioms.sc3,
        "weakly_submodular": ws.holds,
        "covering": covering,
    }
    _emit(args, report, [
        "partitions: %d, simple sets: %d"
        % (report["partitions"], report["simple_sets"]),
        "coarsening closed: %s" % _yn(axioms.sc1),
        "blocks of members stay simple: %s" % _yn(axioms.sc2),
        "two-sided splits feasible: %s" % _yn(axioms.sc3),
        "weakly submodular: %s" % _yn(ws.holds),
        "simple sets cover the ground: %s" % _yn(covering),
    ])
    return EXIT_OK if axioms.ok else EXIT_NO


def _yn(flag):
    return "yes" if flag else "no"


def _cmd_solve(args):
    scenario = _load_scenario(args.scenario)
    verdict = solve(scenario, monotone=args.monotone)
    plain = ["winner: %s" % verdict.winner]
    if verdict.strategy is not None:
        plain.append("strategy has %d positions" % len(verdict.strategy.nodes()))
    _emit(args, serialize.verdict_to_json(verdict), plain)
    if args.dot:
        if verdict.strategy is None:
            print("no strategy to draw for a robber win", file=sys.stderr)
        else:
            _write_dot(args.dot, serialize.strategy_to_dot(verdict.strategy))
    return EXIT_OK if verdict.winner == CAPTAIN else EXIT_NO


def _cmd_find(args):
    scenario = _load_scenario(args.scenario)
    if args.what == "tdec":
        found = find_tdec(scenario)
        missing = "no tree decomposition"
    elif args.what == "bdec":
        found = find_bdec(scenario)
        missing = "no branch decomposition"
    else:
        found = find_bramble(scenario)
        missing = "no bramble"
    if found is None:
        if args.json:
            print("null")
        else:
            print(missing)
        return EXIT_NO
    if args.what == "bramble":
        _emit(args, serialize.bramble_to_json(found), [
            "bramble:",
            *("  {%s}" % ",".join(s.names()) for s in found.sets),
        ])
        return EXIT_OK
    plain = ["%s on %d nodes:" % (args.what, found.tree.num_nodes)]
    for leaf in found.tree.leaves():
        plain.append("  leaf %d: {%s}"
                     % (leaf, ",".join(scenario.ground.names_of(found.labels[leaf]))))
    _emit(args, serialize.dec_to_json(found), plain)
    if getattr(args, "dot", None):
        _write_dot(args.dot, serialize.dec_to_dot(found))
    return EXIT_OK


def _cmd_convert(args):
    scenario = _load_scenario(args.scenario)
    obj = _load_json(args.object)
    if args.src == "searchtree":
        thing = serialize.search_tree_from_json(obj)
    else:
        thing = serialize.dec_from_json(obj)
        tag = obj.get("type")
        if tag != args.src:
            raise ParseError("object is %r, not %r" % (tag, args.src))
    result = _convert(scenario, args.src, args.dst, thing)
    if args.dst == "searchtree":
        out = serialize.search_tree_to_json(result)
        dot = serialize.search_tree_to_dot(result)
    else:
        out = serialize.dec_to_json(result)
        dot = serialize.dec_to_dot(result)
    print(json.dumps(out, indent=2, sort_keys=True))
    if args.dot:
        _write_dot(args.dot, dot)
    return EXIT_OK


def _convert(scenario, src, dst, thing):
    if src == "tdec" and dst == "searchtree":
        return tdec_to_search_tree(scenario, thing)
    if src == "tdec" and dst == "bdec":
        return tdec_to_bdec(scenario, thing)
    if src == "searchtree" and dst == "tdec":
        return search_tree_to_tdec(scenario, thing)
    if src == "bdec" and dst == "tdec":
        return bdec_to_tdec_cubed(scenario, thing)
    raise ParseError("no conversion from %s to %s" % (src, dst))


def _cmd_width(args):
    param = args.param
    if param in ("bw", "tw-f"):
        if args.fn is None:
            raise ParseError("%s needs --fn to pick a connectivity function"
                             % param)
        f = _connectivity(args.fn, args.input)
        result = width_parameter("bw" if param == "bw" else "tw_f", f)
        value, witness = result.value, result.witness
    elif param == "tw":
        value, witness = optimal_graph_tdec(_load_graph(args.input))
    elif param == "mtw":
        value, witness = matroid_tree_width(_load_matroid(args.input))
    elif param == "vf-tw":
        value, witness = vf_tree_width(_load_graph(args.input))
    elif param == "rank-width":
        result = width_parameter("rank_width", _load_graph(args.input))
        value, witness = result.value, result.witness
    else:
        result = width_parameter("carving_width", _load_graph(args.input))
        value, witness = result.value, result.witness
    _emit(args, {
        "parameter": param,
        "value": value,
        "witness": serialize.dec_to_json(witness),
    }, [str(value)])
    if args.dot:
        _write_dot(args.dot, serialize.dec_to_dot(witness))
    return EXIT_OK


def _connectivity(name, path):
    if name == "delta":
        return delta_fn(_load_graph(path))
    if name == "cutrank":
        return cut_rank_fn(_load_graph(path))
    if name == "carving":
        return carving_fn(_load_graph(path))
    return lambda_fn(_load_matroid(path))


def _cmd_verify(args):
    if args.suite == "cor5":
        report = oracle.cor5_suite(max_n=args.max_n, seed=args.seed)
    elif args.suite == "monotonicity":
        report = oracle.monotonicity_suite(max_n=args.max_n, seed=args.seed)
    elif args.suite == "props":
        report = oracle.props_suite()
    else:
        report = oracle.fact5_suite()
    if args.json:
        print(json.dumps({
            "suite": report.name,
            "instances": report.instances,
            "failures": list(report.failures),
            "notes": list(report.notes),
        }, indent=2, sort_keys=True))
    else:
        print(report.summary())
        for note in report.notes:
            print("  %s" % note)
        for failure in report.failures[:5]:
            print("  FAILURE: %s" % json.dumps(failure, sort_keys=True))
        if len(report.failures) > 5:
            print("  ... %d more" % (len(report.failures) - 5))
    return EXIT_OK if report.ok else EXIT_NO


# ---------------------------------------------------------------------------
# interactive play


def _cmd_play(args):
    scenario = _load_scenario(args.scenario)
    return play_repl(scenario, monotone=args.monotone)


def play_repl(scenario, monotone=False, in_fn=input, out=None):
    """The user announces partitions; the robber answers optimally.

    The robber declares escape when a standing position comes back and
    no winning announcement is left untried from it.
    """
    if out is None:
        out = sys.stdout
    ground = scenario.ground
    verdict = solve(scenario)
    ranks = verdict.positions
    members = scenario.partition_members()

    def say(text):
        print(text, file=out)

    opening = Partition.indiscrete(ground)
    if not scenario.contains_partition(opening):
        say("the one-block partition is not in the family; nothing to announce")
        say("the robber wins")
        return EXIT_NO
    pos = Position(opening, 0)
    say("ground set {%s}" % ",".join(ground.names))
    say("you are the captain; announce partitions like {%s}{%s}"
        % (ground.names[0], ",".join(ground.names[1:]) or ground.names[0]))
    seen = set()
    tried = {}
    while True:
        space = pos.space()
        key = (pos.partition, space)
        if scenario.contains_simple_mask(space.mask):
            say("capture: the robber space %r is simple" % space)
            return EXIT_OK
        if key in seen and not _untried_winning(
            scenario, members, ranks, pos, tried.get(key, set())
        ):
            say("the robber declares escape: position repeated and no "
                "untried winning announcement remains")
            return EXIT_NO
        seen.add(key)
        say("robber space: %r   standing partition: %s" % (space, pos.partition))
        move = _prompt_move(scenario, pos, monotone, in_fn, say)
        if move is None:
            say("the captain resigns")
            return EXIT_NO
        tried.setdefault(key, set()).add(move)
        answers = legal_robber_moves(scenario, pos, move)
        free = [p for p, captured in answers if not captured]
        if not free:
            say("capture: every robber answer to %s is simple" % move)
            return EXIT_OK
        pos = _robber_choice(ranks, free)


def _prompt_move(scenario, pos, monotone, in_fn, say):
    while True:
        try:
            text = in_fn("announce> ")
        except EOFError:
            return None
        if text.strip() in ("quit", "resign"):
            return None
        try:
            p = Partition.parse(scenario.ground, text)
        except ParseError as exc:
            say("cannot parse: %s" % exc)
            continue
        if not scenario.contains_partition(p):
            say("illegal: %s is not in the partition family" % p)
            continue
        if monotone and not _refines_space(p, pos.space_mask()):
            say("illegal in monotone play: %s does not refine the robber "
                "space" % p)
            continue
        return p


def _refines_space(partition, x):
    return all(b & x == 0 or b & ~x == 0 for b in partition.blocks)


def _robber_choice(ranks, free):
    """Prefer a position outside the captain's winning region; otherwise
    stall where the rank is largest."""
    best = None
    for pos in free:
        r = ranks.get((pos.partition, pos.space()))
        key = (r is not None, -(r or 0), pos.space_mask())
        if best is None or key < best[0]:
            best = (key, pos)
    return best[1]


def _untried_winning(scenario, members, ranks, pos, already):
    """Is there a member announcement, not yet tried from this position,
    all of whose robber answers strictly lower the rank?"""
    here = ranks.get((pos.partition, pos.space()))
    if here is None:
        return False
    for q in members:
        if q in already:
            continue
        answers = legal_robber_moves(scenario, pos, q)
        worst = 0
        good = True
        for nxt, captured in answers:
            if captured:
                continue
            r = ranks.get((nxt.partition, nxt.space()))
            if r is None:
                good = False
                break
            worst = max(worst, r)
        if good and worst < here:
            return True
    return False


if __name__ == "__main__":
    sys.exit(main())
