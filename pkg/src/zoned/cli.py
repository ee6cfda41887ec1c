"""Command-line surface: compute, verify, uniq, render.

Exit codes are part of the contract:

  0  success (for verify: the candidate checks out)
  2  unreadable or invalid input (files, flags, space axiom violations)
  3  verification failed
  4  the game did not reach a stable configuration within the move budget
  5  enumeration larger than the candidate cap
  6  operation needs exactly two site groups
  7  rendering needs a 2-d grid space
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine, game, serialize, uniqueness
from .core import validate_mspace
from .engine import CapExceededError, OrderNotTwoError
from .render import NonGridSpaceError, render_result

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY_FAILED = 3
EXIT_NO_CONVERGENCE = 4
EXIT_CAP = 5
EXIT_ORDER = 6
EXIT_RENDER = 7


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zoned",
        description="compute, verify, and analyze zone diagrams on finite spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute a zone or double zone diagram")
    compute.add_argument("--space", required=True)
    compute.add_argument("--sites", required=True)
    compute.add_argument("--mode", required=True, choices=["double", "order2", "game"])
    compute.add_argument("--direction", choices=["ascending", "descending"],
                         default="ascending")
    compute.add_argument("--variant", choices=["R", "S", "Z", "W"], default="R")
    compute.add_argument("--policy", choices=["sweep", "random"], default="sweep")
    compute.add_argument("--seed", type=int, default=None)
    compute.add_argument("--max-moves", type=int, default=None)
    compute.add_argument("--epsilon", type=float, default=0.0)
    compute.add_argument("--out", required=True)

    verify = sub.add_parser("verify", help="check a candidate against its definition")
    verify.add_argument("--space", required=True)
    verify.add_argument("--sites", required=True)
    verify.add_argument("--candidate", required=True)
    verify.add_argument("--kind", choices=["zone", "double"], default="zone")
    verify.add_argument("--epsilon", type=float, default=0.0)

    uniq = sub.add_parser("uniq", help="evaluate the uniqueness conditions")
    uniq.add_argument("--space", required=True)
    uniq.add_argument("--sites", required=True)
    uniq.add_argument("--effort", choices=[uniqueness.BRACKETING, uniqueness.BRUTE_FORCE],
                      default=uniqueness.BRACKETING)
    uniq.add_argument("--cap", type=int, default=1 << 24)
    uniq.add_argument("--epsilon", type=float, default=0.0)
    uniq.add_argument("--out", default=None)

    render = sub.add_parser("render", help="draw a 2-d grid result as a PPM image")
    render.add_argument("--result", required=True)
    render.add_argument("--out", required=True)
    return parser


def _load_inputs(args):
    _, space = serialize.load_space(args.space)
    ok, violations = validate_mspace(space)
    if not ok:
        shown = ", ".join(map(str, violations[:5]))
        raise ValueError(f"space violates the self-distance axiom at: {shown}")
    sites = serialize.load_sites(args.sites, space)
    return space, sites


def _cmd_compute(args) -> int:
    space, sites = _load_inputs(args)
    if args.mode == "double":
        result = engine.iterate_double_zone(space, sites, args.direction, args.epsilon)
        doc = serialize.result_to_dict(space, sites, result)
    elif args.mode == "order2":
        if sites.k_count != 2:
            raise OrderNotTwoError(f"order2 needs 2 site groups, got {sites.k_count}")
        result = engine.zone_order2(space, sites[0], sites[1], args.variant, args.epsilon)
        doc = serialize.result_to_dict(space, sites, result,
                                       extra={"variant": args.variant})
    else:
        policy = game.GamePolicy(args.policy, "lowest", args.seed)
        state, stable = game.game_run(space, sites, policy, args.max_moves, args.epsilon)
        if not stable:
            print(f"no stable configuration within {state.move_count} moves",
                  file=sys.stderr)
            return EXIT_NO_CONVERGENCE
        ok, _ = engine.verify_zone(space, sites, state.regions, args.epsilon)
        assert ok, "stable configuration failed verification"
        result = engine.ZoneResult(state.regions, "zone", "unknown")
        doc = serialize.result_to_dict(
            space, sites, result,
            extra={"stable": True, "moves": state.move_count},
        )
    serialize.write_json(doc, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    space, sites = _load_inputs(args)
    candidate = serialize.regions_from_dict(
        serialize.read_json(args.candidate), space.size
    )
    check = engine.verify_zone if args.kind == "zone" else engine.verify_double_zone
    ok, diffs = check(space, sites, candidate, args.epsilon)
    for k, diff in enumerate(diffs):
        status = "ok" if not diff else f"differs at {sorted(diff)}"
        print(f"component {k}: {status}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_uniq(args) -> int:
    space, sites = _load_inputs(args)
    report = uniqueness.uniqueness_check(space, sites, args.effort, args.cap,
                                         args.epsilon)
    doc = {
        "conditions": report.conditions(),
        "zone_count": report.zone_count,
        "minimal": [sorted(c) for c in report.minimal],
        "maximal": [sorted(c) for c in report.maximal],
    }
    if args.out:
        serialize.write_json(doc, args.out)
    else:
        json.dump(doc, sys.stdout, indent=1, sort_keys=True)
        print()
    return EXIT_OK


def _cmd_render(args) -> int:
    render_result(serialize.read_json(args.result), args.out)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {
        "compute": _cmd_compute,
        "verify": _cmd_verify,
        "uniq": _cmd_uniq,
        "render": _cmd_render,
    }[args.command]
    try:
        return handler(args)
    except json.JSONDecodeError as err:
        print(f"bad JSON: {err.msg} at line {err.lineno} column {err.colno}",
              file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as err:
        print(f"missing file: {err.filename}", file=sys.stderr)
        return EXIT_INPUT
    except OrderNotTwoError as err:
        print(str(err), file=sys.stderr)
        return EXIT_ORDER
    except CapExceededError as err:
        print(str(err), file=sys.stderr)
        return EXIT_CAP
    except NonGridSpaceError as err:
        print(str(err), file=sys.stderr)
        return EXIT_RENDER
    except (ValueError, KeyError) as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
