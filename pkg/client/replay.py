#!/usr/bin/env python3
"""
CLI tool for replaying a workload file against a coloring stack

Exit codes: 0 clean run, 1 conflicts or invariant violation, 2 bad input.
"""
import argparse
import sys
import os

# Add parent directory to path to import modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import InvariantViolation, ParseError, TinyColorError
from harness import load_config, run


def config_overrides(args):
    """Flags given on the command line, in config layout (None = not given)"""
    return {
        "coloring": {
            "policy": args.policy,
            "threshold_mult": args.threshold_mult,
            "palette_mult": args.palette_mult,
        },
        "orientation": {
            "strategy": args.orientation,
            "cap_multiplier": args.cap_multiplier,
            "rebuild_interval": args.rebuild_interval,
        },
        "partition": {"k": args.partition},
        "run": {
            "seed": args.seed,
            "out": args.out,
            "strict": True if args.strict else None,
            "timings": True if args.timings else None,
        },
    }


def main():
    parser = argparse.ArgumentParser(description='Replay a workload against an implicit coloring stack')
    parser.add_argument('workload', help='Workload file (see docs/WORKLOAD_FORMAT.md)')
    parser.add_argument('--config', help='Configuration file (default: ./config.json if present)')
    parser.add_argument('--policy', choices=['det', 'rand', 'uniform'], help='Recursion policy (default: det)')
    parser.add_argument('--orientation', choices=['static', 'amortized'], help='Orientation strategy (default: amortized)')
    parser.add_argument('--partition', type=int, metavar='K', help='Number of vertex parts (default: 1)')
    parser.add_argument('--seed', type=int, help='Seed for coins and partition hashing (default: 0)')
    parser.add_argument('--threshold-mult', type=float, help='Recursion threshold as a multiple of d (default: 6)')
    parser.add_argument('--palette-mult', type=float, help='Palette size as a multiple of d (default: 9)')
    parser.add_argument('--cap-multiplier', type=float, help='Amortized orientation cap multiplier (default: 4)')
    parser.add_argument('--rebuild-interval', type=int, help='Deletions between amortized rebuilds (default: 32)')
    parser.add_argument('--out', help='JSONL report path (default: report.jsonl)')
    parser.add_argument('--strict', action='store_true', help='Full-scan invariant checks after every query')
    parser.add_argument('--timings', action='store_true', help='Add mean wall time per op class to the summary')

    args = parser.parse_args()

    try:
        config = load_config(args.config, config_overrides(args))
    except TinyColorError as e:
        print(f"❌ Error: {e}")
        sys.exit(2)

    out = config['run']['out']
    try:
        report = run(args.workload, config, out=out)
    except FileNotFoundError:
        print(f"❌ Error: workload file {args.workload} not found")
        sys.exit(2)
    except ParseError as e:
        print(f"❌ Parse error in {args.workload}, {e}")
        sys.exit(2)
    except InvariantViolation as e:
        print(f"❌ Invariant violation: {e}")
        print(f"Partial report written to {out}")
        sys.exit(1)
    except TinyColorError as e:
        print(f"❌ Error: {e}")
        sys.exit(2)

    from template_utils import templates
    print()
    print(templates.render_run_summary(report.summary, config, workload_path=args.workload))

    if report.exit_code == 0:
        print("✅ Run clean")
    else:
        print(f"❌ Run found {report.summary['conflicts']} conflicts")
    sys.exit(report.exit_code)


if __name__ == '__main__':
    main()
