#!/usr/bin/env python3
"""
CLI tool for the recursion-coin Monte Carlo experiment
"""
import argparse
import json
import sys
import os

# Add parent directory to path to import modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import TinyColorError
from harness import coin_experiment


def main():
    parser = argparse.ArgumentParser(
        description='Measure where the randomized policy first recurses on a single node')
    parser.add_argument('--d', type=int, default=2, help='Outdegree cap d (default: 2)')
    parser.add_argument('--trials', type=int, default=1_000_000, help='Number of trials (default: 10^6)')
    parser.add_argument('--seed', type=int, default=0, help='Coin seed (default: 0)')
    parser.add_argument('--threshold-mult', type=float, default=6, help='Threshold multiple of d (default: 6)')
    parser.add_argument('--tolerance', type=float, default=0.002,
                        help='Allowed absolute deviation per position (default: 0.002)')
    parser.add_argument('--json', action='store_true', help='Print the result as one JSON object')

    args = parser.parse_args()

    try:
        result = coin_experiment(args.d, args.trials, seed=args.seed, threshold_mult=args.threshold_mult)
    except TinyColorError as e:
        print(f"❌ Error: {e}")
        sys.exit(2)

    if args.json:
        print(json.dumps(result._asdict(), sort_keys=True))
    else:
        print(f"d={result.d}, trials={result.trials}, seed={result.seed}")
        print(f"{'pos':>4} {'empirical':>10} {'analytic':>10}")
        for pos, (emp, ana) in enumerate(zip(result.empirical, result.analytic), start=1):
            print(f"{pos:>4} {emp:>10.6f} {ana:>10.6f}")
        print(f"Max deviation: {result.max_deviation:.6f}")

    if result.max_deviation <= args.tolerance:
        print(f"✅ Within {args.tolerance} of the analytic distribution")
        sys.exit(0)
    print(f"❌ Deviation above {args.tolerance}")
    sys.exit(1)


if __name__ == '__main__':
    main()
