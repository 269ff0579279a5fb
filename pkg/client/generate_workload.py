#!/usr/bin/env python3
"""
CLI tool for generating seeded workload files
"""
import argparse
import sys
import os

# Add parent directory to path to import modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from errors import TinyColorError
from workload import save_workload
from workload_gen import FAMILIES, GENERATORS, generate


def collect_params(args):
    """Generator keyword arguments for the chosen kind"""
    if args.kind == 'gnm_sweep':
        return {"n": args.n, "m": args.m}
    if args.kind == 'churn':
        return {"n": args.n, "ops": args.ops, "m_target": args.m}
    if args.kind == 'amortized_stress':
        return {"n": args.n, "family": args.family, "order": args.order}
    params = {"d": args.d, "funnels": args.funnels, "chains": args.chains}
    if args.fan_in is not None:
        params["fan_in"] = args.fan_in
    if args.n is not None:
        params["n"] = args.n
    return params


def main():
    parser = argparse.ArgumentParser(description='Generate a workload file')
    parser.add_argument('kind', choices=sorted(GENERATORS), help='Workload kind')
    parser.add_argument('--out', required=True, help='Output workload path')
    parser.add_argument('--seed', type=int, default=0, help='Generator seed (default: 0)')
    parser.add_argument('--n', type=int, help='Node count')
    parser.add_argument('--m', type=int, help='Edge count (gnm_sweep) or target edge count (churn)')
    parser.add_argument('--ops', type=int, default=10_000, help='Operations for churn (default: 10000)')
    parser.add_argument('--family', choices=FAMILIES, default='path', help='Graph family for amortized_stress')
    parser.add_argument('--order', choices=['random', 'ascending', 'descending'], default='random',
                        help='Query order for amortized_stress (default: random)')
    parser.add_argument('--d', type=int, default=2, help='Target cap for vstar_stress (default: 2)')
    parser.add_argument('--fan-in', type=int, help='Tails per funnel for vstar_stress (default: 6d-1)')
    parser.add_argument('--funnels', type=int, default=8, help='Funnels per chain for vstar_stress (default: 8)')
    parser.add_argument('--chains', type=int, default=1, help='Chains for vstar_stress when --n is not given')

    args = parser.parse_args()

    if args.kind in ('gnm_sweep', 'churn', 'amortized_stress') and args.n is None:
        print(f"❌ Error: --n is required for {args.kind}")
        sys.exit(1)
    if args.kind == 'gnm_sweep' and args.m is None:
        print("❌ Error: --m is required for gnm_sweep")
        sys.exit(1)

    params = collect_params(args)
    try:
        workload = generate(args.kind, params, seed=args.seed)
    except TinyColorError as e:
        print(f"❌ Error: {e}")
        sys.exit(1)

    described = ' '.join(f"{k}={v}" for k, v in sorted(params.items()) if v is not None)
    save_workload(workload, args.out, comments=[f"{args.kind} {described} seed={args.seed}"])


if __name__ == '__main__':
    main()
