"""Run every verification suite and print one summary line each.

    python3 scripts/run_verify.py [--seed N] [--slow] [--verbose]
"""
from __future__ import annotations

import argparse
import sys

from dtposets.verify import VerifyConfig, run_all


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--slow", action="store_true")
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()
    results = run_all(VerifyConfig(seed=args.seed, slow=args.slow))
    for res in results:
        print("\n".join(res.lines()) if args.verbose else res.summary(), flush=True)
    return 0 if all(r.passed for r in results) else 2


if __name__ == "__main__":
    sys.exit(main())
