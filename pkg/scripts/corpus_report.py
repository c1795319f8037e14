"""Generate a random corpus of reduction graphs and summarize it.

Each instance starts from a named seed graph and applies a random
sequence of blow-ups.  The report aggregates sizes, genera, jump
denominators and the outcome of the internal consistency checks, which
makes it a quick smoke test for the whole pipeline.
"""

import argparse
import collections
import time

from redjumps import compute_jumps, minimize, random_instance, run_checks


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100, help="number of instances")
    parser.add_argument("--seed", type=int, default=0, help="base random seed")
    parser.add_argument("--checks", action="store_true", help="run the full check suite")
    args = parser.parse_args()

    by_base = collections.Counter()
    genera = collections.Counter()
    denominators = collections.Counter()
    sizes = []
    failures = []
    start = time.perf_counter()
    for k in range(args.count):
        seed = args.seed + k
        inst = random_instance(seed, seed % 16)
        by_base[inst.base_name] += 1
        g = inst.graph
        sizes.append(len(g.vertices))
        genera[g.genus()] += 1
        spectrum = compute_jumps(g)
        denominators[spectrum.denominator_lcm()] += 1
        if args.checks:
            for name, ok in run_checks(g):
                if not ok:
                    failures.append((seed, name))
        else:
            small = minimize(g)
            if compute_jumps(small).entries != spectrum.entries:
                failures.append((seed, "minimize-spectrum"))
    elapsed = time.perf_counter() - start

    print(f"instances: {args.count}  ({elapsed:.2f}s)")
    print(f"vertices:  min {min(sizes)}  max {max(sizes)}  "
          f"mean {sum(sizes) / len(sizes):.1f}")
    print("seeds:     " + ", ".join(f"{b} x{n}" for b, n in sorted(by_base.items())))
    print("genus:     " + ", ".join(f"{g} x{n}" for g, n in sorted(genera.items())))
    print("index:     " + ", ".join(f"{d} x{n}" for d, n in sorted(denominators.items())))
    if failures:
        for seed, name in failures:
            print(f"FAIL seed={seed} check={name}")
        return 1
    print("all checks passed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
