"""Regenerate the elliptic fiber-type table from the combinatorial data.

For each named fiber type this prints the genus, the jump spectrum, the
tame base-change conductor and the stabilization index, recomputed from
the dual graph rather than quoted.
"""

import argparse
import json

from redjumps import analyze, catalog_tags, catalog_graph


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    args = parser.parse_args()
    rows = []
    for tag in catalog_tags():
        r = analyze(catalog_graph(tag))
        rows.append({
            "type": tag,
            "genus": r.genus,
            "jumps": ", ".join(f"{v} (x{m})" for v, m in r.jumps),
            "conductor": str(r.tame_base_change_conductor),
            "index": r.stabilization_index,
        })
    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    widths = {k: max(len(k), max(len(str(row[k])) for row in rows)) for k in rows[0]}
    header = "  ".join(k.ljust(widths[k]) for k in rows[0])
    print(header)
    print("-" * len(header))
    for row in rows:
        print("  ".join(str(row[k]).ljust(widths[k]) for k in row))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
