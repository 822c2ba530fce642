"""Print every angle the package can compute in one report.

Sections: the seven-case classification table with its checks, the
exclusion arguments, the string-algebra spectra of the ADE graphs, and
the asymptotic-inclusion spectra for a range of A_n.
"""

import argparse
import math
import sys

from sectorwb.classify import render_results, run_all, run_exclusion_checks
from sectorwb.wzw import asymptotic_spectrum, branching_rule, ghj_spectrum


def _fmt_spec(spec, degrees):
    if not spec.angles:
        return "(no interior angles)"
    if degrees:
        return ", ".join(f"{math.degrees(a):.6f} deg" for a in spec.angles)
    return ", ".join(f"{a:.12f} rad" for a in spec.angles)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", action="store_true")
    ap.add_argument("--max-n", type=int, default=14,
                    help="largest A_n for the asymptotic section")
    args = ap.parse_args(argv)

    print("== classification table ==")
    results = run_all()
    print(render_results(results))
    print()

    print("== exclusion checks ==")
    print(render_results(run_exclusion_checks()))
    print()

    print("== string-algebra spectra ==")
    for graph in ("A5", "A11", "D4", "D6", "E6", "E7", "E8"):
        rule = branching_rule(graph)
        spec = ghj_spectrum(graph)
        print(f"  {graph:4s} level {rule.k:2d}, J = {list(rule.J)!s:18s} "
              f"{_fmt_spec(spec, args.degrees)}")
    print()

    print("== asymptotic inclusions ==")
    for n in range(3, args.max_n + 1):
        spec = asymptotic_spectrum(n)
        print(f"  A_{n:<3d} {_fmt_spec(spec, args.degrees)}")

    failed = [r.case_id for r in results if not r.passed]
    if failed:
        print(f"\nFAILING cases: {failed}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
