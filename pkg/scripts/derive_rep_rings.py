"""Rederive the S4 and A4 representation rings from explicit permutations.

Builds the irreducible characters from concrete group actions (fixed
points of the 4-point action, the sign, and the action on the three pair
partitions), averages chi_i chi_j conj(chi_k) over the group to get the
tensor multiplicities, and compares the result with the shipped catalog
tables.  Run with --show to print the derived tables.
"""

import argparse
import cmath
import itertools
import sys

import numpy as np

from sectorwb import catalog


def perm_sign(p):
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


PAIRINGS = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]


def act_on_pairings(p):
    out = []
    for a, b in PAIRINGS:
        a2 = tuple(sorted(p[x] for x in a))
        b2 = tuple(sorted(p[x] for x in b))
        out.append(PAIRINGS.index(tuple(sorted((a2, b2)))))
    return tuple(out)


def s4_characters():
    elems = list(itertools.permutations(range(4)))
    chars = {}
    chars["1"] = [1.0 for _ in elems]
    chars["a"] = [float(perm_sign(p)) for p in elems]
    chars["e"] = [float(sum(1 for i in range(4) if p[i] == i) - 1) for p in elems]
    chars["ae"] = [chars["a"][i] * chars["e"][i] for i in range(len(elems))]
    chars["e2"] = [
        float(sum(1 for i in range(3) if q[i] == i) - 1)
        for q in (act_on_pairings(p) for p in elems)
    ]
    return elems, chars


def a4_characters():
    elems = [p for p in itertools.permutations(range(4)) if perm_sign(p) == 1]
    w = cmath.exp(2j * cmath.pi / 3)
    rot = {(0, 1, 2): 0, (1, 2, 0): 1, (2, 0, 1): 2}
    chars = {}
    chars["1"] = [1.0 + 0j for _ in elems]
    chars["w"] = [w ** rot[act_on_pairings(p)] for p in elems]
    chars["w2"] = [w ** (2 * rot[act_on_pairings(p)]) for p in elems]
    chars["v"] = [complex(sum(1 for i in range(4) if p[i] == i) - 1) for p in elems]
    return elems, chars


def orthonormal(elems, chars):
    n = len(elems)
    for a in chars:
        for b in chars:
            ip = sum(chars[a][g] * np.conj(chars[b][g]) for g in range(n)) / n
            if abs(ip - (1 if a == b else 0)) > 1e-9:
                return False
    return True


def tensor_table(elems, chars):
    names = list(chars)
    n = len(elems)
    table = {}
    for i, j in itertools.product(names, names):
        row = {}
        for k in names:
            val = sum(chars[i][g] * chars[j][g] * np.conj(chars[k][g])
                      for g in range(n)) / n
            m = round(abs(val))
            assert abs(val - m) < 1e-9, (i, j, k, val)
            if m:
                row[k] = m
        table[(i, j)] = row
    return table


def compare(key, elems, chars, show):
    ring = catalog.builtin(key)
    table = tensor_table(elems, chars)
    bad = 0
    for (i, j), row in sorted(table.items()):
        stored = dict(ring.tensor.get((i, j), {}))
        mark = "" if stored == row else "  << MISMATCH"
        if stored != row:
            bad += 1
        if show or mark:
            print(f"  {i} x {j} = {row}{mark}")
    status = "agrees with" if bad == 0 else f"{bad} products differ from"
    print(f"{key}: derived table {status} the catalog")
    return bad


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--show", action="store_true", help="print every product")
    args = ap.parse_args(argv)

    bad = 0
    for key, build in (("s4_rep", s4_characters), ("a4_rep", a4_characters)):
        elems, chars = build()
        if not orthonormal(elems, chars):
            print(f"{key}: character orthonormality failed", file=sys.stderr)
            return 1
        bad += compare(key, elems, chars, args.show)
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
