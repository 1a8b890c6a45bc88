#!/usr/bin/env python3
"""Count finite Wajsberg algebras of orders 2..9, by type and by labeled table.

For each order n the isomorphism types are the chain plus one product of
chains per unordered factorisation of n.  The labeled census fixes bottom and
unit and transports every non-chain type along all (n-2)! bijections of the
remaining elements.  The closed formula pi(n)*(n-2)! + 1 counts those
bijections; the number of distinct tables is smaller whenever a type has
nontrivial automorphisms, by the orbit-stabilizer identity
distinct = (n-2)! / |Aut|.

Usage
-----
  python demos/census_walkthrough.py
"""

import math

from wajsberg import automorphisms_brute_force, iso_classes, labeled_census, multiplicative_partitions


def main() -> None:
    print(f"{'n':>2}  {'types':>5}  {'formula':>7}  {'distinct':>8}  per-class |Aut| -> distinct")
    for n in range(2, 10):
        r = labeled_census(n)
        classes = ", ".join(f"{k}: {r.per_class_aut_order[k]} -> {r.per_class_distinct[k]}" for k in r.per_class_aut_order)
        mark = "  <- differs" if r.discrepancy else ""
        print(f"{n:>2}  {r.iso_classes:>5}  {r.formula_total:>7}  {r.distinct_labeled_total:>8}  {classes or '-'}{mark}")

    print()
    print("factorisations of 12:", multiplicative_partitions(12))

    print()
    print("orbit-stabilizer check with |Aut| from a full permutation scan:")
    for n in (4, 8, 9):
        for sig, W in iso_classes(n)[1:]:
            aut = len(automorphisms_brute_force(W))
            print(f"  n={n} {sig}: (n-2)!/|Aut| = {math.factorial(n - 2)}/{aut} = {math.factorial(n - 2) // aut}")

    print()
    print(labeled_census(8).narrative)


if __name__ == "__main__":
    main()
