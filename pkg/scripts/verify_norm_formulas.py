"""Sweep the squared-length closed forms against the definitional norms.

The three Gram-determinant formulas for |acomm3|^2, |cross3|^2 and |assoc3|^2
are checked against norm_sq of the actual parts, on random integer triples and
on every basis triple, in exact arithmetic.  Any disagreement is printed with
its witness; exit status 1 if any was found.

Usage: python scripts/verify_norm_formulas.py [--dim 8] [--trials 2000] [--seed 42]
"""

import argparse
import itertools
import random
import sys

from triprod import (
    acomm3,
    assoc3,
    basis,
    cross3,
    hnum,
    norm_sq,
    norm_sq_acomm3,
    norm_sq_assoc3,
    norm_sq_cross3,
)

FORMULAS = (
    ("anticommutator", norm_sq_acomm3, acomm3),
    ("cross", norm_sq_cross3, cross3),
    ("associator", norm_sq_assoc3, assoc3),
)


def check(u1, u2, u3, mismatches):
    for name, closed_form, part in FORMULAS:
        closed = closed_form(u1, u2, u3)
        definitional = norm_sq(part(u1, u2, u3))
        if closed != definitional:
            mismatches.append((name, closed, definitional, u1, u2, u3))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=8, choices=[1, 2, 4, 8])
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--coeff-range", type=int, default=9)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mismatches = []
    for _ in range(args.trials):
        us = [
            hnum([rng.randint(-args.coeff_range, args.coeff_range) for _ in range(args.dim)])
            for _ in range(3)
        ]
        check(*us, mismatches)
    random_total = args.trials

    basis_total = 0
    for i, j, k in itertools.product(range(args.dim), repeat=3):
        check(basis(args.dim, i), basis(args.dim, j), basis(args.dim, k), mismatches)
        basis_total += 1

    print(f"dim {args.dim}: {random_total} random triples + {basis_total} basis triples")
    if mismatches:
        print(f"{len(mismatches)} closed-form mismatches; first three witnesses:")
        for name, closed, definitional, u1, u2, u3 in mismatches[:3]:
            print(f"  {name}: closed={closed} definitional={definitional}")
            print(f"    u1={u1!r}\n    u2={u2!r}\n    u3={u3!r}")
        return 1
    print("all three squared-length formulas agree exactly with the definitional norms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
