"""Print a few random triple-product decompositions with their invariants.

For each sampled octonion triple the three orthogonal parts are shown together
with their pairwise inner products (always 0), their squared lengths, and the
norm-sum identity |acomm3|^2 + |cross3|^2 + |assoc3|^2 = (u1,u1)(u2,u2)(u3,u3).

Usage: python scripts/random_decompositions.py [--count 3] [--dim 8] [--seed 42]
"""

import argparse
import random

from triprod import coeff_str, decompose_triple, hnum, inner, norm_sq


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=3)
    ap.add_argument("--dim", type=int, default=8, choices=[1, 2, 4, 8])
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--coeff-range", type=int, default=9)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    for n in range(1, args.count + 1):
        u1, u2, u3 = (
            hnum([rng.randint(-args.coeff_range, args.coeff_range) for _ in range(args.dim)])
            for _ in range(3)
        )
        parts = decompose_triple(u1, u2, u3)
        lengths = [norm_sq(parts.anticommutator), norm_sq(parts.cross), norm_sq(parts.associator)]
        print(f"--- triple {n} ---")
        print(f"u1 = {coeff_str(u1)}")
        print(f"u2 = {coeff_str(u2)}")
        print(f"u3 = {coeff_str(u3)}")
        print(f"(u1*conj(u2))*u3 = {coeff_str(parts.product)}")
        print(f"anticommutator   = {coeff_str(parts.anticommutator)}")
        print(f"cross            = {coeff_str(parts.cross)}")
        print(f"associator       = {coeff_str(parts.associator)}")
        print(
            "pairwise inner products:",
            inner(parts.anticommutator, parts.cross),
            inner(parts.anticommutator, parts.associator),
            inner(parts.cross, parts.associator),
        )
        print(f"squared lengths  = {lengths[0]}, {lengths[1]}, {lengths[2]}")
        print(f"sum              = {sum(lengths)}")
        print(f"norm product     = {norm_sq(u1) * norm_sq(u2) * norm_sq(u3)}")
        print()


if __name__ == "__main__":
    main()
