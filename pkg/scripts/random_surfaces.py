"""Time represent_any on random irreducible non-cone cubics."""
import argparse
import random
import statistics
import time

from pfaffcubic import MultiPoly, QQ, classify
from pfaffcubic.classifier import IRREDUCIBLE_NON_CONE
from pfaffcubic.multipoly import monomials
from pfaffcubic.specialrep import represent_any


def random_cubic(rng, bound):
    while True:
        F = MultiPoly(QQ, {e: rng.randint(-bound, bound) for e in monomials(3, 4)}, 3, 4)
        if not F.is_zero() and classify(F).tag == IRREDUCIBLE_NON_CONE:
            return F


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--bound", type=int, default=5)
    parser.add_argument("--seed", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    times, degrees = [], []
    for i in range(args.count):
        F = random_cubic(rng, args.bound)
        start = time.perf_counter()
        rep = represent_any(F)
        times.append(time.perf_counter() - start)
        degrees.append(rep.extension_degree)
        print(f"{i:3d}  {times[-1]:6.2f}s  degree {rep.extension_degree}  c = {rep.constant}")
    print(f"median {statistics.median(times):.3f}s  max {max(times):.3f}s  degrees {sorted(set(degrees))}")


if __name__ == "__main__":
    main()
