"""Gallai partitions of rainbow-triangle-free colorings.

Every Gallai coloring of K_n (n >= 2) admits a partition into at least
two parts with monochromatic part pairs and at most two colors between
parts. The library generates random Gallai colorings, computes such a
partition, and contracts it to the two-colored reduced graph; pasting
the part interiors back into the reduced graph reproduces the coloring.
"""

import random

from gallai_ramsey import (
    gallai_partition,
    random_gallai,
    reduced_graph,
    validate_partition,
    GallaiPartition,
)

if __name__ == "__main__":
    rng = random.Random(7)
    for trial in range(5):
        n = rng.randint(8, 20)
        k = rng.randint(2, 5)
        seed = rng.randrange(10 ** 6)
        coloring = random_gallai(n, k, seed)
        part = gallai_partition(coloring)
        confirmed = validate_partition(coloring, part.parts)
        reduced = reduced_graph(part)
        print(f"n={n} k={k} seed={seed}")
        print(f"  {len(part.parts)} parts, between colors {part.between_colors}")
        sizes = ", ".join(str(len(p)) for p in part.parts)
        print(f"  part sizes: {sizes}")
        print(f"  validated: {isinstance(confirmed, GallaiPartition)}; "
              f"reduced graph on {reduced.n} vertices uses colors "
              f"{reduced.used_colors()}")
        print()

    # partitions are not unique: any split of a 2-colored K_n works
    two_colored = random_gallai(6, 2, 1)
    singletons = validate_partition(two_colored, [[v] for v in range(6)])
    print("singleton split of a 2-coloring validates:",
          isinstance(singletons, GallaiPartition))
