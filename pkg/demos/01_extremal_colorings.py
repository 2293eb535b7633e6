"""Layered extremal colorings.

For per-color targets drawn from one family (paths on 5, 7, ..., 2n-1
vertices, topped by the cycle C_{2n} or the long path P_{2n+1}), the
layered coloring on one fewer vertex than the predicted Gallai-Ramsey
value avoids every target: block j is colored j internally and joined
to all earlier blocks in color j, so color j's class is a small clique
joined to an independent set and its longest path stays short.
"""

from gallai_ramsey import (
    build_lower_bound_coloring,
    contains_required,
    is_gallai,
    predicted_gr,
    sorted_spec,
    write_coloring,
)
from gallai_ramsey.construction import layers

SPECS = [
    ([2, 2], 3, "cycle"),        # C6 vs C6
    ([2, 2, 2], 3, "cycle"),     # C6 in three colors
    ([1, 1, 0], 3, "cycle"),     # P5, P5, P3
    ([3, 3], 4, "cycle"),        # C8 vs C8
    ([3, 2, 0, 0], 4, "cycle"),  # C8, P7, P3, P3
    ([3, 3], 4, "path"),         # P9 vs P9
]


def show(indices, n, head):
    spec = sorted_spec(indices, n=n, head=head)
    coloring = build_lower_bound_coloring(spec)
    names = ",".join(t.name for t in spec.targets())
    print(f"targets {names}  (spec {spec.describe()})")
    print(f"  predicted GR = {predicted_gr(spec)}, witness on {coloring.n} vertices")
    for color, block in enumerate(layers(spec), 1):
        members = " ".join(map(str, block)) if len(block) else "(empty)"
        print(f"  layer {color}: {members}")
    print(f"  rainbow-free: {is_gallai(coloring) is True}")
    print(f"  monochromatic target hit: {contains_required(coloring, spec.targets())}")
    print()
    return coloring


if __name__ == "__main__":
    last = None
    for indices, n, head in SPECS:
        last = show(indices, n, head)
    print("file format of the last witness:")
    print(write_coloring(last))
