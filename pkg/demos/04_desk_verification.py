"""Certified desk-scale verification.

decide_upper exhaustively searches Gallai colorings of K_N for one that
avoids every per-color target. An empty search tree proves the bound
(all_forced); otherwise the explicit bad coloring certifies that N is
still below the Gallai-Ramsey value. compute_gr glues the two sides
together at the predicted value.
"""

from gallai_ramsey import compute_gr, decide_upper, sorted_spec, write_coloring

CASES = [
    ("P5,P3", 5),
    ("P5,P5", 6),
    ("C6,P3", 6),
    ("P5,P5,P3", 6),
    ("C6,C6", 8),
]

if __name__ == "__main__":
    for targets, value in CASES:
        verdict_hi, stats_hi = decide_upper(value, targets)
        verdict_lo, stats_lo = decide_upper(value - 1, targets)
        print(f"targets ({targets}):")
        print(f"  N={value}: {verdict_hi.kind} "
              f"[nodes={stats_hi.nodes}, mono prunes={stats_hi.prunes_mono}, "
              f"{stats_hi.elapsed:.2f}s]")
        print(f"  N={value - 1}: {verdict_lo.kind} "
              f"[nodes={stats_lo.nodes}, {stats_lo.elapsed:.2f}s]")
        if verdict_lo.witness is not None:
            first_line, *rest = write_coloring(verdict_lo.witness).splitlines()
            print(f"  witness: {first_line} / " + " ".join(rest))
        print()

    spec = sorted_spec([1, 1, 0], n=3)
    result = compute_gr(spec)
    print(f"compute_gr for (P5, P5, P3): status={result.status}, "
          f"value={result.value}")
    print(f"  lower witness on {result.lower.witness.n} vertices, "
          f"upper verdict {result.upper_verdict.kind} "
          f"after {result.upper_stats.nodes} nodes")
