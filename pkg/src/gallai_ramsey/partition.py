"""Gallai partitions: computing one for any Gallai coloring, validating
candidate partitions, and contracting to the reduced graph.

The classical structure theorem guarantees that every rainbow-triangle-
free coloring of K_n (n >= 2) splits into p >= 2 parts with monochromatic
part pairs and at most two colors total between parts. The theorem is
non-constructive; the algorithm here searches candidate between-color
sets: edges colored outside the candidate set are forced inside parts,
and non-monochromatic part pairs are forced to merge, so a fixpoint of
component-merging finds a partition whenever one exists for that set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .coloring import EdgeColoring


class NotAPartitionError(ValueError):
    """Input parts are not a partition of the vertex set into >= 2
    nonempty classes."""


@dataclass
class ViolationReport:
    """Why a candidate partition fails the two structure conditions.

    kind "non_homogeneous": part_pair names the offending pair and
    witness_edges holds two edges of distinct colors between them.
    kind "extra_between_colors": witness_edges holds one representative
    edge per between-part color (three or more entries).
    """

    kind: str
    part_pair: Optional[tuple[int, int]]
    witness_edges: tuple[tuple[int, int, int], ...]


@dataclass
class GallaiPartition:
    """Parts plus the induced between-part coloring."""

    parts: tuple[tuple[int, ...], ...]
    between_colors: tuple[int, ...]
    pair_color: dict[tuple[int, int], int]
    n: int
    k: int

    def to_json(self) -> dict:
        return {
            "parts": [list(p) for p in self.parts],
            "between_colors": list(self.between_colors),
            "pair_colors": [
                {"i": i, "j": j, "color": c}
                for (i, j), c in sorted(self.pair_color.items())
            ],
        }


def _components(h: list[int], n: int) -> list[int]:
    """Connected components of a bitmask adjacency, as vertex masks
    ordered by least vertex."""
    comps = []
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                bit = m & -m
                m ^= bit
                nxt |= h[bit.bit_length() - 1]
            frontier = nxt & ~comp
        comps.append(comp)
        seen |= comp
    return comps


def _bits(mask: int):
    while mask:
        bit = mask & -mask
        mask ^= bit
        yield bit.bit_length() - 1


def _colors_between(adj, colors: Iterable[int], a_mask: int, b_mask: int) -> set[int]:
    found = set()
    for col in colors:
        for v in _bits(a_mask):
            if adj[col][v] & b_mask:
                found.add(col)
                break
    return found


def _try_between_set(c: EdgeColoring, between: tuple[int, ...]) -> Optional[list[int]]:
    """Partition with between-part colors inside `between`, or None."""
    n = c.n
    adj = c.color_adjacency()
    inside_colors = [a for a in range(1, c.k + 1) if a not in between]
    h = [0] * n
    for a in inside_colors:
        rows = adj[a]
        for v in range(n):
            h[v] |= rows[v]
    parts = _components(h, n)
    if len(parts) < 2:
        return None

    # Every cross-part edge is colored inside `between` by construction.
    active = list(range(len(parts)))
    pair_colors: dict[tuple[int, int], set[int]] = {}
    for ai, bi in combinations(active, 2):
        pair_colors[(ai, bi)] = _colors_between(adj, between, parts[ai], parts[bi])

    # Merge the smallest-index non-monochromatic pair until none remain.
    # Parts stay ordered by least vertex: a merge keeps the smaller index.
    while True:
        conflict = None
        for key in sorted(pair_colors):
            if len(pair_colors[key]) >= 2:
                conflict = key
                break
        if conflict is None:
            break
        i, j = conflict
        parts[i] |= parts[j]
        active.remove(j)
        if len(active) < 2:
            return None
        for l in active:
            if l == i:
                continue
            a, b = min(i, l), max(i, l)
            ja, jb = min(j, l), max(j, l)
            pair_colors[(a, b)] = pair_colors[(a, b)] | pair_colors.pop((ja, jb))
        del pair_colors[(i, j)]
    return [parts[i] for i in active]


def gallai_partition(c: EdgeColoring) -> Optional[GallaiPartition]:
    """A valid Gallai partition of the coloring, or None.

    Guaranteed to succeed on Gallai inputs; on non-Gallai inputs this is
    a best-effort diagnostic. Candidate between-color sets are tried in
    ascending lexicographic order and the first hit is returned, so the
    result is deterministic even though Gallai partitions are not unique.
    """
    used = c.used_colors()
    candidates = sorted(
        [(a,) for a in used] + [pair for pair in combinations(used, 2)]
    )
    for between in candidates:
        masks = _try_between_set(c, between)
        if masks is not None:
            return _build(c, masks)
    return None


def _build(c: EdgeColoring, masks: Sequence[int]) -> GallaiPartition:
    adj = c.color_adjacency()
    parts = tuple(tuple(_bits(m)) for m in masks)
    pair_color: dict[tuple[int, int], int] = {}
    between = set()
    for i, j in combinations(range(len(parts)), 2):
        col = c.color(parts[i][0], parts[j][0])
        pair_color[(i, j)] = col
        between.add(col)
    return GallaiPartition(
        parts=parts,
        between_colors=tuple(sorted(between)),
        pair_color=pair_color,
        n=c.n,
        k=c.k,
    )


def validate_partition(
    c: EdgeColoring, parts: Sequence[Iterable[int]]
) -> Union[GallaiPartition, ViolationReport]:
    """Check the two structure conditions directly on a candidate
    partition, keeping the caller's part order."""
    normalized = [tuple(sorted(set(p))) for p in parts]
    if len(normalized) < 2:
        raise NotAPartitionError("need at least 2 parts")
    if any(not p for p in normalized):
        raise NotAPartitionError("parts must be nonempty")
    covered: set[int] = set()
    total = 0
    for p in normalized:
        total += len(p)
        covered.update(p)
    if len(covered) != total:
        raise NotAPartitionError("parts must be disjoint")
    if covered != set(range(c.n)):
        raise NotAPartitionError(f"parts must cover exactly the vertices [0, {c.n})")

    pair_color: dict[tuple[int, int], int] = {}
    seen_colors: dict[int, tuple[int, int]] = {}
    for i, j in combinations(range(len(normalized)), 2):
        first_edge = None
        for u in normalized[i]:
            for v in normalized[j]:
                col = c.color(u, v)
                if first_edge is None:
                    first_edge = (u, v, col)
                elif col != first_edge[2]:
                    return ViolationReport(
                        kind="non_homogeneous",
                        part_pair=(i, j),
                        witness_edges=(first_edge, (u, v, col)),
                    )
        pair_color[(i, j)] = first_edge[2]
        seen_colors.setdefault(first_edge[2], (first_edge[0], first_edge[1]))
    if len(seen_colors) > 2:
        witnesses = tuple(
            (u, v, col) for col, (u, v) in sorted(seen_colors.items())
        )
        return ViolationReport(
            kind="extra_between_colors", part_pair=None, witness_edges=witnesses
        )
    return GallaiPartition(
        parts=tuple(normalized),
        between_colors=tuple(sorted(seen_colors)),
        pair_color=pair_color,
        n=c.n,
        k=c.k,
    )


def reduced_graph(p: GallaiPartition) -> EdgeColoring:
    """Contract each part to one vertex; edge (i, j) keeps the single
    color used between parts i and j. Uses at most 2 effective colors."""
    m = len(p.parts)
    colors = []
    for i in range(m - 1):
        for j in range(i + 1, m):
            colors.append(p.pair_color[(i, j)])
    return EdgeColoring(m, p.k, colors)
