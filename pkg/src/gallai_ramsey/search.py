"""Detection of monochromatic paths, even cycles and matchings inside
one color class of an edge coloring.

All searches run over bitmask adjacency (one int per vertex) and return
the lexicographically least embedding, so certificates are reproducible.
Two devices keep the DFS small without losing completeness:

* failed (last vertex, visited mask) states are memoized, and
* after a candidate extension fails, later candidates with the same
  class neighborhood are skipped. Swapping two such twins is an
  automorphism of the color class, so they fail identically. Extremal
  colorings are full of twins, which is exactly where naive DFS blows up.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .coloring import ColorOutOfRangeError, EdgeColoring
from .targets import CYCLE, PATH, Embedding, TargetGraph

# Above this host size the subset recursion for maximum matching gives
# way to networkx's blossom implementation.
MATCHING_DP_LIMIT = 20


class SpecLengthMismatchError(ValueError):
    """Target list length differs from the coloring's palette size."""


def _twin_skip(w_adj: int, bit: int, tried: list[tuple[int, int]]) -> bool:
    # skip w if some already-failed candidate has the same neighborhood
    # once both vertices' own bits are masked out
    for f_adj, f_bit in tried:
        both = ~(bit | f_bit)
        if (w_adj & both) == (f_adj & both):
            return True
    return False


def _find_path_sequence(adj: list[int], n: int, m: int) -> Optional[list[int]]:
    active = [v for v in range(n) if adj[v]]
    if len(active) < m:
        return None
    if sum(adj[v].bit_count() for v in active) // 2 < m - 1:
        return None
    failed: set[tuple[int, int]] = set()
    out: list[int] = []

    def extend(last: int, mask: int, need: int) -> bool:
        if need == 0:
            return True
        key = (last, mask)
        if key in failed:
            return False
        tried: list[tuple[int, int]] = []
        cand = adj[last] & ~mask
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            w_adj = adj[w]
            if _twin_skip(w_adj, bit, tried):
                continue
            out.append(w)
            if extend(w, mask | bit, need - 1):
                return True
            out.pop()
            tried.append((w_adj, bit))
        failed.add(key)
        return False

    tried_starts: list[tuple[int, int]] = []
    for s in active:
        bit = 1 << s
        if _twin_skip(adj[s], bit, tried_starts):
            continue
        out.clear()
        out.append(s)
        if extend(s, bit, m - 1):
            return out
        tried_starts.append((adj[s], bit))
    return None


def _find_cycle_sequence(adj: list[int], n: int, length: int) -> Optional[list[int]]:
    active = [v for v in range(n) if adj[v].bit_count() >= 2]
    if len(active) < length:
        return None
    full = (1 << n) - 1
    out: list[int] = []
    tried_starts: list[tuple[int, int]] = []
    # phase s searches cycles whose minimum vertex is s, so every later
    # vertex is restricted above s and the first hit is lex-least overall
    for s in active:
        sbit = 1 << s
        above = full & ~((1 << (s + 1)) - 1)
        if (adj[s] & above).bit_count() < 2:
            continue
        if _twin_skip(adj[s], sbit, tried_starts):
            continue
        failed: set[tuple[int, int]] = set()

        def extend(last: int, mask: int, need: int) -> bool:
            if need == 0:
                return bool(adj[last] & sbit)
            key = (last, mask)
            if key in failed:
                return False
            tried: list[tuple[int, int]] = []
            cand = adj[last] & ~mask & above
            while cand:
                bit = cand & -cand
                cand ^= bit
                w = bit.bit_length() - 1
                w_adj = adj[w]
                if _twin_skip(w_adj, bit, tried):
                    continue
                out.append(w)
                if extend(w, mask | bit, need - 1):
                    return True
                out.pop()
                tried.append((w_adj, bit))
            failed.add(key)
            return False

        out.clear()
        out.append(s)
        if extend(s, sbit, length - 1):
            return out
        tried_starts.append((adj[s], sbit))
    return None


def _matching_at_least(adj: list[int], free: int, r: int, n: int) -> bool:
    """Does the class restricted to `free` contain r disjoint edges?"""
    if r <= 0:
        return True
    if free.bit_count() < 2 * r:
        return False
    if n <= MATCHING_DP_LIMIT:
        memo: dict[tuple[int, int], bool] = {}

        def ge(mask: int, need: int) -> bool:
            if need == 0:
                return True
            if mask.bit_count() < 2 * need:
                return False
            key = (mask, need)
            hit = memo.get(key)
            if hit is not None:
                return hit
            ubit = mask & -mask
            u = ubit.bit_length() - 1
            rest = mask ^ ubit
            result = False
            cand = adj[u] & rest
            while cand:
                wbit = cand & -cand
                cand ^= wbit
                if ge(rest ^ wbit, need - 1):
                    result = True
                    break
            if not result:
                result = ge(rest, need)
            memo[key] = result
            return result

        return ge(free, r)

    import networkx as nx

    g = nx.Graph()
    mask = free
    while mask:
        ubit = mask & -mask
        mask ^= ubit
        u = ubit.bit_length() - 1
        nbrs = adj[u] & free
        while nbrs:
            wbit = nbrs & -nbrs
            nbrs ^= wbit
            w = wbit.bit_length() - 1
            if w > u:
                g.add_edge(u, w)
    if g.number_of_edges() == 0:
        return False
    return len(nx.max_weight_matching(g, maxcardinality=True)) >= r


def _find_matching_sequence(adj: list[int], n: int, pairs: int) -> Optional[list[int]]:
    full = (1 << n) - 1
    if not _matching_at_least(adj, full, pairs, n):
        return None
    out: list[int] = []

    def place(mask: int, left: int) -> bool:
        if left == 0:
            return True
        free = full & ~mask
        cand_a = free
        while cand_a:
            abit = cand_a & -cand_a
            cand_a ^= abit
            a = abit.bit_length() - 1
            cand_b = adj[a] & free & ~abit
            while cand_b:
                bbit = cand_b & -cand_b
                cand_b ^= bbit
                taken = mask | abit | bbit
                if left == 1 or _matching_at_least(adj, full & ~taken, left - 1, n):
                    out.append(a)
                    out.append(bbit.bit_length() - 1)
                    if place(taken, left - 1):
                        return True
                    out.pop()
                    out.pop()
        return False

    return out if place(0, pairs) else None


def find_mono(c: EdgeColoring, color: int, target: TargetGraph) -> Optional[Embedding]:
    """Lex-least embedding of `target` in the given color class, or None.

    Targets with more vertices than the host return None rather than
    raising; the verifier probes shrinking hosts and relies on this.
    """
    if not 1 <= color <= c.k:
        raise ColorOutOfRangeError(f"color {color} outside palette [1, {c.k}]")
    if target.num_vertices > c.n:
        return None
    adj = c.color_adjacency()[color]
    if target.kind == PATH:
        seq = _find_path_sequence(adj, c.n, target.size)
    elif target.kind == CYCLE:
        seq = _find_cycle_sequence(adj, c.n, target.size)
    else:
        seq = _find_matching_sequence(adj, c.n, target.size)
    if seq is None:
        return None
    return Embedding(target=target, color=color, vertices=tuple(seq))


def contains_required(
    c: EdgeColoring, targets: Sequence[TargetGraph]
) -> Optional[tuple[int, Embedding]]:
    """First color (ascending) whose per-color target appears, with its
    certificate; None when the coloring avoids every target."""
    if len(targets) != c.k:
        raise SpecLengthMismatchError(
            f"{len(targets)} targets for a {c.k}-color palette"
        )
    for color, target in enumerate(targets, 1):
        emb = find_mono(c, color, target)
        if emb is not None:
            return color, emb
    return None


def verify_embedding(c: EdgeColoring, e: Embedding) -> bool:
    """Independent certificate check: do the embedding's edges exist in
    the claimed color and shape?"""
    verts = e.vertices
    if not 1 <= e.color <= c.k:
        return False
    if any(not 0 <= v < c.n for v in verts):
        return False
    if len(set(verts)) != len(verts):
        return False
    t = e.target
    if t.kind == PATH:
        if len(verts) != t.size:
            return False
        edges = list(zip(verts, verts[1:]))
    elif t.kind == CYCLE:
        if len(verts) != t.size:
            return False
        edges = list(zip(verts, verts[1:])) + [(verts[-1], verts[0])]
    else:
        if len(verts) != 2 * t.size:
            return False
        edges = [(verts[i], verts[i + 1]) for i in range(0, len(verts), 2)]
    return all(c.color(u, v) == e.color for u, v in edges)


# ---------------------------------------------------------------------------
# Incremental existence checks used by the exhaustive verifier. These ask
# only whether a target exists THROUGH a given edge; the verifier keeps the
# invariant that a class never contained its target before the newest edge,
# so any fresh copy must use that edge.


def exists_path_through(adj: list[int], u: int, v: int, m: int) -> bool:
    if m == 2:
        return True
    base = (1 << u) | (1 << v)
    need = m - 2

    def grow(x: int, mask: int, left: int) -> bool:
        if left == 0:
            return True
        tried: list[tuple[int, int]] = []
        cand = adj[x] & ~mask
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            w_adj = adj[w]
            if _twin_skip(w_adj, bit, tried):
                continue
            if grow(w, mask | bit, left - 1):
                return True
            tried.append((w_adj, bit))
        return False

    def left_side(x: int, mask: int, used: int) -> bool:
        if grow(v, mask, need - used):
            return True
        if used == need:
            return False
        tried: list[tuple[int, int]] = []
        cand = adj[x] & ~mask
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            w_adj = adj[w]
            if _twin_skip(w_adj, bit, tried):
                continue
            if left_side(w, mask | bit, used + 1):
                return True
            tried.append((w_adj, bit))
        return False

    return left_side(u, base, 0)


def exists_cycle_through(adj: list[int], u: int, v: int, length: int) -> bool:
    # a cycle through edge (u,v) is a u-to-v path on `length` vertices
    vbit = 1 << v
    need = length - 2

    def dfs(x: int, mask: int, left: int) -> bool:
        if left == 0:
            return bool(adj[x] & vbit)
        tried: list[tuple[int, int]] = []
        cand = adj[x] & ~mask & ~vbit
        while cand:
            bit = cand & -cand
            cand ^= bit
            w = bit.bit_length() - 1
            w_adj = adj[w]
            if _twin_skip(w_adj, bit, tried):
                continue
            if dfs(w, mask | bit, left - 1):
                return True
            tried.append((w_adj, bit))
        return False

    return dfs(u, (1 << u) | vbit, need)


def exists_matching_with_edge(
    adj: list[int], u: int, v: int, pairs: int, n: int
) -> bool:
    if pairs <= 1:
        return True
    free = ((1 << n) - 1) & ~((1 << u) | (1 << v))
    return _matching_at_least(adj, free, pairs - 1, n)
