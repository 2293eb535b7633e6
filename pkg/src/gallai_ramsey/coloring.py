"""Edge colorings of complete graphs and the rainbow-triangle test.

A coloring assigns one of k colors (1-based) to every unordered vertex
pair of K_n. Colors live in a flat triangular array in lexicographic
pair order (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1); that
order is also the wire format used by read_coloring/write_coloring.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union


class MissingEdgeError(ValueError):
    """Some unordered pair has no color assigned."""


class ColorOutOfRangeError(ValueError):
    """A color value falls outside the declared palette [1, k]."""


class ParseError(ValueError):
    """Malformed coloring text; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class RainbowWitness:
    """Vertex triple whose three edges carry three pairwise distinct colors."""

    vertices: tuple[int, int, int]


def pair_index(n: int, u: int, v: int) -> int:
    """Rank of the pair {u, v} in lexicographic order over K_n."""
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All unordered pairs of [0, n) in lexicographic order."""
    for u in range(n - 1):
        for v in range(u + 1, n):
            yield u, v


class EdgeColoring:
    """A k-edge-coloring of K_n. Treat instances as immutable values.

    `colors` is the flat triangular array; `color(u, v)` is O(1) and
    symmetric in its arguments.
    """

    __slots__ = ("n", "k", "colors", "_adj")

    def __init__(self, n: int, k: int, colors: Sequence[int]):
        if n < 2:
            raise ValueError(f"need at least 2 vertices, got n={n}")
        if k < 1:
            raise ValueError(f"need at least 1 color, got k={k}")
        colors = tuple(colors)
        expected = n * (n - 1) // 2
        if len(colors) < expected:
            raise MissingEdgeError(
                f"expected {expected} edge colors for n={n}, got {len(colors)}"
            )
        if len(colors) > expected:
            raise ValueError(
                f"expected {expected} edge colors for n={n}, got {len(colors)}"
            )
        for c in colors:
            if not 1 <= c <= k:
                raise ColorOutOfRangeError(f"color {c} outside palette [1, {k}]")
        self.n = n
        self.k = k
        self.colors = colors
        self._adj = None

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise ValueError(f"no self-loop edge ({u}, {v})")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u}, {v}) outside [0, {self.n})")
        return self.colors[pair_index(self.n, u, v)]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, color) in lexicographic pair order."""
        it = iter(self.colors)
        for u, v in all_pairs(self.n):
            yield u, v, next(it)

    def used_colors(self) -> list[int]:
        return sorted(set(self.colors))

    def color_adjacency(self) -> list[list[int]]:
        """Per-color neighbor bitmasks, indexed adj[color][vertex].

        Slot 0 is unused. Built once and cached; cheap to share since
        the coloring never changes after construction.
        """
        if self._adj is None:
            adj = [[0] * self.n for _ in range(self.k + 1)]
            idx = 0
            cols = self.colors
            for u in range(self.n - 1):
                for v in range(u + 1, self.n):
                    c = cols[idx]
                    idx += 1
                    adj[c][u] |= 1 << v
                    adj[c][v] |= 1 << u
            self._adj = adj
        return self._adj

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return (self.n, self.k, self.colors) == (other.n, other.k, other.colors)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring(n={self.n}, k={self.k})"


PairMap = Mapping[tuple[int, int], int]


def new_coloring(n: int, k: int, assignment: PairMap) -> EdgeColoring:
    """Build a validated coloring from a pair -> color mapping.

    The mapping must cover every unordered pair exactly once (either
    orientation of the pair is accepted) with colors in [1, k].
    """
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got n={n}")
    if k < 1:
        raise ValueError(f"need at least 1 color, got k={k}")
    normalized: dict[tuple[int, int], int] = {}
    for key, c in assignment.items():
        u, v = key
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"invalid vertex pair {key} for n={n}")
        if u > v:
            u, v = v, u
        if (u, v) in normalized:
            raise ValueError(f"pair ({u}, {v}) assigned twice")
        normalized[(u, v)] = c
    colors = []
    for u, v in all_pairs(n):
        if (u, v) not in normalized:
            raise MissingEdgeError(f"pair ({u}, {v}) has no color")
        colors.append(normalized[(u, v)])
    return EdgeColoring(n, k, colors)


def is_gallai(c: EdgeColoring) -> Union[bool, RainbowWitness]:
    """True if no triangle carries three distinct colors, else the
    lexicographically least witness triple."""
    if len(set(c.colors)) <= 2:
        return True
    n = c.n
    adj = c.color_adjacency()
    full = (1 << n) - 1
    cols = c.colors
    idx = 0
    for u in range(n - 1):
        for v in range(u + 1, n):
            cuv = cols[idx]
            idx += 1
            if v + 1 >= n:
                continue
            # candidate w > v with both edges (u,w), (v,w) off-color cuv
            high = full & ~((1 << (v + 1)) - 1)
            cand = high & ~adj[cuv][u] & ~adj[cuv][v]
            if not cand:
                continue
            same = 0
            for a in range(1, c.k + 1):
                same |= adj[a][u] & adj[a][v]
            cand &= ~same
            if cand:
                w = (cand & -cand).bit_length() - 1
                return RainbowWitness((u, v, w))
    return True


def random_gallai(n: int, k: int, seed: int) -> EdgeColoring:
    """Random rainbow-triangle-free coloring, deterministic per seed.

    Generated top-down: split the vertices into 2..6 blocks, 2-color the
    block pairs with two palette colors, then recurse into each block
    with the full palette. Every coloring produced this way is Gallai.
    """
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got n={n}")
    if k < 1:
        raise ValueError(f"need at least 1 color, got k={k}")
    rng = random.Random(seed)
    colors = [0] * (n * (n - 1) // 2)

    def fill(verts: list[int]) -> None:
        m = len(verts)
        if m <= 1:
            return
        if k == 1:
            for i in range(m):
                for j in range(i + 1, m):
                    colors[pair_index(n, verts[i], verts[j])] = 1
            return
        p = rng.randint(2, min(m, 6))
        cuts = sorted(rng.sample(range(1, m), p - 1))
        bounds = [0] + cuts + [m]
        blocks = [verts[bounds[i]:bounds[i + 1]] for i in range(p)]
        ca, cb = rng.sample(range(1, k + 1), 2)
        for i in range(p):
            for j in range(i + 1, p):
                col = rng.choice((ca, cb))
                for x in blocks[i]:
                    for y in blocks[j]:
                        colors[pair_index(n, x, y)] = col
        for block in blocks:
            fill(block)

    fill(list(range(n)))
    return EdgeColoring(n, k, colors)


_TOKEN = re.compile(r"\S+")


def read_coloring(text: str) -> EdgeColoring:
    """Parse the text coloring format.

    Line 1 holds "n k"; the remaining lines hold the n(n-1)/2 colors in
    lexicographic pair order, whitespace-separated with any line layout.
    Lines starting with '#' (and trailing '#' comments) are ignored.
    """
    tokens: list[tuple[str, int, int]] = []
    last_line = 1
    for lineno, line in enumerate(text.splitlines(), 1):
        last_line = lineno
        body = line.split("#", 1)[0]
        for m in _TOKEN.finditer(body):
            tokens.append((m.group(), lineno, m.start() + 1))

    def take_int(what: str, minimum: int | None = None) -> int:
        if not tokens:
            raise ParseError(f"missing {what}", last_line, 1)
        tok, line, col = tokens.pop(0)
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"expected integer for {what}, got {tok!r}", line, col)
        if minimum is not None and value < minimum:
            raise ParseError(f"{what} must be at least {minimum}, got {value}", line, col)
        return value

    n = take_int("vertex count n", 2)
    k = take_int("palette size k", 1)
    expected = n * (n - 1) // 2
    colors = []
    for _ in range(expected):
        if not tokens:
            raise ParseError(
                f"expected {expected} edge colors, found {len(colors)}", last_line, 1
            )
        tok, line, col = tokens.pop(0)
        try:
            value = int(tok)
        except ValueError:
            raise ParseError(f"expected integer edge color, got {tok!r}", line, col)
        if not 1 <= value <= k:
            raise ParseError(f"color {value} outside palette [1, {k}]", line, col)
        colors.append(value)
    if tokens:
        tok, line, col = tokens[0]
        raise ParseError(f"unexpected trailing token {tok!r}", line, col)
    return EdgeColoring(n, k, colors)


def write_coloring(c: EdgeColoring) -> str:
    """Serialize to the canonical text layout: one row per first vertex."""
    lines = [f"{c.n} {c.k}"]
    idx = 0
    for u in range(c.n - 1):
        row_len = c.n - 1 - u
        row = c.colors[idx:idx + row_len]
        idx += row_len
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"
