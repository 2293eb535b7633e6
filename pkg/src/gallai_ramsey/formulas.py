"""Closed-form Ramsey and Gallai-Ramsey values for paths, even cycles,
matchings and the triangle.

The target family is parameterized by n >= 3: colors get paths on
5, 7, ..., 2n-1 vertices (index i means a path on 2i+3 vertices for
i <= n-2), and index n-1 means the head target, either the cycle C_{2n}
or the long path P_{2n+1}. A TargetSpec fixes n, the color count k, a
non-increasing index per color, and the head interpretation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence, Union

from .targets import CYCLE, PATH, TargetGraph, even_cycle, path


class InvalidSpecError(ValueError):
    """Malformed target-family specification."""


class IndexOutOfRangeError(InvalidSpecError):
    """A raw target index lies outside [0, n-1]."""


class UnsupportedPairError(ValueError):
    """Pair outside the three closed-form two-color theorems."""


class OutOfHypothesesError(ValueError):
    """Requested value is not pinned by any cited closed form."""


HEAD_CYCLE = "cycle"
HEAD_PATH = "path"


@dataclass(frozen=True)
class TargetSpec:
    """Sorted per-color target indices within one family.

    `source_colors[j-1]` is the caller's original color id for sorted
    color j, so certificates can be mapped back after sorting.
    """

    n: int
    k: int
    indices: tuple[int, ...]
    head: str = HEAD_CYCLE
    source_colors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 3:
            raise InvalidSpecError(f"family parameter n must be >= 3, got {self.n}")
        if self.k < 2:
            raise InvalidSpecError(f"need at least 2 colors, got k={self.k}")
        if self.head not in (HEAD_CYCLE, HEAD_PATH):
            raise InvalidSpecError(f"head must be 'cycle' or 'path', got {self.head!r}")
        if len(self.indices) != self.k:
            raise InvalidSpecError(
                f"{len(self.indices)} indices for k={self.k} colors"
            )
        for i in self.indices:
            if not 0 <= i <= self.n - 1:
                raise IndexOutOfRangeError(
                    f"index {i} outside [0, {self.n - 1}]"
                )
        if any(a < b for a, b in zip(self.indices, self.indices[1:])):
            raise InvalidSpecError(f"indices must be non-increasing: {self.indices}")
        if not self.source_colors:
            object.__setattr__(
                self, "source_colors", tuple(range(1, self.k + 1))
            )
        elif sorted(self.source_colors) != list(range(1, self.k + 1)):
            raise InvalidSpecError(
                f"source_colors must permute 1..{self.k}, got {self.source_colors}"
            )

    def target(self, color: int) -> TargetGraph:
        """Target graph for sorted color `color` (1-based)."""
        i = self.indices[color - 1]
        if i <= self.n - 2:
            return path(2 * i + 3)
        if self.head == HEAD_CYCLE:
            return even_cycle(2 * self.n)
        return path(2 * self.n + 1)

    def targets(self) -> list[TargetGraph]:
        return [self.target(j) for j in range(1, self.k + 1)]

    def largest_order(self) -> int:
        """Vertex count of the color-1 target."""
        return self.target(1).num_vertices

    def describe(self) -> str:
        items = ",".join(str(i) for i in self.indices)
        return f"n={self.n} k={self.k} head={self.head} i={items}"


def sorted_spec(
    indices: Sequence[int], n: int, k: int | None = None, head: str = HEAD_CYCLE
) -> TargetSpec:
    """Normalize raw per-color indices into a sorted TargetSpec.

    The sort is stable and descending; the recorded permutation maps the
    sorted color order back to the caller's colors.
    """
    raw = list(indices)
    if k is None:
        k = len(raw)
    if len(raw) != k:
        raise InvalidSpecError(f"{len(raw)} indices for k={k} colors")
    for i in raw:
        if not 0 <= i <= n - 1:
            raise IndexOutOfRangeError(f"index {i} outside [0, {n - 1}]")
    order = sorted(range(k), key=lambda j: (-raw[j], j))
    return TargetSpec(
        n=n,
        k=k,
        indices=tuple(raw[j] for j in order),
        head=head,
        source_colors=tuple(j + 1 for j in order),
    )


_SPEC_ITEM = re.compile(r"^(n|k|head|i)=(.+)$")


def parse_spec_string(text: str) -> TargetSpec:
    """Parse the CLI spec syntax, e.g. "n=3 k=3 head=cycle i=2,2,2"."""
    fields: dict[str, str] = {}
    for token in text.split():
        m = _SPEC_ITEM.match(token)
        if not m:
            raise InvalidSpecError(f"bad spec token {token!r}")
        key, value = m.groups()
        if key in fields:
            raise InvalidSpecError(f"duplicate spec key {key!r}")
        fields[key] = value
    if "n" not in fields or "i" not in fields:
        raise InvalidSpecError("spec needs at least n=<int> and i=<list>")
    try:
        n = int(fields["n"])
        indices = [int(part) for part in fields["i"].split(",") if part.strip()]
    except ValueError as e:
        raise InvalidSpecError(f"bad spec value: {e}")
    head = fields.get("head", HEAD_CYCLE).lower()
    if head in ("long_path", "longpath"):
        head = HEAD_PATH
    k = int(fields["k"]) if "k" in fields else len(indices)
    return sorted_spec(indices, n=n, k=k, head=head)


def predicted_gr(spec: TargetSpec) -> int:
    """Order of the largest target plus the sum of the remaining indices."""
    return spec.largest_order() + sum(spec.indices[1:])


def classical_ramsey(h1: TargetGraph, h2: TargetGraph) -> int:
    """Two-color Ramsey number for the covered pairs.

    Covered: equal even cycles C_{2n} with n >= 3 (3n - 1); a path P_m
    against an even cycle C_{2n} with 2n >= m >= 3 (2n + floor(m/2) - 1);
    two paths P_m, P_n with n >= m >= 2 (n + floor(m/2) - 1).
    """
    kinds = {h1.kind, h2.kind}
    if kinds == {CYCLE}:
        if h1.size != h2.size:
            raise UnsupportedPairError(
                f"unequal even cycles ({h1}, {h2}) are not covered"
            )
        half = h1.size // 2
        if half < 3:
            raise UnsupportedPairError(f"({h1}, {h2}) needs cycle length >= 6")
        return 3 * half - 1
    if kinds == {PATH, CYCLE}:
        p, cyc = (h1, h2) if h1.kind == PATH else (h2, h1)
        if p.size < 3 or cyc.size < p.size:
            raise UnsupportedPairError(
                f"({p}, {cyc}) outside the range cycle length >= path order >= 3"
            )
        return cyc.size + p.size // 2 - 1
    if kinds == {PATH}:
        lo, hi = sorted((h1.size, h2.size))
        return hi + lo // 2 - 1
    raise UnsupportedPairError(f"no closed form covers ({h1}, {h2})")


def _two_colorable_triangle_max(k: int) -> int:
    # largest complete graph admitting a k-coloring in which every
    # triangle sees exactly two colors
    if k % 2 == 0:
        return 5 ** (k // 2)
    return 2 * 5 ** ((k - 1) // 2)


_NAME = re.compile(r"^([PCKM])(\d+)$")

Bounds = tuple[int, int]


def known_gr(name: str, k: int) -> Union[int, Bounds]:
    """Gallai-Ramsey value GR_k for a named target, from the cited
    closed forms.

    Returns an exact integer where a formula pins the value, or a
    (lower, upper) pair where only the construction lower bound and the
    general upper bound are available. Raises OutOfHypothesesError for
    targets no cited statement covers.
    """
    if k < 1:
        raise OutOfHypothesesError(f"need k >= 1, got {k}")
    m = _NAME.match(name.strip().upper())
    if not m:
        raise OutOfHypothesesError(
            f"bad target name {name!r}; expected K3, P<m>, C<L> or M<s>"
        )
    letter, size = m.group(1), int(m.group(2))

    if letter == "K" or (letter == "C" and size == 3):
        if letter == "K" and size != 3:
            raise OutOfHypothesesError("complete-graph targets beyond K3 are not covered")
        return _two_colorable_triangle_max(k) + 1

    if letter == "P":
        if size < 3:
            raise OutOfHypothesesError(f"no closed form for P{size}")
        if size <= 6:
            return ((size - 2) // 2) * k + (size + 1) // 2 + 1
        if size == 7:
            return 2 * k + 5
        if size == 8:
            return 3 * k + 5
        if size == 9:
            return 3 * k + 6
        # construction lower bound vs the general path upper bound
        half = size // 2
        lower = (half - 1) * k + half + (1 if size % 2 == 0 else 2)
        upper = ((size - 2) // 2) * k + 3 * half
        return lower, upper

    if letter == "C":
        if size % 2 == 1:
            half = (size - 1) // 2
            if 2 <= half <= 7:
                return half * 2 ** k + 1
            raise OutOfHypothesesError(f"no closed form for the odd cycle C{size}")
        if size == 4:
            return k + 4
        if size == 6:
            return 2 * k + 4
        if size == 8:
            return 3 * k + 5
        if size >= 10:
            half = size // 2
            return (half - 1) * k + half + 1, (half - 1) * k + 3 * half
        raise OutOfHypothesesError(f"no closed form for C{size}")

    # matchings
    if size in (3, 4):
        return (size - 1) * k + size + 1
    if size >= 5:
        return (size - 1) * k + size + 1, (size - 1) * k + 3 * size
    raise OutOfHypothesesError(f"no closed form for M{size}")
