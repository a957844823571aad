"""Lattice paths with unit steps: corners, moves, admissibility, components.

A path for rank n and a start pair (i, k) is a height sequence
(y_0, ..., y_N) with N = 2n, y_0 = i + k, y_N = N - i + k and unit steps.
Heights live on the parity lattice (r - y_r is constant mod 2).  Plots put
larger heights lower on the page, so an "upper" corner is a local minimum
of the stored height value and a "lower" corner a local maximum.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

UPPER = "upper"
LOWER = "lower"


class ParityError(ValueError):
    """Raised for a start pair (i, k) off the even-odd lattice."""


@dataclass(frozen=True)
class PathContext:
    """Rank and start pair fixing one path space."""

    n: int
    i: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n}")
        if not 1 <= self.i <= self.n:
            raise ValueError(f"node {self.i} out of range 1..{self.n}")
        if (self.i - self.k) % 2 != 1:
            raise ParityError(
                f"(i={self.i}, k={self.k}) violates i - k = 1 (mod 2); "
                f"try k={self.k - 1} or k={self.k + 1}"
            )

    @property
    def N(self) -> int:
        return 2 * self.n

    @property
    def start(self) -> int:
        return self.i + self.k

    @property
    def end(self) -> int:
        return self.N - self.i + self.k


class Corner(NamedTuple):
    """A direction change of a path at column r, height ell."""

    r: int
    ell: int
    kind: str


@dataclass(frozen=True)
class Path:
    """A height sequence in the path space of its context."""

    ctx: PathContext
    heights: tuple[int, ...]

    def __post_init__(self) -> None:
        y = self.heights
        N = self.ctx.N
        if len(y) != N + 1:
            raise ValueError(f"expected {N + 1} heights, got {len(y)}")
        if y[0] != self.ctx.start or y[N] != self.ctx.end:
            raise ValueError(
                f"endpoints must be ({self.ctx.start}, {self.ctx.end}), "
                f"got ({y[0]}, {y[N]})"
            )
        for r in range(N):
            if abs(y[r + 1] - y[r]) != 1:
                raise ValueError(f"non-unit step at column {r}")
        # lattice parity is implied by the endpoint and step conditions
        assert all((r - yr) % 2 == (0 - y[0]) % 2 for r, yr in enumerate(y))

    def __lt__(self, other: "Path") -> bool:
        return self.heights < other.heights


def bar(r: int, n: int) -> int:
    """Fold a column index 1..2n-1 onto the node range 1..n."""
    if not 1 <= r <= 2 * n - 1:
        raise ValueError(f"column {r} out of range 1..{2 * n - 1}")
    return min(r, 2 * n - r)


def corners(p: Path) -> tuple[Corner, ...]:
    """All corners of p, sorted by column."""
    y = p.heights
    out = []
    for r in range(1, p.ctx.N):
        if y[r - 1] == y[r] + 1 == y[r + 1]:
            out.append(Corner(r, y[r], UPPER))
        elif y[r - 1] == y[r] - 1 == y[r + 1]:
            out.append(Corner(r, y[r], LOWER))
    return tuple(out)


def highest_path(ctx: PathContext) -> Path:
    """The unique path with no lower corners: i down-steps, then up-steps."""
    y = [ctx.start]
    for r in range(ctx.N):
        y.append(y[-1] + (1 if r >= ctx.i else -1))
    return Path(ctx, tuple(y))


def lowest_path(ctx: PathContext) -> Path:
    """The unique path with no upper corners: N - i up-steps, then down-steps."""
    y = [ctx.start]
    for r in range(ctx.N):
        y.append(y[-1] + (-1 if r >= ctx.N - ctx.i else 1))
    return Path(ctx, tuple(y))


def enumerate_paths(ctx: PathContext) -> list[Path]:
    """Every path of the space, in lexicographic height order.

    Brute force over all placements of the i down-steps among the N unit
    steps; C(2n, i) stays tiny at desk scale and doubles as its own oracle.
    """
    out = []
    for downs in combinations(range(ctx.N), ctx.i):
        down_set = set(downs)
        y = [ctx.start]
        for r in range(ctx.N):
            y.append(y[-1] + (-1 if r in down_set else 1))
        out.append(Path(ctx, tuple(y)))
    out.sort(key=lambda p: p.heights)
    return out


def is_admissible(p: Path) -> bool:
    """Type-C symmetry constraint: y_j <= y_{N-j} for every node j."""
    y = p.heights
    N = p.ctx.N
    return all(y[j] <= y[N - j] for j in range(1, p.ctx.n + 1))


def enumerate_admissible(ctx: PathContext) -> list[Path]:
    """All admissible paths, in lexicographic height order."""
    return [p for p in enumerate_paths(ctx) if is_admissible(p)]


def can_lower(p: Path, j: int, ell: int) -> bool:
    """True iff (j, ell - 1) is an upper corner of p."""
    y = p.heights
    if not 1 <= j <= p.ctx.N - 1:
        return False
    return y[j] == ell - 1 and y[j - 1] == ell and y[j + 1] == ell


def apply_lower(p: Path, j: int, ell: int) -> Path:
    """Flip the upper corner at (j, ell - 1) down to (j, ell + 1)."""
    if not can_lower(p, j, ell):
        raise ValueError(f"path cannot be lowered at (j={j}, ell={ell})")
    y = list(p.heights)
    y[j] = ell + 1
    return Path(p.ctx, tuple(y))


def can_raise(p: Path, j: int, ell: int) -> bool:
    """True iff (j, ell + 1) is a lower corner of p."""
    y = p.heights
    if not 1 <= j <= p.ctx.N - 1:
        return False
    return y[j] == ell + 1 and y[j - 1] == ell and y[j + 1] == ell


def apply_raise(p: Path, j: int, ell: int) -> Path:
    """Flip the lower corner at (j, ell + 1) up to (j, ell - 1); inverse of apply_lower."""
    if not can_raise(p, j, ell):
        raise ValueError(f"path cannot be raised at (j={j}, ell={ell})")
    y = list(p.heights)
    y[j] = ell - 1
    return Path(p.ctx, tuple(y))


def lowering_moves(p: Path, j: int | None = None) -> list[tuple[int, int]]:
    """Available lowering moves (column, ell), restricted to bar(column) = j.

    When two upper corners share a height, the move in the right half
    (larger column) comes first; this is the order that keeps move chains
    inside the admissible set whenever possible.
    """
    moves = [
        (c.r, c.ell + 1)
        for c in corners(p)
        if c.kind == UPPER and (j is None or bar(c.r, p.ctx.n) == j)
    ]
    moves.sort(key=lambda m: (m[1], -m[0]))
    return moves


def reconstruct(ctx: PathContext, corner_set: Iterable[Corner]) -> Path:
    """Rebuild the unique path with the given corners.

    Between consecutive corners (and from either endpoint to the nearest
    corner) the path is monotone, so linear interpolation with slope +-1
    recovers every height.
    """
    anchors = [(0, ctx.start)]
    anchors += sorted((c.r, c.ell) for c in corner_set)
    anchors.append((ctx.N, ctx.end))
    y: list[int] = []
    for (r0, h0), (r1, h1) in zip(anchors, anchors[1:]):
        if r1 <= r0 and (r0, h0) != (0, ctx.start):
            raise ValueError("corner columns must be distinct")
        if abs(h1 - h0) != r1 - r0:
            raise ValueError(f"no monotone segment from {(r0, h0)} to {(r1, h1)}")
        step = 1 if h1 > h0 else -1 if h1 < h0 else 0
        for t in range(r1 - r0):
            y.append(h0 + step * t)
    y.append(ctx.end)
    return Path(ctx, tuple(y))


def j_components(ctx: PathContext, j: int) -> tuple[tuple[Path, ...], ...]:
    """Partition the admissible paths into move-connectivity classes for node j.

    Two admissible paths are adjacent when a single lowering move at a
    column r with bar(r) = j maps one to the other; edges whose endpoint
    leaves the admissible set are discarded.  Components are returned
    sorted by their lexicographically smallest member.
    """
    if not 1 <= j <= ctx.n:
        raise ValueError(f"node {j} out of range 1..{ctx.n}")
    paths = enumerate_admissible(ctx)
    admissible_set = set(paths)
    neighbors: dict[Path, set[Path]] = defaultdict(set)
    for p in paths:
        for col, ell in lowering_moves(p, j):
            q = apply_lower(p, col, ell)
            if q in admissible_set:
                neighbors[p].add(q)
                neighbors[q].add(p)
    seen: set[Path] = set()
    components: list[tuple[Path, ...]] = []
    for p in paths:
        if p in seen:
            continue
        block: set[Path] = set()
        queue = deque([p])
        while queue:
            u = queue.popleft()
            if u in block:
                continue
            block.add(u)
            queue.extend(neighbors[u] - block)
        seen |= block
        components.append(tuple(sorted(block)))
    components.sort(key=lambda c: c[0].heights)
    return tuple(components)


RED = "\x1b[31m"
BLUE = "\x1b[34m"
RESET = "\x1b[0m"


def render_grid(p: Path, color: bool = False) -> str:
    """ASCII picture of a path: `*` points, `R`/`B` upper/lower corner marks.

    Column headers run 0..N; row labels are the heights, increasing
    downward as in the plotting convention.
    """
    y = p.heights
    lo, hi = min(y), max(y)
    marks = {(c.r, c.ell): ("R" if c.kind == UPPER else "B") for c in corners(p)}
    cw = len(str(p.ctx.N))
    lw = max(len(str(lo)), len(str(hi)))
    lines = [" " * lw + " |" + "".join(f" {c:>{cw}}" for c in range(p.ctx.N + 1))]
    for h in range(lo, hi + 1):
        cells = []
        for r in range(p.ctx.N + 1):
            glyph = "." if y[r] != h else marks.get((r, h), "*")
            if color and glyph == "R":
                glyph = f"{RED}R{RESET}"
            elif color and glyph == "B":
                glyph = f"{BLUE}B{RESET}"
            # every glyph is one visible character; pad to the column width
            cells.append(" " + " " * (cw - 1) + glyph)
        lines.append(f"{h:>{lw}} |" + "".join(cells))
    return "\n".join(lines)
