"""Combinatorial complexity of N^D grid games (tic-tac-toe, Qubic).

Covers the closed-form state-space bounds, the factorial game-tree count,
exhaustive breadth-first enumeration of legal positions with optional
symmetry reduction, and the entropy of the per-ply state distribution.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateInput, InvalidParameter, ResourceLimit
from .measures import ENUMERATED, MeasureResult, log10_int, normalized_entropy

# Boards beyond this many cells make exhaustive enumeration explode.
ENUMERATION_CELL_LIMIT = 16


@dataclass(frozen=True)
class GridGameSpec:
    """An N^D board played to at most max_plies with win lines of win_length."""

    side: int
    dims: int
    max_plies: int
    win_length: int

    def __post_init__(self) -> None:
        for name in ("side", "dims", "max_plies", "win_length"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParameter(f"{name} must be a positive integer")
        if self.win_length > self.side:
            raise InvalidParameter("win_length cannot exceed the board side")
        if self.max_plies > self.cells:
            raise InvalidParameter("max_plies cannot exceed the cell count")

    @property
    def cells(self) -> int:
        return self.side**self.dims


TIC_TAC_TOE = GridGameSpec(side=3, dims=2, max_plies=9, win_length=3)
QUBIC = GridGameSpec(side=4, dims=3, max_plies=64, win_length=4)

PRESETS = {"ttt": TIC_TAC_TOE, "qubic": QUBIC}


def preset(name: str) -> GridGameSpec:
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidParameter(
            f"unknown preset {name!r}; choose from {sorted(PRESETS)}"
        ) from None


def ssc_upper_bound(spec: GridGameSpec) -> float:
    """log10 of 3^cells: every cell empty, X, or O regardless of legality."""
    return spec.cells * math.log10(3.0)


def ssc_combinatorial(spec: GridGameSpec) -> tuple[int, float]:
    """Stone-count sum over plies 1..max_plies, exact then logged.

    Ply i places ceil(i/2) X stones and floor(i/2) O stones; the term
    counts every such arrangement, so a few positions reached only through
    illegal play are included. Returns (total, log10(total)).
    """
    c = spec.cells
    total = 0
    for i in range(1, spec.max_plies + 1):
        x = (i + 1) // 2
        o = i // 2
        total += math.comb(c, x) * math.comb(c - x, o)
    return total, log10_int(total)


def gtc_factorial(cells: int, avg_game_length: int) -> float:
    """log10 of cells! / (cells - avg_game_length)!, kept exact in integers."""
    if cells < 1 or avg_game_length < 1:
        raise InvalidParameter("cells and avg_game_length must be positive")
    if avg_game_length > cells:
        raise InvalidParameter("avg_game_length cannot exceed the cell count")
    return log10_int(math.perm(cells, avg_game_length))


def _coords(index: int, spec: GridGameSpec) -> tuple[int, ...]:
    out = []
    for _ in range(spec.dims):
        index, r = divmod(index, spec.side)
        out.append(r)
    return tuple(reversed(out))


def _index(coords: tuple[int, ...], spec: GridGameSpec) -> int:
    index = 0
    for c in coords:
        index = index * spec.side + c
    return index


@lru_cache(maxsize=None)
def win_lines(spec: GridGameSpec) -> tuple[tuple[int, ...], ...]:
    """All straight segments of win_length cells, as sorted index tuples.

    Directions are vectors in {-1,0,1}^D whose first nonzero component is
    positive, so each geometric line is generated once.
    """
    directions = [
        d
        for d in itertools.product((-1, 0, 1), repeat=spec.dims)
        if any(d) and next(v for v in d if v) > 0
    ]
    lines = set()
    k = spec.win_length
    for start in range(spec.cells):
        origin = _coords(start, spec)
        for d in directions:
            end = [origin[a] + (k - 1) * d[a] for a in range(spec.dims)]
            if any(not 0 <= e < spec.side for e in end):
                continue
            cells = tuple(
                sorted(
                    _index(tuple(origin[a] + j * d[a] for a in range(spec.dims)), spec)
                    for j in range(k)
                )
            )
            lines.add(cells)
    return tuple(sorted(lines))


@lru_cache(maxsize=None)
def symmetry_maps(spec: GridGameSpec) -> tuple[tuple[int, ...], ...]:
    """Index permutations for the board's axis-permutation/reflection group.

    For D = 2 this is the 8-element dihedral group; in general 2^D * D!.
    Map m sends a board to its image via image[i] = board[m[i]].
    """
    maps = []
    axes = range(spec.dims)
    for perm in itertools.permutations(axes):
        for flips in itertools.product((False, True), repeat=spec.dims):
            m = []
            for i in range(spec.cells):
                coords = _coords(i, spec)
                src = tuple(
                    spec.side - 1 - coords[perm[a]] if flips[a] else coords[perm[a]]
                    for a in axes
                )
                m.append(_index(src, spec))
            maps.append(tuple(m))
    return tuple(maps)


def canonical_form(board: tuple[int, ...], spec: GridGameSpec) -> tuple[int, ...]:
    """Lexicographic minimum of the board over its symmetry group images."""
    return min(tuple(board[i] for i in m) for m in symmetry_maps(spec))


def _winner(board: tuple[int, ...], lines: tuple[tuple[int, ...], ...]) -> bool:
    for line in lines:
        first = board[line[0]]
        if first and all(board[i] == first for i in line[1:]):
            return True
    return False


@dataclass(frozen=True)
class PlyDistribution:
    """Unique reachable positions per ply, starting at the empty board."""

    counts_per_ply: tuple[int, ...]
    symmetry_reduced: bool

    @property
    def total(self) -> int:
        return sum(self.counts_per_ply)


def enumerate_states(spec: GridGameSpec, symmetry: bool = False) -> PlyDistribution:
    """Breadth-first count of legal positions reachable under alternation.

    Positions where a player has already completed a line generate no
    children. With symmetry on, positions are replaced by their canonical
    form before deduplication.
    """
    if spec.cells > ENUMERATION_CELL_LIMIT:
        raise ResourceLimit(
            f"enumeration supports at most {ENUMERATION_CELL_LIMIT} cells, "
            f"got {spec.cells}"
        )
    lines = win_lines(spec)
    empty = (0,) * spec.cells
    frontier = {empty}
    counts = [1]
    for ply in range(spec.max_plies):
        player = 1 if ply % 2 == 0 else 2
        seen: set[tuple[int, ...]] = set()
        for board in frontier:
            for cell, value in enumerate(board):
                if value:
                    continue
                child = board[:cell] + (player,) + board[cell + 1 :]
                if symmetry:
                    child = canonical_form(child, spec)
                seen.add(child)
        if not seen:
            break
        counts.append(len(seen))
        # wins are counted in their ply but halt further expansion
        frontier = {b for b in seen if not _winner(b, lines)}
    return PlyDistribution(counts_per_ply=tuple(counts), symmetry_reduced=symmetry)


def ply_entropy(dist: PlyDistribution) -> MeasureResult:
    """Normalized entropy of the per-ply position counts.

    Events are the plies themselves: p_i = count_i / total with
    event_count = number of plies recorded.
    """
    counts = dist.counts_per_ply
    if sum(1 for c in counts if c > 0) < 2:
        raise DegenerateInput("ply entropy needs at least two occupied plies")
    total = dist.total
    probs = [c / total for c in counts]
    value = normalized_entropy(probs, event_count=len(counts))
    kind = "symmetry-reduced" if dist.symmetry_reduced else "raw legal"
    return MeasureResult(
        measure_name="ply_entropy",
        value=value,
        convention=(
            f"per-ply {kind} position counts / total; "
            f"event_count = {len(counts)} plies"
        ),
        provenance=ENUMERATED,
    )
