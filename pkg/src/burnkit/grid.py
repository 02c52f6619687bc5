"""Bounds and a factor-2 heuristic burner for rectangular grids.

Grid vertices use row-major ids, matching build_grid.  Distances in a
grid are Manhattan distances, which lets the heuristic maintain the
distance-to-fire field as a flat array update per round instead of a
BFS: one round of spreading turns dist(v, burnt) into
max(dist(v, burnt) - 1, 0), and adding a source x lowers it to at most
|v - x| in the Manhattan metric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .burning import BurningSchedule, simulate
from .errors import InputError
from .graph import build_grid
from .intmath import ceil_pow23


@dataclass(frozen=True)
class GridSpec:
    """A rows x cols grid, both sides at least 1."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise InputError(
                f"grid sides must be positive, got {self.rows}x{self.cols}"
            )

    @property
    def n(self) -> int:
        return self.rows * self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def side(self) -> int:
        if not self.is_square:
            raise InputError(
                f"{self.rows}x{self.cols} grid has no single side length"
            )
        return self.rows


@dataclass(frozen=True)
class GridBurnReport:
    """Result of the heuristic burner, with the bounds it was judged by."""

    grid: GridSpec
    schedule: BurningSchedule
    rounds_used: int
    lower_bound: int
    upper_bound: int | None
    ratio: float


def max_burnable(rounds: int) -> int:
    """Most grid vertices one source can burn within the given rounds.

    The fire region is the radius-(rounds - 1) Manhattan ball, which
    holds 2*rounds*(rounds - 1) + 1 vertices when nothing is clipped by
    the boundary.
    """
    if rounds < 1:
        raise InputError(f"rounds must be positive, got {rounds}")
    return 2 * rounds * (rounds - 1) + 1


def grid_lower_bound(grid: GridSpec) -> int:
    """Smallest k whose k staggered Manhattan balls could cover the grid.

    Balls of radii k - 1, ..., 0 hold at most (2k**3 + k) / 3 vertices
    in total, so any k with 2k**3 + k < 3 * n is refuted.
    """
    n = grid.n
    k = 1
    while 2 * k * k * k + k < 3 * n:
        k += 1
    return k


def upper_bound_formula(side: int) -> int:
    """Proven burning-round ceiling for a square grid of the given side.

    Evaluates ceil(2 * side**(2/3) + 2 * side**(1/3) + 1) exactly: with
    c = M - 1, the bound M suffices iff (8*side + 6c + 4)**2 is at most
    (2c + 4)**2 * (2c + 1), an integer restatement obtained by isolating
    the cube root and cubing, so no floating-point ceiling is involved.
    """
    if side < 1:
        raise InputError(f"grid side must be positive, got {side}")

    def holds(m: int) -> bool:
        c = m - 1
        return (8 * side + 6 * c + 4) ** 2 <= (2 * c + 4) ** 2 * (2 * c + 1)

    m = max(1, int(2 * side ** (2 / 3) + 2 * side ** (1 / 3) + 1) - 3)
    while not holds(m):
        m += 1
    return m


def subgrid_dims(grid: GridSpec) -> tuple[int, int]:
    """Block dimensions used by the heuristic: ceil of each side^(2/3)."""
    return ceil_pow23(grid.rows), ceil_pow23(grid.cols)


def burn_grid_2approx(grid: GridSpec) -> GridBurnReport:
    """Burn a grid in at most twice the lower-bound number of rounds.

    Phase one tiles the grid with blocks of roughly side^(2/3) per axis
    and ignites each block's center, one per round in row-major block
    order; a center the fire has already reached is swapped for the
    farthest unburnt vertex.  Phase two keeps igniting the farthest
    unburnt vertex until the fire covers everything.  The returned
    schedule is re-run through the generic simulator as a check.
    """
    rows, cols = grid.rows, grid.cols
    rr = np.arange(rows, dtype=np.int32)[:, None]
    cc = np.arange(cols, dtype=np.int32)[None, :]
    dist = np.full((rows, cols), rows + cols, dtype=np.int32)

    h, w = subgrid_dims(grid)
    planned = [
        (r0 + (min(h, rows - r0) - 1) // 2, c0 + (min(w, cols - c0) - 1) // 2)
        for r0 in range(0, rows, h)
        for c0 in range(0, cols, w)
    ]

    ids: list[int] = []

    def ignite(r: int, c: int) -> None:
        ids.append(r * cols + c)
        np.minimum(
            np.maximum(dist - 1, 0),
            np.abs(rr - r) + np.abs(cc - c),
            out=dist,
        )

    for r, c in planned:
        if not dist.any():
            break
        if dist[r, c] == 0:
            r, c = divmod(int(dist.argmax()), cols)
        ignite(r, c)
    while dist.any():
        ignite(*divmod(int(dist.argmax()), cols))

    schedule = BurningSchedule.of(ids)
    outcome = simulate(build_grid(rows, cols), schedule)
    assert outcome.complete and outcome.rounds_used == len(ids)

    lower = grid_lower_bound(grid)
    upper = upper_bound_formula(grid.side) if grid.is_square else None
    return GridBurnReport(
        grid=grid,
        schedule=schedule,
        rounds_used=len(ids),
        lower_bound=lower,
        upper_bound=upper,
        ratio=len(ids) / lower,
    )
