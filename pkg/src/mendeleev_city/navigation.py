"""Ladder-operator moves between cells and shortest paths over them.

Moves are combinatorial unit steps on the quantum numbers, labelled by the
algebra whose ladder operators realize them:

* SO3xSU2 -- within one l-block: m steps of one unit, plus a j-flip that
  toggles j = l-1/2 <-> l+1/2 keeping m (when representable), so the block
  is a single connected component.
* SO4xSU2 -- within one street: l changes by one; j keeps its offset from l
  and m keeps its fractional position in the sub-block as closely as
  possible, clamped to the valid range.
* SO21   -- within one avenue: n changes by one with (l, j, m) fixed.
* SO42xSU2 -- taxi: any cell to any other cell in one step.

The taxi relation is infinite, so neighbor queries take an explicit Z bound.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .quartet import (
    MadelungKey,
    Quartet,
    QuartetError,
    block_quartets,
    enumerate_quartets,
    quartet_of,
    row_range,
    z_of,
)


class MoveAlgebra(enum.Enum):
    SO3xSU2 = "so3"
    SO4xSU2 = "so4"
    SO21 = "so21"
    SO42xSU2 = "so42"


@dataclass(frozen=True)
class Path:
    """A walk through the table: start cell plus (destination, algebra) steps."""

    start: Quartet
    steps: tuple[tuple[Quartet, MoveAlgebra], ...]

    def __len__(self) -> int:
        return len(self.steps)

    def cells(self) -> list[Quartet]:
        return [self.start] + [q for q, _ in self.steps]


def _try_quartet(n: int, l: int, j2: int, m2: int) -> Quartet | None:
    try:
        return Quartet(n, l, j2, m2)
    except QuartetError:
        return None


def _shift_l(q: Quartet, new_l: int) -> Quartet | None:
    """Move to an adjacent l-block keeping the j-offset and the fractional
    m position as close as possible, clamping m into [-j, j]."""
    if not 0 <= new_l <= q.n - 1:
        return None
    if new_l == 0:
        new_j2 = 1
    elif q.l == 0 or q.j2 == 2 * q.l + 1:
        new_j2 = 2 * new_l + 1
    else:
        new_j2 = 2 * new_l - 1
    # nearest odd integer to m2 * new_j2 / j2, ties toward the lower value
    target = Fraction(q.m2 * new_j2, q.j2)
    lower = ((target + 1) // 2) * 2 - 1  # greatest odd <= target+1 shifted
    candidates = sorted({int(lower), int(lower) + 2}, key=lambda c: (abs(c - target), c))
    new_m2 = candidates[0]
    new_m2 = max(-new_j2, min(new_j2, new_m2))
    return _try_quartet(q.n, new_l, new_j2, new_m2)


def neighbors(q: Quartet, algebra: MoveAlgebra, max_z: int | None = None) -> set[Quartet]:
    """Cells reachable from q by one elementary move of the given algebra.

    max_z bounds the universe; it is required for the taxi algebra (whose
    neighbor set is otherwise infinite) and caps the others when given.
    """
    result: set[Quartet] = set()
    if algebra is MoveAlgebra.SO3xSU2:
        for m2 in (q.m2 - 2, q.m2 + 2):
            cell = _try_quartet(q.n, q.l, q.j2, m2)
            if cell is not None:
                result.add(cell)
        if q.l >= 1:
            other_j2 = 2 * q.l + 1 if q.j2 == 2 * q.l - 1 else 2 * q.l - 1
            cell = _try_quartet(q.n, q.l, other_j2, q.m2)
            if cell is not None:
                result.add(cell)
    elif algebra is MoveAlgebra.SO4xSU2:
        # symmetrized relation: an edge exists when the clamping map sends
        # either endpoint to the other
        for new_l in (q.l - 1, q.l + 1):
            cell = _shift_l(q, new_l)
            if cell is not None and cell != q:
                result.add(cell)
            if 0 <= new_l <= q.n - 1:
                for cand in block_quartets(MadelungKey(q.n + new_l, q.n)):
                    if _shift_l(cand, q.l) == q:
                        result.add(cand)
    elif algebra is MoveAlgebra.SO21:
        for n in (q.n - 1, q.n + 1):
            if n >= 1:
                cell = _try_quartet(n, q.l, q.j2, q.m2)
                if cell is not None:
                    result.add(cell)
    elif algebra is MoveAlgebra.SO42xSU2:
        if max_z is None:
            raise ValueError("the taxi algebra needs an explicit max_z bound")
        result = {c for c in enumerate_quartets(max_z) if c != q}
    else:  # pragma: no cover
        raise ValueError(f"unknown algebra {algebra}")
    if max_z is not None:
        result = {c for c in result if z_of(c) <= max_z}
    return result


def _default_bound(a: Quartet, b: Quartet) -> int:
    """Universe bound for path search: every cell through the end of the row
    two streets past the deeper endpoint, so detours through wider rows are
    available."""
    return row_range(max(a.n, b.n) + 2)[1]


def shortest_path(
    start: Quartet,
    goal: Quartet,
    allowed: set[MoveAlgebra],
    max_z: int | None = None,
) -> Path | None:
    """Breadth-first minimal path from start to goal over the union of the
    allowed move relations, or None if unreachable within the bound.

    Ties are broken deterministically by visiting candidate neighbors in
    global table order (ascending Z).
    """
    if not allowed:
        raise ValueError("allowed algebras must be non-empty")
    if max_z is None:
        max_z = max(_default_bound(start, goal), z_of(start), z_of(goal))
    if start == goal:
        return Path(start, ())
    # expand algebras in a fixed order so equal-Z neighbors tie-break stably
    order = [a for a in MoveAlgebra if a in allowed]
    parents: dict[Quartet, tuple[Quartet, MoveAlgebra]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        frontier: list[tuple[int, Quartet, MoveAlgebra]] = []
        for algebra in order:
            for cell in neighbors(current, algebra, max_z=max_z):
                if cell not in seen:
                    frontier.append((z_of(cell), cell, algebra))
        for _, cell, algebra in sorted(frontier, key=lambda item: item[0]):
            if cell in seen:
                continue
            seen.add(cell)
            parents[cell] = (current, algebra)
            if cell == goal:
                steps: list[tuple[Quartet, MoveAlgebra]] = []
                walk = cell
                while walk != start:
                    prev, alg = parents[walk]
                    steps.append((walk, alg))
                    walk = prev
                return Path(start, tuple(reversed(steps)))
            queue.append(cell)
    return None


def path_records(path: Path) -> list[dict]:
    """Serializable step list: {z, quartet, algebra} per visited cell."""
    records = [{"z": z_of(path.start), "quartet": str(path.start), "algebra": None}]
    for cell, algebra in path.steps:
        records.append({"z": z_of(cell), "quartet": str(cell), "algebra": algebra.value})
    return records


def path_from_zs(zs: list[int], algebras: list[MoveAlgebra]) -> Path:
    """Build a Path from atomic numbers; lengths must differ by one."""
    if len(zs) != len(algebras) + 1:
        raise ValueError("need one more cell than moves")
    cells = [quartet_of(z) for z in zs]
    return Path(cells[0], tuple(zip(cells[1:], algebras)))
