"""Materialize a bounded region of the table and classify its cells.

Rows (streets) are indexed by n, columns (avenues) by (l, j, m).  Families
are a property of the column alone; transition-type series are l-blocks with
l = 2, 3, 4 and carry contiguous Z intervals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .quartet import (
    MadelungKey,
    Quartet,
    QuartetError,
    block_capacity,
    block_range,
    enumerate_quartets,
    half_str,
    z_of,
)


@dataclass(frozen=True)
class ColumnId:
    """Avenue coordinates (l, j, m); two cells share a column iff they agree here."""

    l: int
    j2: int
    m2: int

    def __post_init__(self) -> None:
        if self.l < 0:
            raise QuartetError(f"l must be >= 0, got {self.l}")
        if self.l == 0:
            if self.j2 != 1:
                raise QuartetError(f"l=0 requires j=1/2, got j={half_str(self.j2)}")
        elif self.j2 not in (2 * self.l - 1, 2 * self.l + 1):
            raise QuartetError(
                f"l={self.l} requires j=l-1/2 or l+1/2, got j={half_str(self.j2)}"
            )
        if self.m2 % 2 == 0 or not -self.j2 <= self.m2 <= self.j2:
            raise QuartetError(
                f"need m in -j..j, got m={half_str(self.m2)}, j={half_str(self.j2)}"
            )

    def __str__(self) -> str:
        return f"({self.l},{half_str(self.j2)},{half_str(self.m2)})"


def column_of(q: Quartet) -> ColumnId:
    return ColumnId(q.l, q.j2, q.m2)


def min_n(column: ColumnId) -> int:
    """Smallest street on which the column has a house (l <= n-1)."""
    return max(1, column.l + 1)


class Family(enum.Enum):
    ALKALI_METAL = "alkali metal"
    ALKALINE_EARTH = "alkaline earth"
    CHALCOGEN = "chalcogen"
    HALOGEN = "halogen"
    NOBLE_GAS = "noble gas"
    OTHER = "other"


_FAMILY_COLUMNS = {
    (0, 1, -1): Family.ALKALI_METAL,
    (0, 1, 1): Family.ALKALINE_EARTH,
    (1, 3, -1): Family.CHALCOGEN,
    (1, 3, 1): Family.HALOGEN,
    (1, 3, 3): Family.NOBLE_GAS,
}


def family_of(q: Quartet) -> Family:
    """Named family of the cell's column; depends on (l, j, m) only."""
    return _FAMILY_COLUMNS.get((q.l, q.j2, q.m2), Family.OTHER)


class SeriesKind(enum.Enum):
    TRANSITION = "transition"
    INNER_TRANSITION = "inner transition"
    G_BLOCK_PERIOD = "g-block period"


_SERIES_L = {
    2: SeriesKind.TRANSITION,
    3: SeriesKind.INNER_TRANSITION,
    4: SeriesKind.G_BLOCK_PERIOD,
}


@dataclass(frozen=True)
class SeriesSpec:
    kind: SeriesKind
    n: int
    l: int
    z_first: int
    z_last: int

    def __post_init__(self) -> None:
        if self.z_last - self.z_first + 1 != block_capacity(self.l):
            raise ValueError(
                f"series interval {self.z_first}..{self.z_last} does not hold"
                f" {block_capacity(self.l)} elements"
            )


def series_catalog(max_n: int) -> list[SeriesSpec]:
    """Transition (l=2), inner-transition (l=3) and g-block (l=4) series
    for every row n <= max_n on which the block exists."""
    if max_n < 3:
        raise ValueError(f"max_n must be >= 3, got {max_n}")
    out = []
    for n in range(3, max_n + 1):
        for l, kind in _SERIES_L.items():
            if l <= n - 1:
                z_first, z_last = block_range(MadelungKey(n + l, n))
                out.append(SeriesSpec(kind, n, l, z_first, z_last))
    return out


def series_of(q: Quartet) -> SeriesSpec | None:
    """The series containing the cell, if its block is one of l = 2, 3, 4."""
    kind = _SERIES_L.get(q.l)
    if kind is None:
        return None
    z_first, z_last = block_range(q.key)
    return SeriesSpec(kind, q.n, q.l, z_first, z_last)


class SubBlockError(ValueError):
    """Raised when asking for the j-split of an s-block (l = 0 has one sub-block)."""


def subblock_split(n: int, l: int) -> list[tuple[int, int, int]]:
    """The two contiguous Z intervals of block [n+l, n]: (j2, z_first, z_last)
    for j = l-1/2 then j = l+1/2."""
    if l == 0:
        raise SubBlockError("l=0 blocks have a single sub-block; use the whole block")
    if not 1 <= l <= n - 1:
        raise QuartetError(f"need 1 <= l <= n-1, got l={l}, n={n}")
    z_first, z_last = block_range(MadelungKey(n + l, n))
    lower_size = 2 * l  # 2j+1 for j = l-1/2
    return [
        (2 * l - 1, z_first, z_first + lower_size - 1),
        (2 * l + 1, z_first + lower_size, z_last),
    ]


@dataclass(frozen=True)
class TableRegion:
    """The first max_z cells of the table, with their atomic numbers."""

    max_z: int
    cells: tuple[tuple[Quartet, int], ...]

    def rows(self) -> dict[int, list[tuple[Quartet, int]]]:
        """Cells grouped by street n, each street in avenue order (l, j, m)."""
        grouped: dict[int, list[tuple[Quartet, int]]] = {}
        for q, z in self.cells:
            grouped.setdefault(q.n, []).append((q, z))
        for row in grouped.values():
            row.sort(key=lambda cell: (cell[0].l, cell[0].j2, cell[0].m2))
        return dict(sorted(grouped.items()))


def build_region(max_z: int) -> TableRegion:
    if max_z < 1:
        raise ValueError(f"max_z must be >= 1, got {max_z}")
    quartets = enumerate_quartets(max_z)
    cells = tuple((q, z_of(q)) for q in quartets)
    return TableRegion(max_z=max_z, cells=cells)
