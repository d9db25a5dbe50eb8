"""Exact quartet arithmetic and the Madelung ordering.

A cell of the table is addressed by the quartet (n, l, j, m) with
j = l +/- 1/2 (j = 1/2 for l = 0) and m = -j, ..., +j.  Half-integers are
stored as doubled integers (j2 = 2j, m2 = 2m) so that every computation,
including the closed-form atomic-number formula, is exact integer
arithmetic.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


class QuartetError(ValueError):
    """Raised when a quartet or Madelung key violates its constraints."""


class AtomicNumberError(ValueError):
    """Raised for atomic numbers outside the domain Z >= 1."""


def half_str(x2: int) -> str:
    """Render a doubled integer as a conventional half-integer string."""
    if x2 % 2 == 0:
        return str(x2 // 2)
    return f"{x2}/2"


def parse_half(text: str) -> int:
    """Parse '5/2', '-1/2' or '3' into a doubled integer, exactly."""
    text = text.strip()
    try:
        if "/" in text:
            num_s, den_s = text.split("/", 1)
            num, den = int(num_s), int(den_s)
            if den == 2:
                return num
            if den == 1:
                return 2 * num
            raise QuartetError(f"half-integer must have denominator 1 or 2: {text!r}")
        return 2 * int(text)
    except ValueError as exc:
        raise QuartetError(f"not an integer or half: {text!r}") from exc


@dataclass(frozen=True)
class MadelungKey:
    """The [n+l, n] label of an l-block.

    Blocks are totally ordered lexicographically on (sum, n), which is the
    dictionary order [1,1] < [2,2] < [3,2] < [3,3] < [4,3] < ...
    """

    sum: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuartetError(f"n must be >= 1, got {self.n}")
        l = self.sum - self.n
        if not 0 <= l <= self.n - 1:
            raise QuartetError(
                f"[{self.sum},{self.n}] invalid: need 0 <= l <= n-1, got l={l}"
            )

    @property
    def l(self) -> int:
        return self.sum - self.n

    def __str__(self) -> str:
        return f"[{self.sum},{self.n}]"


def madelung_compare(a: MadelungKey, b: MadelungKey) -> int:
    """Order two block keys: -1, 0 or +1 as a <, =, > b in dictionary order."""
    ka, kb = (a.sum, a.n), (b.sum, b.n)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


@dataclass(frozen=True)
class Quartet:
    """Exact address (n, l, j, m) of a table cell; j, m doubled."""

    n: int
    l: int
    j2: int
    m2: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuartetError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise QuartetError(f"need 0 <= l <= n-1, got l={self.l}, n={self.n}")
        if self.l == 0:
            if self.j2 != 1:
                raise QuartetError(f"l=0 requires j=1/2, got j={half_str(self.j2)}")
        elif self.j2 not in (2 * self.l - 1, 2 * self.l + 1):
            raise QuartetError(
                f"l={self.l} requires j=l-1/2 or l+1/2, got j={half_str(self.j2)}"
            )
        if self.m2 % 2 == 0 or not -self.j2 <= self.m2 <= self.j2:
            raise QuartetError(
                f"need m in -j..j in unit steps, got m={half_str(self.m2)},"
                f" j={half_str(self.j2)}"
            )

    @property
    def j(self) -> Fraction:
        return Fraction(self.j2, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.m2, 2)

    @property
    def key(self) -> MadelungKey:
        return MadelungKey(self.n + self.l, self.n)

    def __str__(self) -> str:
        return f"({self.n},{self.l},{half_str(self.j2)},{half_str(self.m2)})"


def parse_quartet(text: str) -> Quartet:
    """Parse the exact command-line form 'n,l,J,M' with J, M as halves."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise QuartetError(f"quartet must be 'n,l,J,M', got {text!r}")
    try:
        n, l = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise QuartetError(f"n and l must be integers in {text!r}") from exc
    return Quartet(n, l, parse_half(parts[2]), parse_half(parts[3]))


def block_capacity(l: int) -> int:
    """Number of cells in an l-block: 2(2l+1)."""
    if l < 0:
        raise QuartetError(f"l must be >= 0, got {l}")
    return 2 * (2 * l + 1)


def iter_madelung_keys() -> Iterator[MadelungKey]:
    """All block keys in dictionary order, unbounded."""
    for s in itertools.count(1):
        # smallest admissible n for n+l = s is ceil((s+1)/2)
        for n in range((s + 2) // 2, s + 1):
            yield MadelungKey(s, n)


def block_quartets(key: MadelungKey) -> Iterator[Quartet]:
    """Cells of one l-block: sub-block j=l-1/2 first, m ascending within each."""
    l = key.l
    j2_values = (1,) if l == 0 else (2 * l - 1, 2 * l + 1)
    for j2 in j2_values:
        for m2 in range(-j2, j2 + 1, 2):
            yield Quartet(key.n, l, j2, m2)


def iter_quartets() -> Iterator[Quartet]:
    """All quartets in global table order, unbounded."""
    for key in iter_madelung_keys():
        yield from block_quartets(key)


def enumerate_quartets(limit: int) -> list[Quartet]:
    """First `limit` quartets in global table order."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    return list(itertools.islice(iter_quartets(), limit))


def z_of(q: Quartet) -> int:
    """Closed-form atomic number of the cell at quartet q.

    Evaluated entirely in integers: all fractional terms of the formula
    combine to an integer, which is asserted rather than rounded.
    """
    s = q.n + q.l
    sign = 1 if s % 2 == 0 else -1
    # 12*Z, with j(2l+1) -> 6*j2*(2l+1) and m -> 6*m2
    twelve_z = (
        2 * s * (s * s - 1)
        + 6 * (s + 1) ** 2
        - 3 * (1 + sign) * (s + 1)
        - 48 * q.l * (q.l + 1)
        + 12 * q.l
        + 6 * q.j2 * (2 * q.l + 1)
        + 6 * q.m2
        - 12
    )
    if twelve_z % 12 != 0:
        raise AssertionError(f"non-integer Z for {q}")  # pragma: no cover
    return twelve_z // 12


def block_range(key: MadelungKey) -> tuple[int, int]:
    """Contiguous interval [z_first, z_last] occupied by an l-block."""
    first = next(block_quartets(key))
    z_first = z_of(first)
    return z_first, z_first + block_capacity(key.l) - 1


def row_range(n: int) -> tuple[int, int]:
    """Contiguous-by-membership Z extremes of row n (the row holds 2n^2 cells)."""
    if n < 1:
        raise QuartetError(f"n must be >= 1, got {n}")
    z_first = z_of(Quartet(n, 0, 1, -1))
    z_last = z_of(Quartet(n, n - 1, 2 * n - 1, 2 * n - 1))
    return z_first, z_last


_memo: list[Quartet] = []
_source = iter_quartets()
_lock = threading.Lock()


def quartet_of(z: int) -> Quartet:
    """Inverse of z_of via memoized enumeration in global table order."""
    if z < 1:
        raise AtomicNumberError(f"atomic number must be >= 1, got {z}")
    with _lock:
        while len(_memo) < z:
            _memo.append(next(_source))
        return _memo[z - 1]
