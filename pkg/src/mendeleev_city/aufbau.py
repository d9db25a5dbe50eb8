"""Idealized ground-state configurations: fill shells in Madelung order.

Shells (n, l) are filled in order of increasing n+l, ties broken by
increasing n, each to its Pauli capacity 2(2l+1).  Known empirical
anomalies (chromium, copper, ...) are deliberately not modeled; comparing
against an empirical dataset is a diagnostic for the caller.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .quartet import AtomicNumberError, block_capacity, iter_madelung_keys

# spectroscopic letters for l = 0, 1, 2, ... (conventional skip of j)
L_LETTERS = "spdfghiklmnoqrtuvwxyz"


def shell_label(n: int, l: int) -> str:
    return f"{n}{L_LETTERS[l]}"


@dataclass(frozen=True)
class ShellOccupancy:
    n: int
    l: int
    electrons: int

    def __post_init__(self) -> None:
        if not 1 <= self.electrons <= block_capacity(self.l):
            raise ValueError(
                f"{shell_label(self.n, self.l)} holds 1..{block_capacity(self.l)}"
                f" electrons, got {self.electrons}"
            )

    def __str__(self) -> str:
        return f"{shell_label(self.n, self.l)}{self.electrons}"


@dataclass(frozen=True)
class Configuration:
    z: int
    shells: tuple[ShellOccupancy, ...]

    def notation(self) -> str:
        """Conventional rendering, e.g. '1s2 2s2 2p6'."""
        return " ".join(str(s) for s in self.shells)

    def to_dict(self) -> dict:
        return {
            "z": self.z,
            "shells": [
                {"n": s.n, "l": s.l, "label": shell_label(s.n, s.l), "electrons": s.electrons}
                for s in self.shells
            ],
        }


def shell_sequence(count: int) -> list[tuple[int, int]]:
    """First `count` shells (n, l) in Madelung filling order."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return [(k.n, k.l) for k in itertools.islice(iter_madelung_keys(), count)]


def configuration_of(z: int) -> Configuration:
    """Distribute z electrons over shells in Madelung order, each shell
    filled to capacity before the next opens."""
    if z < 1:
        raise AtomicNumberError(f"atomic number must be >= 1, got {z}")
    shells: list[ShellOccupancy] = []
    remaining = z
    for key in iter_madelung_keys():
        take = min(remaining, block_capacity(key.l))
        shells.append(ShellOccupancy(key.n, key.l, take))
        remaining -= take
        if remaining == 0:
            break
    return Configuration(z=z, shells=tuple(shells))
