"""Element names, observation status, and ingested property datasets.

The default snapshot reflects the mid-2000s record: elements 1..110 named,
111..116 observed but unnamed, everything at Z >= 117 unobserved.  A newer
registry can be supplied as a CSV file without touching code.
"""

from __future__ import annotations

import csv
import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO


class RegistryError(ValueError):
    """Base class for registry and dataset ingestion failures."""


class RegistryParseError(RegistryError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class RegistryConflictError(RegistryError):
    pass


class Status(enum.Enum):
    NAMED_OBSERVED = "named"
    OBSERVED_UNNAMED = "unnamed"
    UNOBSERVED = "unobserved"


@dataclass(frozen=True)
class ElementRecord:
    z: int
    symbol: str | None
    name: str | None
    status: Status

    def __post_init__(self) -> None:
        if self.z < 1:
            raise RegistryError(f"z must be >= 1, got {self.z}")
        if self.status is Status.NAMED_OBSERVED and not (self.symbol and self.name):
            raise RegistryError(f"named element z={self.z} needs symbol and name")
        if self.status is Status.UNOBSERVED and (self.symbol or self.name):
            raise RegistryError(f"unobserved element z={self.z} cannot carry a name")


_NAMED = [
    ("H", "hydrogen"), ("He", "helium"), ("Li", "lithium"), ("Be", "beryllium"),
    ("B", "boron"), ("C", "carbon"), ("N", "nitrogen"), ("O", "oxygen"),
    ("F", "fluorine"), ("Ne", "neon"), ("Na", "sodium"), ("Mg", "magnesium"),
    ("Al", "aluminium"), ("Si", "silicon"), ("P", "phosphorus"), ("S", "sulfur"),
    ("Cl", "chlorine"), ("Ar", "argon"), ("K", "potassium"), ("Ca", "calcium"),
    ("Sc", "scandium"), ("Ti", "titanium"), ("V", "vanadium"), ("Cr", "chromium"),
    ("Mn", "manganese"), ("Fe", "iron"), ("Co", "cobalt"), ("Ni", "nickel"),
    ("Cu", "copper"), ("Zn", "zinc"), ("Ga", "gallium"), ("Ge", "germanium"),
    ("As", "arsenic"), ("Se", "selenium"), ("Br", "bromine"), ("Kr", "krypton"),
    ("Rb", "rubidium"), ("Sr", "strontium"), ("Y", "yttrium"), ("Zr", "zirconium"),
    ("Nb", "niobium"), ("Mo", "molybdenum"), ("Tc", "technetium"), ("Ru", "ruthenium"),
    ("Rh", "rhodium"), ("Pd", "palladium"), ("Ag", "silver"), ("Cd", "cadmium"),
    ("In", "indium"), ("Sn", "tin"), ("Sb", "antimony"), ("Te", "tellurium"),
    ("I", "iodine"), ("Xe", "xenon"), ("Cs", "caesium"), ("Ba", "barium"),
    ("La", "lanthanum"), ("Ce", "cerium"), ("Pr", "praseodymium"), ("Nd", "neodymium"),
    ("Pm", "promethium"), ("Sm", "samarium"), ("Eu", "europium"), ("Gd", "gadolinium"),
    ("Tb", "terbium"), ("Dy", "dysprosium"), ("Ho", "holmium"), ("Er", "erbium"),
    ("Tm", "thulium"), ("Yb", "ytterbium"), ("Lu", "lutetium"), ("Hf", "hafnium"),
    ("Ta", "tantalum"), ("W", "tungsten"), ("Re", "rhenium"), ("Os", "osmium"),
    ("Ir", "iridium"), ("Pt", "platinum"), ("Au", "gold"), ("Hg", "mercury"),
    ("Tl", "thallium"), ("Pb", "lead"), ("Bi", "bismuth"), ("Po", "polonium"),
    ("At", "astatine"), ("Rn", "radon"), ("Fr", "francium"), ("Ra", "radium"),
    ("Ac", "actinium"), ("Th", "thorium"), ("Pa", "protactinium"), ("U", "uranium"),
    ("Np", "neptunium"), ("Pu", "plutonium"), ("Am", "americium"), ("Cm", "curium"),
    ("Bk", "berkelium"), ("Cf", "californium"), ("Es", "einsteinium"), ("Fm", "fermium"),
    ("Md", "mendelevium"), ("No", "nobelium"), ("Lr", "lawrencium"),
    ("Rf", "rutherfordium"), ("Db", "dubnium"), ("Sg", "seaborgium"),
    ("Bh", "bohrium"), ("Hs", "hassium"), ("Mt", "meitnerium"), ("Ds", "darmstadtium"),
]

LAST_NAMED_Z = len(_NAMED)  # 110
LAST_OBSERVED_Z = 116


@dataclass(frozen=True)
class Registry:
    """Read-mostly mapping Z -> ElementRecord; unlisted Z are unobserved."""

    records: tuple[ElementRecord, ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for rec in self.records:
            if rec.z in seen:
                raise RegistryConflictError(f"duplicate z={rec.z}")
            seen.add(rec.z)

    def get(self, z: int) -> ElementRecord:
        if z < 1:
            raise RegistryError(f"z must be >= 1, got {z}")
        for rec in self.records:
            if rec.z == z:
                return rec
        return ElementRecord(z, None, None, Status.UNOBSERVED)


def default_registry() -> Registry:
    """The embedded snapshot behind the default rendering."""
    records = [
        ElementRecord(z, sym, name, Status.NAMED_OBSERVED)
        for z, (sym, name) in enumerate(_NAMED, start=1)
    ]
    records += [
        ElementRecord(z, None, None, Status.OBSERVED_UNNAMED)
        for z in range(LAST_NAMED_Z + 1, LAST_OBSERVED_Z + 1)
    ]
    return Registry(tuple(records))


_REGISTRY_HEADER = ["z", "symbol", "name", "status"]


def load_registry(source: str | Path | TextIO) -> Registry:
    """Parse a registry CSV (header z,symbol,name,status)."""
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return load_registry(fh)
    reader = csv.reader(source)
    records: list[ElementRecord] = []
    seen: set[int] = set()
    for lineno, row in enumerate(reader, start=1):
        if lineno == 1:
            if row != _REGISTRY_HEADER:
                raise RegistryParseError(
                    f"expected header {','.join(_REGISTRY_HEADER)}", lineno
                )
            continue
        if not row:
            continue
        if len(row) != 4:
            raise RegistryParseError(f"expected 4 fields, got {len(row)}", lineno)
        z_s, symbol, name, status_s = row
        try:
            z = int(z_s)
        except ValueError:
            raise RegistryParseError(f"bad atomic number {z_s!r}", lineno) from None
        try:
            status = Status(status_s)
        except ValueError:
            raise RegistryParseError(f"bad status {status_s!r}", lineno) from None
        if z in seen:
            raise RegistryConflictError(f"line {lineno}: duplicate z={z}")
        seen.add(z)
        try:
            records.append(ElementRecord(z, symbol or None, name or None, status))
        except RegistryError as exc:
            raise RegistryParseError(str(exc), lineno) from None
    return Registry(tuple(records))


def save_registry(registry: Registry, target: str | Path | TextIO) -> None:
    """Write the registry CSV with LF line endings; load/save round-trips
    bit-identically for files produced here."""
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8", newline="") as fh:
            save_registry(registry, fh)
        return
    writer = csv.writer(target, lineterminator="\n")
    writer.writerow(_REGISTRY_HEADER)
    for rec in sorted(registry.records, key=lambda r: r.z):
        writer.writerow([rec.z, rec.symbol or "", rec.name or "", rec.status.value])


@dataclass(frozen=True)
class PropertyDataset:
    """A numeric property keyed by Z; finite values only."""

    property_name: str
    unit: str
    values: dict[int, float]
    skipped_rows: int = 0

    def __post_init__(self) -> None:
        for z, value in self.values.items():
            if z < 1:
                raise RegistryError(f"z must be >= 1, got {z}")
            if not math.isfinite(value):
                raise RegistryError(f"non-finite value for z={z}")

    def __len__(self) -> int:
        return len(self.values)


def load_property(
    source: str | Path | TextIO, property_name: str = "", unit: str = ""
) -> PropertyDataset:
    """Parse a property CSV (header z,value; '#' comment lines allowed).

    Rows with an empty value are skipped and counted in skipped_rows.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8", newline="") as fh:
            return load_property(fh, property_name, unit)
    values: dict[int, float] = {}
    skipped = 0
    header_seen = False
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if not header_seen:
            if fields != ["z", "value"]:
                raise RegistryParseError(f"expected header z,value, got {line!r}", lineno)
            header_seen = True
            continue
        if len(fields) != 2:
            raise RegistryParseError(f"expected 2 fields, got {len(fields)}", lineno)
        z_s, value_s = fields
        if not value_s:
            skipped += 1
            continue
        try:
            z = int(z_s)
        except ValueError:
            raise RegistryParseError(f"bad atomic number {z_s!r}", lineno) from None
        try:
            value = float(value_s)
        except ValueError:
            raise RegistryParseError(f"bad value {value_s!r}", lineno) from None
        if not math.isfinite(value):
            raise RegistryParseError(f"non-finite value {value_s!r}", lineno)
        if z in values:
            raise RegistryConflictError(f"line {lineno}: duplicate z={z}")
        values[z] = value
    if not header_seen:
        raise RegistryParseError("missing header z,value", 1)
    return PropertyDataset(property_name, unit, values, skipped)
