"""Walk through the table construction: blocks, rows, families, series.

Run: python3 demos/demo_table.py
"""

from mendeleev_city import (
    build_region,
    default_registry,
    family_of,
    series_catalog,
    subblock_split,
)

# The first 120 cells, each knowing its quartet address and atomic number.
region = build_region(120)
registry = default_registry()

print("First ten cells:")
for quartet, z in region.cells[:10]:
    record = registry.get(z)
    print(f"  Z={z:3d}  {quartet}  {record.symbol or '?':3s} {family_of(quartet).value}")

# Hydrogen and helium sit in columns 1 and 2 by construction.
print("\nH family:", family_of(region.cells[0][0]).value)
print("He family:", family_of(region.cells[1][0]).value)

# Transition and inner-transition series fall out of the block intervals.
print("\nSeries through row 6:")
for series in series_catalog(6):
    print(f"  n={series.n} l={series.l}  {series.kind.value:16s}  Z {series.z_first}..{series.z_last}")

# The f-block of row 4 splits into the ceric (j=5/2) and yttric (j=7/2) earths.
print("\nLanthanide sub-blocks:", subblock_split(4, 3))
