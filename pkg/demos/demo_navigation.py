"""Moving through the table with algebra-labelled ladder moves.

Run: python3 demos/demo_navigation.py
"""

from mendeleev_city import MoveAlgebra, neighbors, quartet_of, shortest_path, z_of
from mendeleev_city.navigation import path_records

hydrogen = quartet_of(1)
iron = quartet_of(26)

# Block moves (m steps and the j-flip), avenue moves (n steps), street moves
# (l steps with clamping), and the taxi that reaches anything in one hop.
for algebra in MoveAlgebra:
    cells = neighbors(iron, algebra, max_z=60)
    sample = sorted(z_of(c) for c in cells)[:8]
    print(f"{algebra.name:9s} neighbors of Z=26: {len(cells):3d} cells, first {sample}")

# Same-avenue elements are chemical analogs: H down to Fr along the alkali column.
francium = quartet_of(87)
path = shortest_path(hydrogen, francium, {MoveAlgebra.SO21})
print(f"\nH -> Fr along the avenue: {len(path)} steps")

# Mixing bus lines shortens trips; the taxi makes everything one step.
path = shortest_path(hydrogen, iron, {MoveAlgebra.SO3xSU2, MoveAlgebra.SO4xSU2, MoveAlgebra.SO21})
print(f"H -> Fe by bus: {len(path)} steps")
for record in path_records(path):
    print("  ", record)
print(f"H -> Fe by taxi: {len(shortest_path(hydrogen, iron, {MoveAlgebra.SO42xSU2}))} step")
