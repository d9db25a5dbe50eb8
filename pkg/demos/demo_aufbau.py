"""Idealized electron configurations from the Madelung filling order.

Run: python3 demos/demo_aufbau.py
"""

from mendeleev_city import configuration_of, default_registry, shell_sequence
from mendeleev_city.aufbau import shell_label

print("Filling order:", " < ".join(shell_label(n, l) for n, l in shell_sequence(12)))

registry = default_registry()
print("\nConfigurations:")
for z in (1, 2, 10, 21, 26, 57, 92):
    symbol = registry.get(z).symbol
    print(f"  {symbol:2s} (Z={z:3d}): {configuration_of(z).notation()}")

# The shell receiving the newest electron always matches the cell's block.
from mendeleev_city import quartet_of

for z in (21, 57, 121):
    last = configuration_of(z).shells[-1]
    q = quartet_of(z)
    print(f"Z={z}: electron lands in {shell_label(last.n, last.l)}, cell sits in block {q.key}")
