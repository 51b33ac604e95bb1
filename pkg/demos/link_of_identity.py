"""What the link of the identity looks like for a few small tables."""

from syspres.corpus import f2xf2_table
from syspres.garside import AmalgamSpec, garside_table
from syspres.link import build_link, check_six_large, enumerate_embedded_cycles, format_link

# Z^2: the hexagonal link of the triangulated plane
hexagon = build_link(garside_table(AmalgamSpec.of((2, 2))))
print(format_link(hexagon))

# F2 x F2: two squares, no diagonals
link = build_link(f2xf2_table())
print(len(link.vertices), "vertices,", len(link.edges), "edges")
for cycle in enumerate_embedded_cycles(link, 4):
    print("4-cycle", cycle)
print("6-large:", check_six_large(link).passed)
