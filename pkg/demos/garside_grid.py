"""Garside structures of the groups G_{n,m} and their amalgams are systolic.

Walk through G_{2,3} (the braid group on three strands) by hand, then sweep
a small grid and watch every checker agree.
"""

from syspres.conditions import check_systolic_conditions
from syspres.garside import (
    AmalgamSpec,
    check_gcd_condition,
    classify_garside,
    garside_table,
    left_gcd,
    parse_spec,
    piece,
    simple_product,
    simples,
)
from syspres.link import build_link, check_six_large
from syspres.table import format_table

braid = AmalgamSpec.of((2, 3))
print("simple elements of G_{2,3}:", [str(s) for s in simples(braid)])
a, b = piece(1, 1, 1), piece(1, 2, 1)
print("a*b =", simple_product(braid, a, b))
print("a*ba =", simple_product(braid, a, piece(1, 2, 2)))
print("a*ab =", simple_product(braid, a, piece(1, 1, 2)), "(not simple)")
print("gcd_L(ab, a) =", left_gcd(braid, piece(1, 1, 2), a))
print()
print(format_table(garside_table(braid), header="G_{2,3}"))

print(f"{'spec':<14}{'|S|':>5}{'gcd':>6}{'conds':>7}{'6-large':>9}  classified")
for text in ["1x3", "2x2", "2x4", "3x3", "4x5", "1x2;1x3", "2x3;3x2", "1x2;1x3;1x4"]:
    spec = parse_spec(text)
    t = garside_table(spec)
    print(f"{text:<14}{len(t):>5}{check_gcd_condition(t).passed!s:>6}"
          f"{check_systolic_conditions(t).overall!s:>7}{check_six_large(build_link(t)).passed!s:>9}"
          f"  {classify_garside(t)}")
