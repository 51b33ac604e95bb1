"""Three independent ways to decide systolicity, compared on random tables.

* the five conditions read off the product table;
* the same conditions phrased through the prefix orders;
* brute-force 6-largeness of the link of the identity.
"""

from collections import Counter

from syspres.conditions import check_conditions_via_orders, check_systolic_conditions
from syspres.corpus import random_valid_table
from syspres.link import build_link, check_six_large

failures = Counter()
disagreements = 0
for seed in range(500):
    t = random_valid_table(seed)
    direct = check_systolic_conditions(t)
    orders = check_conditions_via_orders(t)
    six = check_six_large(build_link(t))
    disagreements += not (direct.overall == orders.overall == six.passed)
    failures[direct.failed] += 1

print("disagreements:", disagreements)
for failed, count in failures.most_common(8):
    print(f"{count:>4} tables failing {failed or 'nothing'}")
