"""
Drops, posets, and two open counting questions
==============================================

Drops that go from an even position to an odd value are allowed for free.
Counting permutations by the remaining drops rebuilds the characteristic
polynomial, and permutations with only such drops appear to match the
D-permutation counts cycle for cycle.
"""

import json

from genlab import d_table, drop_expansion_charpoly, parity_poset
from genlab.drops import chung_graham_check, conjecture_checks, eo_descent_table, eo_drop_by_cycles

print("d(8, k):", d_table(8))
print("same counts from descents:", eo_descent_table(8) == d_table(8))

for n in range(1, 5):
    print(n, drop_expansion_charpoly(n))

# the parity poset's incomparability graph is the Ferrers graph
print(chung_graham_check(parity_poset(6))["chromatic"])

print("by cycles on [8]:", eo_drop_by_cycles(8))
report = conjecture_checks(max_n=4, subsets_upto=6)
print(json.dumps(report["cycles"], indent=1))
print("falsified:", report["falsified"])
