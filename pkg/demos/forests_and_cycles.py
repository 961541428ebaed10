"""
Increasing-decreasing trees and the permutations they encode
============================================================

Trees on a vertex set whose parity pattern forces every odd internal node
below its subtree and every even one above it are read off as words in
postorder; those words close up into single cycles.  Forests go to
permutations cycle by cycle.
"""

from collections import Counter

from genlab import count_by_cycles, enumerate_id_forests, gamma, hat_form, postorder, psi, psi_forest, tilde_form
from genlab.idforests import id_trees_on

# a tree on [8], rebuilt from one of its postorder words
t = gamma((4, 2, 1, 5, 6, 3, 7, 8)).unrooted()
print("edges:", sorted(t.edges))
print("hat word:  ", postorder(hat_form(t)))
print("tilde word:", postorder(tilde_form(t)))
print("cycle:     ", psi(t))

# the three trees on [6] and their cycles
for tree in id_trees_on(range(1, 7)):
    print(sorted(tree.edges), "->", psi(tree))

# forests on [6] split by number of trees match permutations split by cycles
by_trees = Counter(len(f) for f in enumerate_id_forests(range(1, 7)))
print("forests by size:     ", dict(sorted(by_trees.items())))
print("permutations by cycles:", count_by_cycles(range(1, 7)))

# the map is injective on every forest of [6]
images = [psi_forest(f) for f in enumerate_id_forests(range(1, 7))]
print(len(images), "forests,", len(set(images)), "distinct permutations")
