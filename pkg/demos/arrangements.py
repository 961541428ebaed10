"""
Hyperplane arrangements behind the lattices
===========================================

The hyperplanes x_i - x_j = y_i, one for each pair i < j, cut out a poset of
flats isomorphic to the bond lattice of the full Ferrers graph.  Exact
rational elimination builds the flats; Moebius values over them give the
same polynomial as the lattice.
"""

from collections import Counter

from genlab.geometry import (
    bounded_regions, build_H, intersection_poset, verify_linial_isomorphism, verify_P_iso,
    zaslavsky_counts,
)

arr = build_H(2)
print(arr.to_json())

poset = intersection_poset(arr)
print(len(poset.flats), "flats, length", poset.length)
by_codim = Counter(f.codim for f in poset.flats)
for k in sorted(by_codim):
    print(f"  codim {k}: {by_codim[k]} flats")
print(zaslavsky_counts(poset))

# the explicit linear change of coordinates lines everything up
r = verify_linial_isomorphism(3)
print({k: r[k] for k in ("ok", "det", "flats_H", "length_H")})

# cutting with an affine hyperplane leaves a handful of bounded regions
for n in (3, 4, 5):
    info = verify_P_iso(n)
    print(f"n={n}: {info['flats']} flats, bounded regions {bounded_regions(n)}, chi {info['chi_geometry']}")
