"""
Ferrers graphs, their bond lattices, and one polynomial many ways
=================================================================

Build the bipartite graph joining each odd vertex to every larger even
vertex, look at its bond lattice, and compute the characteristic
polynomial through every available route.
"""

from genlab import T, build_bond_lattice, build_gamma, charpoly, characteristic_polynomial, mobius
from genlab.ferrers import chromatic_polynomial
from genlab.lattice import zaslavsky_regions
from genlab.routes import ROUTE_LIMITS, ROUTE_MINIMA, route_names

# the graph on [6]: 1 and 3 reach every larger even vertex, 5 only reaches 6
g = build_gamma(range(1, 7))
print("edges in order:", g.edges)

# elements of the bond lattice are set partitions whose blocks are connected
lat = build_bond_lattice(range(1, 7))
print(len(lat.elements), "elements")
for p in lat.elements[:6]:
    print(f"  rank {p.rank}  {p}  mobius {mobius(lat, p)}")

chi = characteristic_polynomial(lat)
print("chi =", chi)

# a connected graph's chromatic polynomial carries one extra factor of t
print("chromatic / t == chi:", chromatic_polynomial(g) == T * chi)

# regions of the matching hyperplane arrangement, read off chi(-1)
for n in range(1, 5):
    c = characteristic_polynomial(build_bond_lattice(range(1, 2 * n + 1)))
    print(f"n={n}  chi(-1)={c(-1)}  chi(0)={c(0)}  regions={zaslavsky_regions(c, 2 * n - 1)}")

# every route in reach at n=4 agrees
n = 4
polys = {name: charpoly(n, name) for name in route_names()
         if ROUTE_MINIMA.get(name, 1) <= n <= ROUTE_LIMITS[name]}
for name, p in polys.items():
    print(f"{name:>10}: {p}")
assert len({str(p) for p in polys.values()}) == 1
