"""
Staircases, six statistics, and Genocchi series
===============================================

Excedent functions whose image is exactly the even numbers, six statistics
on them, and the generating series that produce the Genocchi numbers and
the characteristic polynomials in bulk.
"""

from genlab import (
    ExcedentFunction, T, bd_series, charpoly_series, enumerate_staircases, gamma_slide, genocchi_g,
    genocchi_h, lambda_specialized, six_statistics,
)
from genlab.staircases import render_tableau

f = ExcedentFunction(10, (2, 8, 4, 4, 10, 6, 10, 8, 10, 10))
print(render_tableau(f))
print(six_statistics(f))

# slide a function on [8] up to one on [10]
g = ExcedentFunction(8, (2, 8, 4, 4, 5, 6, 7, 8))
print("slid:", gamma_slide(g).f)

# counting staircases with no even maxima gives the median Genocchi numbers
for n in range(1, 5):
    m = 2 * n + 2
    total = sum(1 for _ in enumerate_staircases(m))
    no_even = sum(1 for _ in enumerate_staircases(m, no_even_maxima=True))
    print(f"[{m}]: {total} staircases, {no_even} without even maxima, h_{n} = {genocchi_h(n)}")

# the six-variable polynomial, specialised to count cycles
print("specialised on [6]:", lambda_specialized(6, T, T, 1, 0, T, 1))

print("g:", [genocchi_g(n) for n in range(1, 9)])
print("h:", [genocchi_h(n) for n in range(0, 7)])
s = bd_series("h", 5)
print("h from its series:", [int(s[k](0)) for k in range(6)])

# characteristic polynomials for n = 1..5 from a single series
for n, p in enumerate(charpoly_series(5)[1:], start=1):
    print(n, p)
