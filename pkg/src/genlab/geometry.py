"""Exact rational models of the central arrangement ``x_i - x_j = y_i``
(i < j), the graphic arrangement of the Ferrers graph, and the deconed affine
arrangement, with their intersection posets.

Flats are kept as reduced row-echelon systems over :class:`fractions.Fraction`
in augmented form ``(normal | offset)``.  Intersection posets are built by
closing the ambient space under intersection with single hyperplanes, which
visits each flat once instead of sweeping all hyperplane subsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .core import Poly, SetPartition
from .errors import NegativeResult, check_cap
from .ferrers import build_gamma
from .lattice import build_bond_lattice, build_reduced, characteristic_polynomial, reduced_vertex_set

__all__ = [
    "Hyperplane", "Flat", "Arrangement", "IntersectionPoset", "build_H", "build_K",
    "build_P", "intersection_poset", "phi_matrix", "determinant", "inverse", "zaslavsky_counts", "verify_linial_isomorphism",
    "bounded_regions", "verify_P_iso", "HYPERPLANE_CAP",
]

HYPERPLANE_CAP = 21

Row = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# linear algebra


def _reduce(rows: Sequence[Row], pivots: Sequence[int], vec: Row) -> list[Fraction]:
    v = list(vec)
    for r, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, r)]
    return v


def _insert(rows: tuple[Row, ...], pivots: tuple[int, ...], vec: Row, d: int):
    """Add one augmented equation to an RREF system.

    Returns ``(rows, pivots)``, or ``None`` if the system becomes
    inconsistent.  Unchanged input means the equation was already implied.
    """
    v = _reduce(rows, pivots, vec)
    p = next((i for i in range(d) if v[i]), None)
    if p is None:
        return None if v[d] else (rows, pivots)
    lead = v[p]
    v = tuple(a / lead for a in v)
    new_rows = []
    for r in rows:
        c = r[p]
        new_rows.append(tuple(a - c * b for a, b in zip(r, v)) if c else r)
    k = sum(1 for q in pivots if q < p)
    new_rows.insert(k, v)
    return tuple(new_rows), pivots[:k] + (p,) + pivots[k:]


def rref(system: Sequence[Sequence], d: int):
    rows: tuple[Row, ...] = ()
    pivots: tuple[int, ...] = ()
    for eq in system:
        out = _insert(rows, pivots, tuple(Fraction(x) for x in eq), d)
        if out is None:
            return None
        rows, pivots = out
    return rows, pivots


def determinant(mat: Sequence[Sequence]) -> Fraction:
    m = [[Fraction(x) for x in row] for row in mat]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


# ---------------------------------------------------------------------------
# hyperplanes, flats, arrangements


@dataclass(frozen=True)
class Hyperplane:
    """``normal . x = offset`` with a primitive integer normal whose first
    nonzero entry is positive."""

    normal: tuple[int, ...]
    offset: Fraction

    @classmethod
    def make(cls, normal: Sequence, offset=0) -> Hyperplane:
        fr = [Fraction(x) for x in normal]
        if not any(fr):
            raise ValueError("normal must be nonzero")
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in fr]
        g = 0
        for x in ints:
            g = gcd(g, abs(x))
        sign = 1 if next(x for x in ints if x) > 0 else -1
        scale = Fraction(den * sign, g)
        return cls(tuple(x * sign // g for x in ints), Fraction(offset) * scale)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def augmented(self) -> Row:
        return tuple(Fraction(x) for x in self.normal) + (self.offset,)

    def to_json(self) -> list:
        o = self.offset
        return list(self.normal) + [o.numerator if o.denominator == 1 else f"{o.numerator}/{o.denominator}"]


@dataclass(frozen=True)
class Flat:
    """A nonempty affine subspace of ``Q^d`` as a canonical RREF system."""

    d: int
    rows: tuple[Row, ...]
    pivots: tuple[int, ...]

    @classmethod
    def ambient(cls, d: int) -> Flat:
        return cls(d, (), ())

    @classmethod
    def from_equations(cls, d: int, eqs: Sequence[Sequence]) -> Flat | None:
        out = rref(eqs, d)
        return None if out is None else cls(d, *out)

    @property
    def codim(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return self.d - len(self.rows)

    def key(self) -> tuple[Row, ...]:
        return self.rows

    def meet(self, h: Hyperplane) -> Flat | None:
        out = _insert(self.rows, self.pivots, h.augmented(), self.d)
        return None if out is None else Flat(self.d, *out)

    def contained_in(self, h: Hyperplane) -> bool:
        v = _reduce(self.rows, self.pivots, h.augmented())
        return not any(v)

    def implies_equal(self, i: int, j: int) -> bool:
        """True when coordinates ``i`` and ``j`` (0-based) agree on the flat."""
        e = [Fraction(0)] * (self.d + 1)
        e[i] += 1
        e[j] -= 1
        return not any(_reduce(self.rows, self.pivots, tuple(e)))

    def implies_value(self, i: int, value) -> bool:
        e = [Fraction(0)] * (self.d + 1)
        e[i] = Fraction(1)
        e[self.d] = Fraction(value)
        return not any(_reduce(self.rows, self.pivots, tuple(e)))


@dataclass
class Arrangement:
    dim: int
    hyperplanes: list[Hyperplane]
    labels: list = field(default_factory=list)

    def is_central(self) -> bool:
        return all(h.offset == 0 for h in self.hyperplanes)

    def to_json(self) -> dict:
        return {"dim": self.dim, "hyperplanes": [h.to_json() for h in self.hyperplanes]}


def _unit(d: int, *terms: tuple[int, int]) -> list[int]:
    v = [0] * d
    for idx, c in terms:
        v[idx - 1] += c
    return v


def build_H(n: int) -> Arrangement:
    """Hyperplanes with normal ``e_i - e_{n+1+i} - e_{j+1}``, ``1 <= i <= j <= n``,
    in dimension ``2n+1`` (coordinates 1-based in the labels)."""
    check_cap("arrangement n", n, 5)
    d = 2 * n + 1
    hs, labels = [], []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            hs.append(Hyperplane.make(_unit(d, (i, 1), (n + 1 + i, -1), (j + 1, -1))))
            labels.append((i, j))
    return Arrangement(d, hs, labels)


def build_K(n: int) -> Arrangement:
    """Graphic arrangement of the Ferrers graph on ``[2n]``: normals
    ``e_{2i-1} - e_{2j}``, ``1 <= i <= j <= n``, in dimension ``2n+1``."""
    check_cap("arrangement n", n, 5)
    d = 2 * n + 1
    hs, labels = [], []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            hs.append(Hyperplane.make(_unit(d, (2 * i - 1, 1), (2 * j, -1))))
            labels.append((i, j))
    return Arrangement(d, hs, labels)


def build_P(n: int) -> Arrangement:
    """The deconed arrangement for ``[2n]``, essentialized.

    Start from the graphic arrangement of the Ferrers graph on
    ``[2n] - {2, 2n-1}`` without the edge ``{1, 2n}``, restrict to
    ``x_1 = x_{2n} + 1`` and quotient by the all-ones direction by pinning
    ``x_1 = 1`` and ``x_{2n} = 0``.  Free coordinates are the remaining
    vertices in increasing order; ``labels`` holds the graph edges.
    """
    if not 3 <= n <= 5:
        raise ValueError("deconed arrangement supported for 3 <= n <= 5")
    vs = reduced_vertex_set(n)
    top = 2 * n
    free = [v for v in vs if v not in (1, top)]
    pos = {v: k for k, v in enumerate(free)}
    d = len(free)
    pinned = {1: 1, top: 0}
    hs, labels = [], []
    for u, v in build_gamma(vs).edges:
        if (u, v) == (1, top):
            continue
        normal = [0] * d
        rhs = 0
        for w, c in ((u, 1), (v, -1)):
            if w in pinned:
                rhs -= c * pinned[w]
            else:
                normal[pos[w]] += c
        hs.append(Hyperplane.make(normal, rhs))
        labels.append((u, v))
    return Arrangement(d, hs, labels)


# ---------------------------------------------------------------------------
# intersection posets


@dataclass
class IntersectionPoset:
    arrangement: Arrangement
    flats: list[Flat]
    index: dict
    above: list[int]          # bitmask of hyperplanes containing each flat
    covers: list[dict]        # flat id -> {hyperplane id: flat id one rank up}
    mu: list[int]

    @property
    def length(self) -> int:
        return max(f.codim for f in self.flats)

    def rank(self, k: int) -> int:
        return self.flats[k].codim

    def leq(self, a: int, b: int) -> bool:
        """Reverse inclusion: ``flats[b]`` is contained in ``flats[a]``."""
        return self.above[a] & ~self.above[b] == 0

    def characteristic_polynomial(self) -> Poly:
        ell = self.length
        coeffs = [0] * (ell + 1)
        for f, m in zip(self.flats, self.mu):
            coeffs[ell - f.codim] += m
        return Poly(coeffs)

    def hasse_edges(self) -> set[tuple[int, int]]:
        return {(a, b) for a, c in enumerate(self.covers) for b in c.values()}


def intersection_poset(arr: Arrangement, cap: int = HYPERPLANE_CAP) -> IntersectionPoset:
    check_cap("hyperplane count", len(arr.hyperplanes), cap)
    hs = arr.hyperplanes
    amb = Flat.ambient(arr.dim)
    flats = [amb]
    index = {amb.key(): 0}
    above = [0]
    covers: list[dict] = [{}]
    k = 0
    while k < len(flats):
        f = flats[k]
        for hi, h in enumerate(hs):
            if above[k] >> hi & 1:
                continue
            g = f.meet(h)
            if g is None:
                continue
            key = g.key()
            j = index.get(key)
            if j is None:
                j = len(flats)
                index[key] = j
                flats.append(g)
                mask = 0
                for hj, h2 in enumerate(hs):
                    if g.contained_in(h2):
                        mask |= 1 << hj
                above.append(mask)
                covers.append({})
            covers[k][hi] = j
        k += 1

    # Moebius function from the bottom; lower intervals are walked through
    # the cover table restricted to hyperplanes that contain the target
    order = sorted(range(len(flats)), key=lambda i: flats[i].codim)
    mu = [0] * len(flats)
    for i in order:
        if i == 0:
            mu[i] = 1
            continue
        allowed = above[i]
        seen = {0}
        stack = [0]
        while stack:
            a = stack.pop()
            for hi, b in covers[a].items():
                if allowed >> hi & 1 and b not in seen:
                    seen.add(b)
                    stack.append(b)
        mu[i] = -sum(mu[j] for j in seen if j != i)
    return IntersectionPoset(arr, flats, index, above, covers, mu)


def zaslavsky_counts(poset: IntersectionPoset) -> dict:
    chi = poset.characteristic_polynomial()
    ell = poset.length
    regions = (-1) ** ell * chi(-1)
    bounded = (-1) ** ell * chi(1)
    if regions < 0 or bounded < 0:
        raise NegativeResult(f"regions {regions}, bounded {bounded}")
    return {"chi": chi, "length": ell, "regions": int(regions), "bounded": int(bounded)}


# ---------------------------------------------------------------------------
# the explicit isomorphism


def phi_matrix(n: int, last_to: int = 1) -> list[list[int]]:
    """Columns are the images of the standard basis:
    ``e_{2i-1} -> e_i - e_{n+1+i}``, ``e_{2i} -> e_{i+1}``, ``e_{2n+1} -> e_{last_to}``.

    The last basis vector has to go to ``e_1``: every other coordinate is
    already reached, and with ``last_to = 2n+1`` the matrix is singular for
    ``n >= 2``.
    """
    d = 2 * n + 1
    cols = []
    for k in range(1, d + 1):
        if k == d:
            cols.append(_unit(d, (last_to, 1)))
        elif k % 2:
            i = (k + 1) // 2
            cols.append(_unit(d, (i, 1), (n + 1 + i, -1)))
        else:
            cols.append(_unit(d, (k // 2 + 1, 1)))
    return [[cols[c][r] for c in range(d)] for r in range(d)]


def inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(mat)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        lead = m[c][c]
        m[c] = [x / lead for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [row[n:] for row in m]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def _nullspace(h: Hyperplane) -> list[list[Fraction]]:
    """A basis of the central hyperplane ``h``."""
    a = h.normal
    p = next(i for i, x in enumerate(a) if x)
    out = []
    for k in range(len(a)):
        if k == p:
            continue
        v = [Fraction(0)] * len(a)
        v[k] = Fraction(1)
        v[p] = Fraction(-a[k], a[p])
        out.append(v)
    return out


def _mat_vec(a: list[list[int]], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(x) * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def _psi_flat(a: list[list[int]], f: Flat) -> Flat:
    # the inverse transpose sends the hyperplane with normal v to the one
    # with normal A v; central flats only
    d = f.d
    eqs = [tuple(_mat_vec(a, r[:d])) + (Fraction(0),) for r in f.rows]
    g = Flat.from_equations(d, eqs)
    assert g is not None
    return g


def _coordinate_partition(f: Flat, ground: Sequence[int]) -> SetPartition:
    blocks: list[list[int]] = []
    for v in ground:
        for b in blocks:
            if f.implies_equal(b[0] - 1, v - 1):
                b.append(v)
                break
        else:
            blocks.append([v])
    return SetPartition.from_blocks(ground, blocks)


def _bond_covers(part: SetPartition, adj: dict[int, set[int]],
                 separate: tuple[int, int] | None = None) -> set[SetPartition]:
    blocks = [sorted(b) for b in part.blocks]
    out = set()
    for x in range(len(blocks)):
        for y in range(x + 1, len(blocks)):
            if separate and set(separate) <= set(blocks[x] + blocks[y]):
                continue
            if any(adj[u] & set(blocks[y]) for u in blocks[x]):
                merged = [b for k, b in enumerate(blocks) if k not in (x, y)]
                merged.append(blocks[x] + blocks[y])
                out.add(SetPartition.from_blocks(part.ground, merged))
    return out


def _hasse_matches(poset: IntersectionPoset, to_part: list[SetPartition],
                   adj: dict[int, set[int]], separate: tuple[int, int] | None = None) -> bool:
    """The flat-to-partition map carries flat covers exactly onto bond covers."""
    by_part = {p: i for i, p in enumerate(to_part)}
    for i, p in enumerate(to_part):
        flat_up = {to_part[j] for j in poset.covers[i].values()}
        if flat_up != _bond_covers(p, adj, separate):
            return False
    return len(by_part) == len(to_part)


def verify_linial_isomorphism(n: int) -> dict:
    """Check the explicit linear isomorphism between the graphic arrangement
    of the Ferrers graph on ``[2n]`` and the arrangement ``x_i - x_j = y_i``,
    and the identification of the former's flats with the bond lattice."""
    check_cap("isomorphism n", n, 4)
    a = phi_matrix(n)
    det = determinant(a)
    arr_k, arr_h = build_K(n), build_H(n)
    pk = intersection_poset(arr_k)
    ph = intersection_poset(arr_h)
    out: dict = {"n": n, "det": int(det), "flats_K": len(pk.flats), "flats_H": len(ph.flats),
                 "length_H": ph.length}
    out["abs_det_one"] = abs(det) == 1
    if det == 0:
        out["ok"] = False
        return out

    # the point map (A^-1)^T sends a basis of each graphic hyperplane into the
    # matching Linial hyperplane
    psi = transpose(inverse(a))
    out["psi_maps_hyperplanes"] = all(
        all(sum(x * y for x, y in zip(h2.normal, _mat_vec(psi, v))) == 0 for v in _nullspace(h1))
        for h1, h2 in zip(arr_k.hyperplanes, arr_h.hyperplanes))

    # linear map on flats
    image = []
    first_bad = None
    for f in pk.flats:
        g = _psi_flat(a, f)
        j = ph.index.get(g.key())
        if j is None and first_bad is None:
            first_bad = [list(map(str, r)) for r in f.rows]
        image.append(j)
    bijective = first_bad is None and sorted(image) == list(range(len(ph.flats)))
    covers_ok = bijective and {(image[x], image[y]) for x, y in pk.hasse_edges()} == ph.hasse_edges()
    out["psi_bijective"] = bijective
    out["psi_order_iso"] = covers_ok
    if first_bad is not None:
        out["witness"] = first_bad

    # coordinate-equality partitions against the bond lattice
    ground = list(range(1, 2 * n + 1))
    g = build_gamma(ground)
    lat = build_bond_lattice(ground)
    parts = [_coordinate_partition(f, ground) for f in pk.flats]
    out["partitions_match"] = set(parts) == set(lat.elements) and len(set(parts)) == len(parts)
    out["partition_order_iso"] = out["partitions_match"] and _hasse_matches(pk, parts, g.adjacency())
    chi_h = ph.characteristic_polynomial()
    out["chi"] = chi_h
    out["chi_matches_lattice"] = chi_h == characteristic_polynomial(lat)
    out["ok"] = all(out[k] for k in ("abs_det_one", "psi_maps_hyperplanes", "psi_bijective", "psi_order_iso",
                                     "partitions_match", "partition_order_iso", "chi_matches_lattice"))
    return out


def _pinned_partition(f: Flat, n: int) -> SetPartition:
    vs = reduced_vertex_set(n)
    top = 2 * n
    free = [v for v in vs if v not in (1, top)]
    pos = {v: k for k, v in enumerate(free)}
    blocks: list[list[int]] = [[1], [top]]
    for v in free:
        if f.implies_value(pos[v], 1):
            blocks[0].append(v)
        elif f.implies_value(pos[v], 0):
            blocks[1].append(v)
        else:
            for b in blocks[2:]:
                if f.implies_equal(pos[b[0]], pos[v]):
                    b.append(v)
                    break
            else:
                blocks.append([v])
    return SetPartition.from_blocks(vs, blocks)


def verify_P_iso(n: int) -> dict:
    """Intersection semilattice of the deconed arrangement against the
    reduced semilattice from the bond-lattice module."""
    poset = intersection_poset(build_P(n))
    lat, chi_l = build_reduced(n)
    parts = [_pinned_partition(f, n) for f in poset.flats]
    vs = reduced_vertex_set(n)
    adj = build_gamma(vs).adjacency()
    same = set(parts) == set(lat.elements) and len(set(parts)) == len(parts)
    z = zaslavsky_counts(poset)
    return {
        "n": n,
        "flats": len(poset.flats),
        "elements_match": same,
        "order_iso": same and _hasse_matches(poset, parts, adj, (1, 2 * n)),
        "chi_geometry": z["chi"],
        "chi_lattice": chi_l,
        "chi_match": z["chi"] == chi_l,
        "regions": z["regions"],
        "bounded": z["bounded"],
    }


def bounded_regions(n: int) -> int:
    return zaslavsky_counts(intersection_poset(build_P(n)))["bounded"]
