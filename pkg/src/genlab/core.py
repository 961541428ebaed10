"""Exact foundational types: permutations, set partitions, polynomials in t,
and power series in u truncated at a fixed order.

Everything here is an immutable value.  Polynomial coefficients are stored as
``fractions.Fraction`` so that intermediate divisions never round; callers that
expect integer output assert it with :meth:`Poly.require_integral`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence

from .errors import IntegralityFailure

__all__ = [
    "Permutation", "SetPartition", "Poly", "IntPolynomial", "TruncatedSeries",
    "T", "falling_factorial", "rising_factorial", "series_inverse_linear",
    "cycles", "drops", "fraction_to_json", "fraction_from_json",
]


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``ground`` onto itself; ``image[i]`` is the image of
    ``ground[i]``."""

    ground: tuple[int, ...]
    image: tuple[int, ...]

    def __post_init__(self):
        if list(self.ground) != sorted(set(self.ground)):
            raise ValueError(f"ground must be strictly increasing: {self.ground}")
        if len(self.image) != len(self.ground) or sorted(self.image) != list(self.ground):
            raise ValueError("image is not a permutation of ground")

    @classmethod
    def from_mapping(cls, mapping: dict[int, int]) -> Permutation:
        ground = tuple(sorted(mapping))
        return cls(ground, tuple(mapping[i] for i in ground))

    @classmethod
    def from_cycles(cls, cycle_list: Iterable[Sequence[int]], ground: Iterable[int] | None = None) -> Permutation:
        """Build from cycle notation; elements of ``ground`` missing from every
        cycle are fixed."""
        mapping: dict[int, int] = {}
        for cyc in cycle_list:
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                if a in mapping:
                    raise ValueError(f"element {a} appears twice")
                mapping[a] = b
        if ground is not None:
            for i in ground:
                mapping.setdefault(i, i)
        return cls.from_mapping(mapping)

    @classmethod
    def identity(cls, ground: Iterable[int]) -> Permutation:
        g = tuple(sorted(ground))
        return cls(g, g)

    def __call__(self, i: int) -> int:
        return self.as_dict()[i]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.ground, self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def num_cycles(self) -> int:
        return len(cycles(self))

    def fixed_points(self) -> list[int]:
        return [i for i, j in zip(self.ground, self.image) if i == j]

    def cycle_support(self) -> SetPartition:
        return SetPartition.from_blocks(self.ground, cycles(self))

    def __str__(self):
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles(self))

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "image": list(self.image)}

    @classmethod
    def from_json(cls, obj: dict) -> Permutation:
        return cls(tuple(obj["ground"]), tuple(obj["image"]))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Cycles of ``p``, each rotated to start at its minimum, sorted by minimum."""
    succ = p.as_dict()
    seen = set()
    out = []
    for start in p.ground:  # ground is sorted, so each cycle is met at its min
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = succ[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = succ[nxt]
        out.append(tuple(cyc))
    return out


def drops(p: Permutation) -> set[tuple[int, int]]:
    """Pairs ``(i, p(i))`` with ``i > p(i)``."""
    return {(i, j) for i, j in zip(p.ground, p.image) if i > j}


# ---------------------------------------------------------------------------
# set partitions


@dataclass(frozen=True)
class SetPartition:
    """Blocks are sorted tuples, listed in order of their minima."""

    ground: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(x for b in self.blocks for x in b)
        if flat != list(self.ground) or any(len(b) == 0 for b in self.blocks):
            raise ValueError(f"blocks {self.blocks} do not partition {self.ground}")

    @classmethod
    def from_blocks(cls, ground: Iterable[int], blocks: Iterable[Iterable[int]]) -> SetPartition:
        bs = sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0])
        return cls(tuple(sorted(ground)), tuple(bs))

    @classmethod
    def discrete(cls, ground: Iterable[int]) -> SetPartition:
        g = tuple(sorted(ground))
        return cls(g, tuple((x,) for x in g))

    @classmethod
    def single_block(cls, ground: Iterable[int]) -> SetPartition:
        g = tuple(sorted(ground))
        return cls(g, (g,))

    def __len__(self):
        return len(self.blocks)

    @property
    def rank(self) -> int:
        return len(self.ground) - len(self.blocks)

    def block_map(self) -> dict[int, int]:
        return {x: k for k, b in enumerate(self.blocks) for x in b}

    def refines(self, other: SetPartition) -> bool:
        """True when every block of ``self`` lies inside a block of ``other``
        (``self <= other`` in the partition lattice)."""
        if self.ground != other.ground:
            return False
        where = other.block_map()
        return all(len({where[x] for x in b}) == 1 for b in self.blocks)

    def __le__(self, other: SetPartition) -> bool:
        return self.refines(other)

    def __lt__(self, other: SetPartition) -> bool:
        return self != other and self.refines(other)

    def __str__(self):
        return "|".join("".join(map(str, b)) if max(self.ground, default=0) < 10
                        else ",".join(map(str, b)) for b in self.blocks)

    def to_json(self) -> dict:
        return {"ground": list(self.ground), "blocks": [list(b) for b in self.blocks]}


# ---------------------------------------------------------------------------
# polynomials


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Dense univariate polynomial in ``t`` with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def coerce(cls, x) -> Poly:
        return x if isinstance(x, Poly) else cls([x])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def require_integral(self, what: str = "polynomial") -> Poly:
        if not self.is_integral():
            raise IntegralityFailure(f"{what} has non-integer coefficients: {self}")
        return self

    def int_coeffs(self) -> list[int]:
        self.require_integral()
        return [int(c) for c in self.coeffs]

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = Poly.coerce(other)
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = Poly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        c = _frac(c)
        return Poly(x / c for x in self.coeffs)

    def __call__(self, x):
        """Evaluate at a number, or compose when ``x`` is a Poly."""
        acc = Poly() if isinstance(x, Poly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: Poly) -> tuple[Poly, Poly]:
        divisor = Poly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.leading()
        q = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            c = rem[k + dd] / lead
            q[k] = c
            if c:
                for i, d in enumerate(divisor.coeffs):
                    rem[k + i] -= c * d
        return Poly(q), Poly(rem)

    def exact_div(self, divisor: Poly) -> Poly:
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return q

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(a) if (a != 1 or k == 0) else ""
            if body and mono:
                body += "*"
            terms.append((sign, body + mono))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> dict:
        return {"coeffs": [fraction_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> Poly:
        return cls(fraction_from_json(c) for c in obj["coeffs"])


IntPolynomial = Poly

#: the polynomial ``t``
T = Poly([0, 1])


def fraction_to_json(c: Fraction):
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def fraction_from_json(c) -> Fraction:
    return Fraction(c) if isinstance(c, (int, str)) else Fraction(str(c))


def falling_factorial(a, n: int) -> Poly:
    """``a (a-1) ... (a-n+1)``; the empty product for ``n == 0``."""
    a = Poly.coerce(a)
    out = Poly([1])
    for i in range(n):
        out = out * (a - i)
    return out


def rising_factorial(a, n: int) -> Poly:
    """``a (a+1) ... (a+n-1)``."""
    a = Poly.coerce(a)
    out = Poly([1])
    for i in range(n):
        out = out * (a + i)
    return out


# ---------------------------------------------------------------------------
# truncated power series in u with coefficients in Q[t]


class TruncatedSeries:
    """``terms[k]`` is the coefficient of ``u**k``, for ``k = 0..order``."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: Iterable = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        ts = [Poly.coerce(x) for x in terms][: order + 1]
        ts += [Poly()] * (order + 1 - len(ts))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "terms", tuple(ts))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, [Poly([1])])

    @classmethod
    def monomial(cls, order: int, k: int, coeff=1) -> TruncatedSeries:
        if k > order:
            return cls(order)
        return cls(order, [Poly()] * k + [Poly.coerce(coeff)])

    def __getitem__(self, k: int) -> Poly:
        return self.terms[k]

    def _check(self, other):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self.terms, other.terms)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(self.order, [a - b for a, b in zip(self.terms, other.terms)])

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Poly.coerce(other)
            return TruncatedSeries(self.order, [a * c for a in self.terms])
        self._check(other)
        n = self.order
        out = [Poly() for _ in range(n + 1)]
        for i, a in enumerate(self.terms):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.terms[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def evaluate_t(self, t) -> TruncatedSeries:
        return TruncatedSeries(self.order, [Poly.coerce(p(t)) for p in self.terms])

    def __repr__(self):
        return f"TruncatedSeries({self.order}, [{', '.join(map(str, self.terms))}])"


def series_inverse_linear(q, r, order: int) -> TruncatedSeries:
    """Expansion of ``1 / (1 - q*r(t)*u)`` up to ``u**order``."""
    step = Poly.coerce(r) * _frac(q)
    terms = [Poly([1])]
    for _ in range(order):
        terms.append(terms[-1] * step)
    return TruncatedSeries(order, terms)
