"""Exact polynomial statistics of the tree families, and the identities
they satisfy.

Weights.  A labeled plane tree with a improper and b proper edges
contributes x^a y^b.  In the root-1 family the edges at vertex 1 (always
proper) are marked t instead of y, so a tree contributes x^impr y^(prop-d)
t^d where d is the degree of vertex 1.  An increasing tree contributes
t^(root degree).  Summing over a whole family gives, per n:

* ``edge_status_polynomial``   over all labeled plane trees,
* ``rooted_edge_status_polynomial``  over the root-1 trees,
* ``root_degree_polynomial``   over the increasing trees.

Closed forms.  The first sum collapses to (2n-1)!! (x+y)^n and the second
to sum_r S[n,r] t^r (x+y)^(n-r), where S[n,r] counts increasing trees with
n edges and root degree r; :func:`verify_closed_forms` checks both against
the enumerated sums.  S[n,r] also obeys the slot-counting recurrence
S[n+1,r] = r S[n,r-1] + (2n-r) S[n,r] (a new leaf either lands in one of
the root's r slots or in one of the other 2n+1-(r+1)), which is how
:func:`root_degree_counts` extends the tables past the enumeration bound.

Generating functions.  With exact rational coefficients, the three
exponential generating functions satisfy, written multiplicatively so that
no series inverse is ever needed (the natural denominators have
non-invertible constant terms such as x+y):

* (sum_n P_n q^n/n!) * sqrt(1-2(x+y)q)              = 1
* (sum_n O_n q^n/n!) * (x+y-t + t sqrt(1-2(x+y)q))  = x+y
* (sum_n S_n q^n/n!) * (1-t  + t sqrt(1-2q))        = 1

:func:`verify_egf_identities` checks all three through a requested order,
drawing coefficients from enumeration, from the closed forms, or from both.

Everything here is exact: integer coefficients for the statistics, stdlib
``Fraction`` scalars inside truncated series.  This is deliberately not a
general computer-algebra layer; three fixed variables and evaluation at
scalars is all the involved identities need.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, repeat
from typing import Iterable, Iterator

from .families import (
    MAX_INCREASING_EDGES,
    MAX_LABELED_EDGES,
    increasing_trees,
    odd_double_factorial,
    plane_shapes,
    shape_arrays,
)

MAX_SERIES_ORDER = 10

Monomial = tuple[int, int, int]  # exponents of x, y, t


class Polynomial:
    """Sparse exact polynomial in x, y and t.

    Terms live in a dict keyed by exponent triples; coefficients are ints
    (or Fractions, inside series work) and zero coefficients are never
    stored.  Instances are treated as immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls({(0, 0, 0): value})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for key, val in other.coeffs.items():
            out[key] = out.get(key, 0) + val
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial({k: v * other for k, v in self.coeffs.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict = defaultdict(int)
        for (a1, b1, c1), v1 in self.coeffs.items():
            for (a2, b2, c2), v2 in other.coeffs.items():
                out[(a1 + a2, b1 + b2, c1 + c2)] += v1 * v2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError("negative powers are not defined here")
        result = Polynomial.constant(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def eval(self, x, y, t):
        return sum(v * x ** a * y ** b * t ** c
                   for (a, b, c), v in self.coeffs.items())

    def __str__(self):
        if not self.coeffs:
            return "0"
        # canonical order: descending on (t exponent, x exponent, y exponent)
        keys = sorted(self.coeffs, key=lambda k: (k[2], k[0], k[1]),
                      reverse=True)
        parts = []
        for a, b, c in keys:
            coeff = self.coeffs[(a, b, c)]
            names = ""
            for name, e in (("t", c), ("x", a), ("y", b)):
                if e == 1:
                    names += name
                elif e > 1:
                    names += f"{name}^{e}"
            if not names:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(names)
            elif coeff == -1:
                parts.append("-" + names)
            else:
                parts.append(f"{coeff}{names}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


X = Polynomial({(1, 0, 0): 1})
Y = Polynomial({(0, 1, 0): 1})
T = Polynomial({(0, 0, 1): 1})


class Series:
    """Power series in q truncated at a fixed order, with Polynomial
    coefficients over exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(c if isinstance(c, Polynomial)
                            else Polynomial.constant(c)
                            for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the q^0 coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_polynomial(cls, poly, order: int) -> "Series":
        poly = _coerce(poly)
        return cls([poly] + [Polynomial()] * order)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("series orders differ")
        return Series(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("series orders differ")
        n = self.order
        out = [Polynomial() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return Series(out)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None  # type: ignore[assignment]

    def __str__(self):
        lines = []
        for k, poly in enumerate(self.coeffs):
            denom = 1
            for c in poly.coeffs.values():
                denom = math.lcm(denom, c.denominator)
            lines.append(f"q^{k}: {poly * denom} / {denom}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Series(order={self.order})"


def sqrt_series(u, order: int) -> Series:
    """Truncated expansion of sqrt(1 - 2 u q) for a polynomial u.

    The q^m coefficient is -(2m-3)!! u^m / m!  (m >= 1), with the empty
    double factorial equal to 1.
    """
    u = _coerce(u)
    coeffs = [Polynomial.constant(1)]
    upow = Polynomial.constant(1)
    for m in range(1, order + 1):
        upow = upow * u
        scale = Fraction(-odd_double_factorial(m - 1), math.factorial(m))
        coeffs.append(upow * scale)
    return Series(coeffs)


def egf_series(polys: Iterable) -> Series:
    """Series whose q^n coefficient is the n-th given polynomial over n!."""
    return Series(_coerce(p) * Fraction(1, math.factorial(n))
                  for n, p in enumerate(polys))


# ---- enumerated statistics ----

def _shape_histogram(shape, root_first: bool):
    """Per-shape histogram of the improper-edge count over all labelings.

    Returns (root degree, list h) where h[a] counts labelings with exactly
    a improper edges.  With ``root_first`` the root keeps label 1 and only
    the remaining labels permute.
    """
    par, kids = shape_arrays(shape)
    count = len(par)
    scan = [(v, tuple(reversed(kids[v]))) for v in range(count) if kids[v]]
    hist = [0] * count
    if root_first:
        labelings: Iterable = ((1,) + rest
                               for rest in permutations(range(2, count + 1)))
    else:
        labelings = permutations(range(1, count + 1))
    for labels in labelings:
        beta = list(labels)
        for v in range(count - 1, 0, -1):  # reverse preorder: child before parent
            b = beta[v]
            p = par[v]
            if b < beta[p]:
                beta[p] = b
        impr = 0
        for v, rev in scan:
            bound = labels[v]
            for c in rev:
                bc = beta[c]
                if bc < bound:
                    impr += 1
                    bound = bc
        hist[impr] += 1
    return len(kids[0]), hist


def _histograms(n: int, root_first: bool, jobs: int) -> Iterator:
    shapes = plane_shapes(n)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            yield from pool.map(_shape_histogram, shapes, repeat(root_first))
    else:
        for shape in shapes:
            yield _shape_histogram(shape, root_first)


def _require_bound(n: int, bound: int, force: bool, what: str):
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > bound and not force:
        raise ValueError(
            f"n={n} exceeds the exhaustive bound {bound} for {what}; "
            f"force to run anyway")


def edge_status_polynomial(n: int, *, force: bool = False,
                           jobs: int = 1) -> Polynomial:
    """Sum of x^impr y^prop over all labeled plane trees with n edges."""
    _require_bound(n, MAX_LABELED_EDGES, force, "labeled trees")
    totals = [0] * (n + 1)
    for _, hist in _histograms(n, False, jobs):
        for a, cnt in enumerate(hist):
            totals[a] += cnt
    return Polynomial({(a, n - a, 0): c for a, c in enumerate(totals)})


def rooted_edge_status_polynomial(n: int, *, force: bool = False,
                                  jobs: int = 1) -> Polynomial:
    """Sum of x^impr y^(prop-d) t^d over root-1 trees, d the root degree."""
    _require_bound(n, MAX_LABELED_EDGES, force, "root-1 trees")
    terms: dict = defaultdict(int)
    for deg, hist in _histograms(n, True, jobs):
        for a, cnt in enumerate(hist):
            if cnt:
                terms[(a, n - a - deg, deg)] += cnt
    return Polynomial(terms)


def root_degree_polynomial(n: int, *, force: bool = False) -> Polynomial:
    """Sum of t^(root degree) over all increasing plane trees with n edges."""
    _require_bound(n, MAX_INCREASING_EDGES, force, "increasing trees")
    degrees = Counter(len(tree.root.children) for tree in increasing_trees(n))
    return Polynomial({(0, 0, r): c for r, c in degrees.items()})


# ---- closed forms ----

def edge_status_closed_form(n: int) -> Polynomial:
    return odd_double_factorial(n) * (X + Y) ** n


def root_degree_counts(n: int) -> dict[int, int]:
    """Increasing trees with n edges by root degree, via the insertion
    recurrence; no enumeration, so any n is fine."""
    if n < 0:
        raise ValueError("n must be >= 0")
    counts = {0: 1}
    for m in range(n):
        grown: dict = defaultdict(int)
        for r, c in counts.items():
            grown[r + 1] += c * (r + 1)
            if 2 * m - r > 0:
                grown[r] += c * (2 * m - r)
        counts = dict(grown)
    return counts


def root_degree_closed_form(n: int) -> Polynomial:
    return Polynomial({(0, 0, r): c for r, c in root_degree_counts(n).items()})


def rooted_closed_form(n: int) -> Polynomial:
    xy = X + Y
    out = Polynomial()
    for r, c in root_degree_counts(n).items():
        out = out + c * T ** r * xy ** (n - r)
    return out


# ---- verification ----

@dataclass(frozen=True)
class ClosedFormReport:
    n: int
    labeled: Polynomial
    rooted: Polynomial
    labeled_ok: bool
    rooted_ok: bool

    @property
    def passed(self) -> bool:
        return self.labeled_ok and self.rooted_ok


def verify_closed_forms(n: int, *, force: bool = False,
                        jobs: int = 1) -> ClosedFormReport:
    """Check both enumerated statistics against their closed forms.

    The rooted comparison takes its root-degree coefficients from the
    enumerated increasing-tree polynomial, keeping the two routes
    independent.
    """
    labeled = edge_status_polynomial(n, force=force, jobs=jobs)
    rooted = rooted_edge_status_polynomial(n, force=force, jobs=jobs)
    degrees = root_degree_polynomial(n, force=force)
    xy = X + Y
    expected_rooted = Polynomial()
    for (_, _, r), c in degrees.coeffs.items():
        expected_rooted = expected_rooted + c * T ** r * xy ** (n - r)
    return ClosedFormReport(
        n=n,
        labeled=labeled,
        rooted=rooted,
        labeled_ok=labeled == edge_status_closed_form(n),
        rooted_ok=rooted == expected_rooted,
    )


@dataclass(frozen=True)
class EgfReport:
    order: int
    source: str
    labeled_ok: bool
    rooted_ok: bool
    degree_ok: bool

    @property
    def passed(self) -> bool:
        return self.labeled_ok and self.rooted_ok and self.degree_ok


def _coefficient_table(n: int, source: str):
    if source == "enumerated" or (source == "auto" and n <= MAX_LABELED_EDGES):
        return (edge_status_polynomial(n),
                rooted_edge_status_polynomial(n),
                root_degree_polynomial(n))
    return (edge_status_closed_form(n),
            rooted_closed_form(n),
            root_degree_closed_form(n))


def verify_egf_identities(order: int, *, source: str = "auto",
                          force: bool = False) -> EgfReport:
    """Check the three generating-function identities through q^order.

    ``source`` picks where the per-n coefficients come from: "enumerated"
    (order capped by the enumeration bound), "closed", or "auto"
    (enumerated up to the bound, closed forms beyond it).
    """
    if source not in ("auto", "enumerated", "closed"):
        raise ValueError(f"unknown source {source!r}")
    if order < 0:
        raise ValueError("order must be >= 0")
    if order > MAX_SERIES_ORDER and not force:
        raise ValueError(
            f"order={order} exceeds the default bound {MAX_SERIES_ORDER}; "
            f"force to run anyway")
    if source == "enumerated" and order > MAX_LABELED_EDGES:
        raise ValueError(
            f"enumerated coefficients stop at order {MAX_LABELED_EDGES}")

    tables = [_coefficient_table(n, source) for n in range(order + 1)]
    xy = X + Y
    sqrt_xy = sqrt_series(xy, order)
    one = Series.from_polynomial(1, order)
    t_series = Series.from_polynomial(T, order)

    labeled_ok = egf_series(t[0] for t in tables) * sqrt_xy == one

    rooted_factor = Series.from_polynomial(xy - T, order) + t_series * sqrt_xy
    rooted_ok = (egf_series(t[1] for t in tables) * rooted_factor
                 == Series.from_polynomial(xy, order))

    degree_factor = (Series.from_polynomial(1 - T, order)
                     + t_series * sqrt_series(1, order))
    degree_ok = egf_series(t[2] for t in tables) * degree_factor == one

    return EgfReport(order=order, source=source, labeled_ok=labeled_ok,
                     rooted_ok=rooted_ok, degree_ok=degree_ok)
