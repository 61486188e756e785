"""
Truncated formal power series with exact rational coefficients, and the
catalog of generating functions used across the package.

A Series holds coefficients c_0..c_N as Fractions; N is the truncation
order.  Arithmetic truncates to the smaller operand order.  Everything is
exact: no floating point enters anywhere, so integrality of a coefficient
is itself a meaningful check (`integer_coefficients` enforces it).

The key primitive is sqrt(1-4x), whose coefficients are known in closed
form: c_0 = 1 and c_n = -2 * Catalan(n-1).  Every generating function in
the catalog is assembled from it by ring operations, avoiding any generic
series square root.

BivariateSeries supports the one two-variable generating function needed
(avoiders by length and number of components): coefficients are stored
x-major, a polynomial in y for each power of x, since identities are
truncated in x but exact polynomials in y.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n,n)/(n+1)."""
    if n < 0:
        return 0
    return comb(2 * n, n) // (n + 1)


def gen_catalan(n: int, k: int) -> int:
    """
    Generalized Catalan number (k+1)/(2n+k+1) * binom(2n+k+1, n): the n-th
    coefficient of C(x)^(k+1) where C is the Catalan generating function.

    Conventions at the edges: C_{0,-1} = 1 (the empty product C(x)^0),
    while C_{n,k} = 0 for n < 0, for k < -1, and for k = -1 with n > 0.
    """
    if n < 0 or k < -1:
        return 0
    if k == -1:
        return 1 if n == 0 else 0
    return (k + 1) * comb(2 * n + k + 1, n) // (2 * n + k + 1)


@dataclass(frozen=True)
class Series:
    """A power series truncated at order len(coeffs)-1."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend truncation {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        N = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] + other.coeffs[i] for i in range(N + 1)))

    def __sub__(self, other: "Series") -> "Series":
        N = min(self.order, other.order)
        return Series(tuple(self.coeffs[i] - other.coeffs[i] for i in range(N + 1)))

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Series(tuple(c * other for c in self.coeffs))
        N = min(self.order, other.order)
        out = [Fraction(0)] * (N + 1)
        for i, ci in enumerate(self.coeffs[: N + 1]):
            if ci:
                for j in range(N + 1 - i):
                    cj = other.coeffs[j]
                    if cj:
                        out[i + j] += ci * cj
        return Series(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: "Series") -> "Series":
        """Long division; the divisor needs a nonzero constant term."""
        if not isinstance(other, Series):
            return self * Fraction(1, other)
        if other.coeffs[0] == 0:
            raise ZeroDivisionError(
                f"division by a series with zero constant term: {other.coeffs[:4]}..."
            )
        N = min(self.order, other.order)
        out = [Fraction(0)] * (N + 1)
        for n in range(N + 1):
            s = self.coeffs[n]
            for k in range(1, n + 1):
                if other.coeffs[k]:
                    s -= other.coeffs[k] * out[n - k]
            out[n] = s / other.coeffs[0]
        return Series(tuple(out))

    def shift(self, k: int = 1) -> "Series":
        """Multiply by x^k (same truncation order; top coefficients drop off)."""
        return Series((Fraction(0),) * k + self.coeffs[: self.order + 1 - k])


def from_fractions(values: Iterable[Scalar], order: int) -> Series:
    vals = [Fraction(v) for v in values]
    if len(vals) < order + 1:
        vals += [Fraction(0)] * (order + 1 - len(vals))
    return Series(tuple(vals[: order + 1]))


def from_ints(values: Iterable[int], order: int) -> Series:
    return from_fractions(values, order)


def zero(order: int) -> Series:
    return from_ints([], order)


def one(order: int) -> Series:
    return from_ints([1], order)


def x(order: int) -> Series:
    return from_ints([0, 1], order)


def integer_coefficients(f: Series) -> list[int]:
    """Coefficients as ints, raising if any fails to reduce to an integer."""
    out = []
    for n, c in enumerate(f.coeffs):
        if c.denominator != 1:
            raise ValueError(f"coefficient of x^{n} is not an integer: {c}")
        out.append(c.numerator)
    return out


def sqrt_one_minus_4x(order: int) -> Series:
    """sqrt(1-4x): c_0 = 1, c_n = -2*Catalan(n-1).  Exact by construction."""
    return Series(
        (Fraction(1),)
        + tuple(Fraction(-2 * catalan(n - 1)) for n in range(1, order + 1))
    )


def catalan_series(order: int) -> Series:
    """C(x) = (1 - sqrt(1-4x)) / (2x) = sum Catalan(n) x^n."""
    return from_ints([catalan(n) for n in range(order + 1)], order)


def invert_transform(f: Series) -> Series:
    """
    1/(1-f), valid when f has zero constant term: composes a class from its
    indecomposable members.
    """
    if f.coeffs[0] != 0:
        raise ValueError(
            f"invert transform needs zero constant term, got {f.coeffs[0]}"
        )
    return one(f.order) / (one(f.order) - f)


# --------------------------------------------------------------------------
# bivariate series (x truncated, y exact polynomial)

YPoly = tuple[Fraction, ...]


def _ypoly(values: Sequence[Scalar]) -> YPoly:
    vals = [Fraction(v) for v in values]
    while len(vals) > 1 and vals[-1] == 0:
        vals.pop()
    return tuple(vals)


def _yadd(p: YPoly, q: YPoly) -> YPoly:
    L = max(len(p), len(q))
    return _ypoly([
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(L)
    ])


def _yneg(p: YPoly) -> YPoly:
    return tuple(-c for c in p)


def _ymul(p: YPoly, q: YPoly) -> YPoly:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return _ypoly(out)


@dataclass(frozen=True)
class BivariateSeries:
    """x-truncated series whose coefficients are polynomials in y."""

    coeffs: tuple[YPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int, k: int) -> Fraction:
        """The coefficient of x^n y^k."""
        row = self.coeffs[n]
        return row[k] if k < len(row) else Fraction(0)

    def at_y1(self) -> Series:
        """Evaluate y = 1, collapsing to a univariate series in x."""
        return Series(tuple(sum(row, Fraction(0)) for row in self.coeffs))

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        N = min(self.order, other.order)
        return BivariateSeries(
            tuple(_yadd(self.coeffs[i], other.coeffs[i]) for i in range(N + 1))
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        N = min(self.order, other.order)
        return BivariateSeries(
            tuple(_yadd(self.coeffs[i], _yneg(other.coeffs[i])) for i in range(N + 1))
        )

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        N = min(self.order, other.order)
        out = [(Fraction(0),)] * (N + 1)
        for i in range(N + 1):
            if self.coeffs[i] == (Fraction(0),):
                continue
            for j in range(N + 1 - i):
                term = _ymul(self.coeffs[i], other.coeffs[j])
                out[i + j] = _yadd(out[i + j], term)
        return BivariateSeries(tuple(out))

    def __truediv__(self, other: "BivariateSeries") -> "BivariateSeries":
        """
        Long division in x.  Only the case actually needed is supported: the
        divisor's x^0 coefficient must be a nonzero constant (a degree-0
        polynomial in y), which is invertible without rational functions.
        """
        c0 = other.coeffs[0]
        if len(c0) != 1 or c0[0] == 0:
            raise ZeroDivisionError(
                "bivariate division needs a nonzero constant x^0 coefficient, "
                f"got {c0}"
            )
        N = min(self.order, other.order)
        out: list[YPoly] = []
        for n in range(N + 1):
            s = self.coeffs[n]
            for k in range(1, n + 1):
                s = _yadd(s, _yneg(_ymul(other.coeffs[k], out[n - k])))
            out.append(tuple(c / c0[0] for c in s))
        return BivariateSeries(tuple(out))


def bivariate_from_rows(rows: Sequence[Sequence[Scalar]], order: int) -> BivariateSeries:
    padded = [_ypoly(row) for row in rows[: order + 1]]
    padded += [(Fraction(0),)] * (order + 1 - len(padded))
    return BivariateSeries(tuple(padded))


def embed(f: Series) -> BivariateSeries:
    """View a univariate series as a bivariate one (no y dependence)."""
    return BivariateSeries(tuple((c,) for c in f.coeffs))


def y_times(f: Series) -> BivariateSeries:
    """Multiply a univariate series by y."""
    return BivariateSeries(tuple((Fraction(0), c) for c in f.coeffs))


# --------------------------------------------------------------------------
# catalog

#: default truncation order used by the command-line surface
DEFAULT_ORDER = 40

CATALOG_NAMES = (
    "main",
    "indec_le1peak",
    "schroder_le1peak_per_comp",
    "pi4_nonempty",
    "class5_F",
    "class5_F_rationalized",
    "class5_indec",
    "class5_bivariate",
)


def gf_catalog(name: str, order: int = DEFAULT_ORDER):
    """
    The named generating function, truncated at the given order.

    main
        Avoiders of any of the five triples, by length:
        (1-5x+(1+x)sqrt(1-4x)) / (1-5x+(1-x)sqrt(1-4x)).
    indec_le1peak
        Indecomposable Schroder paths with at most one peak, by size:
        (1 + x + x/sqrt(1-4x) - sqrt(1-4x)) / 2.
    schroder_le1peak_per_comp
        Schroder paths with at most one peak in every component:
        2*sqrt(1-4x) / (1-5x+(1-x)sqrt(1-4x)).
    pi4_nonempty
        Nonempty avoiders of the fourth triple: x times the previous entry.
    class5_F
        1 + pi4_nonempty: the same function as `main`, assembled along the
        fifth class's route.
    class5_F_rationalized
        1 + (2x^2 + x(1-5x)C(x)) / (1-4x-x^2), with the radical cleared from
        the denominator.
    class5_indec
        Indecomposable avoiders of the fifth triple, by length:
        x / (1 - x/sqrt(1-4x)).  Coefficients 1,1,3,11,43,... from n=1
        (OEIS A026671 shifted onto the length index).
    class5_bivariate
        Avoiders of the fifth triple by length (x) and number of components
        (y): 2xy*sqrt(1-4x) / (y-2x-3xy+(2-xy-y)sqrt(1-4x)).
    """
    N = order
    sq = sqrt_one_minus_4x(N)
    xs = x(N)
    ones = one(N)
    if name == "main":
        num = from_ints([1, -5], N) + from_ints([1, 1], N) * sq
        den = from_ints([1, -5], N) + from_ints([1, -1], N) * sq
        return num / den
    if name == "indec_le1peak":
        return (ones + xs + xs / sq - sq) * Fraction(1, 2)
    if name == "schroder_le1peak_per_comp":
        den = from_ints([1, -5], N) + from_ints([1, -1], N) * sq
        return (sq * 2) / den
    if name == "pi4_nonempty":
        return gf_catalog("schroder_le1peak_per_comp", N).shift()
    if name == "class5_F":
        return ones + gf_catalog("pi4_nonempty", N)
    if name == "class5_F_rationalized":
        C = catalan_series(N)
        num = from_ints([0, 0, 2], N) + xs * from_ints([1, -5], N) * C
        return ones + num / from_ints([1, -4, -1], N)
    if name == "class5_indec":
        return xs / (ones - xs / sq)
    if name == "class5_bivariate":
        # numerator 2xy*sqrt; denominator y - 2x - 3xy + (2-xy-y)*sqrt
        num = y_times((sq * 2).shift())
        lin = bivariate_from_rows([[0, 1], [-2, -3]], N)
        fac = bivariate_from_rows([[2, -1], [0, -1]], N)
        den = lin + fac * embed(sq)
        return num / den
    raise KeyError(f"unknown series {name!r}; choose from {CATALOG_NAMES}")
