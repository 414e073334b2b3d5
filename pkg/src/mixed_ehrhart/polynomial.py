"""Exact polynomial algebra over the rationals.

Everything here works with :class:`fractions.Fraction`; no floating point
value is ever produced.  Polynomials are immutable and hashable.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(x: Number | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rational(x: Number) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is one."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str | int) -> Fraction:
    return as_rational(s)


class UnivariatePolynomial:
    """Polynomial in one variable with rational coefficients.

    ``coefficients[i]`` is the coefficient of ``n**i``.  Trailing zeros are
    trimmed, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[Number | str] = ()):
        c = [as_rational(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coefficient: Number = 1) -> "UnivariatePolynomial":
        return cls([0] * degree + [coefficient])

    @classmethod
    def constant(cls, value: Number) -> "UnivariatePolynomial":
        return cls([value])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def is_zero(self) -> bool:
        return not self._c

    @property
    def leading_coefficient(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coefficient(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def padded(self, length: int) -> list[Fraction]:
        if len(self._c) > length:
            raise ValueError(f"polynomial of degree {self.degree} does not fit {length} slots")
        return list(self._c) + [Fraction(0)] * (length - len(self._c))

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UnivariatePolynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UnivariatePolynomial([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "UnivariatePolynomial(zero)"
        return f"UnivariatePolynomial({[format_rational(a) for a in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            mono = "" if i == 0 else ("n" if i == 1 else f"n^{i}")
            if mono and a == 1:
                s = mono
            elif mono and a == -1:
                s = "-" + mono
            else:
                s = format_rational(a) + ("*" + mono if mono else "")
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    def __neg__(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(-a for a in self._c)

    def __add__(self, other: "UnivariatePolynomial | Number") -> "UnivariatePolynomial":
        if not isinstance(other, UnivariatePolynomial):
            other = UnivariatePolynomial([other])
        n = max(len(self._c), len(other._c))
        return UnivariatePolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "UnivariatePolynomial | Number") -> "UnivariatePolynomial":
        if not isinstance(other, UnivariatePolynomial):
            other = UnivariatePolynomial([other])
        return self + (-other)

    def __rsub__(self, other: Number) -> "UnivariatePolynomial":
        return UnivariatePolynomial([other]) - self

    def __mul__(self, other: "UnivariatePolynomial | Number") -> "UnivariatePolynomial":
        if not isinstance(other, UnivariatePolynomial):
            s = as_rational(other)
            return UnivariatePolynomial(a * s for a in self._c)
        if not self._c or not other._c:
            return UnivariatePolynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return UnivariatePolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UnivariatePolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = UnivariatePolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, divisor: "UnivariatePolynomial") -> tuple["UnivariatePolynomial", "UnivariatePolynomial"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dd = len(divisor._c) - 1
        lc = divisor._c[-1]
        if len(rem) - 1 < dd:
            return UnivariatePolynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] / lc
            quot[i - dd] = q
            if q:
                for j, b in enumerate(divisor._c):
                    rem[i - dd + j] -= q * b
        return UnivariatePolynomial(quot), UnivariatePolynomial(rem[:dd])

    def __floordiv__(self, divisor: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self.divmod(divisor)[0]

    def __mod__(self, divisor: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self.divmod(divisor)[1]

    def derivative(self) -> "UnivariatePolynomial":
        return UnivariatePolynomial(i * a for i, a in enumerate(self._c) if i)

    def monic(self) -> "UnivariatePolynomial":
        if not self._c:
            return self
        return self * (1 / self._c[-1])

    def scale_variable(self, r: Number) -> "UnivariatePolynomial":
        """Return ``p(r*n)``."""
        r = as_rational(r)
        return UnivariatePolynomial(a * r**i for i, a in enumerate(self._c))

    def compose(self, inner: "UnivariatePolynomial") -> "UnivariatePolynomial":
        acc = UnivariatePolynomial()
        for a in reversed(self._c):
            acc = acc * inner + a
        return acc

    def is_integer_valued_on(self, nodes: Iterable[int]) -> bool:
        return all(self(n).denominator == 1 for n in nodes)

    def to_json(self) -> list[str]:
        return [format_rational(a) for a in self._c]

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> "UnivariatePolynomial":
        return cls(parse_rational(x) for x in data)


def gcd(p: UnivariatePolynomial, q: UnivariatePolynomial) -> UnivariatePolynomial:
    """Monic greatest common divisor (zero if both inputs vanish)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def binomial_polynomial(shift: Number, d: int, scale: Number = 1) -> UnivariatePolynomial:
    """``C(scale*n + shift, d)`` as a polynomial in ``n``."""
    acc = UnivariatePolynomial([1])
    for t in range(d):
        acc = acc * UnivariatePolynomial([as_rational(shift) - t, scale])
    return acc * Fraction(1, math.factorial(d))


class MultivariatePolynomial:
    """Sparse polynomial in ``k`` variables, keyed by exponent tuples."""

    __slots__ = ("_terms", "_arity")

    def __init__(self, terms: Mapping[tuple[int, ...], Number], arity: int | None = None):
        clean: dict[tuple[int, ...], Fraction] = {}
        for alpha, c in terms.items():
            alpha = tuple(int(a) for a in alpha)
            if arity is None:
                arity = len(alpha)
            elif len(alpha) != arity:
                raise ValueError("exponent tuples must share one arity")
            if any(a < 0 for a in alpha):
                raise ValueError("negative exponent")
            c = as_rational(c)
            if c:
                clean[alpha] = clean.get(alpha, Fraction(0)) + c
                if clean[alpha] == 0:
                    del clean[alpha]
        if arity is None:
            raise ValueError("arity of an empty polynomial must be given")
        self._terms = dict(sorted(clean.items()))
        self._arity = arity

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> int | None:
        return max((sum(a) for a in self._terms), default=None)

    def degree_in(self, i: int) -> int | None:
        return max((a[i] for a in self._terms), default=None)

    def homogeneous_part(self, degree: int) -> "MultivariatePolynomial":
        return MultivariatePolynomial(
            {a: c for a, c in self._terms.items() if sum(a) == degree}, self._arity
        )

    def __call__(self, *point: Number) -> Fraction:
        if len(point) != self._arity:
            raise ValueError(f"expected {self._arity} arguments, got {len(point)}")
        acc = Fraction(0)
        for alpha, c in self._terms.items():
            term = c
            for x, e in zip(point, alpha):
                if e:
                    term *= as_rational(x) ** e
            acc += term
        return acc

    def diagonal(self) -> UnivariatePolynomial:
        """Specialize every variable to the same ``n``."""
        out: dict[int, Fraction] = {}
        for alpha, c in self._terms.items():
            out[sum(alpha)] = out.get(sum(alpha), Fraction(0)) + c
        top = max(out, default=-1)
        return UnivariatePolynomial(out.get(i, 0) for i in range(top + 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultivariatePolynomial):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._arity, tuple(self._terms.items())))

    def __add__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        merged = dict(self._terms)
        for a, c in other._terms.items():
            merged[a] = merged.get(a, Fraction(0)) + c
        return MultivariatePolynomial(merged, self._arity)

    def __sub__(self, other: "MultivariatePolynomial") -> "MultivariatePolynomial":
        return self + MultivariatePolynomial({a: -c for a, c in other._terms.items()}, other._arity)

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {format_rational(c)}" for a, c in self._terms.items())
        return f"MultivariatePolynomial({{{body}}}, arity={self._arity})"

    def to_json(self) -> list[dict]:
        return [
            {"exponent": list(a), "coefficient": format_rational(c)}
            for a, c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], arity: int) -> "MultivariatePolynomial":
        return cls({tuple(t["exponent"]): parse_rational(t["coefficient"]) for t in data}, arity)


@dataclass(frozen=True)
class BinomialBasisVector:
    """Coefficients ``h_0..h_d`` of a polynomial in the basis ``C(n+d-j, d)``."""

    entries: tuple[Fraction, ...]
    d: int

    def __post_init__(self):
        if len(self.entries) != self.d + 1:
            raise ValueError("binomial basis vector must have exactly d+1 entries")

    def to_polynomial(self) -> UnivariatePolynomial:
        return from_binomial_basis(self)

    def is_integral(self) -> bool:
        return all(h.denominator == 1 for h in self.entries)

    def as_integers(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("binomial basis coefficients are not integers")
        return tuple(int(h) for h in self.entries)


def interpolate_univariate(samples: Iterable[tuple[int, Number]]) -> UnivariatePolynomial:
    """Lagrange interpolation through ``(node, value)`` pairs, exactly."""
    pts = [(as_rational(x), as_rational(y)) for x, y in samples]
    if not pts:
        raise ValueError("at least one sample is required")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("degenerate interpolation nodes")
    result = UnivariatePolynomial()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = UnivariatePolynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * UnivariatePolynomial([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def _falling_binomial_coefficients(j: int) -> list[Fraction]:
    """Monomial coefficients of ``C(n, j)``."""
    return list(binomial_polynomial(0, j).padded(j + 1))


def interpolate_multivariate(
    degree_bounds: Sequence[int],
    evaluate: Callable[..., Number],
    values: Mapping[tuple[int, ...], Number] | None = None,
) -> MultivariatePolynomial:
    """Tensor-product Newton interpolation on the grid ``prod {0..D_i}``.

    ``values`` may supply precomputed grid values; ``evaluate`` is called for
    any grid node missing from it.
    """
    bounds = tuple(int(b) for b in degree_bounds)
    if any(b < 0 for b in bounds):
        raise ValueError("degree bounds must be non-negative")
    k = len(bounds)
    grid = list(itertools.product(*(range(b + 1) for b in bounds)))
    table: dict[tuple[int, ...], Fraction] = {}
    for node in grid:
        if values is not None and node in values:
            table[node] = as_rational(values[node])
        else:
            table[node] = as_rational(evaluate(*node))

    # forward differences along each axis turn values into Newton coefficients
    for axis in range(k):
        for level in range(1, bounds[axis] + 1):
            for node in sorted(grid, key=lambda t: -t[axis]):
                if node[axis] < level:
                    continue
                prev = node[:axis] + (node[axis] - 1,) + node[axis + 1 :]
                table[node] = table[node] - table[prev]

    basis = {j: _falling_binomial_coefficients(j) for j in range(max(bounds, default=0) + 1)}
    terms: dict[tuple[int, ...], Fraction] = {}
    for node, c in table.items():
        if c == 0:
            continue
        factors = [basis[j] for j in node]
        for alpha in itertools.product(*(range(len(f)) for f in factors)):
            coeff = c
            for f, e in zip(factors, alpha):
                coeff *= f[e]
                if coeff == 0:
                    break
            if coeff:
                terms[alpha] = terms.get(alpha, Fraction(0)) + coeff
    return MultivariatePolynomial(terms, k)


def to_binomial_basis(p: UnivariatePolynomial, d: int) -> BinomialBasisVector:
    """Coefficients ``h`` with ``sum_j h_j C(n+d-j, d) == p(n)``."""
    if d < 0:
        raise ValueError("ambient dimension must be non-negative")
    if p.degree is not None and p.degree > d:
        raise ValueError("degree exceeds ambient dimension")
    # C(n+d-j, d) vanishes at n < j, so evaluation at 0..d is triangular
    h: list[Fraction] = []
    for n in range(d + 1):
        acc = p(n)
        for j in range(n):
            acc -= h[j] * math.comb(n + d - j, d)
        h.append(acc)
    return BinomialBasisVector(tuple(h), d)


def from_binomial_basis(h: BinomialBasisVector | Sequence[Number], d: int | None = None) -> UnivariatePolynomial:
    if not isinstance(h, BinomialBasisVector):
        entries = tuple(as_rational(x) for x in h)
        h = BinomialBasisVector(entries, len(entries) - 1 if d is None else d)
    acc = UnivariatePolynomial()
    for j, hj in enumerate(h.entries):
        if hj:
            acc = acc + binomial_polynomial(h.d - j, h.d) * hj
    return acc


def stirling2(i: int, k: int) -> int:
    """Stirling number of the second kind ``S(i, k)``."""
    if i < 0 or k < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    row = [1]  # S(0, .)
    for m in range(1, i + 1):
        new = [0] * (m + 1)
        for j in range(1, m + 1):
            new[j] = j * (row[j] if j < len(row) else 0) + row[j - 1]
        row = new
    return row[k] if k < len(row) else 0


def finite_difference(values: Sequence[Number], k: int) -> Fraction:
    """``k``-th forward difference at 0 from ``f(0), ..., f(k)``."""
    if k < 0:
        raise ValueError("order must be non-negative")
    if len(values) < k + 1:
        raise ValueError(f"need {k + 1} values for a difference of order {k}, got {len(values)}")
    return sum(
        ((-1) ** (k - j) * math.comb(k, j) * as_rational(values[j]) for j in range(k + 1)),
        Fraction(0),
    )


def multinomial(n: int, parts: Sequence[int]) -> int:
    if sum(parts) != n or any(p < 0 for p in parts):
        return 0
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out
