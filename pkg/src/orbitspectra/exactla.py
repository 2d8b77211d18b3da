"""Arbitrary-precision integer/rational matrix kernel.

Characteristic polynomials are computed with the division-free
Berkowitz recurrence, ranks and determinants with fraction-free
Bareiss elimination, so every intermediate value is an exact integer.
Rational values appear only in vectors (eigenvectors, kernel bases).
"""

from fractions import Fraction
from math import gcd, isqrt

from orbitspectra._kernels import bareiss_echelon, berkowitz_charpoly

# scanning this many candidate roots is cheap; anything larger needs a
# divisor-enumerable tail coefficient or a caller-supplied bound
_SCAN_LIMIT = 2_000_000
_FACTOR_LIMIT = 10**12


class IntMatrix:
    """Dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if entries:
            width = len(entries[0])
            for row in entries:
                if len(row) != width:
                    raise ValueError("ragged rows")
        else:
            width = 0
        self.rows = len(entries)
        self.cols = width
        self.entries = entries

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @property
    def is_square(self):
        return self.rows == self.cols

    def at(self, i, j):
        return self.entries[i][j]

    def trace(self):
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def transpose(self):
        return IntMatrix(zip(*self.entries)) if self.rows else IntMatrix([])

    def shift_diagonal(self, lam):
        """self - lam * I."""
        if not self.is_square:
            raise ValueError("diagonal shift of a non-square matrix")
        return IntMatrix(
            [
                [x - lam if i == j else x for j, x in enumerate(row)]
                for i, row in enumerate(self.entries)
            ]
        )

    def to_decimal_rows(self):
        """Rows as decimal strings, the JSON-safe serialization."""
        return [[str(x) for x in row] for row in self.entries]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"


class IntPolynomial:
    """Univariate polynomial with integer coefficients, constant term first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def from_roots(cls, roots):
        """Monic product of (x - r) over the given integer roots."""
        poly = cls.one()
        for r in roots:
            poly = poly.multiply(cls([-r, 1]))
        return poly

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def leading_coefficient(self):
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def multiply(self, other):
        if self.is_zero or other.is_zero:
            return IntPolynomial([])
        a, b = self.coefficients, other.coefficients
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    def divide_linear(self, r):
        """Synthetic division by (x - r); returns (quotient, remainder)."""
        if self.is_zero:
            return IntPolynomial([]), 0
        quotient = [0] * self.degree
        acc = 0
        for k in range(self.degree, 0, -1):
            acc = acc * r + self.coefficients[k]
            quotient[k - 1] = acc
        remainder = acc * r + self.coefficients[0]
        return IntPolynomial(quotient), remainder

    def __eq__(self, other):
        return (
            isinstance(other, IntPolynomial)
            and self.coefficients == other.coefficients
        )

    def __hash__(self):
        return hash(self.coefficients)

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                term = xk if mag == 1 else f"{mag}*{xk}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"IntPolynomial({self})"


class RationalVector:
    """Vector of exact rationals (Fraction keeps them in lowest terms)."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(Fraction(x) for x in entries)

    @property
    def length(self):
        return len(self.entries)

    @property
    def is_zero(self):
        return all(x == 0 for x in self.entries)

    def scaled(self, factor):
        factor = Fraction(factor)
        return RationalVector(x * factor for x in self.entries)

    def primitive(self):
        """Integer multiple with content 1 and positive leading entry."""
        if self.is_zero:
            return self
        lcm = 1
        for x in self.entries:
            d = x.denominator
            lcm = lcm // gcd(lcm, d) * d
        ints = [int(x * lcm) for x in self.entries]
        content = 0
        for v in ints:
            content = gcd(content, v)
        ints = [v // content for v in ints]
        lead = next(v for v in ints if v != 0)
        if lead < 0:
            ints = [-v for v in ints]
        return RationalVector(ints)

    def __eq__(self, other):
        return isinstance(other, RationalVector) and self.entries == other.entries

    def __repr__(self):
        return f"RationalVector({[str(x) for x in self.entries]})"


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - m), monic of degree n."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = berkowitz_charpoly([list(r) for r in m.entries])
    return IntPolynomial(reversed(coeffs))


def rank(m: IntMatrix) -> int:
    """Rank over the rationals, by fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    r, _, _, _ = bareiss_echelon(m.entries)
    return r


def det(m: IntMatrix):
    """Exact determinant (Bareiss: the last pivot, up to swap sign)."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    r, sign, pivot_cols, ech = bareiss_echelon(m.entries)
    if r < n:
        return 0
    return sign * ech[n - 1][pivot_cols[-1]]


def eigen_multiplicity(m: IntMatrix, lam) -> int:
    """Geometric multiplicity of the integer lam: n - rank(m - lam I)."""
    if not m.is_square:
        raise ValueError("eigenvalue multiplicity of a non-square matrix")
    return m.rows - rank(m.shift_diagonal(lam))


def kernel_basis(m: IntMatrix):
    """Basis of the rational null space, as primitive integer vectors.

    One basis vector per free column, derived by exact back-substitution
    over the fraction-free echelon form; deterministic.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        basis = []
        for f in range(m.cols):
            unit = [0] * m.cols
            unit[f] = 1
            basis.append(RationalVector(unit))
        return basis
    r, _, pivot_cols, ech = bareiss_echelon(m.entries)
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * m.cols
        x[f] = Fraction(1)
        for i in range(r - 1, -1, -1):
            pc = pivot_cols[i]
            if pc > f:
                continue
            s = Fraction(0)
            row = ech[i]
            for j in range(pc + 1, m.cols):
                if x[j]:
                    s += row[j] * x[j]
            x[pc] = -s / row[pc]
        basis.append(RationalVector(x).primitive())
    return basis


def mat_vec(m: IntMatrix, v: RationalVector) -> RationalVector:
    """Exact matrix-vector product."""
    if m.cols != v.length:
        raise ValueError(f"dimension mismatch: {m.rows}x{m.cols} times {v.length}")
    return RationalVector(
        sum(c * x for c, x in zip(row, v.entries)) for row in m.entries
    )


def _root_bound(p: IntPolynomial):
    # Cauchy bound: every root r satisfies |r| < 1 + max|c_i| / |c_lead|.
    lead = abs(p.leading_coefficient)
    top = max(abs(c) for c in p.coefficients[:-1]) if p.degree > 0 else 0
    return 1 + (top + lead - 1) // lead


def _divisors_up_to(value, limit):
    value = abs(value)
    out = []
    for d in range(1, isqrt(value) + 1):
        if value % d == 0:
            if d <= limit:
                out.append(d)
            q = value // d
            if q != d and q <= limit:
                out.append(q)
    return sorted(out)


def integer_roots(p: IntPolynomial, bound=None):
    """Extract all integer roots of p to maximal multiplicity.

    Candidates are the divisors of the lowest nonzero coefficient within
    a root bound (the Cauchy bound, intersected with the caller's bound
    when given; distance-spectrum callers pass the max row sum). Returns
    (sorted list of (root, multiplicity), residual polynomial); the
    residual has no integer roots and the factorization is exact.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no well-defined root set")
    counts = {}
    residual = p
    zero_mult = 0
    while residual.degree >= 1 and residual.coefficients[0] == 0:
        residual = IntPolynomial(residual.coefficients[1:])
        zero_mult += 1
    if zero_mult:
        counts[0] = zero_mult
    if residual.degree >= 1:
        cap = _root_bound(residual)
        if bound is not None:
            cap = min(cap, abs(int(bound)))
        tail = residual.coefficients[0]
        if cap <= _SCAN_LIMIT:
            candidates = [r for r in range(-cap, cap + 1) if r and tail % r == 0]
        elif abs(tail) <= _FACTOR_LIMIT:
            pos = _divisors_up_to(tail, cap)
            candidates = sorted([-d for d in pos] + pos)
        else:
            raise ValueError(
                "integer root candidates are unbounded; pass a spectral bound"
            )
        for r in candidates:
            while residual.degree >= 1 and residual.evaluate(r) == 0:
                residual, rem = residual.divide_linear(r)
                assert rem == 0
                counts[r] = counts.get(r, 0) + 1
    return sorted(counts.items()), residual
