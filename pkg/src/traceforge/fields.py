"""Exact scalar arithmetic and reduced row echelon linear algebra.

Field elements are plain values: `fractions.Fraction` over the rationals
and `int` residues in [0, p) over a prime field.  A field object
interprets the values; matrices and polynomials carry a reference to
their field.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch

__all__ = [
    "RationalField",
    "PrimeField",
    "QQ",
    "GF",
    "Matrix",
    "rref",
    "rank",
    "solve_homogeneous",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class RationalField:
    """The field of rational numbers; elements are reduced ``Fraction`` values."""

    finite = False
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("traceforge.QQ")

    def element(self, value, den=1) -> Fraction:
        return Fraction(value, den)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in QQ")
        return Fraction(a) / b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inversion of zero in QQ")
        return 1 / Fraction(a)

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def parse(self, text: str) -> Fraction:
        return Fraction(text)

    def format(self, a) -> str:
        return str(a)


class PrimeField:
    """The prime field F_p; elements are ``int`` residues in [0, p)."""

    finite = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime moduli must fit in 31 bits")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("traceforge.GF", self.p))

    def element(self, value, den=1) -> int:
        if isinstance(value, Fraction):
            den = den * value.denominator
            value = value.numerator
        return value * self.inv(den % self.p) % self.p if den != 1 else value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inversion of zero in GF({self.p})")
        return pow(a, -1, self.p)

    def eq(self, a, b) -> bool:
        return (a - b) % self.p == 0

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def parse(self, text: str) -> int:
        return self.element(Fraction(text))

    def format(self, a) -> str:
        return str(a % self.p)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class Matrix:
    """A dense rectangular matrix with entries in a single field."""

    field: object
    rows: tuple

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, field, rows) -> "Matrix":
        return cls(field, tuple(tuple(field.element(x) for x in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0


def _check_same_field(a, b):
    if a != b:
        raise FieldMismatch(f"mixed fields {a!r} and {b!r}")


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form of ``m`` and its pivot columns.

    The pivot in each column is the first row with a nonzero entry, so the
    output is deterministic; this is relied on for canonical ideal forms.
    """
    f = m.field
    rows = [list(r) for r in m.rows]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if not f.is_zero(rows[i][c])), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        k = f.inv(rows[r][c])
        rows[r] = [f.mul(k, x) for x in rows[r]]
        for i in range(nr):
            if i != r and not f.is_zero(rows[i][c]):
                k = rows[i][c]
                rows[i] = [f.sub(x, f.mul(k, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(f, tuple(tuple(row) for row in rows)), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def solve_homogeneous(m: Matrix) -> list[tuple]:
    """A basis of the null space {v : m v = 0}, one vector per free column.

    The basis vector for free column j has entry 1 there and the negated
    reduced column elsewhere, so dim = ncols - rank.
    """
    f = m.field
    red, pivots = rref(m)
    nc = m.ncols
    pivot_set = set(pivots)
    basis = []
    for j in range(nc):
        if j in pivot_set:
            continue
        v = [f.zero] * nc
        v[j] = f.one
        for r, p in enumerate(pivots):
            v[p] = f.neg(red.rows[r][j])
        basis.append(tuple(v))
    return basis
