"""Finite-dimensional commutative local algebras over an exact field.

The zero-dimensional brute-forcer: an algebra is a multiplication table
on a basis whose first element is the identity and whose remaining
elements span the maximal ideal (which must be nilpotent).  Trace
ideals are computed straight from the definition, as sums of images of
module homomorphisms into the algebra, because (R : I) I is unavailable
without non-zerodivisors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (DependentGenerators, InfiniteField, NotGorenstein,
                     WorkloadExceeded, ZeroQuotient)
from .fields import GF, Matrix, rref, solve_homogeneous

__all__ = [
    "ArtinAlgebra",
    "SubIdeal",
    "ideal_generated_by",
    "truncated_dvr",
    "square_zero_two_vars",
    "gorenstein_two_generators",
    "semigroup_quotient",
    "socle",
    "hom_trace",
    "enumerate_ideals",
    "enumerate_trace_ideals_artinian",
    "gorenstein_family_separation",
    "IDEAL_ENUMERATION_GUARD",
]

IDEAL_ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class ArtinAlgebra:
    """A commutative local K-algebra given by a multiplication table.

    ``table[i][j]`` holds the coordinates of b_i * b_j.  Index 0 is the
    identity; the span of the other basis elements is the maximal ideal.
    """

    field: object
    dim: int
    labels: tuple
    table: tuple
    unit_index: int = 0

    @classmethod
    def create(cls, field, labels, table) -> "ArtinAlgebra":
        d = len(labels)
        table = tuple(tuple(tuple(field.element(x) for x in cell) for cell in row)
                      for row in table)
        if len(table) != d or any(len(row) != d for row in table) or any(
                len(cell) != d for row in table for cell in row):
            raise ValueError("multiplication table must be dim x dim x dim")
        A = cls(field, d, tuple(labels), table)
        for i in range(d):
            for j in range(i, d):
                if table[i][j] != table[j][i]:
                    raise ValueError("multiplication table is not commutative")
        unit = A.basis_vector(0)
        for j in range(d):
            if table[0][j] != A.basis_vector(j):
                raise ValueError("basis element 0 does not act as the identity")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = A.mult(A.table[i][j], A.basis_vector(k))
                    right = A.mult(A.basis_vector(i), A.table[j][k])
                    if left != right:
                        raise ValueError("multiplication table is not associative")
        # locality: the span of the non-unit basis elements must be nilpotent
        power = [A.basis_vector(i) for i in range(1, d)]
        for _ in range(d + 1):
            if not power:
                break
            power = _span(field, [A.mult(A.basis_vector(i), v)
                                  for i in range(1, d) for v in power])
        else:
            raise ValueError("the non-unit basis span is not nilpotent")
        if power:
            raise ValueError("the non-unit basis span is not nilpotent")
        return A

    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if j == i else f.zero for j in range(self.dim))

    def zero_vector(self) -> tuple:
        return tuple(self.field.zero for _ in range(self.dim))

    def mult(self, u: tuple, v: tuple) -> tuple:
        f = self.field
        out = [f.zero] * self.dim
        for i, ui in enumerate(u):
            if f.is_zero(ui):
                continue
            for j, vj in enumerate(v):
                if f.is_zero(vj):
                    continue
                k = f.mul(ui, vj)
                for r, c in enumerate(self.table[i][j]):
                    if not f.is_zero(c):
                        out[r] = f.add(out[r], f.mul(k, c))
        return tuple(out)

    def maximal_ideal_basis(self) -> list[tuple]:
        return [self.basis_vector(i) for i in range(1, self.dim)]

    def to_json(self) -> dict:
        f = self.field
        return {
            "dim": self.dim,
            "field": repr(f),
            "labels": list(self.labels),
            "table": [[[f.format(x) for x in cell] for cell in row]
                      for row in self.table],
        }

    def __repr__(self):
        return f"ArtinAlgebra({', '.join(self.labels)} over {self.field!r})"


def _span(field, vectors) -> tuple:
    vectors = [v for v in vectors if any(not field.is_zero(x) for x in v)]
    if not vectors:
        return ()
    red, piv = rref(Matrix(field, tuple(vectors)))
    return tuple(red.rows[i] for i in range(len(piv)))


@dataclass(frozen=True)
class SubIdeal:
    """An ideal of an ArtinAlgebra, stored as an echelon basis."""

    algebra: ArtinAlgebra
    rows: tuple

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: tuple) -> bool:
        f = self.algebra.field
        w = list(v)
        for row in self.rows:
            lead = next(i for i, x in enumerate(row) if not f.is_zero(x))
            c = w[lead]
            if not f.is_zero(c):
                w = [f.sub(a, f.mul(c, b)) for a, b in zip(w, row)]
        return all(f.is_zero(x) for x in w)

    def __repr__(self):
        return f"SubIdeal(dim {self.dim} of {self.algebra!r})"


def ideal_generated_by(A: ArtinAlgebra, vectors) -> SubIdeal:
    """The ideal generated by ``vectors``: spanned by all basis multiples."""
    prods = [A.mult(A.basis_vector(i), v)
             for v in vectors for i in range(A.dim)]
    return SubIdeal(A, _span(A.field, prods))


# ---------------------------------------------------------------------------
# constructors


def truncated_dvr(field, length: int) -> ArtinAlgebra:
    """K[x] / (x^length), a chain ring; length 1 gives the field itself."""
    if length < 1:
        raise ValueError("length must be at least 1")
    labels = ["1"] + [f"x^{i}" if i > 1 else "x" for i in range(1, length)]
    zero = [0] * length
    table = [[(_unit_row(length, i + j) if i + j < length else zero)
              for j in range(length)] for i in range(length)]
    return ArtinAlgebra.create(field, labels, table)


def _unit_row(d, k):
    row = [0] * d
    row[k] = 1
    return row


def square_zero_two_vars(field) -> ArtinAlgebra:
    """K[x, y] / (x, y)^2: dim 3, every product of non-units is zero."""
    zero = [0, 0, 0]
    table = [
        [_unit_row(3, 0), _unit_row(3, 1), _unit_row(3, 2)],
        [_unit_row(3, 1), zero, zero],
        [_unit_row(3, 2), zero, zero],
    ]
    return ArtinAlgebra.create(field, ("1", "x", "y"), table)


def gorenstein_two_generators(field) -> ArtinAlgebra:
    """K[x, y] / (x^2 - y^2, xy): dim 4, Gorenstein, socle spanned by x^2."""
    zero = [0, 0, 0, 0]
    s = _unit_row(4, 3)
    table = [
        [_unit_row(4, 0), _unit_row(4, 1), _unit_row(4, 2), _unit_row(4, 3)],
        [_unit_row(4, 1), s, zero, zero],
        [_unit_row(4, 2), zero, s, zero],
        [_unit_row(4, 3), zero, zero, zero],
    ]
    return ArtinAlgebra.create(field, ("1", "x", "y", "x^2"), table)


def semigroup_quotient(H, p: int) -> ArtinAlgebra:
    """R / conductor for R = F_p[[H]], on the monomial basis t^h, h < c."""
    c = H.conductor
    if c == 0:
        raise ZeroQuotient("the conductor of N0 is the whole ring")
    exps = list(H.members(c))
    d = len(exps)
    if d > 12:
        raise WorkloadExceeded(f"dim R/c = {d} exceeds the enumeration limit 12")
    index = {e: i for i, e in enumerate(exps)}
    labels = tuple("1" if e == 0 else f"t^{e}" for e in exps)
    table = [[(_unit_row(d, index[a + b]) if a + b < c else [0] * d)
              for b in exps] for a in exps]
    return ArtinAlgebra.create(GF(p), labels, table)


# ---------------------------------------------------------------------------
# socle and traces


def socle(A: ArtinAlgebra) -> SubIdeal:
    """The annihilator of the maximal ideal; the whole ring when dim = 1."""
    if A.dim == 1:
        return ideal_generated_by(A, [A.basis_vector(0)])
    rows = []
    for g in range(1, A.dim):
        # rows of the multiplication-by-b_g matrix
        for r in range(A.dim):
            rows.append(tuple(A.table[g][c][r] for c in range(A.dim)))
    sol = solve_homogeneous(Matrix(A.field, tuple(rows)))
    return ideal_generated_by(A, sol)


def hom_trace(I: SubIdeal) -> SubIdeal:
    """Sum of the images of all module homomorphisms from I to the algebra.

    A homomorphism is a linear map commuting with multiplication by every
    basis element; solving that linear system gives a basis of Hom(I, A),
    and the trace is the span of all the image vectors.
    """
    A = I.algebra
    f = A.field
    k = I.dim
    if k == 0:
        return SubIdeal(A, ())
    d = A.dim
    basis = list(I.rows)

    def coords_in_ideal(v):
        # exact coordinates of v in I's echelon basis
        w = list(v)
        out = [f.zero] * k
        for idx, row in enumerate(basis):
            lead = next(i for i, x in enumerate(row) if not f.is_zero(x))
            c = w[lead]
            if not f.is_zero(c):
                out[idx] = c
                w = [f.sub(a, f.mul(c, b)) for a, b in zip(w, row)]
        if any(not f.is_zero(x) for x in w):
            raise AssertionError("vector not inside the ideal")
        return out

    # unknowns w_{i,c} = image of basis[i], coordinate c
    eqs = []
    for g in range(1, d):
        for i in range(k):
            lam = coords_in_ideal(A.mult(A.basis_vector(g), basis[i]))
            for r in range(d):
                row = [f.zero] * (k * d)
                for c in range(d):
                    coef = A.table[g][c][r]
                    if not f.is_zero(coef):
                        row[i * d + c] = f.add(row[i * d + c], coef)
                for j in range(k):
                    if not f.is_zero(lam[j]):
                        row[j * d + r] = f.sub(row[j * d + r], lam[j])
                eqs.append(tuple(row))
    if eqs:
        sols = solve_homogeneous(Matrix(f, tuple(eqs)))
    else:
        # no constraints (the algebra is a field): every linear map qualifies
        sols = [tuple(f.one if i == j else f.zero for i in range(k * d))
                for j in range(k * d)]
    images = [tuple(sol[i * d:(i + 1) * d]) for sol in sols for i in range(k)]
    return ideal_generated_by(A, images)


def is_trace_ideal_artinian(I: SubIdeal) -> bool:
    return hom_trace(I) == I


# ---------------------------------------------------------------------------
# enumeration


def enumerate_ideals(A: ArtinAlgebra) -> list[SubIdeal]:
    """All ideals of A over a finite field, duplicate-free, sorted by dimension."""
    f = A.field
    if not f.finite:
        raise InfiniteField("exhaustive ideal enumeration needs a finite field")
    if f.p ** A.dim > IDEAL_ENUMERATION_GUARD:
        raise WorkloadExceeded(f"{f.p}^{A.dim} vectors exceed the guard")
    p, d = f.p, A.dim
    modules = {(): ()}
    for lead in range(d):
        for rest in itertools.product(range(p), repeat=d - lead - 1):
            v = (0,) * lead + (1,) + rest
            rows = ideal_generated_by(A, [v]).rows
            modules.setdefault(rows, rows)
    queue = list(modules)
    while queue:
        a = queue.pop()
        for b in list(modules):
            if not a or not b:
                continue
            s = _span(f, list(a) + list(b))
            if s not in modules:
                modules[s] = s
                queue.append(s)
    return [SubIdeal(A, rows) for rows in sorted(modules, key=lambda m: (len(m), m))]


def enumerate_trace_ideals_artinian(A: ArtinAlgebra) -> list[SubIdeal]:
    """The trace ideals of A: fixed points of hom_trace (zero included)."""
    return [I for I in enumerate_ideals(A) if hom_trace(I) == I]


# ---------------------------------------------------------------------------
# Gorenstein separation


def gorenstein_family_separation(A: ArtinAlgebra, u, v, samples) -> int:
    """Count the distinct cyclic trace ideals (u + a*v) over the samples a.

    Requires a Gorenstein algebra (socle of dimension 1) and u, v part of
    a minimal generating set of the maximal ideal, i.e. independent
    modulo its square.  Every cyclic ideal here is a trace ideal, and
    distinct samples are expected to give distinct ideals.
    """
    f = A.field
    if socle(A).dim != 1:
        raise NotGorenstein(f"socle dimension is {socle(A).dim}")
    u = tuple(f.element(x) for x in u)
    v = tuple(f.element(x) for x in v)
    if not f.is_zero(u[0]) or not f.is_zero(v[0]):
        raise DependentGenerators("u and v must lie in the maximal ideal")
    msq = _span(f, [A.mult(A.basis_vector(i), A.basis_vector(j))
                    for i in range(1, A.dim) for j in range(1, A.dim)])
    base = len(msq)
    if len(_span(f, list(msq) + [u, v])) != base + 2:
        raise DependentGenerators("u and v are dependent modulo m^2")
    seen = set()
    for a in samples:
        a = f.element(a)
        w = tuple(f.add(x, f.mul(a, y)) for x, y in zip(u, v))
        ideal = ideal_generated_by(A, [w])
        if hom_trace(ideal) != ideal:
            raise AssertionError("cyclic ideal in a Gorenstein algebra is not a trace ideal")
        seen.add(ideal.rows)
    return len(seen)
