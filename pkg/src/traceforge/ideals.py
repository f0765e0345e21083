"""Exact fractional-ideal arithmetic for numerical semigroup rings.

Let R = K[[H]] inside K[[t]].  A nonzero fractional R-module I that
contains some t^N K[[t]] is stored as

    I = span_K(rows) + t^tail K[[t]],

where the rows are Laurent polynomials supported on [lo, tail) in
reduced echelon form: valuations (pivots) strictly increasing, each
pivot coefficient 1, pivot exponents eliminated from the other rows,
and tail minimal (t^(tail-1) is not in I).  This representation is
unique, so module equality is structural equality.

The finite-window calculus behind every operation: if t^N K[[t]] lies
inside I and J has minimal valuation m, then any alpha with alpha*J
inside I is determined by its coefficients on [lo(I) - m, N - m),
because the discarded tail of alpha multiplies J into t^N K[[t]].
Dually only the tail monomials t^j of J with j < N - lo(alpha) impose
constraints.  Products obey tail(I*J) <= min(tail(I) + lo(J),
tail(J) + lo(I)).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatch, NotIntegral, ZeroIdeal
from .fields import Matrix, rref, solve_homogeneous
from .semigroups import NumericalSemigroup, SemigroupIdeal

__all__ = [
    "LaurentPoly",
    "FractionalIdeal",
    "unit_ideal",
    "conductor_ideal",
    "integral_closure_ideal",
    "maximal_ideal",
    "ideal_from_generators",
    "from_window_vectors",
    "add",
    "multiply",
    "shift",
    "colon",
    "equals",
    "contains",
    "contains_ideal",
    "closed_under",
    "reinterpret",
    "value_set",
    "canonical_fractional_ideal",
    "adjoin",
    "endomorphism_ring",
    "minimal_generator_count",
]


# ---------------------------------------------------------------------------
# Laurent polynomials


@dataclass(frozen=True)
class LaurentPoly:
    """A finite K-linear combination of powers t^e, e in Z.

    ``terms`` is a sorted tuple of (exponent, coefficient) pairs with no
    zero coefficients, so equality and hashing are structural.
    """

    field: object
    terms: tuple

    @classmethod
    def from_dict(cls, field, mapping) -> "LaurentPoly":
        items = tuple(sorted((e, c) for e, c in mapping.items() if not field.is_zero(c)))
        return cls(field, items)

    @classmethod
    def zero(cls, field) -> "LaurentPoly":
        return cls(field, ())

    @classmethod
    def monomial(cls, field, exp: int, coeff=None) -> "LaurentPoly":
        coeff = field.one if coeff is None else coeff
        if field.is_zero(coeff):
            return cls.zero(field)
        return cls(field, ((exp, coeff),))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def valuation(self) -> int:
        if not self.terms:
            raise ValueError("the zero series has no valuation")
        return self.terms[0][0]

    def coeff(self, exp: int):
        for e, c in self.terms:
            if e == exp:
                return c
        return self.field.zero

    def _binop_guard(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def add(self, other) -> "LaurentPoly":
        self._binop_guard(other)
        f = self.field
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = f.add(acc.get(e, f.zero), c)
        return LaurentPoly.from_dict(f, acc)

    def sub(self, other) -> "LaurentPoly":
        return self.add(other.neg())

    def neg(self) -> "LaurentPoly":
        f = self.field
        return LaurentPoly(f, tuple((e, f.neg(c)) for e, c in self.terms))

    def scale(self, k) -> "LaurentPoly":
        f = self.field
        if f.is_zero(k):
            return LaurentPoly.zero(f)
        return LaurentPoly(f, tuple((e, f.mul(k, c)) for e, c in self.terms))

    def mul(self, other) -> "LaurentPoly":
        self._binop_guard(other)
        f = self.field
        acc = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = f.add(acc.get(e, f.zero), f.mul(c1, c2))
        return LaurentPoly.from_dict(f, acc)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.field, tuple((e + k, c) for e, c in self.terms))

    def truncate(self, hi: int) -> "LaurentPoly":
        """Drop every term with exponent >= hi."""
        return LaurentPoly(self.field, tuple((e, c) for e, c in self.terms if e < hi))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- text form: "t^4 + 3*t^5" --------------------------------------

    _TERM = re.compile(
        r"^(?P<sign>[+-]?)(?:(?P<c>\d+(?:/\d+)?)\*?)?(?P<t>t(?:\^(?P<e>-?\d+))?)?$")

    @classmethod
    def parse(cls, field, text: str) -> "LaurentPoly":
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        # split into signed terms; a '-' directly after '^' is an exponent sign
        chunks, cur = [], ""
        for i, ch in enumerate(s):
            if ch in "+-" and cur and not cur.endswith("^"):
                chunks.append(cur)
                cur = ch
            else:
                cur += ch
        chunks.append(cur)
        acc = {}
        for chunk in chunks:
            m = cls._TERM.match(chunk)
            if not m or (m.group("c") is None and m.group("t") is None):
                raise ValueError(f"cannot parse term {chunk!r} of {text!r}")
            coeff = field.parse(m.group("c")) if m.group("c") else field.one
            if m.group("sign") == "-":
                coeff = field.neg(coeff)
            exp = 0
            if m.group("t"):
                exp = int(m.group("e")) if m.group("e") else 1
            acc[exp] = field.add(acc.get(exp, field.zero), coeff)
        return cls.from_dict(field, acc)

    def format(self) -> str:
        if not self.terms:
            return "0"
        f = self.field
        out = ""
        for e, c in self.terms:
            mag = f.format(c)
            sign = "+"
            if mag.startswith("-"):
                sign, mag = "-", mag[1:]
            if e == 0:
                body = mag
            else:
                tpow = "t" if e == 1 else f"t^{e}"
                body = tpow if mag == "1" else f"{mag}*{tpow}"
            if not out:
                out = body if sign == "+" else f"-{body}"
            else:
                out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def to_json(self):
        return [[e, self.field.format(c)] for e, c in self.terms]


# ---------------------------------------------------------------------------
# fractional ideals


@dataclass(frozen=True)
class FractionalIdeal:
    """Canonical form of a nonzero fractional R-submodule of K((t)).

    Build instances through the factory functions in this module; the
    constructor does not re-canonicalize.
    """

    field: object
    semigroup: NumericalSemigroup
    tail: int
    rows: tuple

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r.valuation for r in self.rows)

    @property
    def lo(self) -> int:
        return self.rows[0].valuation if self.rows else self.tail

    def __repr__(self):
        body = ", ".join(str(r) for r in self.rows)
        return f"Ideal[{body} | t^{self.tail}K[[t]] over {self.semigroup}]"

    def to_json(self):
        return {"lo": self.lo, "tail": self.tail,
                "basis": [r.to_json() for r in self.rows]}


def _check_pair(I: FractionalIdeal, J: FractionalIdeal):
    if I.field != J.field:
        raise FieldMismatch(f"{I.field!r} vs {J.field!r}")
    if I.semigroup != J.semigroup:
        raise FieldMismatch(f"ideals over {I.semigroup} vs {J.semigroup}")


def _reduce(I: FractionalIdeal, f: LaurentPoly) -> LaurentPoly:
    """Remainder of f against I's rows and tail; zero iff f lies in I."""
    w = f.truncate(I.tail)
    for row in I.rows:
        c = w.coeff(row.valuation)
        if not I.field.is_zero(c):
            w = w.sub(row.scale(c))
    return w


def contains(I: FractionalIdeal, f: LaurentPoly) -> bool:
    if I.field != f.field:
        raise FieldMismatch(f"{I.field!r} vs {f.field!r}")
    return _reduce(I, f).is_zero()


def contains_ideal(I: FractionalIdeal, J: FractionalIdeal) -> bool:
    _check_pair(I, J)
    if any(not contains(I, r) for r in J.rows):
        return False
    return all(contains(I, LaurentPoly.monomial(I.field, j))
               for j in range(J.tail, I.tail))


def equals(I: FractionalIdeal, J: FractionalIdeal) -> bool:
    _check_pair(I, J)
    return I.tail == J.tail and I.rows == J.rows


def closed_under(I: FractionalIdeal, H: NumericalSemigroup) -> bool:
    """Whether the stored set is a module over K[[H]] (t^g * I inside I)."""
    probe = FractionalIdeal(I.field, H, I.tail, I.rows)
    return all(contains(probe, r.shift(g))
               for r in I.rows for g in H.minimal_generators)


def _canonical(field, H, polys, tail: int) -> FractionalIdeal:
    """Echelonize span(polys) + t^tail K[[t]] and minimize the tail.

    The input span must already be closed under the action of K[[H]]
    modulo the tail; this is asserted on the result.
    """
    polys = [p.truncate(tail) for p in polys]
    polys = [p for p in polys if not p.is_zero()]
    rows = []
    if polys:
        lo0 = min(p.valuation for p in polys)
        width = tail - lo0
        mat = Matrix(field, tuple(
            tuple(p.coeff(lo0 + i) for i in range(width)) for p in polys))
        red, piv = rref(mat)
        for r_idx in range(len(piv)):
            terms = {lo0 + i: c for i, c in enumerate(red.rows[r_idx])
                     if not field.is_zero(c)}
            rows.append(LaurentPoly.from_dict(field, terms))
    # a trailing row that is exactly t^(tail-1) belongs to the tail; in
    # echelon form the other rows have coefficient 0 at a pivot exponent
    while rows and rows[-1].valuation == tail - 1:
        rows.pop()
        tail -= 1
    ideal = FractionalIdeal(field, H, tail, tuple(rows))
    if not closed_under(ideal, H):
        raise AssertionError(f"constructed set is not a module over {H}")
    return ideal


def from_window_vectors(field, H, polys, tail: int) -> FractionalIdeal:
    """Canonicalize a set already known to be a module: span(polys) + tail."""
    return _canonical(field, H, list(polys), tail)


def _module_from(field, H, gens, tail: int) -> FractionalIdeal:
    """The R-module generated by ``gens`` together with t^tail K[[t]]."""
    vectors = []
    for g in gens:
        if g.is_zero():
            continue
        v = g.valuation
        for h in H.members(max(tail - v, 0)):
            vectors.append(g.shift(h))
    return _canonical(field, H, vectors, tail)


# -- named ideals -----------------------------------------------------------


def unit_ideal(field, H) -> FractionalIdeal:
    """R itself: monomials t^h for the members below the conductor."""
    c = H.conductor
    rows = [LaurentPoly.monomial(field, h) for h in H.members(c)]
    return _canonical(field, H, rows, c)


def conductor_ideal(field, H) -> FractionalIdeal:
    """The conductor t^c K[[t]], the largest common ideal of R and K[[t]]."""
    return _canonical(field, H, [], H.conductor)


def integral_closure_ideal(field, H) -> FractionalIdeal:
    """K[[t]] as an R-module: empty basis with tail 0."""
    return _canonical(field, H, [], 0)


def maximal_ideal(field, H) -> FractionalIdeal:
    rows = [LaurentPoly.monomial(field, g) for g in H.minimal_generators]
    return _module_from(field, H, rows, H.conductor + H.multiplicity)


def ideal_from_generators(field, H, gens, with_conductor: bool = False) -> FractionalIdeal:
    """The R-module generated by ``gens``, plus the conductor if flagged.

    Each generator g contributes t^(val(g) + c) K[[t]], so the stored tail
    is min over the generators (and c itself when the conductor is added).
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens and not with_conductor:
        raise ZeroIdeal("no nonzero generators and no conductor requested")
    c = H.conductor
    tails = [g.valuation + c for g in gens]
    if with_conductor:
        tails.append(c)
    return _module_from(field, H, gens, min(tails))


# -- arithmetic --------------------------------------------------------------


def add(I: FractionalIdeal, J: FractionalIdeal) -> FractionalIdeal:
    _check_pair(I, J)
    return _canonical(I.field, I.semigroup, list(I.rows) + list(J.rows),
                      min(I.tail, J.tail))


def multiply(I: FractionalIdeal, J: FractionalIdeal) -> FractionalIdeal:
    """Module product I*J; pairwise row products generate it over R."""
    _check_pair(I, J)
    tail = min(I.tail + J.lo, J.tail + I.lo)
    products = [a.mul(b) for a in I.rows for b in J.rows]
    return _module_from(I.field, I.semigroup, products, tail)


def shift(I: FractionalIdeal, k: int) -> FractionalIdeal:
    """Multiplication by the monomial t^k; preserves canonical form."""
    return FractionalIdeal(I.field, I.semigroup, I.tail + k,
                           tuple(r.shift(k) for r in I.rows))


def reinterpret(I: FractionalIdeal, H: NumericalSemigroup) -> FractionalIdeal:
    """View the same set of series as a module over K[[H]]; asserts closure."""
    return _canonical(I.field, H, list(I.rows), I.tail)


def colon(I: FractionalIdeal, J: FractionalIdeal) -> FractionalIdeal:
    """The colon module I : J = {alpha : alpha * J inside I}.

    Unknown coefficients of alpha live on [lo(I) - lo(J), tail(I) - lo(J));
    everything above is unconstrained because it lands in I's tail.  The
    membership conditions alpha*g in I, for g running over J's rows and
    the finitely many tail monomials that can reach below tail(I), give a
    homogeneous linear system.
    """
    _check_pair(I, J)
    f, H = I.field, I.semigroup
    m = J.lo
    tail = I.tail - m
    lo_min = I.lo - m
    window = range(lo_min, tail)
    spanning = list(J.rows)
    spanning += [LaurentPoly.monomial(f, j) for j in range(J.tail, I.tail - lo_min)]
    if not window:
        return _canonical(f, H, [], tail)
    columns = []
    for x in window:
        col = {}
        for gi, g in enumerate(spanning):
            res = _reduce(I, g.shift(x))
            for e, cf in res.terms:
                col[(gi, e)] = cf
        columns.append(col)
    keys = sorted({k for col in columns for k in col})
    if not keys:
        sols = [LaurentPoly.monomial(f, x) for x in window]
        return _canonical(f, H, sols, tail)
    mat = Matrix(f, tuple(
        tuple(col.get(k, f.zero) for col in columns) for k in keys))
    sols = []
    for vec in solve_homogeneous(mat):
        terms = {lo_min + i: c for i, c in enumerate(vec) if not f.is_zero(c)}
        sols.append(LaurentPoly.from_dict(f, terms))
    return _canonical(f, H, sols, tail)


def endomorphism_ring(I: FractionalIdeal) -> FractionalIdeal:
    """I : I, a ring between R and K[[t]]."""
    E = colon(I, I)
    assert E.lo >= 0 and contains_ideal(E, unit_ideal(I.field, I.semigroup))
    return E


def value_set(I: FractionalIdeal) -> SemigroupIdeal:
    """Valuations of the nonzero elements: the pivots plus [tail, oo)."""
    return SemigroupIdeal.create(I.semigroup, set(I.pivots), I.tail)


def canonical_fractional_ideal(field, H) -> tuple[FractionalIdeal, int]:
    """The monomial ideal with value set K(H), and its reduction exponent.

    Returns (W, n) where W is spanned by t^x for x in K(H) and n is the
    least exponent with W^(n+1) = W^n (n = 0 exactly in the symmetric
    case, where W = R).
    """
    from .semigroups import canonical_value_set

    K = canonical_value_set(H)
    rows = [LaurentPoly.monomial(field, x) for x in K.elements(K.stable)]
    W = from_window_vectors(field, H, rows, K.stable)
    prev = unit_ideal(field, H)
    cur = W
    n = 0
    while not equals(cur, prev):
        prev = cur
        cur = multiply(cur, W)
        n += 1
        if n > H.conductor + 2:
            raise AssertionError("powers of the canonical ideal failed to stabilize")
    return W, n


def adjoin(field, H, g: LaurentPoly) -> FractionalIdeal:
    """The ring R[g] as an R-module, for g integral over R (val >= 0).

    Computed as the stabilization of (R + Rg)^k; the chain is trapped
    between R and K[[t]], so it stabilizes within conductor many steps.
    """
    if g.is_zero():
        return unit_ideal(field, H)
    if g.valuation < 0:
        raise NotIntegral(f"{g} has negative valuation")
    J = ideal_from_generators(field, H, [LaurentPoly.monomial(field, 0), g])
    M = J
    steps = 0
    while True:
        nxt = multiply(M, J)
        steps += 1
        if steps > H.conductor + 2:
            raise AssertionError("ring adjunction failed to stabilize")
        if equals(nxt, M):
            break
        M = nxt
    assert equals(multiply(M, M), M), "adjoined module is not multiplicatively closed"
    return M


def minimal_generator_count(I: FractionalIdeal) -> int:
    """dim_K I / mI, the size of a minimal generating set of I over R."""
    mI = multiply(maximal_ideal(I.field, I.semigroup), I)
    return len(I.rows) + (mI.tail - I.tail) - len(mI.rows)
