"""Numerical semigroup combinatorics.

A numerical semigroup H is an additive submonoid of the nonnegative
integers whose complement (the set of gaps) is finite.  This module
covers membership, the classical invariants (Frobenius number,
conductor, multiplicity, embedding dimension, genus, type), Apery sets
and Kunz coordinates, the canonical value set K(H) = {x : F - x not in
H}, blowups and the Lipman chain, Arf tests and closure, and an
exhaustive enumeration of all semigroups up to a given genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd

from .errors import BoundTooLarge, EmptyGenerators, NotAMember, NotCofinite

__all__ = [
    "NumericalSemigroup",
    "SemigroupIdeal",
    "KunzVector",
    "natural_semigroup",
    "parse_generators",
    "canonical_value_set",
    "pseudo_frobenius",
    "ValueSetCondition",
    "value_set_condition",
    "cm_type_list_check",
    "FINITE_TYPE_TAGS",
    "kunz_cone_classify",
    "EXTERIOR",
    "BOUNDARY",
    "INTERIOR",
    "blowup",
    "lipman_sequence",
    "is_arf",
    "arf_closure",
    "enumerate_semigroups",
    "GENUS_ENUMERATION_LIMIT",
]

GENUS_ENUMERATION_LIMIT = 20


class NumericalSemigroup:
    """A cofinite submonoid of N0, stored as a bit table plus invariants.

    The table covers [0, 2*conductor + max(minimal_generators)] so that
    sum-closure and Arf computations never index past it.  Instances are
    immutable; build them with :meth:`from_generators`.
    """

    __slots__ = ("minimal_generators", "frobenius", "conductor", "multiplicity",
                 "genus", "_table")

    def __init__(self, member_fn, conductor: int):
        # Internal.  member_fn must be a valid membership oracle on all of
        # N0 with [conductor, oo) contained in H and conductor minimal.
        c = conductor
        e = 1
        while not (e >= c or member_fn(e)):
            e += 1
        hi = max(e, c + e - 1)  # no minimal generator exceeds F + e
        bound = 2 * c + hi
        table = bytearray(bound + 1)
        for n in range(bound + 1):
            table[n] = 1 if (n >= c or member_fn(n)) else 0
        gens = []
        for m in range(1, hi + 1):
            if not table[m]:
                continue
            if any(table[a] and table[m - a] for a in range(e, m // 2 + 1)):
                continue
            gens.append(m)
        if reduce(gcd, gens) != 1:
            raise NotCofinite(f"gcd of generators {gens} exceeds 1")
        self.minimal_generators = tuple(gens)
        self.frobenius = c - 1
        self.conductor = c
        self.multiplicity = e
        self.genus = sum(1 for n in range(c) if not table[n])
        self._table = bytes(table[: 2 * c + gens[-1] + 1])
        for g in gens:
            for n in range(len(self._table) - g):
                if self._table[n] and not self._table[n + g]:
                    raise AssertionError("membership table not closed under addition")

    @classmethod
    def from_generators(cls, gens) -> "NumericalSemigroup":
        """The semigroup generated by ``gens``; gcd must be 1."""
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        gens = sorted({int(g) for g in gens})
        if gens[0] <= 0:
            raise ValueError("generators must be positive")
        if reduce(gcd, gens) != 1:
            raise NotCofinite(f"gcd({','.join(map(str, gens))}) > 1")
        m = gens[0]
        bound = 2 * gens[-1] + 2 * m + 2
        while True:
            table = bytearray(bound + 1)
            table[0] = 1
            for n in range(1, bound + 1):
                table[n] = 1 if any(g <= n and table[n - g] for g in gens) else 0
            run = next((r for r in range(bound - m + 2)
                        if all(table[r + i] for i in range(m))), None)
            if run is not None:
                break
            bound *= 2
        frob = next((n for n in range(run - 1, -1, -1) if not table[n]), -1)
        member = lambda n: True if n >= run else bool(table[n])
        return cls(member, frob + 1)

    @classmethod
    def _from_member_set(cls, members, bound: int) -> "NumericalSemigroup":
        # members: the member set restricted to [0, bound); [bound, oo) is in H.
        members = frozenset(members)
        frob = next((n for n in range(bound - 1, -1, -1) if n not in members), -1)
        member = lambda n: True if n >= bound else n in members
        return cls(member, frob + 1)

    # -- membership ----------------------------------------------------

    def __contains__(self, n) -> bool:
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self._table[n])

    def members(self, stop: int):
        """Members of H in [0, stop), in increasing order."""
        c = self.conductor
        for n in range(min(stop, c)):
            if self._table[n]:
                yield n
        for n in range(c, stop):
            yield n

    def gaps(self) -> tuple[int, ...]:
        return tuple(n for n in range(self.conductor) if not self._table[n])

    # -- invariants ----------------------------------------------------

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @property
    def has_minimal_multiplicity(self) -> bool:
        return self.multiplicity == self.embedding_dimension

    @property
    def is_symmetric(self) -> bool:
        """Gap-reflection test: x in H iff F - x not in H (Gorenstein)."""
        F = self.frobenius
        return all((x in self) != (F - x in self) for x in range(self.conductor))

    def apery_set(self, e: int) -> tuple[int, ...]:
        """The e smallest members, one per residue class mod e."""
        if e <= 0 or e not in self:
            raise NotAMember(f"{e} is not a positive member of {self}")
        out = []
        for r in range(e):
            n = r
            while n not in self:
                n += e
            out.append(n)
        return tuple(sorted(out))

    def kunz_coordinates(self, e: int) -> "KunzVector":
        """Coordinates mu_i with w_i = i + mu_i * e over the Apery set of e."""
        if e < 2:
            raise NotAMember("Kunz coordinates need e >= 2")
        if e not in self:
            raise NotAMember(f"{e} is not a member of {self}")
        coords = []
        for i in range(1, e):
            n = i
            while n not in self:
                n += e
            coords.append((n - i) // e)
        return KunzVector(e, tuple(coords))

    def pseudo_frobenius(self) -> tuple[int, ...]:
        """Integers x outside H with x + h in H for every nonzero member h."""
        gens = self.minimal_generators
        out = []
        for x in range(-1, self.conductor):
            if x in self:
                continue
            if all(x + g in self for g in gens):
                out.append(x)
        return tuple(out)

    @property
    def cm_type(self) -> int:
        return len(self.pseudo_frobenius())

    # -- plumbing --------------------------------------------------------

    @property
    def text(self) -> str:
        return ",".join(map(str, self.minimal_generators))

    def __repr__(self):
        return f"<{self.text}>"

    def __eq__(self, other):
        return (isinstance(other, NumericalSemigroup)
                and other.minimal_generators == self.minimal_generators)

    def __hash__(self):
        return hash(self.minimal_generators)


@lru_cache(maxsize=1)
def natural_semigroup() -> NumericalSemigroup:
    """N0 itself: Frobenius -1, conductor 0."""
    return NumericalSemigroup.from_generators([1])


def parse_generators(text: str) -> tuple[int, ...]:
    """Parse the text form of a semigroup: comma-separated generators."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise EmptyGenerators(f"no generators in {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad generator list {text!r}") from exc


# ---------------------------------------------------------------------------
# semigroup ideals


@dataclass(frozen=True)
class SemigroupIdeal:
    """A set E of integers with E + H contained in E and a cofinite tail.

    ``window`` holds the elements in [start, stable); every integer at or
    above ``stable`` belongs to E, and ``stable`` is minimal for that.
    """

    base: NumericalSemigroup
    start: int
    stable: int
    window: frozenset

    @classmethod
    def create(cls, base, elements, stable: int) -> "SemigroupIdeal":
        elements = {int(x) for x in elements if x < stable}
        while stable - 1 in elements:
            elements.discard(stable - 1)
            stable -= 1
        start = min(elements) if elements else stable
        ideal = cls(base, start, stable, frozenset(elements))
        for x in sorted(elements):
            for g in base.minimal_generators:
                if x + g not in ideal:
                    raise AssertionError(f"{elements} is not an ideal over {base}")
        return ideal

    def __contains__(self, x) -> bool:
        if x >= self.stable:
            return True
        return x in self.window

    def elements(self, stop: int):
        """Elements of E in [start, stop), increasing."""
        for x in range(self.start, min(stop, self.stable)):
            if x in self.window:
                yield x
        for x in range(self.stable, stop):
            yield x

    def generators(self) -> tuple[int, ...]:
        """Minimal generators of E as an ideal over the base semigroup."""
        e = self.base.multiplicity
        out = []
        for x in self.elements(self.stable + e):
            if not any((x - h) in self for h in self.base.members(x - self.start + 1) if h > 0):
                out.append(x)
        return tuple(out)

    def __repr__(self):
        finite = sorted(self.window)
        return f"SemigroupIdeal({finite} + [{self.stable},oo) over {self.base})"


def canonical_value_set(H: NumericalSemigroup) -> SemigroupIdeal:
    """K(H) = {x : F(H) - x not in H}, the value set of a normalized canonical ideal.

    K(H) contains 0 and everything from the conductor up; K(H) = H exactly
    when H is symmetric.
    """
    F = H.frobenius
    elems = {x for x in range(H.conductor) if (F - x) not in H}
    return SemigroupIdeal.create(H, elems, H.conductor)


def pseudo_frobenius(H: NumericalSemigroup) -> tuple[int, ...]:
    return H.pseudo_frobenius()


# ---------------------------------------------------------------------------
# value-set condition and the finite-type list


@dataclass(frozen=True)
class ValueSetCondition:
    """Verdict of the two-part value-set test on K(H).

    kind "I": 1 lies in K(H).  kind "II": 1 does not, but every n >= 2 has
    n or n+1 in K(H).  kind "fails": neither, with the least bad n as
    witness.
    """

    kind: str
    witness: int | None = None

    def holds(self) -> bool:
        return self.kind != "fails"


def value_set_condition(H: NumericalSemigroup) -> ValueSetCondition:
    K = canonical_value_set(H)
    if 1 in K:
        return ValueSetCondition("I")
    for n in range(2, H.frobenius + 2):
        if n not in K and (n + 1) not in K:
            return ValueSetCondition("fails", n)
    return ValueSetCondition("II")


FINITE_TYPE_TAGS = ("<1>", "<2,2s-1>", "<3,4>", "<3,5>", "<3,5,7>", "<3,4,5>")


def cm_type_list_check(H: NumericalSemigroup) -> str | None:
    """Match the semigroup generated by H and K(H) against the finite list.

    Returns the tag of the matching entry, or None.  The entries are <1>,
    the family <2,2s-1>, <3,4>, <3,5>, <3,5,7> and <3,4,5>.
    """
    c = H.conductor
    if c == 0:
        return "<1>"
    K = canonical_value_set(H)
    ring = NumericalSemigroup.from_generators(
        [x for x in K.elements(2 * c) if x > 0])
    gens = ring.minimal_generators
    if gens == (1,):
        return "<1>"
    if len(gens) == 2 and gens[0] == 2 and gens[1] % 2 == 1:
        return "<2,2s-1>"
    if gens in ((3, 4), (3, 5), (3, 5, 7), (3, 4, 5)):
        return f"<{','.join(map(str, gens))}>"
    return None


# ---------------------------------------------------------------------------
# Kunz cone


@dataclass(frozen=True)
class KunzVector:
    """Apery coordinates (mu_1, ..., mu_{e-1}) of a semigroup containing e.

    mu_i >= 1 for every i exactly when e is the multiplicity; blowups of
    minimal-multiplicity semigroups legitimately produce zero coordinates.
    """

    e: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.e < 2 or len(self.coords) != self.e - 1:
            raise ValueError("need e >= 2 and e - 1 coordinates")
        if any(x < 0 for x in self.coords):
            raise ValueError("coordinates must be nonnegative")


EXTERIOR = "exterior"
BOUNDARY = "boundary"
INTERIOR = "interior"


def kunz_cone_classify(v: KunzVector) -> str:
    """Locate a coordinate vector relative to the Kunz cone for its e.

    The cone is cut out by mu_i + mu_j >= mu_{i+j} for i + j < e and
    mu_i + mu_j >= mu_{i+j-e} - 1 for i + j > e (pairs with i + j = e are
    skipped).  Interior means every inequality is strict and every
    coordinate is at least 1, which holds exactly for the semigroups of
    minimal multiplicity e.
    """
    e = v.e
    mu = (None,) + v.coords  # 1-based
    tight = False
    for i in range(1, e):
        for j in range(i, e):
            s = i + j
            if s == e:
                continue
            rhs = mu[s] if s < e else mu[s - e] - 1
            lhs = mu[i] + mu[j]
            if lhs < rhs:
                return EXTERIOR
            if lhs == rhs:
                tight = True
    if not tight and all(x >= 1 for x in v.coords):
        return INTERIOR
    return BOUNDARY


# ---------------------------------------------------------------------------
# blowup, Lipman chain, Arf


def blowup(H: NumericalSemigroup) -> NumericalSemigroup:
    """The Lipman semigroup: generated by e together with g - e for the other generators."""
    e = H.multiplicity
    gens = {e} | {g - e for g in H.minimal_generators if g != e}
    L = NumericalSemigroup.from_generators(gens)
    if H.has_minimal_multiplicity:
        # in the minimal multiplicity case the blowup is {h - e} itself
        direct = {0} | {h - e for h in H.members(L.conductor + e + 1) if h >= e}
        got = set(L.members(L.conductor + 1))
        if not got <= direct or not all(x in L for x in direct if x <= L.conductor):
            raise AssertionError(f"blowup of {H} disagrees with the shifted member set")
    return L


def lipman_sequence(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    """The strictly increasing chain H = H0 < H1 < ... ending at N0."""
    chain = [H]
    while chain[-1].genus > 0:
        nxt = blowup(chain[-1])
        if nxt.genus >= chain[-1].genus:
            raise AssertionError("blowup failed to decrease the genus")
        chain.append(nxt)
    return chain


def is_arf(H: NumericalSemigroup) -> bool:
    """True when every semigroup in the Lipman chain has minimal multiplicity."""
    return all(S.has_minimal_multiplicity for S in lipman_sequence(H))


def arf_closure(H: NumericalSemigroup) -> NumericalSemigroup:
    """The smallest Arf semigroup containing H.

    Fixed point of the rule x + y - z for members x >= y >= z.  Only
    triples below the conductor can produce anything new (the result is
    at least x), so the closure runs on the finite window [0, c).
    """
    c = H.conductor
    members = set(H.members(c))
    changed = True
    while changed:
        changed = False
        snapshot = sorted(members)
        for xi, x in enumerate(snapshot):
            for yi in range(xi + 1):
                y = snapshot[yi]
                for zi in range(yi + 1):
                    r = x + y - snapshot[zi]
                    if r < c and r not in members:
                        members.add(r)
                        changed = True
    closed = NumericalSemigroup._from_member_set(members, c)
    if not is_arf(closed):
        raise AssertionError("closure is not Arf")
    return closed


# ---------------------------------------------------------------------------
# enumeration by genus


def _children(H: NumericalSemigroup) -> list[NumericalSemigroup]:
    # Removing a minimal generator above the Frobenius number gives every
    # genus+1 semigroup exactly once (its parent is itself plus its Frobenius).
    out = []
    for g in H.minimal_generators:
        if g > H.frobenius:
            members = {n for n in H.members(g + 1) if n != g}
            out.append(NumericalSemigroup._from_member_set(members, g + 1))
    return out


def enumerate_semigroups(max_genus: int):
    """Every numerical semigroup with at most ``max_genus`` gaps, exactly once.

    The walk descends the genus tree; each level is emitted in
    lexicographic order of gap sets, so the stream is deterministic.
    """
    if max_genus > GENUS_ENUMERATION_LIMIT:
        raise BoundTooLarge(f"max_genus {max_genus} exceeds {GENUS_ENUMERATION_LIMIT}")
    if max_genus < 0:
        raise ValueError("max_genus must be nonnegative")

    def walk():
        level = [natural_semigroup()]
        for g in range(max_genus + 1):
            level.sort(key=lambda S: S.gaps())
            yield from level
            if g == max_genus:
                return
            level = [child for S in level for child in _children(S)]

    return walk()
