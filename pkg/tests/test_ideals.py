import random
from fractions import Fraction

import pytest

from _oracles import colon_by_search
from traceforge.errors import FieldMismatch, NotIntegral, ZeroIdeal
from traceforge.fields import GF, QQ
from traceforge.ideals import (LaurentPoly, add, adjoin,
                               canonical_fractional_ideal, colon, conductor_ideal,
                               contains, contains_ideal, endomorphism_ring, equals,
                               ideal_from_generators, integral_closure_ideal,
                               maximal_ideal, minimal_generator_count, multiply,
                               reinterpret, shift, unit_ideal, value_set)
from traceforge.semigroups import (NumericalSemigroup, canonical_value_set,
                                   enumerate_semigroups, natural_semigroup)

S = NumericalSemigroup.from_generators
N0 = natural_semigroup()
H = S([4, 5, 11])


def P(field, text):
    return LaurentPoly.parse(field, text)


def test_laurent_poly_roundtrip():
    for text in ["t^4 + 3*t^5", "1", "t - t^2 + t^3", "2/3 + t^-2", "5*t"]:
        p = P(QQ, text)
        assert P(QQ, p.format()).terms == p.terms
    assert P(QQ, "t - t^2").format() == "t - t^2"
    assert P(GF(5), "3*t^2 + 4").coeff(2) == 3
    with pytest.raises(ValueError):
        P(QQ, "t^")


def test_laurent_poly_arithmetic():
    a, b = P(QQ, "1 + t"), P(QQ, "1 - t")
    assert a.mul(b).format() == "1 - t^2"
    assert a.add(b).format() == "2"
    assert a.sub(a).is_zero()
    assert a.shift(3).valuation == 3
    with pytest.raises(FieldMismatch):
        a.add(P(GF(2), "1"))


def test_unit_ideal_shapes():
    R = unit_ideal(QQ, H)
    assert R.pivots == (0, 4, 5) and R.tail == 8
    assert unit_ideal(QQ, N0).rows == () and unit_ideal(QQ, N0).tail == 0
    R23 = unit_ideal(QQ, S([2, 3]))
    assert R23.pivots == (0,) and R23.tail == 2


def test_conductor_ideal_shapes():
    assert conductor_ideal(QQ, H).tail == 8
    assert conductor_ideal(QQ, N0).tail == 0
    assert conductor_ideal(QQ, S([2, 3])).tail == 2
    R = unit_ideal(QQ, H)
    assert equals(conductor_ideal(QQ, H), colon(R, integral_closure_ideal(QQ, H)))


def test_ideal_from_generators_examples():
    I = ideal_from_generators(QQ, H, [P(QQ, "t^4 + t^5")], with_conductor=True)
    assert I.pivots == (4,) and I.tail == 8
    assert I.rows[0].format() == "t^4 + t^5"
    assert equals(ideal_from_generators(QQ, H, [P(QQ, "1")]), unit_ideal(QQ, H))
    m = ideal_from_generators(QQ, H, [P(QQ, "t^4"), P(QQ, "t^5")], with_conductor=True)
    assert equals(m, maximal_ideal(QQ, H))
    assert m.pivots == (4, 5) and m.tail == 8
    with pytest.raises(ZeroIdeal):
        ideal_from_generators(QQ, H, [])


def test_add_multiply_shift_examples():
    R, C, m = unit_ideal(QQ, H), conductor_ideal(QQ, H), maximal_ideal(QQ, H)
    assert equals(add(C, m), m)
    I = ideal_from_generators(QQ, H, [P(QQ, "t^4 + t^5")], with_conductor=True)
    assert equals(multiply(R, I), I)
    H378 = S([3, 7, 8])
    B = shift(maximal_ideal(QQ, H378), -3)
    assert equals(reinterpret(B, S([3, 4, 5])), unit_ideal(QQ, S([3, 4, 5])))
    assert equals(add(I, m), add(m, I))


def test_colon_golden_quartic():
    # over QQ with b = 1: R : (c + (t^4 + b t^5)) is generated by
    # 1, t - b t^2 + b^2 t^3 and the monomials t^4 .. t^7, with tail 8
    R = unit_ideal(QQ, H)
    I = ideal_from_generators(QQ, H, [P(QQ, "t^4 + t^5")], with_conductor=True)
    got = colon(R, I)
    stated = ideal_from_generators(
        QQ, H, [P(QQ, s) for s in ("1", "t - t^2 + t^3", "t^4", "t^5", "t^6", "t^7")])
    assert equals(got, stated)
    assert got.rows[1].format() == "t - t^2 + t^3"
    # and for a different parameter the displayed row follows b
    I2 = ideal_from_generators(QQ, H, [P(QQ, "t^4 + 2*t^5")], with_conductor=True)
    got2 = colon(unit_ideal(QQ, H), I2)
    assert got2.rows[1].format() == "t - 2*t^2 + 4*t^3"


def test_colon_trivial_and_closure():
    R = unit_ideal(QQ, H)
    assert equals(colon(R, R), R)
    C = conductor_ideal(QQ, H)
    E = colon(C, C)
    assert equals(E, integral_closure_ideal(QQ, H))
    vs = value_set(E)
    assert vs.stable == 0 or list(vs.elements(3)) == [0, 1, 2]


def test_equals_and_contains():
    m = maximal_ideal(QQ, H)
    assert contains(m, P(QQ, "t^4 + 7*t^9"))
    assert not contains(conductor_ideal(QQ, H), P(QQ, "t^5"))
    assert not contains(m, P(QQ, "1"))
    with pytest.raises(FieldMismatch):
        equals(m, maximal_ideal(GF(2), H))


def test_value_set():
    assert list(value_set(unit_ideal(QQ, H)).elements(9)) == [0, 4, 5, 8]
    I = ideal_from_generators(QQ, H, [P(QQ, "t^4 + t^5")], with_conductor=True)
    assert list(value_set(I).elements(10)) == [4, 8, 9]


def test_canonical_fractional_ideal():
    W, n = canonical_fractional_ideal(QQ, H)
    assert W.pivots == (0, 1, 4, 5, 6) and W.tail == 8
    assert value_set(W).generators() == (0, 1)
    assert n == 3
    # symmetric case: the ideal is R itself and the exponent is 0
    W23, n23 = canonical_fractional_ideal(QQ, S([2, 3]))
    assert equals(W23, unit_ideal(QQ, S([2, 3]))) and n23 == 0
    W457, _ = canonical_fractional_ideal(QQ, S([4, 5, 7]))
    assert value_set(W457).generators() == (0, 3)


def test_canonical_value_set_matches_ideal():
    for H_ in enumerate_semigroups(6):
        W, _ = canonical_fractional_ideal(GF(2), H_)
        K = canonical_value_set(H_)
        hi = max(W.tail, K.stable) + 3
        assert all((x in K) == (x in value_set(W)) for x in range(hi))


def test_adjoin():
    assert equals(adjoin(QQ, H, P(QQ, "t")), integral_closure_ideal(QQ, H))
    assert equals(adjoin(QQ, H, P(QQ, "1")), unit_ideal(QQ, H))
    H456 = S([4, 5, 6])
    g = P(QQ, "t^2 + 3*t^3")
    RRg = ideal_from_generators(QQ, H456, [P(QQ, "1"), g])
    assert equals(adjoin(QQ, H456, g), RRg)  # g^2 already lies in R
    with pytest.raises(NotIntegral):
        adjoin(QQ, H, P(QQ, "t^-1"))


def test_endomorphism_ring():
    R = unit_ideal(QQ, H)
    assert equals(endomorphism_ring(R), R)
    assert equals(endomorphism_ring(conductor_ideal(QQ, H)),
                  integral_closure_ideal(QQ, H))
    E = endomorphism_ring(maximal_ideal(QQ, S([3, 7, 8])))
    assert list(value_set(E).elements(7)) == [0, 3, 4, 5, 6]


def test_minimal_generator_count():
    assert minimal_generator_count(unit_ideal(QQ, H)) == 1
    assert minimal_generator_count(maximal_ideal(QQ, H)) == 3
    assert minimal_generator_count(
        ideal_from_generators(QQ, H, [P(QQ, "t^4")])) == 1


def test_dvr_edge_cases():
    R = unit_ideal(GF(2), N0)
    tR = ideal_from_generators(GF(2), N0, [P(GF(2), "t")])
    assert tR.tail == 1 and tR.rows == ()
    assert equals(multiply(tR, tR), shift(R, 2))
    assert equals(colon(R, tR), shift(R, -1))
    assert equals(add(tR, R), R)


# ---------------------------------------------------------------------------
# randomized sweeps over F_2


def _random_ideals(rng, count, max_genus=6):
    pool = [S_ for S_ in enumerate_semigroups(max_genus) if S_.conductor <= 9]
    f = GF(2)
    out = []
    while len(out) < count:
        H_ = rng.choice(pool)
        gens = []
        for _ in range(rng.randint(1, 2)):
            lo = rng.randint(0, 5)
            terms = {lo: 1}
            for e in range(lo + 1, lo + rng.randint(1, 4)):
                if rng.random() < 0.5:
                    terms[e] = 1
            gens.append(LaurentPoly.from_dict(f, terms))
        out.append(ideal_from_generators(f, H_, gens,
                                         with_conductor=rng.random() < 0.5))
    return out


def test_colon_matches_exhaustive_search():
    rng = random.Random(20240801)
    ideals = _random_ideals(rng, 120)
    pairs = 0
    while pairs < 200:
        I = rng.choice(ideals)
        J = rng.choice([X for X in ideals if X.semigroup == I.semigroup] or [I])
        if I.tail - J.lo - (I.lo - J.lo) > 14:
            continue
        got = colon(I, J)
        want = colon_by_search(I, J)
        assert equals(got, want), (I, J)
        pairs += 1


def test_colon_algebraic_properties():
    rng = random.Random(99)
    ideals = _random_ideals(rng, 60)
    R_cache = {}
    for _ in range(120):
        I = rng.choice(ideals)
        J = rng.choice([X for X in ideals if X.semigroup == I.semigroup] or [I])
        Q = colon(I, J)
        # (I : J) * J lies inside I
        assert contains_ideal(I, multiply(Q, J))
        # triple duals stabilize
        d1 = colon(I, J)
        d3 = colon(I, colon(I, colon(I, J)))
        assert equals(d1, d3)
        H_ = I.semigroup
        R = R_cache.setdefault(H_.text, unit_ideal(I.field, H_))
        assert contains_ideal(colon(I, R), I)


def test_equality_is_membership_agreement():
    rng = random.Random(7)
    ideals = _random_ideals(rng, 60)
    f = GF(2)
    for _ in range(200):
        I = rng.choice(ideals)
        J = rng.choice([X for X in ideals if X.semigroup == I.semigroup] or [I])
        hi = max(I.tail, J.tail) + 5
        lo = min(I.lo, J.lo)
        probes = [LaurentPoly.monomial(f, e) for e in range(lo, hi)]
        probes += list(I.rows) + list(J.rows)
        agree = all(contains(I, p) == contains(J, p) for p in probes)
        assert agree == equals(I, J)


def test_product_value_sets():
    rng = random.Random(13)
    ideals = _random_ideals(rng, 50)
    for _ in range(80):
        I = rng.choice(ideals)
        J = rng.choice([X for X in ideals if X.semigroup == I.semigroup] or [I])
        IJ = multiply(I, J)
        vi, vj, vij = value_set(I), value_set(J), value_set(IJ)
        hi = IJ.tail + 3
        sums = {a + b for a in vi.elements(hi) for b in vj.elements(hi)}
        assert all(s in vij for s in sums if s < hi)
        if all(r.is_monomial() for r in list(I.rows) + list(J.rows)):
            assert all(x in sums for x in vij.elements(hi))


def test_adjoin_is_multiplicatively_closed():
    rng = random.Random(5)
    f = GF(2)
    for H_ in [S([4, 5, 6]), S([3, 7, 8]), S([4, 5, 11]), S([5, 6, 7, 8, 9])]:
        for _ in range(6):
            lo = rng.randint(1, 4)
            terms = {lo: 1}
            for e in range(lo + 1, lo + 4):
                if rng.random() < 0.5:
                    terms[e] = 1
            A = adjoin(f, H_, LaurentPoly.from_dict(f, terms))
            assert equals(multiply(A, A), A)
            assert contains_ideal(A, unit_ideal(f, H_))


def test_endomorphism_rings_live_in_closure():
    rng = random.Random(3)
    for I in _random_ideals(rng, 60):
        E = endomorphism_ring(I)
        assert E.lo >= 0
        assert contains_ideal(E, unit_ideal(I.field, I.semigroup))
        assert contains_ideal(integral_closure_ideal(I.field, I.semigroup), E)


def test_ideal_json_shape():
    I = ideal_from_generators(QQ, H, [P(QQ, "t^4 + t^5")], with_conductor=True)
    payload = I.to_json()
    assert payload == {"lo": 4, "tail": 8, "basis": [[[4, "1"], [5, "1"]]]}
