import random

import pytest

from qfock.laurent import LaurentPoly, bar_poly, eval_one, truncate_positive


def P(**kw):
    # P(q2=1, q0=3) -> q^2 + 3; Pm for negative exponents via explicit dict
    return LaurentPoly({int(k[1:]): v for k, v in kw.items()})


def rand_poly(rng, spread=6, size=4):
    return LaurentPoly({rng.randint(-spread, spread): rng.randint(-9, 9) for _ in range(size)})


def test_bar_examples():
    assert bar_poly(LaurentPoly({2: 1, 0: 3})) == LaurentPoly({-2: 1, 0: 3})
    assert bar_poly(LaurentPoly()) == LaurentPoly()
    p = LaurentPoly({1: 1, -1: -1})
    assert bar_poly(p) == -p


def test_eval_one_examples():
    assert eval_one(LaurentPoly({1: 1, -1: 1})) == 2
    assert eval_one(LaurentPoly()) == 0
    assert eval_one(LaurentPoly({3: 1, 1: -2})) == -1


def test_truncate_positive_examples():
    assert truncate_positive(LaurentPoly({1: 1, -1: -1})) == LaurentPoly({1: 1})
    p = LaurentPoly({3: 2, -3: -2, 1: 1, -1: -1})
    assert truncate_positive(p) == LaurentPoly({3: 2, 1: 1})
    assert truncate_positive(LaurentPoly()) == LaurentPoly()


def test_truncate_positive_rejects_non_antisymmetric():
    with pytest.raises(ValueError):
        truncate_positive(LaurentPoly({1: 1}))
    with pytest.raises(ValueError):
        truncate_positive(LaurentPoly({0: 2}))


def test_bar_is_ring_involution():
    rng = random.Random(1)
    for _ in range(200):
        p, r = rand_poly(rng), rand_poly(rng)
        assert bar_poly(bar_poly(p)) == p
        assert bar_poly(p * r) == bar_poly(p) * bar_poly(r)
        assert bar_poly(p + r) == bar_poly(p) + bar_poly(r)


def test_eval_one_is_ring_homomorphism():
    rng = random.Random(2)
    for _ in range(200):
        p, r = rand_poly(rng), rand_poly(rng)
        assert eval_one(p * r) == eval_one(p) * eval_one(r)
        assert eval_one(p + r) == eval_one(p) + eval_one(r)


def test_truncate_positive_splits_antisymmetric_part():
    rng = random.Random(3)
    for _ in range(200):
        r = rand_poly(rng)
        p = r - bar_poly(r)  # antisymmetric by construction
        beta = truncate_positive(p)
        assert beta - bar_poly(beta) == p
        assert all(e > 0 for e in beta.terms)


def test_no_zero_coefficients_stored():
    p = LaurentPoly({2: 1, 3: 0})
    assert p.terms == {2: 1}
    q = LaurentPoly({1: 1}) - LaurentPoly({1: 1})
    assert not q and q.terms == {}


def test_arithmetic_basics():
    q = LaurentPoly.q_power(1)
    qi = LaurentPoly.q_power(-1)
    assert q * qi == LaurentPoly.one()
    assert (q + qi) * (q - qi) == LaurentPoly({2: 1, -2: -1})
    assert 3 * q == LaurentPoly({1: 3})
    assert -q == LaurentPoly({1: -1})


def test_rendering():
    p = LaurentPoly({-2: 1, 0: 3, 1: 2})
    assert str(p) == "q^-2 + 3 + 2*q"
    assert p.to_pairs() == [[-2, 1], [0, 3], [1, 2]]
    assert str(LaurentPoly()) == "0"
    assert str(LaurentPoly({1: -1, 3: 1})) == "-q + q^3"
