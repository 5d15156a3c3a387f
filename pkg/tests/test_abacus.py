import random

import pytest

from qfock.abacus import (
    BeadTriple,
    WedgeMonomial,
    degree,
    enumerate_degree_component,
    factorize,
    from_pair,
    monomial_from_text,
    render_abacus,
    to_pair,
    wedge_monomial,
)
from qfock.partitions import partitions

from paper_data import WORKED_LABEL, WORKED_MONOMIAL


def test_factorize_examples():
    assert factorize(15, 4, 3) == BeadTriple(3, 3, -1)
    assert factorize(12, 4, 3) == BeadTriple(4, 1, 0)
    assert factorize(1, 4, 3) == BeadTriple(1, 3, 0)


def test_factorize_reconstruction_grid():
    for e, l in [(2, 1), (2, 2), (4, 3), (3, 2)]:
        for k in range(-10**4, 10**4 + 1):
            a, b, m = factorize(k, e, l)
            assert 1 <= a <= e and 1 <= b <= l
            assert k == a + e * (l - b) - e * l * m


def test_worked_example_both_directions():
    prefix, s = WORKED_MONOMIAL
    mp, charge = WORKED_LABEL
    u = wedge_monomial(prefix, s)
    assert to_pair(u, 4, 3) == (mp, charge)
    assert from_pair(mp, charge, 4, 3) == u
    assert degree(u) == 44  # 12+10+7+7+4+3+1


def test_vacuum_cases():
    u = from_pair(((), ()), (0, 0), 2, 2)
    assert u == WedgeMonomial((), 0)
    assert degree(u) == 0
    assert to_pair(WedgeMonomial((), 0), 2, 2) == ((((), ())), (0, 0))
    # one box on component 1 at charge (0,0), e=2, l=2 sits at global index 3
    assert from_pair(((1,), ()), (0, 0), 2, 2) == WedgeMonomial((3,), 0)


def test_round_trip_random():
    rng = random.Random(12)
    for _ in range(500):
        e = rng.randint(2, 5)
        l = rng.randint(1, 4)
        mp = tuple(tuple(sorted((rng.randint(1, 6) for _ in range(rng.randint(0, 4))), reverse=True))
                   for _ in range(l))
        charge = tuple(rng.randint(-6, 8) for _ in range(l))
        u = from_pair(mp, charge, e, l)
        assert to_pair(u, e, l) == (mp, charge)
        # and monomial -> pair -> monomial
        mp2, ch2 = to_pair(u, e, l)
        assert from_pair(mp2, ch2, e, l) == u


def test_degree_component_sizes():
    pcount = {n: len(partitions(n)) for n in range(31)}
    for s in (-2, 0, 3):
        assert enumerate_degree_component(s, 0) == [WedgeMonomial((), s)]
        assert len(enumerate_degree_component(s, 1)) == 1
        assert len(enumerate_degree_component(s, 5)) == 7
        for n in range(31):
            comp = enumerate_degree_component(s, n)
            assert len(comp) == pcount[n]
            assert len(set(comp)) == len(comp)
            for u in comp:
                assert degree(u) == n and u.s == s


def test_canonical_form():
    assert wedge_monomial((3, 0, -1), 1) == WedgeMonomial((3,), 1)  # 0,-1 are tail
    assert wedge_monomial((), 5) == WedgeMonomial((), 5)
    # a prefix made entirely of tail values trims to the vacuum
    assert wedge_monomial((1, 0, -1, -2, -3), 1) == WedgeMonomial((), 1)
    with pytest.raises(ValueError):
        wedge_monomial((0, 3), 1)       # not decreasing
    with pytest.raises(ValueError):
        wedge_monomial((2, -2), 2)      # -2 collides with the frozen tail


def test_monomial_text():
    u = wedge_monomial((15, 12), 3)
    assert u.to_text() == "s=3; k=15,12"
    assert monomial_from_text("s=3; k=15,12") == u
    assert monomial_from_text("s=0; k=") == WedgeMonomial((), 0)


def test_degree_unaffected_by_charge_split():
    # the degree of a monomial depends only on the prefix and s, not on how
    # to_pair distributes it over runners
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(0, 12)
        s = rng.randint(-3, 3)
        for u in enumerate_degree_component(s, n)[:5]:
            mp, ch = to_pair(u, 3, 2)
            assert from_pair(mp, ch, 3, 2) == u
            assert degree(u) == n


def test_render_abacus_smoke():
    u = wedge_monomial((15, 12, 8, 7, 3, 1, -2), 3)
    art = render_abacus(u, 4, 3)
    assert "runner 1" in art and "runner 3" in art
    assert "*" in art and "-" in art
