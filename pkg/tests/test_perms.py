"""Permutation plumbing and the stabilizer-chain group engine.

Oracle: brute-force closure by breadth-first multiplication, plus known
orders of standard groups.
"""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from quandles.perms import (
    PermGroup,
    closure_order,
    compose,
    cycle_type,
    format_perm,
    identity,
    inverse,
    is_identity,
    parse_perm,
    perm_order,
)


def brute_closure(degree, gens):
    elems = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in elems:
                    elems.add(q)
                    nxt.append(q)
        frontier = nxt
    return elems


def _random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


class TestPlumbing:
    def test_compose_order_of_application(self):
        # compose(p, q) applies p first, then q
        p = (1, 0, 2)
        q = (0, 2, 1)
        r = compose(p, q)
        for i in range(3):
            assert r[i] == q[p[i]]

    def test_inverse(self):
        rng = random.Random(3)
        for _ in range(20):
            p = _random_perm(rng, rng.randint(1, 8))
            assert is_identity(compose(p, inverse(p)))
            assert is_identity(compose(inverse(p), p))

    def test_perm_order_lcm_of_cycles(self):
        p = (1, 0, 3, 4, 2)  # a 2-cycle and a 3-cycle
        assert cycle_type(p) == (2, 3)
        assert perm_order(p) == 6

    def test_format_parse_round_trip(self):
        rng = random.Random(9)
        for _ in range(20):
            p = _random_perm(rng, rng.randint(1, 7))
            assert parse_perm(format_perm(p)) == p


class TestPermGroup:
    def test_symmetric_order(self):
        gens = [(1, 0, 2, 3), (1, 2, 3, 0)]
        g = PermGroup(4, gens)
        assert g.order == 24
        assert closure_order(4, gens) == 24

    def test_matches_brute_closure_random(self):
        rng = random.Random(17)
        for _ in range(15):
            n = rng.randint(2, 6)
            gens = [_random_perm(rng, n) for _ in range(rng.randint(1, 3))]
            assert PermGroup(n, gens).order == len(brute_closure(n, gens))

    def test_contains(self):
        g = PermGroup(4, [(1, 2, 3, 0)])  # cyclic of order 4
        assert g.contains((2, 3, 0, 1))
        assert not g.contains((1, 0, 2, 3))

    def test_orbit_stabilizer_counting(self):
        rng = random.Random(29)
        for _ in range(10):
            n = rng.randint(2, 6)
            gens = [_random_perm(rng, n) for _ in range(2)]
            g = PermGroup(n, gens)
            for point in range(n):
                stab = g.stabilizer(point)
                assert g.order == len(g.orbit(point)) * stab.order

    def test_derived_subgroup_of_s4(self):
        s4 = PermGroup(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
        a4 = s4.derived_subgroup()
        assert a4.order == 12
        v4 = a4.derived_subgroup()
        assert v4.order == 4
        assert v4.derived_subgroup().order == 1
        assert not s4.is_perfect()

    def test_elements_enumeration(self):
        g = PermGroup(3, [(1, 2, 0)])
        elems = set(g.elements())
        assert elems == brute_closure(3, [(1, 2, 0)])

    def test_orbits_partition(self):
        g = PermGroup(5, [(1, 0, 2, 3, 4), (0, 1, 2, 4, 3)])
        assert g.orbits() == [(0, 1), (2,), (3, 4)]


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**30))
def test_compose_associative(n, seed):
    rng = random.Random(seed)
    p, q, r = (_random_perm(rng, n) for _ in range(3))
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.integers(0, 2**30))
def test_group_order_divides_factorial(n, seed):
    import math

    rng = random.Random(seed)
    gens = [_random_perm(rng, n) for _ in range(2)]
    assert math.factorial(n) % PermGroup(n, gens).order == 0
