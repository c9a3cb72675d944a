import itertools
import random

import pytest

from sgring.errors import InputError
from sgring.monomials import (
    Binomial,
    EQ,
    GT,
    LT,
    Order,
    compare,
    degrevlex,
    dehomogenize,
    divides,
    elimination_order,
    format_binomial,
    homogenize,
    lcm_monomial,
    negdegrevlex,
    oriented,
    quotient,
    s_pair,
    vec_sub,
)


def monomials_upto(nvars, maxdeg):
    out = []
    for m in itertools.product(range(maxdeg + 1), repeat=nvars):
        if sum(m) <= maxdeg:
            out.append(m)
    return out


def check_order_axioms(order, mons, rng):
    zero = (0,) * order.nvars
    for m1 in mons:
        assert compare(order, m1, m1) == EQ
        for m2 in mons:
            c = compare(order, m1, m2)
            assert c in (LT, EQ, GT)
            assert c == -compare(order, m2, m1)
            assert (c == EQ) == (m1 == m2)
            # compatibility with multiplication
            for shift in ((1,) + zero[1:], zero[:-1] + (2,)):
                m1s = tuple(a + b for a, b in zip(m1, shift))
                m2s = tuple(a + b for a, b in zip(m2, shift))
                assert compare(order, m1s, m2s) == c
    # transitivity on random triples
    for _ in range(3000):
        a, b, c = rng.choice(mons), rng.choice(mons), rng.choice(mons)
        if compare(order, a, b) != LT and compare(order, b, c) != LT:
            assert compare(order, a, c) != LT


@pytest.mark.parametrize("nvars", [2, 3, 4])
@pytest.mark.parametrize(
    "make",
    [
        lambda n: Order("degree", "revlex", tuple(range(n))),
        lambda n: Order("degree", "lex", tuple(range(n))),
        lambda n: Order("none", "lex", tuple(range(n))),
        lambda n: Order("none", "lex", tuple(reversed(range(n)))),
        lambda n: Order("degree", "revlex", tuple(reversed(range(n)))),
        lambda n: Order("lazard", "revlex", tuple(range(n))),
        lambda n: Order("degree", "revlex", tuple(range(n)), blocks=(1, n - 1)),
    ],
)
def test_global_order_axioms(nvars, make):
    order = make(nvars)
    mons = monomials_upto(nvars, 4 if nvars < 4 else 3)
    check_order_axioms(order, mons, random.Random(7))
    # 1 is minimal for global gradings
    zero = (0,) * nvars
    if order.grading in ("degree", "lazard") or order.tiebreak == "lex":
        for m in mons:
            if m != zero:
                assert compare(order, m, zero) == GT


def test_local_order_prefers_lower_degree():
    # negdegrevlex with x2 > x1: degree 3 beats degree 2 by being SMALLER.
    order = negdegrevlex(2, priority=(1, 0))
    assert compare(order, (3, 0), (0, 2)) == LT
    # 1 is maximal for a local order.
    for m in monomials_upto(2, 4):
        if m != (0, 0):
            assert compare(order, (0, 0), m) == GT


def test_revlex_tiebreak_definition():
    # Rule: last nonzero entry of the difference, read in priority order
    # highest to lowest, negative => first argument greater.
    order = degrevlex(3)
    mons = monomials_upto(3, 4)
    for m1 in mons:
        for m2 in mons:
            if sum(m1) != sum(m2) or m1 == m2:
                continue
            diff = [m1[i] - m2[i] for i in order.priority]
            last = next(d for d in reversed(diff) if d)
            expected = GT if last < 0 else LT
            assert compare(order, m1, m2) == expected


def test_degrevlex_worked_example():
    # x2^2 vs x1*x3 under degrevlex x1 > x2 > x3
    assert compare(degrevlex(3), (0, 2, 0), (1, 0, 1)) == GT


def test_elimination_block_order():
    order = elimination_order(1, 3)
    # anything containing the eliminated variable beats anything without it
    assert compare(order, (1, 0, 0), (0, 5, 5)) == GT
    assert compare(order, (0, 5, 5), (2, 0, 0)) == LT
    # ties inside the first block fall through to the second block
    assert compare(order, (1, 2, 0), (1, 0, 1)) == GT


def test_lcm_divides_quotient():
    assert lcm_monomial((2, 1, 0), (1, 0, 1)) == (2, 1, 1)
    assert divides((1, 0, 0), (2, 1, 0))
    assert not divides((1, 2, 0), (2, 1, 0))
    assert quotient((2, 1, 0), (1, 0, 0)) == (1, 1, 0)
    with pytest.raises(InputError):
        quotient((1, 0, 0), (0, 1, 0))
    with pytest.raises(InputError):
        vec_sub((1, 0), (0, 2))


def test_s_pair_worked_example():
    order = degrevlex(3)
    f = Binomial((0, 2, 0), (1, 0, 1))  # x2^2 - x1*x3
    g = Binomial((4, 0, 0), (0, 1, 1))  # x1^4 - x2*x3
    s = s_pair(f, g, order)
    assert s == Binomial((5, 0, 1), (0, 3, 1))  # x1^5*x3 - x2^3*x3


def test_s_pair_self_and_pure_difference():
    order = degrevlex(3)
    f = Binomial((0, 2, 0), (1, 0, 1))
    assert s_pair(f, f, order) is None
    rng = random.Random(11)
    mons = monomials_upto(3, 5)
    for _ in range(300):
        a, b, c, d = (rng.choice(mons) for _ in range(4))
        f = oriented(a, b, order)
        g = oriented(c, d, order)
        if f is None or g is None:
            continue
        s = s_pair(f, g, order)
        if s is not None:
            assert s.lead != s.tail
            assert compare(order, s.lead, s.tail) == GT


def test_homogenize_examples():
    # x1^5 - x2^3 over (x1, x2, x0) -> x1^5 - x0^2*x2^3
    b = Binomial((5, 0, 0), (0, 3, 0))
    h = homogenize(b, x0=2)
    assert h == Binomial((5, 0, 0), (0, 3, 2))
    assert dehomogenize(h, x0=2) == b
    # already homogeneous: unchanged
    hom = Binomial((0, 2, 0), (1, 1, 0))
    assert homogenize(hom, x0=2) == hom
    # x0 already used
    with pytest.raises(InputError):
        homogenize(h, x0=2)
    # x^b - y^a with sum(b) > sum(a) pads the tail: here b=(2,3), a=(2,1)
    rho = Binomial((2, 3, 0, 0, 0), (0, 0, 2, 1, 0))
    assert homogenize(rho, x0=4) == Binomial((2, 3, 0, 0, 0), (0, 0, 2, 1, 2))


def test_homogenize_dehomogenize_roundtrip():
    rng = random.Random(3)
    mons = monomials_upto(3, 6)
    for _ in range(300):
        lead, tail = rng.choice(mons), rng.choice(mons)
        if lead == tail:
            continue
        b = Binomial(lead + (0,), tail + (0,))
        h = homogenize(b, x0=3)
        assert sum(h.lead) == sum(h.tail)
        assert dehomogenize(h, x0=3) == b
        # homogenize after dehomogenize is the identity on homogeneous inputs
        assert homogenize(dehomogenize(h, x0=3), x0=3) == h


def test_format():
    names = ("x1", "x2", "x3")
    assert format_binomial(Binomial((0, 2, 0), (1, 0, 1)), names) == "x2^2 - x1*x3"
    assert format_binomial(None, names) == "0"
    assert format_binomial(Binomial((0, 0, 1), (0, 0, 0)), names) == "x3 - 1"
