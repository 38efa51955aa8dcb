import random
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from _models import finite_groups
from obstrukt.fga import (
    FgaElement,
    FgaGroup,
    FgaHom,
    det,
    in_multiple,
    matmul,
    quotient_reps,
    smith,
    solve_hom,
    span,
)

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_smith_factorization(A):
    S = smith(A)
    assert matmul(matmul(S.U, S.D), S.W) == A
    assert matmul(matmul(S.P, A), S.Q) == S.D
    for M in (S.U, S.W, S.P, S.Q):
        assert abs(det(M)) == 1
    d = S.diagonal
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert d[: len(nz)] == nz  # nonzero entries first
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    for i, row in enumerate(S.D):
        for j, v in enumerate(row):
            if i != j:
                assert v == 0


def test_smith_known():
    S = smith([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert S.diagonal == [2, 6, 12]


def test_group_validation():
    with pytest.raises(ValueError):
        FgaGroup(0, (4, 2))
    with pytest.raises(ValueError):
        FgaGroup(0, (1,))
    G = FgaGroup(1, (2, 4))
    assert G.orders == (0, 2, 4)
    assert G((3, 5, -1)).coords == (3, 1, 3)


def test_element_arithmetic():
    G = FgaGroup(1, (6,))
    x, y = G(2, 5), G(-1, 4)
    assert (x + y).coords == (1, 3)
    assert (x - y).coords == (3, 1)
    assert (3 * y).coords == (-3, 0)
    assert (-x).coords == (-2, 1)
    with pytest.raises(ValueError):
        x + FgaGroup(1)(1)


def test_hom_well_defined():
    Z, Z4 = FgaGroup(1), FgaGroup(0, (4,))
    with pytest.raises(ValueError):
        FgaHom(Z4, Z, ((1,),))  # order-4 generator cannot go to a free element
    f = FgaHom(Z4, FgaGroup(0, (2,)), ((1,),))
    assert f(Z4(3)).coords == (1,)
    g = FgaHom(Z, Z4, ((1,),))
    assert f.compose(g)(Z(5)).coords == (1,)


def test_group_enumeration_count():
    # number of abelian groups of order 16 is p(4) = 5
    assert sum(1 for G in finite_groups(16) if G.order == 16) == 5


def _brute_multiples(G, n):
    return {(n * y).coords for y in G.elements()}


def test_in_multiple_bruteforce_small():
    for G in finite_groups(48):
        for n in (0, 1, 2, 3, 4, 6, -2):
            mult = _brute_multiples(G, n)
            for x in G.elements():
                ok, y = in_multiple(x, n)
                assert ok == (x.coords in mult)
                if ok:
                    assert n * y == x


def test_in_multiple_free_part():
    G = FgaGroup(2, (2,))
    for x in G.box(4):
        for n in (0, 2, 3):
            ok, y = in_multiple(x, n)
            brute = any((n * z) == x for z in G.box(4))
            assert ok == brute


def test_quotient_reps_example():
    G = FgaGroup(1, (4,))
    reps = quotient_reps(G, 2)
    assert len(reps) == 4
    with pytest.raises(ValueError):
        quotient_reps(G, 0)


def test_quotient_reps_free_bruteforce():
    for G in (FgaGroup(1), FgaGroup(2), FgaGroup(1, (6,)), FgaGroup(2, (2, 4))):
        for n in (1, 2, 3, 4):
            reps = quotient_reps(G, n)
            assert len(reps) == n**G.rank * prod(gcd(n, d) for d in G.torsion)
            # pairwise distinct modulo nG, and every box element hits exactly one
            for r in reps:
                for s in reps:
                    if r != s:
                        assert not in_multiple(r - s, n)[0]
            for x in G.box(2):
                assert sum(in_multiple(x - r, n)[0] for r in reps) == 1


def test_solve_hom_scalar_bruteforce():
    for G in finite_groups(36):
        for n in (0, 1, 2, 3, 4, 6):
            f = FgaHom.scalar(G, n)
            for b in G.elements():
                ok, x, kern = solve_hom(f, b)
                sols = {y.coords for y in G.elements() if n * y == b}
                assert ok == bool(sols)
                if ok:
                    assert f(x) == b
                    coset = {(x + k).coords for k in span(kern, G)}
                    assert coset == sols


def test_solve_hom_matrix_bruteforce():
    rng = random.Random(7)
    groups = [FgaGroup(0, (2,)), FgaGroup(0, (2, 4)), FgaGroup(0, (3,)), FgaGroup(0, (6,)), FgaGroup(0, (2, 2))]
    for _ in range(150):
        S, T = rng.choice(groups), rng.choice(groups)
        # random well-defined hom: generator of order o must go to an element killed by o
        rows = []
        for o in S.orders:
            while True:
                v = tuple(rng.randrange(t) for t in T.orders)
                if (o * FgaElement(T, v)).is_zero():
                    break
            rows.append(v)
        f = FgaHom(S, T, tuple(rows))
        b = FgaElement(T, tuple(rng.randrange(t) for t in T.orders))
        ok, x, kern = solve_hom(f, b)
        sols = {y.coords for y in S.elements() if f(y) == b}
        assert ok == bool(sols)
        if ok:
            assert {(x + k).coords for k in span(kern, S)} == sols


def test_solve_hom_free():
    Z2 = FgaGroup(2)
    f = FgaHom(Z2, FgaGroup(1), ((2,), (4,)))
    ok, x, kern = solve_hom(f, FgaGroup(1)(6))
    assert ok and f(x).coords == (6,)
    assert all(f(k).is_zero() for k in kern) and kern
    ok, _, _ = solve_hom(f, FgaGroup(1)(3))
    assert not ok


def test_span_rejects_infinite():
    with pytest.raises(ValueError):
        span([FgaGroup(1)(1)], FgaGroup(1), limit=50)


def test_elements_order():
    G = FgaGroup(0, (2, 4))
    els = list(G.elements())
    assert len(els) == 8 and els == sorted(els, key=FgaElement.sort_key)
    assert len({e.coords for e in els}) == 8
