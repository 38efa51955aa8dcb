import itertools
import random
from dataclasses import replace

import pytest

from _models import bundle7, h4_model, z_model_with_square
from obstrukt.charclass import coeff_profile
from obstrukt.cohomodel import ModelError, gauge, make_bundle, p1_of_bundle, q1_at, w4_of_bundle
from obstrukt.decide import (
    SP1_CASES,
    Decision,
    cor6_cases,
    exists_u2,
    exists_u3,
    g2_reduce,
    iso_6,
    iso_7,
    prop_7u3,
    reduce_so3_7,
    reduce_u2_6,
    reduce_u2_7,
    sections_7,
    sp1_menu,
)
from obstrukt.fga import FgaGroup, in_multiple
from obstrukt.fixtures import Z, Z2, cp3, cp3_tangent, s2xs4, s2xs4_tangent, synthetic_model, trivial_bundle
from obstrukt.reps import enumerate_reps, parse_rep


def test_decision_status_and_json():
    d = Decision(True, {"u": Z(3)})
    assert (d.status, d.exit_code) == ("holds", 0)
    assert d.to_dict()["witnesses"] == {"u": [3]}
    assert Decision(False).exit_code == 1
    assert Decision(False, hypothesis_failures=["x"]).exit_code == 2


# -- isomorphism ----------------------------------------------------------------


def test_iso_7():
    M = h4_model()
    a, b = bundle7(M, [1]), bundle7(M, [2])
    assert iso_7(M, a, a).holds
    assert not iso_7(M, a, b).holds
    N = z_model_with_square()
    assert iso_7(N, bundle7(N, [0]), make_bundle(N, 7, Z2(1), Z(1), Z(0))).status == "hypothesis"


def test_iso_7_gauge_partner():
    M = z_model_with_square()
    xi = bundle7(M, [5])
    for m in range(-3, 4):
        assert iso_7(M, xi, gauge(M, xi, Z(m))).holds
    assert not iso_7(M, xi, bundle7(M, [5], l_ref=Z(2))).holds  # same q1 at a different lift


def test_iso_6():
    M = cp3()
    e = lambda q, eu: make_bundle(M, 6, Z2(0), Z(0), Z(q), euler=Z(eu))  # noqa: E731
    assert iso_6(M, e(2, 4), e(2, 4)).holds
    assert iso_6(M, e(2, 1), e(2, -1)).holds
    assert not iso_6(M, e(2, 1), e(2, 2)).holds
    assert not iso_6(M, e(2, 1), e(3, 1)).holds
    assert iso_6(M, e(2, 1), make_bundle(M, 7, Z2(0), Z(0), Z(2))).status == "hypothesis"


# -- existence --------------------------------------------------------------------


def test_exists_u2():
    M = cp3()
    assert exists_u2(M, Z(0), Z(0)).holds
    assert exists_u2(M, Z(2), Z(-7)).holds
    assert exists_u2(M, Z(1), Z(0)).status == "hypothesis"


def test_exists_u3_examples():
    M = cp3()
    assert exists_u3(M, Z(0), Z(0), Z(0)).holds
    assert not exists_u3(M, Z(0), Z(0), Z(1)).holds
    # Sq^2(h^2) = 2h^3 = 0 mod 2, rho2(h * h^2) = h^3
    assert exists_u3(M, Z(1), Z(1), Z(1)).holds
    assert not exists_u3(M, Z(1), Z(1), Z(0)).holds


def test_exists_u3_sums_of_line_bundles():
    # H^a + H^b + H^c over CP^3 has c = (1 + ah)(1 + bh)(1 + ch)
    M = cp3()
    for a, b, c in itertools.product(range(-2, 3), repeat=3):
        c1, c2, c3 = a + b + c, a * b + b * c + a * c, a * b * c
        assert exists_u3(M, Z(c1), Z(c2), Z(c3)).holds
        assert not exists_u3(M, Z(c1), Z(c2), Z(c3 + 1)).holds


def test_exists_u3_missing_table():
    M = synthetic_model(6, {0: Z, 2: Z, 4: Z, 6: Z}, cup={(2, 2): (((1,),),)})
    with pytest.raises(ModelError):
        exists_u3(M, Z(1), Z(1), Z(1))


# -- U(2) reductions in dimension 7 -------------------------------------------------


def test_reduce_u2_7_a3_witness():
    M = h4_model()
    d = reduce_u2_7(M, bundle7(M, [28]), parse_rep("A3"), M.H(2).zero())
    assert d.holds and d.witnesses["u"].coords == (-1,)
    assert not reduce_u2_7(M, bundle7(M, [14]), parse_rep("A3"), M.H(2).zero()).holds


def test_reduce_u2_7_trivial_rep():
    M = h4_model()
    R7 = parse_rep("R^7")
    assert reduce_u2_7(M, bundle7(M, [0]), R7, M.H(2).zero()).holds
    assert not reduce_u2_7(M, bundle7(M, [1]), R7, M.H(2).zero()).holds


def test_reduce_u2_7_odd_rep_matches_w4():
    M = h4_model()
    V = parse_rep("A1+R^4")
    for q in range(-6, 7):
        xi = bundle7(M, [q])
        assert reduce_u2_7(M, xi, V, M.H(2).zero()).holds == (q % 2 == 0)


def test_reduce_u2_7_lift_conditions():
    M = z_model_with_square(l0=(1,))  # w2(M) = rho2(x)
    xi = bundle7(M, [3], l_ref=Z(1))
    odd = parse_rep("A1+R^4")
    even = parse_rep("A1+A1+R")
    # b odd: rho2(l) != w2 makes the criterion false
    d = reduce_u2_7(M, xi, odd, Z(2))
    assert d.status == "fails"
    # b even: rho2(l) != w2 violates the hypotheses, w2 != 0 falsifies the criterion
    assert reduce_u2_7(M, xi, even, Z(2)).status == "hypothesis"
    assert reduce_u2_7(M, xi, even, Z(1)).status == "fails"


def test_reduce_u2_7_witness_resubstitution():
    rng = random.Random(8)
    M = z_model_with_square()
    for V in enumerate_reps(7, 2):
        for _ in range(4):
            q = rng.randint(-60, 60)
            l = Z(2 * rng.randint(-2, 2))
            xi = bundle7(M, [q])
            d = reduce_u2_7(M, xi, V, l)
            a, b = coeff_profile(V).a, coeff_profile(V).b
            if d.holds:
                u = d.witnesses["u"]
                q_l = q1_at(M, xi, l if b % 2 else Z(0))
                assert q_l - (b // 2) * M.square(l) == -a * u


def test_reduce_u2_7_hypotheses():
    M = h4_model()
    xi = bundle7(M, [0])
    assert reduce_u2_7(M, xi, parse_rep("A2+R"), M.H(2).zero()).status == "hypothesis"
    M6 = cp3()
    assert reduce_u2_7(M6, cp3_tangent(M6), parse_rep("A3"), Z(0)).status == "hypothesis"


# -- SO(3) --------------------------------------------------------------------------


def test_reduce_so3_examples():
    M = h4_model()
    assert reduce_so3_7(M, bundle7(M, [4]), parse_rep("A1+A1+R")).holds
    assert not reduce_so3_7(M, bundle7(M, [14]), parse_rep("A3")).holds
    assert reduce_so3_7(M, bundle7(M, [56]), parse_rep("A3")).holds


def test_reduce_so3_a2_matches_w4_p1():
    for l0 in (None, (1,)):
        M = z_model_with_square(l0=l0)
        V = parse_rep("A2+R+R")
        for q in range(-25, 26):
            xi = bundle7(M, [q], l_ref=M.l0)
            expect = w4_of_bundle(M, xi).is_zero() and in_multiple(p1_of_bundle(M, xi), 5)[0]
            for method in ("fast", "enumerate"):
                assert reduce_so3_7(M, xi, V, method=method).holds == expect


def test_reduce_so3_errors():
    M = h4_model()
    with pytest.raises(ValueError):
        reduce_so3_7(M, bundle7(M, [0]), parse_rep("L(1)+R^5"))
    with pytest.raises(ValueError):
        reduce_so3_7(M, bundle7(M, [0]), parse_rep("A3"), method="guess")
    M2 = replace(z_model_with_square(l0=(1,)), l0=None)
    xi = make_bundle(M2, 7, Z2(1), Z(1), Z(0))
    with pytest.raises(ModelError):
        reduce_so3_7(M2, xi, parse_rep("A1+R^4"))


def test_reduce_so3_nonspin_even():
    M = z_model_with_square(l0=(1,))
    xi = bundle7(M, [0], l_ref=Z(1))
    assert reduce_so3_7(M, xi, parse_rep("A3")).status == "fails"


# -- Sp(1), G2, sections -------------------------------------------------------------


def test_sp1_menu_28():
    M = h4_model()
    got = {k: d.holds for k, d in sp1_menu(M, bundle7(M, [28])).items()}
    assert got == dict(zip("i ii iii iv v vi vii".split(), [False, True, True, False, True, False, True]))


def test_sp1_menu_zero_and_torsion():
    M = h4_model()
    assert all(d.holds for d in sp1_menu(M, bundle7(M, [0])).values())
    T = h4_model(FgaGroup(0, (2,)))
    menu = sp1_menu(T, bundle7(T, [1]))
    assert not menu["iii"].holds and menu["iv"].holds
    assert [c for c, _, _ in SP1_CASES] == list(menu)


def test_sp1_menu_nonspin():
    M = z_model_with_square(l0=(1,))
    menu = sp1_menu(M, bundle7(M, [0], l_ref=Z(1)))
    assert all(d.status == "hypothesis" for d in menu.values())


def test_g2_reduce():
    M = h4_model()
    assert g2_reduce(M, bundle7(M, [5])).holds
    N = z_model_with_square(l0=(1,))
    assert g2_reduce(N, bundle7(N, [0], l_ref=Z(1))).status == "hypothesis"
    S = z_model_with_square()
    assert g2_reduce(S, make_bundle(S, 7, Z2(1), Z(1), Z(0))).status == "hypothesis"


def test_sections_7():
    M = h4_model()
    assert sections_7(M, bundle7(M, [3]), 3).holds
    assert sections_7(M, bundle7(M, [4]), 4).holds
    assert not sections_7(M, bundle7(M, [3]), 4).holds
    with pytest.raises(ValueError):
        sections_7(M, bundle7(M, [3]), 5)


def test_prop_7u3():
    M = h4_model(extra={6: Z})
    xi = bundle7(M, [5])
    l = M.H(2).zero()
    assert prop_7u3(M, xi, Z(-5), Z(4), l).holds
    assert not prop_7u3(M, xi, Z(-4), Z(4), l).holds
    assert prop_7u3(M, xi, Z(-5), Z(3), l).status == "hypothesis"


# -- dimension 6 ----------------------------------------------------------------------


def test_reduce_u2_6_cp3_tangent():
    M = cp3()
    xi = cp3_tangent(M)
    # a = 4: 4u = -2h^2 has no integral solution
    assert not reduce_u2_6(M, xi, parse_rep("A1xL(0)"), Z(0)).holds
    assert reduce_u2_6(M, trivial_bundle(M), parse_rep("R^6"), Z(0)).holds


def _brute_u2_6(M, xi, V, l, bound=40):
    p = coeff_profile(V)
    if M.rho2(2, l) != xi.w2:
        return None
    if p.b % 2 == 0 and not xi.w2.is_zero():
        return False
    q = q1_at(M, xi, l if p.b % 2 else Z(0))
    const = (p.b - 1) // 2 if p.b % 2 else p.b // 2
    for u in range(-bound, bound + 1):
        if q - const * M.square(l) == Z(-p.a * u):
            ev = p.c * M.cup(2, 4, l, Z(u)) + p.d * M.cube(l)
            if ev in (xi.euler, -xi.euler):
                return True
    return False


def test_reduce_u2_6_against_bruteforce_on_cp3():
    rng = random.Random(6)
    M = cp3()
    reps = enumerate_reps(6, 2)
    for _ in range(300):
        V = rng.choice(reps)
        xi = make_bundle(M, 6, Z2(0), Z(0), Z(rng.randint(-12, 12)), euler=Z(rng.randint(-8, 8)))
        l = Z(2 * rng.randint(-1, 1))
        d = reduce_u2_6(M, xi, V, l)
        assert d.holds == _brute_u2_6(M, xi, V, l), (str(V), xi, l)


def test_reduce_u2_6_lines_row():
    # L^r + L^s + L^t has a = 0: q1 must equal the l^2 term exactly and e = +-rst l^3
    M = cp3()
    V = parse_rep("L(1)+L(1)+L(2)")  # b = 6, even
    l = Z(2)
    q = 3 * 4  # b/2 l^2 with l^2 = 4
    xi = make_bundle(M, 6, Z2(0), Z(0), Z(q), euler=Z(2 * 8))
    assert reduce_u2_6(M, xi, V, l).holds
    xi_bad = make_bundle(M, 6, Z2(0), Z(0), Z(q), euler=Z(3))
    assert not reduce_u2_6(M, xi_bad, V, l).holds


# -- corollary cases ------------------------------------------------------------------


def test_cor6_cp3():
    M = cp3()
    cases = cor6_cases(M, cp3_tangent(M))
    assert cases[1].holds
    w = cases[1].witnesses
    assert (w["c1"].coords, w["c2"].coords, w["c3"].coords) == ((0,), (-2,), (4,))
    assert not cases[2].holds and not cases[7].holds


def test_cor6_s2xs4():
    M = s2xs4()
    cases = cor6_cases(M, s2xs4_tangent(M))
    assert cases[1].holds and not cases[4].holds and not cases[7].holds
    zero = make_bundle(M, 6, Z2(0), Z(0), Z(0), euler=Z(0))
    assert cor6_cases(M, zero)[7].holds


def test_cor6_trivial_all_true():
    M = cp3()
    assert all(d.holds for d in cor6_cases(M, trivial_bundle(M)).values())


def test_cor6_hypothesis():
    M = cp3()
    xi = make_bundle(M, 7, Z2(0), Z(0), Z(0))
    assert all(d.status == "hypothesis" for d in cor6_cases(M, xi).values())
