"""Characteristic classes against an independent sympy expansion."""
import random

import pytest
import sympy as sp

from obstrukt.charclass import (
    ClassPolynomial,
    L,
    U,
    XPoly,
    closed_forms_check,
    coeff_profile,
    euler_of,
    p1_of,
    q1_poly_of,
    symmetric_to_lu,
    table_rows,
)
from obstrukt.reps import RealForm, Realified, canonicalize, enumerate_reps, parse_rep, raw_summands

x1, x2 = sp.symbols("x1 x2")


def _sym_weights(s):
    """Complex weights of one summand, written out independently of the library."""
    if isinstance(s, RealForm):
        return [(s.i - r) * x1 + (r - s.i) * x2 for r in range(2 * s.i + 1)], False
    return [(s.j - r + s.k) * x1 + (r + s.k) * x2 for r in range(s.j + 1)], True


def sympy_p1(summands):
    total = 0
    for s in summands:
        ws, realified = _sym_weights(s)
        # a realified summand contributes w and -w; an A_i contributes each weight once
        total += sum(w**2 for w in ws) * (2 if realified else 1)
    return sp.expand(total / 2)


def sympy_profile(summands):
    p1 = sp.Poly(sympy_p1(summands), x1, x2)
    b = p1.coeff_monomial(x1**2)
    a = b - p1.coeff_monomial(x1 * x2) / 2
    return int(a), int(b)


def sympy_euler_cd(summands):
    e = 1
    for s in summands:
        ws, realified = _sym_weights(s)
        if not realified:
            return 0, 0
        for w in ws:
            e *= w
    l, u = x1 + x2, x1 * x2
    c, d = sp.symbols("c d")
    eqs = sp.Poly(sp.expand(e - c * l * u - d * l**3), x1, x2).coeffs()
    sol = sp.solve(eqs, [c, d], dict=True)
    assert sol, "Euler class is not of the form c lu + d l^3"
    return int(sol[0][c]), int(sol[0][d])


def test_profiles_match_sympy_all_enumerated():
    for dim in (6, 7):
        for V in enumerate_reps(dim, 3):
            prof = coeff_profile(V)
            assert (prof.a, prof.b) == sympy_profile(V.summands), str(V)
            if dim == 6:
                assert (prof.c, prof.d) == sympy_euler_cd(V.summands), str(V)


def test_written_orientation_matches_sympy():
    rng = random.Random(3)
    for _ in range(40):
        s, t = rng.randint(-5, 5), rng.randint(-5, 5)
        raw = [("ETensorL", s), ("LPower", t)]
        V = canonicalize(raw)
        prof = coeff_profile(V, raw_summands(raw))
        assert (prof.c, prof.d) == sympy_euler_cd(raw_summands(raw))


def test_euler_orientation_sign_flip():
    V = parse_rep("L(1)+L(2)+L(3)")
    flipped = raw_summands([("LPower", -1), ("LPower", 2), ("LPower", 3)])
    assert euler_of(V, flipped) == -euler_of(V, raw_summands([("LPower", 1), ("LPower", 2), ("LPower", 3)]))
    with pytest.raises(ValueError):
        euler_of(V, raw_summands([("LPower", 1)]))


def test_named_values():
    assert str(coeff_profile(parse_rep("A3"))) == "a=28 b=14"
    assert str(coeff_profile(parse_rep("A2+R+R"))) == "a=10 b=5"
    assert str(p1_of(parse_rep("A3"))) == "14l^2 - 56u"


def test_realified_a_identity():
    # a(rV_{j,k}) is half the sum of (j - 2r)^2, i.e. j(j+1)(j+2)/6, for every twist k
    for j in range(9):
        for k in range(-8, 9):
            p1 = p1_of(canonicalize([Realified(j, k)]))
            assert -p1.coeff(0, 1) // 2 == j * (j + 1) * (j + 2) // 6
            assert -p1.coeff(0, 1) // 2 == sum((j - 2 * r) ** 2 for r in range(j + 1)) // 2


def test_closed_forms_check_reports_only_realified_a():
    bad = closed_forms_check(12, 8, 8)
    assert bad and all(m.startswith("rV_(") for m in bad)
    assert {int(m[4]) for m in bad} == set(range(2, 9))


def test_symmetric_to_lu_roundtrip():
    rng = random.Random(5)
    for _ in range(50):
        f = ClassPolynomial.from_dict({(p, q): rng.randint(-9, 9) for p in range(4) for q in range(3)})
        assert symmetric_to_lu(f.to_x()) == f


def test_symmetric_to_lu_rejects_asymmetric():
    with pytest.raises(ValueError):
        symmetric_to_lu(XPoly.linear(1, 0))


def test_polynomial_arithmetic():
    assert str(L * L - 2 * U) == "l^2 - 2u"
    assert (L * U).degrees() == {6}


def test_q1_polynomials():
    assert q1_poly_of(parse_rep("A3")) == ("even", -28 * U + 7 * (L * L))
    assert q1_poly_of(parse_rep("A1+R^4")) == ("odd", -2 * U)


def test_table_row_counts():
    assert len(table_rows(7, 1)) == 27 + 9 + 9 + 3 + 3 + 3 + 1
    with pytest.raises(ValueError):
        table_rows(5, 1)
