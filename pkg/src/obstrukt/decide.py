"""Decision procedures for structure-group reductions on 6- and 7-manifolds.

Every procedure returns a :class:`Decision`.  A decision separates three
outcomes: the criterion holds, the criterion fails, or the hypotheses under
which the criterion is a biconditional are not met.  Witnesses returned
with a positive verdict are re-substituted into their defining equation
before returning.

Conventions
-----------
* ``q1(xi)`` for a spin bundle means ``q1(xi; 0)``.
* "divisible by 0" means "equal to 0".
* For a reduction ``xi = P x_U(2) V`` the reported witness ``u`` is
  ``c2(P)``, so that ``q1(xi; l) = const * l^2 - a(V) u``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .charclass import coeff_profile
from .cohomodel import (
    BundleDescriptor,
    ModelError,
    SpincManifold,
    p1_of_bundle,
    q1_at,
    w4_of_bundle,
)
from .fga import FgaElement, FgaHom, in_multiple, quotient_reps, solve_hom, span
from .reps import RealRep

# Sp(1)-modules of dimension 7 and the divisor each one imposes on q1
SP1_CASES = (
    ("i", "R^7", 0),
    ("ii", "E+R^3", 1),
    ("iii", "A1+R^4", 2),
    ("iv", "E+A1", 3),
    ("v", "A1+A1+R", 4),
    ("vi", "A2+R^2", 10),
    ("vii", "A3", 28),
)

COR6_CASES = {
    1: "xi is a 3-dimensional complex bundle mu (c1 = l, c2 = -q1(xi;l), c3 = e)",
    2: "xi = eta + R^2 for a 2-dimensional complex bundle eta",
    3: "xi = alpha + R^3 for an oriented 3-plane bundle alpha",
    4: "xi = alpha + alpha for a spin 3-plane bundle alpha",
    5: "xi = S^2 alpha (reduction to SO(3) through A2 + R)",
    6: "xi = lambda + R^4 for a complex line bundle with c1 = l",
    7: "xi is trivial",
}


@dataclass
class Decision:
    holds: bool
    witnesses: dict[str, FgaElement] = field(default_factory=dict)
    hypothesis_failures: list[str] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.hypothesis_failures:
            return "hypothesis"
        return "holds" if self.holds else "fails"

    @property
    def exit_code(self) -> int:
        return {"holds": 0, "fails": 1, "hypothesis": 2}[self.status]

    def verdict(self) -> tuple[bool, bool]:
        """``(holds, hypotheses met)``; what gauge-invariance compares."""
        return self.holds, not self.hypothesis_failures

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "status": self.status,
            "witnesses": {k: list(v.coords) for k, v in self.witnesses.items()},
            "hypothesis_failures": list(self.hypothesis_failures),
            "trace": list(self.trace),
        }


def _unmet(failures: list[str], trace: list[str] | None = None) -> Decision:
    return Decision(False, hypothesis_failures=failures, trace=trace or [])


def _common(M: SpincManifold, xi: BundleDescriptor, dim: int, *, w2_equal: bool = True) -> list[str]:
    out = []
    if M.dim != dim:
        out.append(f"manifold has dimension {M.dim}, criterion needs {dim}")
    if xi.rank != dim:
        out.append(f"bundle has rank {xi.rank}, criterion needs {dim}")
    if w2_equal and xi.w2 != M.w2M:
        out.append("w2(xi) != w2(M)")
    return out


def _fmt(x: FgaElement) -> str:
    return str(list(x.coords))


# ---------------------------------------------------------------------------
# isomorphism and existence


def iso_7(M: SpincManifold, xi: BundleDescriptor, xi_prime: BundleDescriptor) -> Decision:
    """Two rank-7 bundles with equal ``w2`` are isomorphic iff their ``q1`` agree at a common lift."""
    fails = _common(M, xi, 7, w2_equal=False)
    if xi_prime.rank != 7:
        fails.append(f"second bundle has rank {xi_prime.rank}, criterion needs 7")
    if xi.w2 != xi_prime.w2:
        fails.append("w2(xi) != w2(xi')")
    if fails:
        return _unmet(fails)
    l = xi.l_ref
    q, qp = q1_at(M, xi, l), q1_at(M, xi_prime, l)
    trace = [f"common lift l = {_fmt(l)}", f"q1(xi; l) = {_fmt(q)}", f"q1(xi'; l) = {_fmt(qp)}"]
    return Decision(q == qp, {"l": l, "q1": q, "q1_prime": qp}, trace=trace)


def iso_6(M: SpincManifold, xi: BundleDescriptor, xi_prime: BundleDescriptor) -> Decision:
    """Rank-6 version: equal ``q1`` at a common lift and ``e = +-e'``."""
    fails = _common(M, xi, 6, w2_equal=False)
    if xi_prime.rank != 6:
        fails.append(f"second bundle has rank {xi_prime.rank}, criterion needs 6")
    if xi.w2 != xi_prime.w2:
        fails.append("w2(xi) != w2(xi')")
    if fails:
        return _unmet(fails)
    l = xi.l_ref
    q, qp = q1_at(M, xi, l), q1_at(M, xi_prime, l)
    e, ep = xi.euler, xi_prime.euler
    same_q = q == qp
    same_e = e in (ep, -ep)
    trace = [
        f"common lift l = {_fmt(l)}",
        f"q1(xi; l) = {_fmt(q)}, q1(xi'; l) = {_fmt(qp)}: {'equal' if same_q else 'different'}",
        f"e(xi) = {_fmt(e)}, e(xi') = {_fmt(ep)}: {'equal up to sign' if same_e else 'not +-equal'}",
    ]
    return Decision(same_q and same_e, {"l": l, "q1": q, "q1_prime": qp}, trace=trace)


def exists_u2(M: SpincManifold, l: FgaElement, u: FgaElement) -> Decision:
    """A 2-dimensional complex bundle with ``c1 = l``, ``c2 = u`` exists whenever ``l`` lifts ``w2(M)``."""
    fails = []
    if M.dim not in (6, 7):
        fails.append(f"manifold dimension {M.dim} is not 6 or 7")
    if l.group != M.H(2) or u.group != M.H(4):
        raise ModelError("l must be in H^2 and u in H^4")
    if M.rho2(2, l) != M.w2M:
        fails.append("rho2(l) != w2(M)")
    if fails:
        return _unmet(fails)
    return Decision(True, {"c1": l, "c2": u}, trace=["every u in H^4 is c2 of some eta with c1(eta) = l"])


def exists_u3(M: SpincManifold, l: FgaElement, u: FgaElement, v: FgaElement) -> Decision:
    """``(l, u, v)`` are Chern classes of a U(3)-bundle iff ``Sq^2 rho2(u) + rho2(lu) = rho2(v)``."""
    if M.dim not in (6, 7):
        return _unmet([f"manifold dimension {M.dim} is not 6 or 7"])
    if (l.group, u.group, v.group) != (M.H(2), M.H(4), M.H(6)):
        raise ModelError("l, u, v must be in H^2, H^4, H^6")
    model = M.model
    ru = M.rho2(4, u)
    sq = model.apply("sq2", 4, ru)
    if model.has_cup(2, 4) or M.H(6).is_trivial:
        lu = M.rho2(6, M.cup(2, 4, l, u))
    elif model.has_cup2(2, 4):
        lu = model.cup2_product(2, 4, M.rho2(2, l), ru)
    else:
        raise ModelError("exists_u3 needs a cup table in bidegree (2,4)")
    lhs, rhs = sq + lu, M.rho2(6, v)
    trace = [f"Sq^2 rho2(u) = {_fmt(sq)}", f"rho2(lu) = {_fmt(lu)}", f"rho2(v) = {_fmt(rhs)}"]
    return Decision(lhs == rhs, {"c1": l, "c2": u, "c3": v} if lhs == rhs else {}, trace=trace)


# ---------------------------------------------------------------------------
# U(2) reductions


@dataclass
class _Setup:
    a: int
    b: int
    c: int | None
    d: int | None
    target: FgaElement | None  # q1 minus the l^2 term; None when the verdict is already known
    decision: Decision | None


def _reduction_setup(M: SpincManifold, xi: BundleDescriptor, V: RealRep, l: FgaElement, dim: int) -> _Setup:
    fails = _common(M, xi, dim)
    if V.dim != dim:
        fails.append(f"representation {V} has dimension {V.dim}, criterion needs {dim}")
    if l.group != M.H(2):
        fails.append("lift l is not in H^2(M; Z)")
    if fails:
        return _Setup(0, 0, None, None, None, _unmet(fails))
    prof = coeff_profile(V)
    a, b = prof.a, prof.b
    trace = [f"V = {V}: {prof}", f"lift l = {_fmt(l)}"]
    rl = M.rho2(2, l)
    l2 = M.square(l)
    if b % 2:
        if rl != xi.w2:
            trace.append("b(V) odd: the associated bundle has w2 = rho2(l) but rho2(l) != w2(xi)")
            return _Setup(a, b, prof.c, prof.d, None, Decision(False, trace=trace))
        q = q1_at(M, xi, l)
        target = q - ((b - 1) // 2) * l2
        trace.append(f"b(V) odd: q1(xi; l) - (b-1)/2 l^2 = {_fmt(q)} - {(b - 1) // 2}*{_fmt(l2)} = {_fmt(target)}")
    else:
        if rl != xi.w2:
            return _Setup(a, b, prof.c, prof.d, None, _unmet(["b(V) even and rho2(l) != w2(xi)"], trace))
        if not xi.w2.is_zero():
            trace.append("b(V) even: xi and M must be spin, but w2(xi) != 0")
            return _Setup(a, b, prof.c, prof.d, None, Decision(False, trace=trace))
        q = q1_at(M, xi, M.H(2).zero())
        target = q - (b // 2) * l2
        trace.append(f"b(V) even: q1(xi) - b/2 l^2 = {_fmt(q)} - {b // 2}*{_fmt(l2)} = {_fmt(target)}")
    return _Setup(a, b, prof.c, prof.d, target, Decision(False, trace=trace))


def reduce_u2_7(M: SpincManifold, xi: BundleDescriptor, V: RealRep, l: FgaElement) -> Decision:
    """Is ``xi = P x_U(2) V`` for a principal U(2)-bundle ``P`` with ``c1(P) = l``?"""
    s = _reduction_setup(M, xi, V, l, 7)
    if s.target is None:
        return s.decision
    dec = s.decision
    ok, y = in_multiple(s.target, s.a)
    dec.trace.append(f"{_fmt(s.target)} in {s.a} H^4: {ok}")
    if not ok:
        return dec
    assert s.a * y == s.target
    dec.holds = True
    dec.witnesses = {"l": l, "u": -y}
    return dec


def reduce_u2_6(M: SpincManifold, xi: BundleDescriptor, V: RealRep, l: FgaElement) -> Decision:
    """Rank-6 reduction: one ``u`` must satisfy both the ``q1`` and the Euler equation."""
    s = _reduction_setup(M, xi, V, l, 6)
    if s.target is None:
        return s.decision
    dec = s.decision
    a, c, d = s.a, s.c, s.d
    e = xi.euler
    l3 = M.cube(l)
    H4 = M.H(4)
    if a == 0:
        if c != 0:
            raise AssertionError(f"canonical representation {V} has a = 0 but c = {c}")
        candidates = [H4.zero()] if s.target.is_zero() else []
        dec.trace.append(f"a(V) = 0: need q1 term {_fmt(s.target)} = 0")
    else:
        # q1 - const*l^2 = -a u
        ok, u0, kernel = solve_hom(FgaHom.scalar(H4, a), -s.target)
        if not ok:
            dec.trace.append(f"{a} u = {_fmt(-s.target)} has no solution")
            return dec
        candidates = [u0 + k for k in span(kernel, H4)]
        dec.trace.append(f"{a} u = {_fmt(-s.target)}: {len(candidates)} solution(s) u0 = {_fmt(u0)}")
    good = []
    for u in candidates:
        euler_V = c * M.cup(2, 4, l, u) + d * l3
        if euler_V in (e, -e):
            good.append(u)
    dec.trace.append(f"Euler condition c lu + d l^3 = +-{_fmt(e)} met by {len(good)} of {len(candidates)}")
    if not good:
        return dec
    u = min(good, key=FgaElement.sort_key)
    assert -a * u == s.target and (c * M.cup(2, 4, l, u) + d * l3) in (e, -e)
    dec.holds = True
    dec.witnesses = {"l": l, "u": u}
    return dec


def reduce_u2(M: SpincManifold, xi: BundleDescriptor, V: RealRep, l: FgaElement) -> Decision:
    return (reduce_u2_7 if M.dim == 7 else reduce_u2_6)(M, xi, V, l)


# ---------------------------------------------------------------------------
# SO(3) reductions


def _so3_even(M, xi, a, b, method, dec):
    q = q1_at(M, xi, M.H(2).zero())
    if method == "fast":
        ok, y = in_multiple(q, a)
        dec.trace.append(f"exists m with q1 - a m^2 in a H^4  <=>  q1 = {_fmt(q)} in {a} H^4: {ok}")
        if ok:
            dec.holds = True
            dec.witnesses = {"l": M.H(2).zero(), "u": -y}
        return dec
    ms = quotient_reps(M.H(2), a) if a else [M.H(2).zero()]
    hits = []
    for m in ms:
        t = q - a * M.square(m)
        ok, y = in_multiple(t, a)
        if ok:
            hits.append((m, y))
    dec.trace.append(f"enumerated {len(ms)} classes m in H^2/{a}H^2: {len(hits)} satisfy the condition")
    if hits:
        m, y = min(hits, key=lambda h: h[0].sort_key())
        dec.holds = True
        dec.witnesses = {"l": 2 * m, "u": -y}
    return dec


def _so3_odd_test(M, xi, a, b, l):
    t = q1_at(M, xi, l) - ((b - 1) // 2) * M.square(l)
    return in_multiple(t, a)


def _so3_odd(M, xi, a, b, method, dec, sample=16):
    if M.l0 is None:
        raise ModelError("the SO(3) criterion with b(V) odd needs a spin^c lift l0 of w2(M)")
    if a != 2 * b:
        raise AssertionError(f"SO(3) representation with a = {a} != 2b = {2 * b}")
    ms = quotient_reps(M.H(2), 2 * a)
    if method == "fast":
        ok, y = _so3_odd_test(M, xi, a, b, M.l0)
        dec.trace.append(f"lift l0 = {_fmt(M.l0)}: q1(xi; l0) - (b-1)/2 l0^2 in {a} H^4: {ok}")
        for m in ms[:sample]:
            if _so3_odd_test(M, xi, a, b, M.l0 + 2 * m)[0] != ok:
                raise AssertionError("SO(3) criterion depends on the choice of lift; a = 2b should prevent this")
        dec.trace.append(f"cross-checked on {min(sample, len(ms))} other lifts")
        if ok:
            dec.holds = True
            dec.witnesses = {"l": M.l0, "u": -y}
        return dec
    hits = []
    for m in ms:
        ok, y = _so3_odd_test(M, xi, a, b, M.l0 + 2 * m)
        if ok:
            hits.append((M.l0 + 2 * m, y))
    dec.trace.append(f"enumerated {len(ms)} lifts l0 + 2m: {len(hits)} satisfy the condition")
    if hits:
        l, y = min(hits, key=lambda h: h[0].sort_key())
        dec.holds = True
        dec.witnesses = {"l": l, "u": -y}
    return dec


def reduce_so3_7(M: SpincManifold, xi: BundleDescriptor, V: RealRep, method: str = "fast") -> Decision:
    """Reduction of a rank-7 bundle to SO(3) through a representation made of ``A_i`` summands.

    ``method="fast"`` uses the algebraic collapse of the existential over
    ``H^2``; ``method="enumerate"`` searches a complete set of classes.
    """
    if not V.is_so3:
        raise ValueError(f"{V} does not factor through SO(3)")
    if method not in ("fast", "enumerate"):
        raise ValueError(f"unknown method {method!r}")
    fails = _common(M, xi, 7)
    if V.dim != 7:
        fails.append(f"representation {V} has dimension {V.dim}, criterion needs 7")
    if fails:
        return _unmet(fails)
    prof = coeff_profile(V)
    a, b = prof.a, prof.b
    dec = Decision(False, trace=[f"V = {V}: {prof}"])
    if b % 2 == 0:
        if not xi.w2.is_zero():
            dec.trace.append("b(V) even: xi and M must be spin, but w2(xi) != 0")
            return dec
        return _so3_even(M, xi, a, b, method, dec)
    return _so3_odd(M, xi, a, b, method, dec)


# ---------------------------------------------------------------------------
# corollaries on 7-manifolds


def sp1_menu(M: SpincManifold, xi: BundleDescriptor) -> dict[str, Decision]:
    """Reductions of a spin rank-7 bundle to Sp(1), one entry per 7-dimensional Sp(1)-module."""
    fails = _common(M, xi, 7, w2_equal=False)
    if not xi.w2.is_zero():
        fails.append("w2(xi) != 0")
    if not M.w2M.is_zero():
        fails.append("w2(M) != 0")
    if fails:
        return {case: _unmet(list(fails)) for case, _, _ in SP1_CASES}
    q = q1_at(M, xi, M.H(2).zero())
    out = {}
    for case, module, n in SP1_CASES:
        ok, y = in_multiple(q, n)
        d = Decision(ok, trace=[f"({case}) {module}: q1 = {_fmt(q)} divisible by {n}: {ok}"])
        if ok:
            assert n * y == q
            d.witnesses = {"q1_over_n": y}
        out[case] = d
    return out


def g2_reduce(M: SpincManifold, xi: BundleDescriptor) -> Decision:
    """Every spin rank-7 bundle over a spin 7-manifold reduces to G2."""
    fails = _common(M, xi, 7, w2_equal=False)
    if not xi.w2.is_zero():
        fails.append("w2(xi) != 0")
    if not M.w2M.is_zero():
        fails.append("w2(M) != 0")
    if fails:
        return _unmet(fails)
    return Decision(
        True,
        trace=["xi = R^3 + mu for a quaternionic line bundle mu (divisor 1 always holds)", "R + xi = H + mu carries a Cayley multiplication"],
    )


def sections_7(M: SpincManifold, xi: BundleDescriptor, k: int) -> Decision:
    """Does ``xi`` have ``k`` linearly independent sections (``k <= 4``)?"""
    if k not in (1, 2, 3, 4):
        raise ValueError("sections_7 decides k = 1, 2, 3, 4")
    fails = _common(M, xi, 7)
    if fails:
        return _unmet(fails)
    if k <= 3:
        return Decision(True, trace=["xi = eta + R^3 with eta a 2-dimensional complex bundle"])
    w4 = w4_of_bundle(M, xi)
    return Decision(w4.is_zero(), {"w4": w4}, trace=[f"w4(xi) = rho2(q1) = {_fmt(w4)}"])


def prop_7u3(M: SpincManifold, xi: BundleDescriptor, u: FgaElement, v: FgaElement, l: FgaElement | None = None) -> Decision:
    """Is ``xi = zeta + R`` with ``zeta`` a U(3)-bundle with ``c(zeta) = (l, u, v)``?"""
    l = xi.l_ref if l is None else l
    fails = _common(M, xi, 7)
    if M.rho2(2, l) != M.w2M:
        fails.append("rho2(l) != w2(M)")
    if not in_multiple(v, 2)[0]:
        fails.append("v is not in 2H^6")
    if fails:
        return _unmet(fails)
    q = q1_at(M, xi, l)
    trace = [f"zeta with c = ({_fmt(l)}, {_fmt(u)}, {_fmt(v)}) exists", f"q1(xi; l) = {_fmt(q)}, -u = {_fmt(-u)}"]
    return Decision(q == -u, {"c1": l, "c2": u, "c3": v}, trace=trace)


# ---------------------------------------------------------------------------
# 6-manifolds


def cor6_cases(M: SpincManifold, xi: BundleDescriptor, l: FgaElement | None = None) -> dict[int, Decision]:
    """The seven splitting/reduction criteria for a rank-6 bundle over a 6-manifold."""
    l = xi.l_ref if l is None else l
    fails = _common(M, xi, 6)
    if not fails and M.rho2(2, l) != xi.w2:
        fails.append("rho2(l) != w2(xi)")
    if fails:
        return {n: _unmet(list(fails)) for n in COR6_CASES}
    e = xi.euler
    ql = q1_at(M, xi, l)
    w4 = w4_of_bundle(M, xi)
    p1 = p1_of_bundle(M, xi)
    spin = xi.w2.is_zero()
    qs = q1_at(M, xi, M.H(2).zero()) if spin else None
    e0, w40 = e.is_zero(), w4.is_zero()
    out: dict[int, Decision] = {}

    out[1] = Decision(True, {"c1": l, "c2": -ql, "c3": e}, trace=[COR6_CASES[1]])

    d2 = Decision(e0, trace=[COR6_CASES[2], f"e = {_fmt(e)}"])
    if e0:
        d2.witnesses = {"c1": l, "c2": -ql}
    out[2] = d2

    out[3] = Decision(e0 and w40, {"w4": w4}, trace=[COR6_CASES[3], f"e = {_fmt(e)}, w4 = {_fmt(w4)}"])

    if spin:
        div4, y = in_multiple(qs, 4)
        d4 = Decision(e0 and div4, trace=[COR6_CASES[4], f"q1 = {_fmt(qs)} in 4H^4: {div4}"])
        if e0 and div4:
            d4.witnesses = {"q1_over_4": y}
    else:
        d4 = Decision(False, trace=[COR6_CASES[4], "w2(xi) != 0"])
    out[4] = d4

    div5, _ = in_multiple(p1, 5)
    out[5] = Decision(e0 and w40 and div5, {"p1": p1}, trace=[COR6_CASES[5], f"p1 = {_fmt(p1)} in 5H^4: {div5}"])

    out[6] = Decision(e0 and ql.is_zero(), {"q1": ql}, trace=[COR6_CASES[6], f"q1(xi; l) = {_fmt(ql)}"])

    out[7] = Decision(
        spin and e0 and qs.is_zero(),
        trace=[COR6_CASES[7], f"w2 = {_fmt(xi.w2)}, q1 = {_fmt(qs) if spin else 'n/a'}, e = {_fmt(e)}"],
    )
    return out
