"""Characteristic classes of U(2)-representations over ``Z[l, u]``.

Over the maximal torus ``E = L1 + L2`` with ``x1 = c1(L1)``, ``x2 = c1(L2)``,
so ``l = c1(E) = x1 + x2`` and ``u = c2(E) = x1 x2``.  Classes are first
computed as symmetric polynomials in ``x1, x2`` and then rewritten in
``l`` and ``u``.

The coefficient profile ``(a, b, c, d)`` is defined by

    p1(V) = -2a u + b l^2          e(V) = c lu + d l^3   (dim V = 6)
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Iterator, Mapping, Sequence

from .reps import IrreducibleSummand, RealForm, Realified, RealRep, canonicalize, complex_weights, complexified_weights, raw_summands


# ---------------------------------------------------------------------------
# polynomials


def _clean(d: Mapping) -> tuple:
    return tuple(sorted((m, c) for m, c in d.items() if c))


@dataclass(frozen=True)
class XPoly:
    """Integer polynomial in the torus variables ``x1, x2``."""

    terms: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], int]) -> "XPoly":
        return cls(_clean(d))

    @classmethod
    def linear(cls, alpha: int, beta: int) -> "XPoly":
        return cls.from_dict({(1, 0): alpha, (0, 1): beta})

    @classmethod
    def const(cls, c: int) -> "XPoly":
        return cls.from_dict({(0, 0): c})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def __add__(self, other: "XPoly") -> "XPoly":
        d = defaultdict(int, self.terms)
        for m, c in other.terms:
            d[m] += c
        return XPoly.from_dict(d)

    def __mul__(self, other: "XPoly") -> "XPoly":
        d: dict = defaultdict(int)
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                d[(i1 + i2, j1 + j2)] += c1 * c2
        return XPoly.from_dict(d)

    def scale(self, n: int) -> "XPoly":
        return XPoly.from_dict({m: n * c for m, c in self.terms})

    def exact_div(self, n: int) -> "XPoly":
        if any(c % n for _, c in self.terms):
            raise ArithmeticError(f"polynomial not divisible by {n}")
        return XPoly.from_dict({m: c // n for m, c in self.terms})

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get((j, i), 0) == c for (i, j), c in d.items())


@dataclass(frozen=True)
class ClassPolynomial:
    """Integer polynomial in ``l`` (degree 2) and ``u`` (degree 4).

    Monomials are keyed by exponent pairs ``(p, q)`` for ``l^p u^q``.
    """

    terms: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, int], int]) -> "ClassPolynomial":
        return cls(_clean(d))

    @property
    def coefficients(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def coeff(self, p: int, q: int) -> int:
        return self.coefficients.get((p, q), 0)

    def degrees(self) -> set[int]:
        return {2 * p + 4 * q for (p, q), _ in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ClassPolynomial") -> "ClassPolynomial":
        d = defaultdict(int, self.terms)
        for m, c in other.terms:
            d[m] += c
        return ClassPolynomial.from_dict(d)

    def __neg__(self) -> "ClassPolynomial":
        return ClassPolynomial.from_dict({m: -c for m, c in self.terms})

    def __sub__(self, other: "ClassPolynomial") -> "ClassPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ClassPolynomial.from_dict({m: other * c for m, c in self.terms})
        d: dict = defaultdict(int)
        for (p1, q1), c1 in self.terms:
            for (p2, q2), c2 in other.terms:
                d[(p1 + p2, q1 + q2)] += c1 * c2
        return ClassPolynomial.from_dict(d)

    __rmul__ = __mul__

    def truncate(self, max_degree: int) -> "ClassPolynomial":
        return ClassPolynomial.from_dict({(p, q): c for (p, q), c in self.terms if 2 * p + 4 * q <= max_degree})

    def to_x(self) -> XPoly:
        """Substitute ``l = x1 + x2`` and ``u = x1 x2``."""
        out = XPoly()
        for (p, q), c in self.terms:
            lp = XPoly.from_dict({(i, p - i): comb(p, i) for i in range(p + 1)})
            out = out + lp * XPoly.from_dict({(q, q): c})
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (p, q), c in sorted(self.terms, key=lambda t: (-(2 * t[0][0] + 4 * t[0][1]), t[0][1], -t[0][0])):
            mono = ("l" if p == 1 else f"l^{p}" if p else "") + ("u" if q == 1 else f"u^{q}" if q else "")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            s += f" {sign} {body}"
        return s


L = ClassPolynomial.from_dict({(1, 0): 1})
U = ClassPolynomial.from_dict({(0, 1): 1})


def symmetric_to_lu(f: XPoly) -> ClassPolynomial:
    """Rewrite a symmetric polynomial in ``x1, x2`` in terms of ``l, u``.

    Repeatedly strips the lexicographically leading monomial
    ``x1^i x2^j`` (``i >= j``) with ``l^(i-j) u^j``.
    """
    if not f.is_symmetric():
        raise ValueError("polynomial is not symmetric in x1, x2")
    rest = f.as_dict()
    out: dict[tuple[int, int], int] = {}
    while rest:
        (i, j) = max(rest)
        c = rest[(i, j)]
        out[(i - j, j)] = c
        sub = ClassPolynomial.from_dict({(i - j, j): c}).to_x().as_dict()
        for m, v in sub.items():
            rest[m] = rest.get(m, 0) - v
            if rest[m] == 0:
                del rest[m]
    return ClassPolynomial.from_dict(out)


# ---------------------------------------------------------------------------
# classes of representations


@dataclass(frozen=True)
class CoeffProfile:
    a: int
    b: int
    c: int | None = None
    d: int | None = None

    def __str__(self) -> str:
        s = f"a={self.a} b={self.b}"
        if self.c is not None:
            s += f" c={self.c} d={self.d}"
        return s


def p1_x(V: RealRep) -> XPoly:
    """``p1(V)`` in torus variables: half the sum of squared complexified weights."""
    total = XPoly()
    for w in complexified_weights(V):
        lin = XPoly.linear(w.alpha, w.beta)
        total = total + lin * lin
    return total.exact_div(2)


def p1_of(V: RealRep) -> ClassPolynomial:
    return symmetric_to_lu(p1_x(V))


def euler_x(V: RealRep | Sequence[IrreducibleSummand]) -> XPoly:
    summands = V.summands if isinstance(V, RealRep) else tuple(V)
    if any(isinstance(s, RealForm) for s in summands):
        return XPoly()
    prod_ = XPoly.const(1)
    for s in summands:
        for w in complex_weights(s):
            prod_ = prod_ * XPoly.linear(w.alpha, w.beta)
    return prod_


def euler_of(V: RealRep, orientation: Sequence[IrreducibleSummand] | None = None) -> ClassPolynomial:
    """Euler class of a 6-dimensional representation.

    Realified summands are oriented by their complex structure, which pins
    down the global sign.  By default the canonical summands are used;
    ``orientation`` supplies the summands as originally written (conjugating
    an odd number of complex-odd summands flips the sign).  Any ``A_i``
    summand has odd dimension and the class vanishes.
    """
    if V.dim != 6:
        raise ValueError(f"euler_of needs a 6-dimensional representation, got dim {V.dim}")
    if orientation is None:
        return symmetric_to_lu(euler_x(V))
    if canonicalize(orientation) != V:
        raise ValueError(f"orientation summands do not add up to {V}")
    return symmetric_to_lu(euler_x(orientation))


def coeff_profile(V: RealRep, orientation: Sequence[IrreducibleSummand] | None = None) -> CoeffProfile:
    if V.dim not in (6, 7):
        raise ValueError(f"coefficient profile is defined for dim 6 or 7, got {V.dim}")
    p1 = p1_of(V)
    if not p1.is_homogeneous(4) or set(p1.coefficients) - {(2, 0), (0, 1)}:
        raise AssertionError(f"p1 {p1} is not of the form -2a u + b l^2")
    ucoef = p1.coeff(0, 1)
    if ucoef % 2:
        raise AssertionError(f"odd u-coefficient {ucoef} in p1 of {V}")
    a, b = -ucoef // 2, p1.coeff(2, 0)
    if V.dim == 7:
        return CoeffProfile(a, b)
    e = euler_of(V, orientation)
    if set(e.coefficients) - {(1, 1), (3, 0)}:
        raise AssertionError(f"Euler class {e} is not of the form c lu + d l^3")
    return CoeffProfile(a, b, e.coeff(1, 1), e.coeff(3, 0))


def q1_poly_of(V: RealRep) -> tuple[str, ClassPolynomial]:
    """Parity of ``b`` (which is ``w2(V)`` in units of ``rho2(l)``) and ``q1(V)``.

    For odd ``b`` the polynomial is ``q1(V; l)`` for the lift ``l = c1(E)``.
    """
    prof = coeff_profile(V)
    a, b = prof.a, prof.b
    if b % 2 == 0:
        return "even", -a * U + (b // 2) * (L * L)
    return "odd", -a * U + ((b - 1) // 2) * (L * L)


def w2_parity(V: RealRep) -> int:
    return coeff_profile(V).b % 2


# ---------------------------------------------------------------------------
# closed forms and tables


def closed_forms_check(i_max: int, j_max: int, k_bound: int) -> list[str]:
    """Compare weight-expansion profiles with the closed forms

        b(A_i) = i(i+1)(2i+1)/6,  a(A_i) = 2 b(A_i),
        a(rV_{j,k}) = j(j+1)(2j+1)/6,  b(rV_{j,k}) = sum_{r=0..j} (r+k)^2.

    Returns a list of mismatch descriptions (empty when all agree).  The
    third form only holds for j <= 1: the weight expansion gives
    a(rV_{j,k}) = (1/2) sum_r (j-2r)^2 = j(j+1)(j+2)/6, so for j >= 2 the
    mismatches are reported rather than hidden.
    """
    if min(i_max, j_max, k_bound) < 0:
        raise ValueError("bounds must be non-negative")
    bad = []
    for i in range(i_max + 1):
        p1 = p1_of(canonicalize([RealForm(i)]))
        a, b = -p1.coeff(0, 1) // 2, p1.coeff(2, 0)
        b_ref = i * (i + 1) * (2 * i + 1) // 6
        if (a, b) != (2 * b_ref, b_ref):
            bad.append(f"A_{i}: got a={a} b={b}, expected a={2 * b_ref} b={b_ref}")
    for j in range(j_max + 1):
        a_ref = j * (j + 1) * (2 * j + 1) // 6
        for k in range(-k_bound, k_bound + 1):
            # raw (non-canonical) summand on purpose: checks conjugation invariance too
            p1 = p1_of(RealRep((Realified(j, k),)))
            a, b = -p1.coeff(0, 1) // 2, p1.coeff(2, 0)
            b_ref = sum((r + k) ** 2 for r in range(j + 1))
            if (a, b) != (a_ref, b_ref):
                bad.append(f"rV_({j},{k}): got a={a} b={b}, expected a={a_ref} b={b_ref}")
    return bad


@dataclass(frozen=True)
class Family:
    """One row family of the standard representation tables."""

    label: str
    params: tuple[str, ...]
    build: object  # callable(**params) -> raw summand list

    def instances(self, rng: int) -> Iterator[tuple[dict[str, int], RealRep, list]]:
        """``(params, canonical rep, summands as written)`` over ``[-rng, rng]``."""
        for vals in itertools.product(range(-rng, rng + 1), repeat=len(self.params)):
            kw = dict(zip(self.params, vals))
            raw = self.build(**kw)
            yield kw, canonicalize(raw), raw_summands(raw)


def _L(k):
    return ("LPower", k)


def _E(s):
    return ("ETensorL", s)


FAMILIES = {
    7: (
        Family("L^r+L^s+L^t+R", ("r", "s", "t"), lambda r, s, t: [_L(r), _L(s), _L(t), ("Trivial",)]),
        Family("(L^s(x)E)+L^t+R", ("s", "t"), lambda s, t: [_E(s), _L(t), ("Trivial",)]),
        Family("A1+L^s+L^t", ("s", "t"), lambda s, t: [("RealForm", 1), _L(s), _L(t)]),
        Family("A1+(L^s(x)E)", ("s",), lambda s: [("RealForm", 1), _E(s)]),
        Family("(A1(x)L^s)+R", ("s",), lambda s: [("A1TensorL", s), ("Trivial",)]),
        Family("A2+L^s", ("s",), lambda s: [("RealForm", 2), _L(s)]),
        Family("A3", (), lambda: [("RealForm", 3)]),
    ),
    6: (
        Family("L^r+L^s+L^t", ("r", "s", "t"), lambda r, s, t: [_L(r), _L(s), _L(t)]),
        Family("(L^s(x)E)+L^t", ("s", "t"), lambda s, t: [_E(s), _L(t)]),
        Family("A1+L^s+R", ("s",), lambda s: [("RealForm", 1), _L(s), ("Trivial",)]),
        Family("A1(x)L^s", ("s",), lambda s: [("A1TensorL", s)]),
        Family("A2+R", (), lambda: [("RealForm", 2), ("Trivial",)]),
    ),
}


def table_rows(dim: int, rng: int) -> list[tuple[str, dict[str, int], RealRep, CoeffProfile]]:
    """Regenerate the representation table for parameters in ``[-rng, rng]``."""
    if dim not in FAMILIES:
        raise ValueError("tables exist for dim 6 and 7 only")
    rows = []
    for fam in FAMILIES[dim]:
        for kw, V, written in fam.instances(rng):
            rows.append((fam.label, kw, V, coeff_profile(V, written if dim == 6 else None)))
    return rows


__all__ = [
    "ClassPolynomial",
    "CoeffProfile",
    "FAMILIES",
    "L",
    "U",
    "XPoly",
    "closed_forms_check",
    "coeff_profile",
    "euler_of",
    "p1_of",
    "q1_poly_of",
    "symmetric_to_lu",
    "table_rows",
]
