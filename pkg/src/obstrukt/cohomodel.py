"""Cohomology models of closed spin^c 6- and 7-manifolds, and bundle data.

A :class:`CohomologyModel` is a finite table of data: integral groups
``H^k``, mod-2 groups ``H^k(;Z/2)``, the maps ``rho2``, Bockstein, ``Sq^1``,
``Sq^2`` and cup products as structure constants on generators.  Only the
bidegrees actually consumed by a decision need to be present.

A bundle is described by its rank, ``w2``, a reference integral lift
``l_ref`` of ``w2`` and ``q1(xi; l_ref)``; every other lift is reached with

    q1(xi; l + 2m) = q1(xi; l) - 2lm - 2m^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from .fga import FgaElement, FgaGroup, FgaHom, in_multiple

TRIVIAL = FgaGroup()


class ModelError(ValueError):
    """The model or descriptor is inconsistent or lacks data a computation needs."""


class LiftError(ModelError):
    """A class that should lift ``w2`` does not."""


# ---------------------------------------------------------------------------
# cup tables


@dataclass(frozen=True)
class CupTable:
    """Bilinear map on generators: ``table[i][j]`` is the coordinate vector of ``g_i g_j``."""

    left: FgaGroup
    right: FgaGroup
    target: FgaGroup
    table: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if len(self.table) != self.left.ngens or any(len(row) != self.right.ngens for row in self.table):
            raise ModelError(f"cup table must be {self.left.ngens} x {self.right.ngens}")
        rows = tuple(tuple(self.target.reduce(tuple(v)) for v in row) for row in self.table)
        object.__setattr__(self, "table", rows)

    def __call__(self, x: FgaElement, y: FgaElement) -> FgaElement:
        if x.group != self.left or y.group != self.right:
            raise ValueError("cup product arguments live in the wrong groups")
        out = [0] * self.target.ngens
        for i, a in enumerate(x.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if not b:
                    continue
                for t, v in enumerate(self.table[i][j]):
                    out[t] += a * b * v
        return FgaElement(self.target, tuple(out))

    def ill_defined_entries(self) -> list[tuple[int, int]]:
        """Entries violating ``n g = 0  =>  n (g h) = 0`` on torsion generators."""
        bad = []
        for i, oi in enumerate(self.left.orders):
            for j, oj in enumerate(self.right.orders):
                for n in (oi, oj):
                    if n and any(self.target.reduce(tuple(n * v for v in self.table[i][j]))):
                        bad.append((i, j))
                        break
        return bad

    def transpose(self, sign: int = 1) -> "CupTable":
        return CupTable(
            self.right,
            self.left,
            self.target,
            tuple(tuple(tuple(sign * v for v in self.table[i][j]) for i in range(self.left.ngens)) for j in range(self.right.ngens)),
        )


# ---------------------------------------------------------------------------
# the model


@dataclass(frozen=True)
class CohomologyModel:
    """Cohomology data of a closed connected manifold of dimension 6 or 7.

    Keys of ``rho2``: degree ``k`` with ``H^k -> H^k_2``.  ``bockstein[k]``
    maps ``H^k_2 -> H^(k+1)``, ``sq1[k]`` and ``sq2[k]`` raise the mod-2
    degree by one and two.  Cup tables are keyed by ``(p, q)``; missing
    groups are trivial.
    """

    dim: int
    H: Mapping[int, FgaGroup]
    H2: Mapping[int, FgaGroup]
    rho2: Mapping[int, FgaHom] = field(default_factory=dict)
    bockstein: Mapping[int, FgaHom] = field(default_factory=dict)
    sq1: Mapping[int, FgaHom] = field(default_factory=dict)
    sq2: Mapping[int, FgaHom] = field(default_factory=dict)
    cup: Mapping[tuple[int, int], CupTable] = field(default_factory=dict)
    cup2: Mapping[tuple[int, int], CupTable] = field(default_factory=dict)

    def __post_init__(self):
        for k, G in self.H2.items():
            if G.rank or any(d != 2 for d in G.torsion):
                raise ModelError(f"H2mod2[{k}] = {G} is not an F2-vector space")
        checks = [
            ("rho2", self.rho2, lambda k: (self.group(k), self.group2(k))),
            ("bockstein", self.bockstein, lambda k: (self.group2(k), self.group(k + 1))),
            ("sq1", self.sq1, lambda k: (self.group2(k), self.group2(k + 1))),
            ("sq2", self.sq2, lambda k: (self.group2(k), self.group2(k + 2))),
        ]
        for name, maps, ends in checks:
            for k, f in maps.items():
                src, tgt = ends(k)
                if f.source != src or f.target != tgt:
                    raise ModelError(f"{name}[{k}] should map {src} -> {tgt}, got {f.source} -> {f.target}")
        for name, tables, grp in (("cup", self.cup, self.group), ("cup2", self.cup2, self.group2)):
            for (p, q), t in tables.items():
                if (t.left, t.right, t.target) != (grp(p), grp(q), grp(p + q)):
                    raise ModelError(f"{name}[{p},{q}] has the wrong groups")

    def group(self, k: int) -> FgaGroup:
        return self.H.get(k, TRIVIAL)

    def group2(self, k: int) -> FgaGroup:
        return self.H2.get(k, TRIVIAL)

    def _table(self, tables, p: int, q: int, integral: bool) -> CupTable | None:
        if (p, q) in tables:
            return tables[(p, q)]
        if (q, p) in tables:
            sign = -1 if (integral and p % 2 and q % 2) else 1
            return tables[(q, p)].transpose(sign)
        return None

    def _cup(self, tables, grp, p, q, x, y, integral, name) -> FgaElement:
        target = grp(p + q)
        if p + q > self.dim or target.is_trivial:
            return target.zero()
        t = self._table(tables, p, q, integral)
        if t is None:
            if x.is_zero() or y.is_zero():
                return target.zero()
            raise ModelError(f"model has no {name} table in bidegree ({p},{q})")
        return t(x, y)

    def cup_product(self, p: int, q: int, x: FgaElement, y: FgaElement) -> FgaElement:
        return self._cup(self.cup, self.group, p, q, x, y, True, "cup")

    def cup2_product(self, p: int, q: int, x: FgaElement, y: FgaElement) -> FgaElement:
        return self._cup(self.cup2, self.group2, p, q, x, y, False, "cup2")

    def has_cup(self, p: int, q: int) -> bool:
        return (p, q) in self.cup or (q, p) in self.cup

    def has_cup2(self, p: int, q: int) -> bool:
        return (p, q) in self.cup2 or (q, p) in self.cup2

    def reduce2(self, k: int, x: FgaElement) -> FgaElement:
        if self.group2(k).is_trivial:
            return self.group2(k).zero()
        if k not in self.rho2:
            raise ModelError(f"model has no rho2 in degree {k}")
        return self.rho2[k](x)

    def apply(self, name: str, k: int, x: FgaElement) -> FgaElement:
        maps = getattr(self, name)
        shift = {"bockstein": 1, "sq1": 1, "sq2": 2}[name]
        target = self.group(k + 1) if name == "bockstein" else self.group2(k + shift)
        if target.is_trivial:
            return target.zero()
        if k not in maps:
            raise ModelError(f"model has no {name} in degree {k}")
        return maps[k](x)


@dataclass(frozen=True)
class SpincManifold:
    model: CohomologyModel
    w2M: FgaElement
    l0: FgaElement | None = None

    def __post_init__(self):
        if self.w2M.group != self.model.group2(2):
            raise ModelError("w2M must live in H^2(M; Z/2)")
        if self.l0 is not None and self.l0.group != self.model.group(2):
            raise ModelError("l0 must live in H^2(M; Z)")

    @property
    def dim(self) -> int:
        return self.model.dim

    @property
    def is_spin(self) -> bool:
        return self.w2M.is_zero()

    def H(self, k: int) -> FgaGroup:
        return self.model.group(k)

    def H2(self, k: int) -> FgaGroup:
        return self.model.group2(k)

    def rho2(self, k: int, x: FgaElement) -> FgaElement:
        return self.model.reduce2(k, x)

    def cup(self, p: int, q: int, x: FgaElement, y: FgaElement) -> FgaElement:
        return self.model.cup_product(p, q, x, y)

    def square(self, x: FgaElement) -> FgaElement:
        return self.cup(2, 2, x, x)

    def cube(self, x: FgaElement) -> FgaElement:
        return self.cup(2, 4, x, self.square(x))

    def is_lift(self, l: FgaElement, w2: FgaElement | None = None) -> bool:
        w2 = self.w2M if w2 is None else w2
        return self.rho2(2, l) == w2

    def lifts(self) -> list[FgaElement]:
        """Representatives ``l0 + 2m`` of all spin^c lifts modulo ``4 H^2``."""
        from .fga import quotient_reps

        if self.l0 is None:
            raise ModelError("manifold has no stored spin^c lift l0")
        return [self.l0 + 2 * m for m in quotient_reps(self.H(2), 2)]


# ---------------------------------------------------------------------------
# bundles


@dataclass(frozen=True)
class BundleDescriptor:
    rank: int
    w2: FgaElement
    l_ref: FgaElement
    q1_ref: FgaElement
    euler: FgaElement | None = None

    @property
    def is_spin(self) -> bool:
        return self.w2.is_zero()


def make_bundle(
    M: SpincManifold,
    rank: int,
    w2: FgaElement,
    l_ref: FgaElement,
    q1_ref: FgaElement,
    euler: FgaElement | None = None,
) -> BundleDescriptor:
    """Validated :class:`BundleDescriptor` over ``M``."""
    if rank not in (6, 7):
        raise ModelError(f"bundle rank must be 6 or 7, got {rank}")
    expected = {"w2": (w2, M.H2(2)), "l_ref": (l_ref, M.H(2)), "q1_ref": (q1_ref, M.H(4))}
    for name, (x, G) in expected.items():
        if x.group != G:
            raise ModelError(f"{name} must live in {G}, got an element of {x.group}")
    if rank == 6:
        if euler is None:
            raise ModelError("a rank-6 bundle needs an Euler class")
        if euler.group != M.H(6):
            raise ModelError(f"euler must live in H^6 = {M.H(6)}")
    elif euler is not None:
        # odd rank: e is 2-torsion in H^7 = Z, hence zero
        raise ModelError("a rank-7 bundle carries no Euler class")
    if M.rho2(2, l_ref) != w2:
        raise LiftError("rho2(l_ref) != w2")
    return BundleDescriptor(rank, w2, l_ref, q1_ref, euler)


def _shift(M: SpincManifold, l: FgaElement, m: FgaElement) -> FgaElement:
    """``-2lm - 2m^2``."""
    return -2 * (M.cup(2, 2, l, m) + M.cup(2, 2, m, m))


def lift_difference(M: SpincManifold, xi: BundleDescriptor, l: FgaElement) -> FgaElement:
    """The ``m`` with ``l = l_ref + 2m``."""
    if l.group != M.H(2):
        raise ModelError("lift must live in H^2(M; Z)")
    if M.rho2(2, l) != xi.w2:
        raise LiftError("l is not an integral lift of w2(xi)")
    ok, m = in_multiple(l - xi.l_ref, 2)
    if not ok:
        raise ModelError("rho2(l) = rho2(l_ref) but l - l_ref is not in 2H^2: the rho2 table has kernel larger than 2H^2")
    return m


def q1_at(M: SpincManifold, xi: BundleDescriptor, l: FgaElement) -> FgaElement:
    """``q1(xi; l)`` for any integral lift ``l`` of ``w2(xi)``."""
    m = lift_difference(M, xi, l)
    return xi.q1_ref + _shift(M, xi.l_ref, m)


def gauge(M: SpincManifold, xi: BundleDescriptor, m: FgaElement) -> BundleDescriptor:
    """Same bundle, described relative to the lift ``l_ref + 2m``."""
    return replace(xi, l_ref=xi.l_ref + 2 * m, q1_ref=xi.q1_ref + _shift(M, xi.l_ref, m))


def p1_of_bundle(M: SpincManifold, xi: BundleDescriptor) -> FgaElement:
    return 2 * xi.q1_ref + M.square(xi.l_ref)


def w4_of_bundle(M: SpincManifold, xi: BundleDescriptor) -> FgaElement:
    return M.rho2(4, xi.q1_ref)


def tangent_w4(M: SpincManifold) -> FgaElement:
    """``w4(M) = w2(M)^2`` (Wu's formula on a spin^c manifold of dimension <= 7)."""
    if M.H2(2).is_trivial or M.H2(4).is_trivial:
        return M.H2(4).zero()
    if not M.model.has_cup2(2, 2):
        raise ModelError("tangent_w4 needs the mod-2 cup table in bidegree (2,2)")
    return M.model.cup2_product(2, 2, M.w2M, M.w2M)


def normal_w4(M: SpincManifold) -> FgaElement:
    """``w4`` of the normal bundle of any immersion of ``M``; always zero."""
    return M.H2(4).zero()


# ---------------------------------------------------------------------------
# validation


def _quotient_basis_injective(f: FgaHom) -> bool:
    """Is ``H/2H -> target`` injective?  Equivalent to ``ker f == 2H``."""
    G = f.source
    basis = [i for i, o in enumerate(G.orders) if o == 0 or o % 2 == 0]
    vecs = [[c % 2 for c in f.matrix[i]] for i in basis]
    return _rank_f2(vecs) == len(basis)


def _rank_f2(vecs: list[list[int]]) -> int:
    rows = [v[:] for v in vecs]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                rows[r] = [(a + b) % 2 for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def validate_model(M: SpincManifold) -> list[str]:
    """List every violated consistency condition; an empty list means usable."""
    model = M.model
    issues: list[str] = []
    if model.dim not in (6, 7):
        issues.append(f"dim must be 6 or 7, got {model.dim}")

    for name in ("rho2", "bockstein", "sq1", "sq2"):
        for k, f in getattr(model, name).items():
            bad = f.ill_defined_generators()
            if bad:
                issues.append(f"{name}[{k}] is not well defined on torsion generators {bad}")
    for name in ("cup", "cup2"):
        for (p, q), t in getattr(model, name).items():
            bad = t.ill_defined_entries()
            if bad:
                issues.append(f"{name}[{p},{q}] is not bilinear on torsion at entries {bad}")

    for name, tables in (("cup", model.cup), ("cup2", model.cup2)):
        t = tables.get((2, 2))
        if t is not None:
            n = t.left.ngens
            for i in range(n):
                for j in range(i + 1, n):
                    if t.target.reduce(t.table[i][j]) != t.target.reduce(t.table[j][i]):
                        issues.append(f"{name}[2,2] is not commutative at ({i},{j})")

    for k, f in model.rho2.items():
        if not _quotient_basis_injective(f):
            issues.append(f"rho2[{k}] has kernel larger than 2H^{k}")
        if k in model.bockstein:
            comp = model.bockstein[k].compose(f)
            if not comp.is_zero():
                issues.append(f"bockstein[{k}] o rho2[{k}] is not zero")

    for k, s1 in model.sq1.items():
        if model.group(k + 1).is_trivial:
            expected = FgaHom.zero(s1.source, s1.target)
        elif k in model.bockstein and (k + 1) in model.rho2:
            expected = model.rho2[k + 1].compose(model.bockstein[k])
        else:
            continue
        if expected != s1:
            issues.append(f"sq1[{k}] != rho2[{k + 1}] o bockstein[{k}]")

    for p, q in ((2, 2), (2, 4)):
        if model.has_cup(p, q) and model.has_cup2(p, q) and p in model.rho2 and q in model.rho2 and (p + q) in model.rho2:
            for x in model.group(p).gens():
                for y in model.group(q).gens():
                    lhs = model.reduce2(p + q, model.cup_product(p, q, x, y))
                    rhs = model.cup2_product(p, q, model.reduce2(p, x), model.reduce2(q, y))
                    if lhs != rhs:
                        issues.append(f"rho2 is not multiplicative on cup[{p},{q}] for generators {x.coords}, {y.coords}")

    g2 = model.group2(2)
    if 2 in model.sq2 and model.has_cup2(2, 2):
        for x in g2.gens():
            if model.sq2[2](x) != model.cup2_product(2, 2, x, x):
                issues.append(f"sq2[2] differs from squaring on generator {x.coords}")

    issues.extend(_cartan_issues(model))

    if M.w2M.group != g2:
        issues.append("w2M is not in H^2(M; Z/2)")
    if M.l0 is not None and M.rho2(2, M.l0) != M.w2M:
        issues.append("rho2(l0) != w2M")
    if 2 in model.sq1 and not model.sq1[2](M.w2M).is_zero():
        issues.append("Sq^1 w2M != 0, so w3(M) != 0 and M is not spin^c")
    if model.dim == 6 and 4 in model.sq2 and model.has_cup2(2, 4):
        # Wu: Sq^2 on H^4 of a closed 6-manifold is multiplication by v2 = w2
        for x in model.group2(4).gens():
            if model.sq2[4](x) != model.cup2_product(2, 4, M.w2M, x):
                issues.append(f"sq2[4] violates the Wu relation Sq^2 x = w2 x on generator {x.coords}")
    return issues


def _cartan_issues(model: CohomologyModel) -> list[str]:
    """``Sq^2(xy) = Sq^2x y + Sq^1x Sq^1y + x Sq^2y`` for ``x, y`` in degree 2."""
    if 4 not in model.sq2 or not model.has_cup2(2, 2) or not model.has_cup2(2, 4):
        return []
    sq1_zero = 2 not in model.sq1 or model.sq1[2].is_zero() or model.group2(3).is_trivial
    if 2 not in model.sq1 and not model.group2(3).is_trivial:
        return []
    if not sq1_zero and not model.has_cup2(3, 3):
        return []
    out = []
    gens = model.group2(2).gens()
    for i, x in enumerate(gens):
        for y in gens[i:]:
            lhs = model.sq2[4](model.cup2_product(2, 2, x, y))
            x2 = model.cup2_product(2, 2, x, x)
            y2 = model.cup2_product(2, 2, y, y)
            rhs = model.cup2_product(4, 2, x2, y) + model.cup2_product(2, 4, x, y2)
            if not sq1_zero:
                rhs = rhs + model.cup2_product(3, 3, model.sq1[2](x), model.sq1[2](y))
            if lhs != rhs:
                out.append(f"Cartan formula fails for Sq^2 of the product of generators {x.coords}, {y.coords}")
    return out


def unlocked_decisions(M: SpincManifold) -> list[str]:
    """Names of decision procedures whose required tables are present."""
    model = M.model
    need_22 = model.has_cup(2, 2) or M.H(2).is_trivial or M.H(4).is_trivial
    need_24 = model.has_cup(2, 4) or M.H(2).is_trivial or M.H(6).is_trivial
    out = []
    if need_22:
        out += ["iso", "sections", "sp1_menu", "g2_reduce", "prop_7u3"] if model.dim == 7 else ["iso", "cor6_cases"]
        out.append("reduce_u2")
        if model.dim == 7:
            out.append("reduce_so3")
    if model.dim == 6 and need_22 and need_24:
        out.append("reduce_u2 (Euler condition)")
    if (4 in model.sq2 or M.H2(6).is_trivial) and (need_24 or model.has_cup2(2, 4)):
        out.append("exists_u3")
    if model.has_cup2(2, 2) or M.H2(2).is_trivial:
        out.append("tangent_w4")
    out.append("exists_u2")
    return out
