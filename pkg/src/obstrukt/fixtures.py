"""Ready-made cohomology models.

``cp3``, ``s2xs4`` and ``s7`` are the standard rings.  ``synthetic_model``
builds a consistent model from integral groups alone by the universal
coefficient theorem (``H^k(;Z/2) = H^k/2 + Tor(H^{k+1}, Z/2)``), which is
what the randomized tests use.
"""
from __future__ import annotations

import random
from math import gcd
from typing import Mapping

from .cohomodel import BundleDescriptor, CohomologyModel, CupTable, SpincManifold, make_bundle
from .fga import FgaElement, FgaGroup, FgaHom

Z = FgaGroup(1)
Z2 = FgaGroup(0, (2,))


def _one(G: FgaGroup, *coords) -> FgaElement:
    return FgaElement(G, coords)


def _hom(src: FgaGroup, tgt: FgaGroup, rows) -> FgaHom:
    return FgaHom(src, tgt, tuple(tuple(r) for r in rows), check=False)


def cp3() -> SpincManifold:
    """``H*(CP^3) = Z[h]/h^4``.  Spin, since ``c1 = 4h``."""
    H = {0: Z, 2: Z, 4: Z, 6: Z}
    H2 = {0: Z2, 2: Z2, 4: Z2, 6: Z2}
    model = CohomologyModel(
        dim=6,
        H=H,
        H2=H2,
        rho2={k: _hom(Z, Z2, [[1]]) for k in (0, 2, 4, 6)},
        sq2={2: _hom(Z2, Z2, [[1]]), 4: _hom(Z2, Z2, [[0]])},  # Sq^2 h = h^2, Sq^2 h^2 = 2h^3
        cup={(2, 2): CupTable(Z, Z, Z, (((1,),),)), (2, 4): CupTable(Z, Z, Z, (((1,),),))},
        cup2={(2, 2): CupTable(Z2, Z2, Z2, (((1,),),)), (2, 4): CupTable(Z2, Z2, Z2, (((1,),),))},
    )
    return SpincManifold(model, w2M=Z2.zero(), l0=Z.zero())


def cp3_tangent(M: SpincManifold | None = None) -> BundleDescriptor:
    """Tangent bundle of CP^3: ``c = (1+h)^4``, so ``p1 = 4h^2``, ``q1 = 2h^2``, ``e = 4h^3``."""
    M = M or cp3()
    return make_bundle(M, 6, Z2.zero(), Z.zero(), _one(Z, 2), euler=_one(Z, 4))


def s2xs4() -> SpincManifold:
    """``H*(S^2 x S^4)`` with generators ``a`` (deg 2), ``b`` (deg 4), ``a^2 = 0``."""
    H = {0: Z, 2: Z, 4: Z, 6: Z}
    H2 = {0: Z2, 2: Z2, 4: Z2, 6: Z2}
    model = CohomologyModel(
        dim=6,
        H=H,
        H2=H2,
        rho2={k: _hom(Z, Z2, [[1]]) for k in (0, 2, 4, 6)},
        sq2={2: _hom(Z2, Z2, [[0]]), 4: _hom(Z2, Z2, [[0]])},
        cup={(2, 2): CupTable(Z, Z, Z, (((0,),),)), (2, 4): CupTable(Z, Z, Z, (((1,),),))},
        cup2={(2, 2): CupTable(Z2, Z2, Z2, (((0,),),)), (2, 4): CupTable(Z2, Z2, Z2, (((1,),),))},
    )
    return SpincManifold(model, w2M=Z2.zero(), l0=Z.zero())


def s2xs4_tangent(M: SpincManifold | None = None) -> BundleDescriptor:
    """Stably trivial, Euler characteristic 4."""
    M = M or s2xs4()
    return make_bundle(M, 6, Z2.zero(), Z.zero(), Z.zero(), euler=_one(Z, 4))


def s7() -> SpincManifold:
    model = CohomologyModel(dim=7, H={0: Z, 7: Z}, H2={0: Z2, 7: Z2}, rho2={0: _hom(Z, Z2, [[1]]), 7: _hom(Z, Z2, [[1]])})
    T = FgaGroup()
    return SpincManifold(model, w2M=T.zero(), l0=T.zero())


def trivial_bundle(M: SpincManifold, rank: int | None = None) -> BundleDescriptor:
    rank = rank or M.dim
    return make_bundle(
        M,
        rank,
        M.H2(2).zero(),
        M.H(2).zero(),
        M.H(4).zero(),
        euler=M.H(6).zero() if rank == 6 else None,
    )


# ---------------------------------------------------------------------------
# synthetic models


def synthetic_model(
    dim: int,
    H: Mapping[int, FgaGroup],
    cup: Mapping[tuple[int, int], tuple] | None = None,
    l0: tuple[int, ...] | None = None,
) -> SpincManifold:
    """Model determined by integral groups and integral cup tables.

    Mod-2 groups, ``rho2``, Bockstein and ``Sq^1`` follow from the universal
    coefficient sequence.  ``w2M`` is ``rho2(l0)`` (``l0 = 0`` by default).
    No mod-2 cup tables or ``Sq^2`` are supplied.
    """
    H = {k: G for k, G in H.items() if not G.is_trivial}
    grp = lambda k: H.get(k, FgaGroup())  # noqa: E731
    H2: dict[int, FgaGroup] = {}
    rho2, bock, sq1 = {}, {}, {}
    layout: dict[int, tuple[list[int], list[int]]] = {}
    for k in range(dim + 1):
        G, G1 = grp(k), grp(k + 1)
        reduced = [i for i, o in enumerate(G.orders) if o == 0 or o % 2 == 0]
        tor = [i for i, o in enumerate(G1.orders) if o and o % 2 == 0]
        layout[k] = (reduced, tor)
        n = len(reduced) + len(tor)
        if n:
            H2[k] = FgaGroup(0, (2,) * n)
    g2 = lambda k: H2.get(k, FgaGroup())  # noqa: E731
    for k in range(dim + 1):
        G, G1, M2 = grp(k), grp(k + 1), g2(k)
        reduced, tor = layout[k]
        if not G.is_trivial and not M2.is_trivial:
            rows = []
            for i in range(G.ngens):
                v = [0] * M2.ngens
                if i in reduced:
                    v[reduced.index(i)] = 1
                rows.append(v)
            rho2[k] = _hom(G, M2, rows)
        if not M2.is_trivial and not G1.is_trivial:
            rows = []
            for idx in range(M2.ngens):
                v = [0] * G1.ngens
                if idx >= len(reduced):
                    t = tor[idx - len(reduced)]
                    v[t] = G1.orders[t] // 2
                rows.append(v)
            bock[k] = _hom(M2, G1, rows)
    for k in range(dim + 1):
        src, tgt = g2(k), g2(k + 1)
        if src.is_trivial or tgt.is_trivial:
            continue
        if k in bock and (k + 1) in rho2:
            sq1[k] = rho2[k + 1].compose(bock[k])
        else:
            sq1[k] = FgaHom.zero(src, tgt)
    tables = {}
    for (p, q), t in (cup or {}).items():
        tables[(p, q)] = CupTable(grp(p), grp(q), grp(p + q), t)
    model = CohomologyModel(dim=dim, H=H, H2=H2, rho2=rho2, bockstein=bock, sq1=sq1, cup=tables)
    l0_el = FgaElement(grp(2), l0) if l0 is not None else grp(2).zero()
    w2 = model.reduce2(2, l0_el)
    return SpincManifold(model, w2M=w2, l0=l0_el)


def killed_by(G: FgaGroup, n: int, rng: random.Random, spread: int = 3) -> FgaElement:
    """Random element ``y`` of ``G`` with ``n y = 0`` (any element when ``n = 0``)."""
    coords = []
    for o in G.orders:
        if n == 0:
            coords.append(rng.randint(-spread, spread) if o == 0 else rng.randrange(o))
        elif o == 0:
            coords.append(0)
        else:
            step = o // gcd(n, o)
            coords.append(step * rng.randrange(gcd(n, o)))
    return FgaElement(G, tuple(coords))


def random_cup_table(left: FgaGroup, right: FgaGroup, target: FgaGroup, rng: random.Random, symmetric: bool = False) -> tuple:
    """Random well-defined bilinear table ``left x right -> target``."""
    table = [[None] * right.ngens for _ in range(left.ngens)]
    for i, oi in enumerate(left.orders):
        for j, oj in enumerate(right.orders):
            if symmetric and j < i:
                table[i][j] = table[j][i]
                continue
            table[i][j] = killed_by(target, gcd(oi, oj), rng).coords
    return tuple(tuple(row) for row in table)


def random_model(
    rng: random.Random,
    dim: int,
    H2: FgaGroup,
    H4: FgaGroup,
    H6: FgaGroup | None = None,
    spin: bool | None = None,
) -> SpincManifold:
    """Synthetic model with random cup tables and a random spin^c lift."""
    H = {0: Z, 2: H2, 4: H4, dim: Z}
    if H6 is not None and dim == 6:
        H[6] = H6
    cup = {(2, 2): random_cup_table(H2, H2, H4, rng, symmetric=True)}
    if dim == 6:
        cup[(2, 4)] = random_cup_table(H2, H4, H.get(6, Z), rng)
    if spin is None:
        spin = rng.random() < 0.5
    l0 = H2.zero() if spin else killed_by(H2, 0, rng)
    return synthetic_model(dim, H, cup, l0=l0.coords)


def random_bundle(M: SpincManifold, rng: random.Random, rank: int | None = None, w2_equals_M: bool = True) -> BundleDescriptor:
    """Random descriptor; by default ``w2(xi) = w2(M)`` with a random lift."""
    rank = rank or M.dim
    if w2_equals_M:
        l_ref = M.l0 + 2 * killed_by(M.H(2), 0, rng)
    else:
        l_ref = killed_by(M.H(2), 0, rng)
    w2 = M.rho2(2, l_ref)
    q1 = killed_by(M.H(4), 0, rng, spread=30)
    euler = killed_by(M.H(6), 0, rng, spread=10) if rank == 6 else None
    return make_bundle(M, rank, w2, l_ref, q1, euler)
