"""Finitely generated abelian groups, their elements and homomorphisms.

A group is stored in invariant-factor form ``Z^rank + Z/d_1 + ... + Z/d_t``
with ``d_1 | d_2 | ... | d_t``.  Elements are coordinate tuples on the
standard generators, torsion coordinates reduced into ``[0, d_i)``.

Everything is plain Python integers, so there is no overflow to worry
about.  The Smith normal form routine is the workhorse for solving linear
systems over these groups.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterator, Sequence

Matrix = list[list[int]]


# ---------------------------------------------------------------------------
# integer matrix helpers


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    if A and len(A[0]) != inner:
        raise ValueError(f"shape mismatch: {len(A)}x{len(A[0])} times {inner}x{cols}")
    return [[sum(row[k] * B[k][j] for k in range(inner)) for j in range(cols)] for row in A]


def matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


def det(A: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``A = U * D * W`` with ``U``, ``W`` unimodular and ``D`` diagonal.

    ``P`` and ``Q`` are the inverses of ``U`` and ``W`` so that also
    ``P * A * Q = D``; they are what the linear solvers actually use.
    """

    U: Matrix
    D: Matrix
    W: Matrix
    P: Matrix
    Q: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith(A: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form of an integer matrix.

    The diagonal entries are non-negative and form a divisibility chain.
    ``ncols`` is only needed for matrices with no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in A]
    # P accumulates row operations, U their inverses; same for columns.
    P, U = identity(m), identity(m)
    Q, W = identity(n), identity(n)

    def swap_rows(i: int, j: int) -> None:
        if i == j:
            return
        for M in (D, P):
            M[i], M[j] = M[j], M[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i: int, j: int) -> None:
        if i == j:
            return
        for M in (D, Q):
            for row in M:
                row[i], row[j] = row[j], row[i]
        W[i], W[j] = W[j], W[i]

    def add_row(src: int, dst: int, c: int) -> None:
        # row_dst += c * row_src
        if c == 0:
            return
        for M in (D, P):
            M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]
        for row in U:
            row[src] -= c * row[dst]

    def add_col(src: int, dst: int, c: int) -> None:
        # col_dst += c * col_src
        if c == 0:
            return
        for M in (D, Q):
            for row in M:
                row[dst] += c * row[src]
        W[src] = [a - c * b for a, b in zip(W[src], W[dst])]

    def negate_row(i: int) -> None:
        for M in (D, P):
            M[i] = [-a for a in M[i]]
        for row in U:
            row[i] = -row[i]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, i0, j0 = min(nonzero)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(t, i, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(t, j, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if D[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithDecomposition(U=U, D=D, W=W, P=P, Q=Q)


# ---------------------------------------------------------------------------
# groups and elements


@dataclass(frozen=True)
class FgaGroup:
    """``Z^rank`` plus cyclic torsion factors in invariant-factor form."""

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion factor {d} must be at least 2")
        for d1, d2 in zip(self.torsion, self.torsion[1:]):
            if d2 % d1:
                raise ValueError(f"torsion {list(self.torsion)} is not a divisibility chain")

    @property
    def ngens(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def orders(self) -> tuple[int, ...]:
        """Order of each generator, ``0`` for free generators."""
        return (0,) * self.rank + self.torsion

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int:
        if self.rank:
            raise ValueError("infinite group")
        return prod(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.ngens == 0

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.ngens:
            raise ValueError(f"expected {self.ngens} coordinates, got {len(coords)}")
        return tuple(int(c) % o if o else int(c) for c, o in zip(coords, self.orders))

    def __call__(self, *coords) -> "FgaElement":
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        return FgaElement(self, coords)

    def zero(self) -> "FgaElement":
        return FgaElement(self, (0,) * self.ngens)

    def gens(self) -> list["FgaElement"]:
        return [FgaElement(self, tuple(int(i == j) for j in range(self.ngens))) for i in range(self.ngens)]

    def elements(self) -> Iterator["FgaElement"]:
        """All elements of a finite group, in lexicographic coordinate order."""
        if self.rank:
            raise ValueError("cannot enumerate an infinite group")
        for c in itertools.product(*(range(d) for d in self.torsion)):
            yield FgaElement(self, c)

    def box(self, bound: int) -> Iterator["FgaElement"]:
        """Elements with free coordinates in ``[-bound, bound]`` and any torsion."""
        ranges = [range(-bound, bound + 1)] * self.rank + [range(d) for d in self.torsion]
        for c in itertools.product(*ranges):
            yield FgaElement(self, c)

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class FgaElement:
    group: FgaGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def _check(self, other: "FgaElement") -> None:
        if not isinstance(other, FgaElement):
            raise TypeError(f"cannot combine group element with {type(other).__name__}")
        if other.group != self.group:
            raise ValueError(f"elements live in different groups: {self.group} vs {other.group}")

    def __add__(self, other: "FgaElement") -> "FgaElement":
        self._check(other)
        return FgaElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FgaElement") -> "FgaElement":
        self._check(other)
        return FgaElement(self.group, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "FgaElement":
        return FgaElement(self.group, tuple(-a for a in self.coords))

    def __rmul__(self, n: int) -> "FgaElement":
        if not isinstance(n, int):
            return NotImplemented
        return FgaElement(self.group, tuple(n * a for a in self.coords))

    def __mul__(self, n: int) -> "FgaElement":
        return self.__rmul__(n)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def sort_key(self) -> tuple:
        return (sum(abs(c) for c in self.coords[: self.group.rank]), self.coords)

    def __repr__(self) -> str:
        return f"FgaElement({list(self.coords)} in {self.group})"


@dataclass(frozen=True)
class FgaHom:
    """Homomorphism given by the images of the source generators.

    ``matrix[i]`` is the coordinate vector of the image of generator ``i``.
    """

    source: FgaGroup
    target: FgaGroup
    matrix: tuple[tuple[int, ...], ...]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(self.target.reduce(tuple(r)) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if len(rows) != self.source.ngens:
            raise ValueError(f"need {self.source.ngens} generator images, got {len(rows)}")
        if self.check:
            bad = self.ill_defined_generators()
            if bad:
                raise ValueError(f"homomorphism not well defined on torsion generators {bad}")

    @classmethod
    def zero(cls, source: FgaGroup, target: FgaGroup) -> "FgaHom":
        return cls(source, target, tuple((0,) * target.ngens for _ in range(source.ngens)))

    @classmethod
    def scalar(cls, G: FgaGroup, n: int) -> "FgaHom":
        """Multiplication by ``n`` on ``G``."""
        return cls(G, G, tuple(tuple(n * int(i == j) for j in range(G.ngens)) for i in range(G.ngens)))

    def ill_defined_generators(self) -> list[int]:
        out = []
        for i, o in enumerate(self.source.orders):
            if o and any(self.target.reduce(tuple(o * c for c in self.matrix[i]))):
                out.append(i)
        return out

    def __call__(self, x: FgaElement) -> FgaElement:
        if x.group != self.source:
            raise ValueError(f"element of {x.group} given to map with source {self.source}")
        y = [0] * self.target.ngens
        for c, row in zip(x.coords, self.matrix):
            if c:
                for j, v in enumerate(row):
                    y[j] += c * v
        return FgaElement(self.target, tuple(y))

    def compose(self, first: "FgaHom") -> "FgaHom":
        """``self o first``."""
        if first.target != self.source:
            raise ValueError("maps are not composable")
        return FgaHom(first.source, self.target, tuple(self(FgaElement(self.source, r)).coords for r in first.matrix))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)


# ---------------------------------------------------------------------------
# divisibility and linear systems


def _cyclic_divide(x: int, n: int, d: int) -> int | None:
    """Some y with n*y = x mod d, or None."""
    g = gcd(n, d)
    if x % g:
        return None
    dd = d // g
    if dd == 1:
        return 0
    return (x // g) * pow(n // g, -1, dd) % dd


def in_multiple(x: FgaElement, n: int) -> tuple[bool, FgaElement | None]:
    """Decide ``x in n*G``; the witness ``y`` satisfies ``n*y == x``.

    ``n = 0`` is read as "x is zero".
    """
    G = x.group
    if n == 0:
        return (x.is_zero(), G.zero() if x.is_zero() else None)
    m = abs(n)
    y = []
    for c, o in zip(x.coords, G.orders):
        if o == 0:
            if c % m:
                return False, None
            y.append(c // m)
        else:
            v = _cyclic_divide(c, m, o)
            if v is None:
                return False, None
            y.append(v)
    w = FgaElement(G, tuple(y))
    return True, (w if n > 0 else -w)


def multiple_subgroup_key(x: FgaElement, n: int) -> tuple[int, ...]:
    """Canonical coset label of ``x`` in ``G / nG`` (``n >= 1``)."""
    return tuple(c % n if o == 0 else c % gcd(n, o) for c, o in zip(x.coords, x.group.orders))


def quotient_reps(G: FgaGroup, n: int) -> list[FgaElement]:
    """One representative per coset of ``nG`` in ``G``."""
    if n <= 0:
        raise ValueError("quotient_reps needs n >= 1")
    ranges = [range(n)] * G.rank + [range(gcd(n, d)) for d in G.torsion]
    return [FgaElement(G, c) for c in itertools.product(*ranges)]


def solve_hom(f: FgaHom, b: FgaElement) -> tuple[bool, FgaElement | None, list[FgaElement]]:
    """Solve ``f(x) = b``.

    Returns ``(solvable, particular, kernel_gens)``.  The full solution set
    is ``particular + <kernel_gens>``; the kernel generators are returned
    even when the system is unsolvable.
    """
    if b.group != f.target:
        raise ValueError("right-hand side is not in the target group")
    S, T = f.source, f.target
    s = S.ngens
    # Unknowns: lifts of x (s of them) plus one multiplier per target torsion
    # generator, for the relation d_i * e_i = 0 in the target.
    tors_rows = [i for i, o in enumerate(T.orders) if o]
    A = [[f.matrix[j][i] for j in range(s)] + [T.orders[i] if i == r else 0 for r in tors_rows] for i in range(T.ngens)]
    ncols = s + len(tors_rows)
    snf = smith(A, ncols=ncols)
    diag = snf.diagonal
    c = matvec(snf.P, b.coords)
    y = [0] * ncols
    solvable = True
    for i, ci in enumerate(c):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if ci != 0:
                solvable = False
                break
        elif ci % di:
            solvable = False
            break
        else:
            y[i] = ci // di
    r = snf.rank
    kernel: list[FgaElement] = []
    seen = set()
    for k in range(r, ncols):
        col = [snf.Q[i][k] for i in range(ncols)]
        g = FgaElement(S, tuple(col[:s]))
        if not g.is_zero() and g.coords not in seen:
            seen.add(g.coords)
            kernel.append(g)
    if not solvable:
        return False, None, kernel
    z = matvec(snf.Q, y)
    return True, FgaElement(S, tuple(z[:s])), kernel


def span(gens: Sequence[FgaElement], G: FgaGroup, limit: int = 1_000_000) -> list[FgaElement]:
    """All elements of the finite subgroup generated by ``gens``."""
    seen = {G.zero().coords: G.zero()}
    frontier = [G.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                for h in (x + g, x - g):
                    if h.coords not in seen:
                        if len(seen) >= limit:
                            raise ValueError("subgroup is too large (or infinite) to enumerate")
                        seen[h.coords] = h
                        nxt.append(h)
        frontier = nxt
    return sorted(seen.values(), key=FgaElement.sort_key)
