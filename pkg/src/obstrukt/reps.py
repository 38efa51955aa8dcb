"""Real representations of U(2) as multisets of irreducible summands.

Two kinds of irreducible real summand occur:

* ``RealForm(i)`` -- the real form ``A_i`` of ``V_{2i,-i}``, dimension
  ``2i + 1``.  ``A_0`` is the trivial line ``R``.
* ``Realified(j, k)`` -- ``V_{j,k} = S^j E (x) L^k`` viewed as a real
  representation, dimension ``2j + 2``.

``V_{j,k}`` and its conjugate ``V_{j,-j-k}`` are isomorphic over R.  The
canonical representative has ``2k + j < 0``; the self-conjugate case
``2k + j = 0`` is split into ``A_i + A_i``.

SO(3) representations are exactly those made of ``RealForm`` summands.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Union


@dataclass(frozen=True, order=True)
class RealForm:
    i: int

    def __post_init__(self):
        if self.i < 0:
            raise ValueError(f"A_i needs i >= 0, got {self.i}")

    @property
    def dim(self) -> int:
        return 2 * self.i + 1

    def __str__(self) -> str:
        return "R" if self.i == 0 else f"A{self.i}"


@dataclass(frozen=True, order=True)
class Realified:
    j: int
    k: int

    def __post_init__(self):
        if self.j < 0:
            raise ValueError(f"V_(j,k) needs j >= 0, got {self.j}")

    @property
    def dim(self) -> int:
        return 2 * self.j + 2

    @property
    def is_canonical(self) -> bool:
        return 2 * self.k + self.j < 0

    def conjugate(self) -> "Realified":
        return Realified(self.j, -self.j - self.k)

    def __str__(self) -> str:
        if self.j == 0:
            return f"L({self.k})"
        if self.j == 1:
            return f"E({self.k})"
        if self.j == 2:
            return f"A1xL({self.k + 1})"
        return f"V({self.j},{self.k})"


IrreducibleSummand = Union[RealForm, Realified]


class WeightVector(NamedTuple):
    """The torus weight ``alpha*x1 + beta*x2``."""

    alpha: int
    beta: int

    def __neg__(self) -> "WeightVector":
        return WeightVector(-self.alpha, -self.beta)


def _summand_key(s: IrreducibleSummand) -> tuple:
    # A_i summands first (largest first), then realified ones by j descending
    if isinstance(s, RealForm):
        return (0, -s.i, 0)
    return (1, -s.j, s.k)


@dataclass(frozen=True)
class RealRep:
    """Canonical multiset of irreducible summands; build with :func:`canonicalize`."""

    summands: tuple[IrreducibleSummand, ...]

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    @property
    def is_so3(self) -> bool:
        """True when every summand is an ``A_i`` (the representation factors through SO(3))."""
        return all(isinstance(s, RealForm) for s in self.summands)

    def __add__(self, other: "RealRep") -> "RealRep":
        return canonicalize(list(self.summands) + list(other.summands))

    def __str__(self) -> str:
        return "+".join(str(s) for s in self.summands) if self.summands else "0"

    def counts(self) -> Counter:
        return Counter(self.summands)


# raw input kinds accepted by canonicalize, besides the two summand classes
RAW_KINDS = ("RealForm", "Realified", "Trivial", "LPower", "ETensorL", "A1TensorL")


def _canonical_parts(s: IrreducibleSummand) -> list[IrreducibleSummand]:
    if isinstance(s, RealForm):
        return [s]
    if 2 * s.k + s.j > 0:
        s = s.conjugate()
    if 2 * s.k + s.j == 0:
        if s.j % 2:
            raise AssertionError("unreachable: 2k + j = 0 with j odd")
        return [RealForm(s.j // 2)] * 2
    return [s]


def _from_raw(item) -> IrreducibleSummand:
    if isinstance(item, (RealForm, Realified)):
        return item
    kind, *params = item if isinstance(item, (tuple, list)) else (item,)
    params = [int(p) for p in params]
    if kind == "RealForm":
        return RealForm(*params)
    if kind == "Realified":
        return Realified(*params)
    if kind == "Trivial":
        return RealForm(0)
    if kind == "LPower":
        return Realified(0, params[0])
    if kind == "ETensorL":
        return Realified(1, params[0])
    if kind == "A1TensorL":
        return Realified(2, params[0] - 1)
    raise ValueError(f"unknown summand kind {kind!r}; expected one of {RAW_KINDS}")


def raw_summands(raw: Iterable) -> list[IrreducibleSummand]:
    """Summand objects for ``raw`` as written, without choosing conjugates.

    The complex structure of each realified summand orients it, which is
    what fixes the sign of an Euler class.
    """
    return [_from_raw(item) for item in raw]


def canonicalize(raw: Iterable) -> RealRep:
    """Build the canonical :class:`RealRep` from summands or ``(kind, *params)`` tuples.

    >>> str(canonicalize([("A1TensorL", 1)]))
    'A1xL(-1)'
    >>> str(canonicalize([("Realified", 2, -1)]))
    'A1+A1'
    """
    parts: list[IrreducibleSummand] = []
    for item in raw:
        parts.extend(_canonical_parts(_from_raw(item)))
    return RealRep(tuple(sorted(parts, key=_summand_key)))


def summand_weights(s: IrreducibleSummand) -> list[WeightVector]:
    """Weights of the complexification of one summand."""
    if isinstance(s, RealForm):
        return [WeightVector(s.i - r, r - s.i) for r in range(2 * s.i + 1)]
    w = [WeightVector(s.j - r + s.k, r + s.k) for r in range(s.j + 1)]
    return w + [-v for v in w]


def complex_weights(s: Realified) -> list[WeightVector]:
    """Weights of ``V_{j,k}`` itself (one of each conjugate pair)."""
    return [WeightVector(s.j - r + s.k, r + s.k) for r in range(s.j + 1)]


def complexified_weights(V: RealRep) -> list[WeightVector]:
    """Weight multiset of ``C (x) V``, sorted."""
    out = []
    for s in V.summands:
        out.extend(summand_weights(s))
    return sorted(out)


def _irreducibles(max_dim: int, k_bound: int) -> list[IrreducibleSummand]:
    out: list[IrreducibleSummand] = [RealForm(i) for i in range((max_dim - 1) // 2 + 1)]
    for j in range((max_dim - 2) // 2 + 1):
        for k in range(-j - k_bound, k_bound + 1):
            s = Realified(j, k)
            # either conjugate representative may carry the bounded parameter
            if s.is_canonical and min(abs(k), abs(j + k)) <= k_bound:
                out.append(s)
    return sorted(out, key=_summand_key)


def enumerate_reps(dim: int, k_bound: int) -> list[RealRep]:
    """All canonical real representations of dimension ``dim`` (1..7) with bounded twist."""
    if not 1 <= dim <= 7:
        raise ValueError(f"unsupported dimension {dim}; enumeration covers 1..7")
    if k_bound < 0:
        raise ValueError("k_bound must be non-negative")
    irr = _irreducibles(dim, k_bound)
    reps: list[RealRep] = []

    def rec(start: int, remaining: int, acc: list[IrreducibleSummand]) -> None:
        if remaining == 0:
            reps.append(RealRep(tuple(acc)))
            return
        for idx in range(start, len(irr)):
            s = irr[idx]
            if s.dim <= remaining:
                rec(idx, remaining - s.dim, acc + [s])

    rec(0, dim, [])
    return reps


# ---------------------------------------------------------------------------
# textual syntax

_TOKEN = re.compile(
    r"""^(?:
        (?P<R>R)
      | A(?P<A>\d+)(?:xL\((?P<AL>[+-]?\d+)\))?
      | L\((?P<L>[+-]?\d+)\)
      | E\((?P<E>[+-]?\d+)\)
      | V\((?P<Vj>\d+),(?P<Vk>[+-]?\d+)\)
    )$""",
    re.VERBOSE,
)


def parse_rep(text: str) -> RealRep:
    """Parse ``"A1+L(2)+L(-1)+R"`` style expressions.

    Tokens: ``R``, ``A<i>``, ``L(<k>)``, ``E(<s>)``, ``A1xL(<s>)`` and the
    general ``V(<j>,<k>)``.  A ``^n`` suffix repeats a token, so ``R^7``
    is seven trivial lines.
    """
    raw: list = []
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty representation expression")
    for tok in cleaned.split("+"):
        rep = 1
        if "^" in tok:
            tok, _, n = tok.partition("^")
            if not n.isdigit() or int(n) < 1:
                raise ValueError(f"bad repeat count in {tok}^{n!r}")
            rep = int(n)
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"cannot parse summand {tok!r} in {text!r}")
        if m["R"]:
            item = ("Trivial",)
        elif m["A"] is not None and m["AL"] is not None:
            if m["A"] != "1":
                raise ValueError(f"only A1xL(s) is supported, got {tok!r}")
            item = ("A1TensorL", int(m["AL"]))
        elif m["A"] is not None:
            item = ("RealForm", int(m["A"]))
        elif m["L"] is not None:
            item = ("LPower", int(m["L"]))
        elif m["E"] is not None:
            item = ("ETensorL", int(m["E"]))
        else:
            item = ("Realified", int(m["Vj"]), int(m["Vk"]))
        raw.extend([item] * rep)
    return canonicalize(raw)
