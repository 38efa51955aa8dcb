"""JSON reading and writing for manifold models, bundles and lifts.

Manifold files::

    {"dim": 7,
     "H": {"2": {"rank": 1, "torsion": []}, ...},
     "H2mod2": {"2": {"rank": 0, "torsion": [2]}, ...},
     "rho2": {"2": [[1]]}, "bockstein": {...}, "sq1": {...}, "sq2": {"4": [[0]]},
     "cup": {"2,2": [[[1]]], "2,4": ...}, "cup2": {...},
     "w2M": [0], "l0": [0]}

Map matrices list the image of each source generator (one row per
generator).  ``cup["2,2"][i][j]`` is the coordinate vector of ``g_i g_j``.
A mod-2 group may also be given as a bare integer ``n`` meaning ``(Z/2)^n``.

Bundle files::

    {"rank": 6, "w2": [..], "l_ref": [..], "q1_ref": [..], "euler": [..]}

Errors are raised as :class:`JsonModelError` whose message starts with the
offending field path, e.g. ``cup["2,2"][0][1]: expected 1 coordinates``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .cohomodel import BundleDescriptor, CohomologyModel, CupTable, ModelError, SpincManifold, make_bundle
from .fga import FgaElement, FgaGroup, FgaHom


class JsonModelError(ModelError):
    def __init__(self, path: str, msg: str):
        self.path = path
        super().__init__(f"{path}: {msg}")


def _int(v: Any, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise JsonModelError(path, f"expected an integer, got {v!r}")
    return v


def _vector(v: Any, n: int, path: str) -> tuple[int, ...]:
    if not isinstance(v, list):
        raise JsonModelError(path, f"expected a list of {n} integers, got {v!r}")
    if len(v) != n:
        raise JsonModelError(path, f"expected {n} coordinates, got {len(v)}")
    return tuple(_int(x, f"{path}[{i}]") for i, x in enumerate(v))


def _object(v: Any, path: str) -> dict:
    if not isinstance(v, dict):
        raise JsonModelError(path, f"expected an object, got {type(v).__name__}")
    return v


def _degree(key: str, path: str, dim: int) -> int:
    try:
        k = int(key)
    except ValueError:
        raise JsonModelError(path, f"degree key {key!r} is not an integer") from None
    if not 0 <= k <= dim:
        raise JsonModelError(path, f"degree {k} outside 0..{dim}")
    return k


def _group(v: Any, path: str, mod2: bool = False) -> FgaGroup:
    if mod2 and isinstance(v, int) and not isinstance(v, bool):
        if v < 0:
            raise JsonModelError(path, "dimension must be non-negative")
        return FgaGroup(0, (2,) * v)
    obj = _object(v, path)
    extra = set(obj) - {"rank", "torsion"}
    if extra:
        raise JsonModelError(path, f"unknown fields {sorted(extra)}")
    rank = _int(obj.get("rank", 0), f"{path}.rank")
    tor = obj.get("torsion", [])
    if not isinstance(tor, list):
        raise JsonModelError(f"{path}.torsion", "expected a list")
    tor = [_int(d, f"{path}.torsion[{i}]") for i, d in enumerate(tor)]
    try:
        G = FgaGroup(rank, tuple(tor))
    except ValueError as e:
        raise JsonModelError(path, str(e)) from None
    if mod2 and (G.rank or any(d != 2 for d in G.torsion)):
        raise JsonModelError(path, f"mod-2 group must be (Z/2)^n, got {G}")
    return G


def _hom(v: Any, src: FgaGroup, tgt: FgaGroup, path: str) -> FgaHom:
    if not isinstance(v, list) or len(v) != src.ngens:
        raise JsonModelError(path, f"expected {src.ngens} rows (one per generator of {src})")
    rows = tuple(_vector(r, tgt.ngens, f"{path}[{i}]") for i, r in enumerate(v))
    return FgaHom(src, tgt, rows, check=False)


def _table(v: Any, left: FgaGroup, right: FgaGroup, target: FgaGroup, path: str) -> CupTable:
    if not isinstance(v, list) or len(v) != left.ngens:
        raise JsonModelError(path, f"expected {left.ngens} rows")
    rows = []
    for i, row in enumerate(v):
        if not isinstance(row, list) or len(row) != right.ngens:
            raise JsonModelError(f"{path}[{i}]", f"expected {right.ngens} entries")
        rows.append(tuple(_vector(x, target.ngens, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return CupTable(left, right, target, tuple(rows))


MODEL_FIELDS = {"dim", "H", "H2mod2", "rho2", "bockstein", "sq1", "sq2", "cup", "cup2", "w2M", "l0"}


def manifold_from_dict(d: Any) -> SpincManifold:
    d = _object(d, "$")
    extra = set(d) - MODEL_FIELDS
    if extra:
        raise JsonModelError("$", f"unknown fields {sorted(extra)}")
    if "dim" not in d:
        raise JsonModelError("dim", "missing")
    dim = _int(d["dim"], "dim")
    if dim not in (6, 7):
        raise JsonModelError("dim", f"must be 6 or 7, got {dim}")
    H = {_degree(k, f'H["{k}"]', dim): _group(v, f'H["{k}"]') for k, v in _object(d.get("H", {}), "H").items()}
    H2 = {
        _degree(k, f'H2mod2["{k}"]', dim): _group(v, f'H2mod2["{k}"]', mod2=True)
        for k, v in _object(d.get("H2mod2", {}), "H2mod2").items()
    }
    H = {k: G for k, G in H.items() if not G.is_trivial}
    H2 = {k: G for k, G in H2.items() if not G.is_trivial}
    grp = lambda k: H.get(k, FgaGroup())  # noqa: E731
    grp2 = lambda k: H2.get(k, FgaGroup())  # noqa: E731
    ends = {
        "rho2": lambda k: (grp(k), grp2(k)),
        "bockstein": lambda k: (grp2(k), grp(k + 1)),
        "sq1": lambda k: (grp2(k), grp2(k + 1)),
        "sq2": lambda k: (grp2(k), grp2(k + 2)),
    }
    maps: dict[str, dict[int, FgaHom]] = {}
    for name, end in ends.items():
        maps[name] = {}
        for key, v in _object(d.get(name, {}), name).items():
            path = f'{name}["{key}"]'
            k = _degree(key, path, dim)
            maps[name][k] = _hom(v, *end(k), path)
    tables: dict[str, dict] = {}
    for name, g in (("cup", grp), ("cup2", grp2)):
        tables[name] = {}
        for key, v in _object(d.get(name, {}), name).items():
            path = f'{name}["{key}"]'
            try:
                p, q = (int(s) for s in key.split(","))
            except ValueError:
                raise JsonModelError(path, "key must look like \"p,q\"") from None
            tables[name][(p, q)] = _table(v, g(p), g(q), g(p + q), path)
    try:
        model = CohomologyModel(dim=dim, H=H, H2=H2, cup=tables["cup"], cup2=tables["cup2"], **maps)
    except ModelError as e:
        raise JsonModelError("$", str(e)) from None
    if "w2M" not in d:
        raise JsonModelError("w2M", "missing")
    w2 = FgaElement(grp2(2), _vector(d["w2M"], grp2(2).ngens, "w2M"))
    l0 = None
    if d.get("l0") is not None:
        l0 = FgaElement(grp(2), _vector(d["l0"], grp(2).ngens, "l0"))
        if model.reduce2(2, l0) != w2:
            raise JsonModelError("l0", "rho2(l0) != w2M")
    return SpincManifold(model, w2, l0)


BUNDLE_FIELDS = {"rank", "w2", "l_ref", "q1_ref", "euler"}


def bundle_from_dict(M: SpincManifold, d: Any) -> BundleDescriptor:
    d = _object(d, "$")
    extra = set(d) - BUNDLE_FIELDS
    if extra:
        raise JsonModelError("$", f"unknown fields {sorted(extra)}")
    for f in ("rank", "w2", "l_ref", "q1_ref"):
        if f not in d:
            raise JsonModelError(f, "missing")
    rank = _int(d["rank"], "rank")
    if rank not in (6, 7):
        raise JsonModelError("rank", f"must be 6 or 7, got {rank}")
    w2 = FgaElement(M.H2(2), _vector(d["w2"], M.H2(2).ngens, "w2"))
    l_ref = FgaElement(M.H(2), _vector(d["l_ref"], M.H(2).ngens, "l_ref"))
    q1 = FgaElement(M.H(4), _vector(d["q1_ref"], M.H(4).ngens, "q1_ref"))
    euler = None
    if rank == 6:
        if "euler" not in d:
            raise JsonModelError("euler", "missing (required for rank 6)")
        euler = FgaElement(M.H(6), _vector(d["euler"], M.H(6).ngens, "euler"))
    elif d.get("euler") is not None:
        raise JsonModelError("euler", "rank-7 bundles carry no Euler class")
    try:
        return make_bundle(M, rank, w2, l_ref, q1, euler)
    except ModelError as e:
        raise JsonModelError("l_ref" if "rho2" in str(e) else "$", str(e)) from None


def lift_from_json(M: SpincManifold, d: Any) -> FgaElement:
    """A lift file is either a coordinate list or ``{"l": [...]}``."""
    path = "$"
    if isinstance(d, dict):
        if set(d) != {"l"}:
            raise JsonModelError("$", 'expected {"l": [...]}')
        d, path = d["l"], "l"
    return FgaElement(M.H(2), _vector(d, M.H(2).ngens, path))


def _load(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise JsonModelError(str(path), f"invalid JSON: {e}") from None


def load_manifold(path: str | Path) -> SpincManifold:
    return manifold_from_dict(_load(path))


def load_bundle(M: SpincManifold, path: str | Path) -> BundleDescriptor:
    return bundle_from_dict(M, _load(path))


def load_lift(M: SpincManifold, path: str | Path) -> FgaElement:
    return lift_from_json(M, _load(path))


# ---------------------------------------------------------------------------
# writing


def _group_dict(G: FgaGroup) -> dict:
    return {"rank": G.rank, "torsion": list(G.torsion)}


def manifold_to_dict(M: SpincManifold) -> dict:
    m = M.model
    out: dict[str, Any] = {
        "dim": m.dim,
        "H": {str(k): _group_dict(G) for k, G in sorted(m.H.items())},
        "H2mod2": {str(k): _group_dict(G) for k, G in sorted(m.H2.items())},
    }
    for name in ("rho2", "bockstein", "sq1", "sq2"):
        maps = getattr(m, name)
        if maps:
            out[name] = {str(k): [list(r) for r in f.matrix] for k, f in sorted(maps.items())}
    for name in ("cup", "cup2"):
        tables = getattr(m, name)
        if tables:
            out[name] = {f"{p},{q}": [[list(v) for v in row] for row in t.table] for (p, q), t in sorted(tables.items())}
    out["w2M"] = list(M.w2M.coords)
    if M.l0 is not None:
        out["l0"] = list(M.l0.coords)
    return out


def bundle_to_dict(xi: BundleDescriptor) -> dict:
    out = {"rank": xi.rank, "w2": list(xi.w2.coords), "l_ref": list(xi.l_ref.coords), "q1_ref": list(xi.q1_ref.coords)}
    if xi.euler is not None:
        out["euler"] = list(xi.euler.coords)
    return out
