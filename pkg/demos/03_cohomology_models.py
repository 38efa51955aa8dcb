# %% [markdown]
# # Cohomology models and bundle data
#
# A manifold is described by finite tables: the integral and mod-2 groups,
# reduction mod 2, Bockstein and Steenrod squares, and cup products on
# generators.  A bundle is `(rank, w2, l_ref, q1_ref[, euler])`.

# %%
from pathlib import Path

from obstrukt.cohomodel import gauge, p1_of_bundle, q1_at, tangent_w4, validate_model, w4_of_bundle
from obstrukt.fixtures import cp3, cp3_tangent
from obstrukt.jsonio import load_bundle, load_manifold

DATA = Path(__file__).resolve().parent / "data"

M = load_manifold(DATA / "cp3.json")
print("validation report:", validate_model(M) or "clean")
print("w4(M) =", tangent_w4(M))
assert M == cp3()

# %% [markdown]
# ## Changing the lift
#
# `q1` depends on the integral lift of `w2`; moving from `l` to `l + 2m`
# shifts it by `-2lm - 2m^2`.  `p1` and `w4` do not move.

# %%
xi = load_bundle(M, DATA / "cp3_tangent.json")
assert xi == cp3_tangent(M)
for l in (0, 2, -2, 4):
    print(f"q1(xi; {l}h) = {q1_at(M, xi, M.H(2)(l)).coords[0]} h^2")
print("p1 =", p1_of_bundle(M, xi), " w4 =", w4_of_bundle(M, xi))

# %%
moved = gauge(M, xi, M.H(2)(3))
print(moved.l_ref, moved.q1_ref, p1_of_bundle(M, moved) == p1_of_bundle(M, xi))

# %% [markdown]
# ## Broken models are reported, not silently used

# %%
import json

bad = json.loads((DATA / "cp3.json").read_text())
bad["sq2"]["2"] = [[0]]
from obstrukt.jsonio import manifold_from_dict

print(validate_model(manifold_from_dict(bad)))
