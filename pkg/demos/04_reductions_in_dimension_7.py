# %% [markdown]
# # Structure groups of rank-7 bundles
#
# Take a spin 7-manifold with `H^4 = Z` and `H^2 = 0`, for instance
# `S^3 x S^4`.  Rank-7 spin bundles are classified by `q1 = n g`.

# %%
from pathlib import Path

from obstrukt.cohomodel import make_bundle
from obstrukt.decide import g2_reduce, reduce_so3_7, reduce_u2_7, sections_7, sp1_menu
from obstrukt.jsonio import load_manifold
from obstrukt.reps import parse_rep

DATA = Path(__file__).resolve().parent / "data"
M = load_manifold(DATA / "s3xs4.json")


def bundle(n):
    return make_bundle(M, 7, M.H2(2).zero(), M.H(2).zero(), M.H(4)(n))


# %% [markdown]
# ## Sp(1) reductions
#
# Each 7-dimensional Sp(1)-module imposes a divisibility condition on `q1`.

# %%
print("n   " + " ".join(f"{c:>4}" for c in ("i", "ii", "iii", "iv", "v", "vi", "vii")))
for n in (0, 1, 2, 3, 4, 10, 12, 28, 56):
    menu = sp1_menu(M, bundle(n))
    print(f"{n:<3} " + " ".join(f"{'yes' if d.holds else '-':>4}" for d in menu.values()))

# %% [markdown]
# ## SO(3) and U(2)

# %%
for expr in ("A3", "A2+R^2", "A1+A1+R"):
    d = reduce_so3_7(M, bundle(28), parse_rep(expr))
    print(expr, d.status, {k: v.coords for k, v in d.witnesses.items()})

d = reduce_u2_7(M, bundle(30), parse_rep("A2+L(-1)"), M.H(2).zero())
print("\n".join(d.trace))

# %% [markdown]
# ## Sections and G2

# %%
print([sections_7(M, bundle(3), k).holds for k in (1, 2, 3, 4)])
print(g2_reduce(M, bundle(3)).trace)
