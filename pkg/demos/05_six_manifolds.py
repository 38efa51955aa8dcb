# %% [markdown]
# # Rank-6 bundles over CP^3 and S^2 x S^4
#
# In rank 6 the Euler class enters the criteria.  For CP^3 the tangent
# bundle has `c = (1 + h)^4`, so `q1 = 2h^2` and `e = 4h^3`.

# %%
from obstrukt.cohomodel import make_bundle
from obstrukt.decide import cor6_cases, iso_6, reduce_u2_6
from obstrukt.fixtures import Z, Z2, cp3, cp3_tangent, s2xs4, s2xs4_tangent
from obstrukt.reps import enumerate_reps

M = cp3()
T = cp3_tangent(M)
for n, d in cor6_cases(M, T).items():
    print(n, d.status, {k: v.coords for k, v in d.witnesses.items()})

# %% [markdown]
# ## Which U(2)-representations give the tangent bundle?

# %%
for V in enumerate_reps(6, 2):
    for l in (0, 2, -2):
        d = reduce_u2_6(M, T, V, Z(l))
        if d.holds:
            print(f"{str(V):22} l = {l}h  u = {d.witnesses['u'].coords[0]}h^2")

# %% [markdown]
# ## S^2 x S^4
#
# Its tangent bundle is stably trivial with Euler characteristic 4.  Only
# the Euler class stands between it and the trivial bundle.

# %%
S = s2xs4()
t = s2xs4_tangent(S)
flat = make_bundle(S, 6, Z2(0), Z(0), Z(0), euler=Z(0))
print({n: d.holds for n, d in cor6_cases(S, t).items()})
print({n: d.holds for n, d in cor6_cases(S, flat).items()})
print("iso:", iso_6(S, t, flat).holds)
