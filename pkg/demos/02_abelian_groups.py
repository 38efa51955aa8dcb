# %% [markdown]
# # Finitely generated abelian groups
#
# Cohomology groups are stored as `Z^r + Z/d1 + ... + Z/dt`.  Everything
# the decision procedures need reduces to three questions: is `x` in `nG`,
# what are the cosets of `nG`, and does `f(x) = b` have a solution.

# %%
from obstrukt.fga import FgaGroup, FgaHom, in_multiple, quotient_reps, smith, solve_hom, span

S = smith([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
print("diagonal", S.diagonal)

# %%
G = FgaGroup(1, (2, 12))
x = G(28, 0, 8)
for n in (0, 2, 4, 28):
    print(n, in_multiple(x, n))

# %% [markdown]
# Coset representatives of `nG` are what the finite searches run over.

# %%
print(len(quotient_reps(FgaGroup(1, (4,)), 2)), "cosets of 2(Z + Z/4)")
print(quotient_reps(FgaGroup(0, (2, 4)), 2))

# %% [markdown]
# ## Linear equations
#
# `solve_hom` returns a particular solution and kernel generators; on a
# finite group the full solution set is the coset they span.

# %%
T = FgaGroup(0, (12,))
f = FgaHom.scalar(T, 4)
ok, x0, kernel = solve_hom(f, T(8))
print(ok, x0, [str(k.coords) for k in kernel])
print(sorted(str((x0 + k).coords) for k in span(kernel, T)))
