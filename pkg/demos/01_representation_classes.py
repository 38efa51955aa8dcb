# %% [markdown]
# # Characteristic classes of U(2)-representations
#
# A real representation of U(2) is a sum of the real forms `A_i` and the
# realified modules `V(j,k) = S^j E (x) L^k`.  Over the torus every class is
# a symmetric polynomial in the two Chern roots, and rewriting in
# `l = c1(E)`, `u = c2(E)` gives the integers `a, b` (and `c, d` in dimension 6).

# %%
from obstrukt.charclass import coeff_profile, euler_of, p1_of, q1_poly_of, table_rows
from obstrukt.reps import complexified_weights, enumerate_reps, parse_rep

V = parse_rep("A1+L(2)+L(-1)")
print(V, "dim", V.dim)
print("weights:", complexified_weights(V))
print("p1 =", p1_of(V))
print(coeff_profile(V))

# %% [markdown]
# Conjugate modules are the same real representation, so parsing picks one
# canonical representative.  `L(0)` is two trivial lines and `A1xL(0)` is
# the self-conjugate `V(2,-1) = A1 + A1`.

# %%
for expr in ("L(3)", "L(-3)", "L(0)", "A1xL(0)", "E(0)"):
    print(f"{expr:8} -> {parse_rep(expr)}")

# %% [markdown]
# ## The seven-dimensional SO(3)-modules

# %%
for expr in ("R^7", "A1+R^4", "A1+A1+R", "A2+R^2", "A3"):
    V = parse_rep(expr)
    parity, q1 = q1_poly_of(V)
    print(f"{str(V):16} {coeff_profile(V)}   q1 = {q1} (b {parity})")

# %% [markdown]
# ## Regenerating the tables
#
# Rows come from weight expansion, nothing is looked up.  In dimension 6 the
# Euler class uses the complex orientation of the summands as written.

# %%
for label, params, V, prof in table_rows(6, 1)[:12]:
    print(f"{label:16} {params!s:24} {str(V):18} {prof}")

# %%
V = parse_rep("A1xL(2)")
print(V, euler_of(V))

# %% [markdown]
# ## Enumeration

# %%
reps = enumerate_reps(7, 1)
print(len(reps), "seven-dimensional representations with twist at most 1")
print(", ".join(str(V) for V in reps[:10]), "...")
