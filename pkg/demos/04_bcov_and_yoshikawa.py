# # Vanishing cycles, the Yoshikawa class and the BCOV coefficient

# %%
from fractions import Fraction

from cydegen.invariants import (
    alpha_bcov,
    delta_chi_from_milnor,
    euler_hypersurface,
    verify_omega,
    yoshikawa_degree_hypersurface_family,
    yoshikawa_degree_isolated,
    yoshikawa_degree_kulikov_surface,
)

# %% [markdown]
# Euler characteristics of smooth hypersurfaces.

# %%
for N, d in [(3, 4), (2, 3), (4, 5)]:
    print(f"degree {d} in P^{N}: chi = {euler_hypersurface(N, d)}")

# %% [markdown]
# A K3 family acquiring two nodes: the three ways of computing the Yoshikawa
# degree agree.

# %%
mus = [1, 1]
dchi = delta_chi_from_milnor(2, mus)
print(
    yoshikawa_degree_isolated(2, mus),
    yoshikawa_degree_hypersurface_family(2, dchi),
    yoshikawa_degree_kulikov_surface(dchi),
)

# %% [markdown]
# The BCOV coefficient for one node on a K3 family, then the quintic
# threefold degenerating to a nodal one.

# %%
print(alpha_bcov(2, 24, 23).asymptotic_line())
quintic = alpha_bcov(3, -200, -199)
print(quintic.asymptotic_line())
for note in quintic.notes:
    print("note:", note)

# %% [markdown]
# The coefficient (9n^2+11n)/24 comes out of an exact identity among
# characteristic classes, checked here for small n.

# %%
print([verify_omega(n) for n in range(1, 5)])
print(alpha_bcov(2, 24, 24, Fraction(1, 2)).alpha_bcov)
