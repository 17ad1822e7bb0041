# # Characteristic classes in a truncated graded ring
#
# Everything here is exact: coefficients are Fractions and products stop at
# the ring's cutoff degree. Bundles are described by their Chern roots.

# %%
from fractions import Fraction

from cydegen.gradedring import (
    Ring,
    SplitBundle,
    chern_class,
    chern_root_ring,
    divide_by_class,
    integrate_pn,
    p_classes,
    todd_star,
)

# %% [markdown]
# A line bundle with first Chern class x. Td* is the multiplicative class of
# x/(e^x - 1), so its expansion starts 1 - x/2 + x^2/12.

# %%
ring = Ring({"x": 1}, 6)
x = ring.gen("x")
L = SplitBundle(ring, ("x",))
print("Td*(L) =", todd_star(L))

# %% [markdown]
# Dividing by a class of positive degree lowers the cutoff by that degree.

# %%
q = divide_by_class(todd_star(L) - 1, x)
print("(Td*(L) - 1)/x =", q, " known up to degree", q.cutoff)

# %% [markdown]
# For a rank-n bundle Q the alternating sum of the exterior powers, weighted
# by Td*, collapses to (-1)^n c_n(Q).

# %%
for n in range(1, 5):
    ring_n, Q = chern_root_ring(n, n, extra=())
    P = p_classes(Q).P
    print(n, P == chern_class(Q, n) * (-1) ** n, P)

# %% [markdown]
# Integration over projective space reads off the top coefficient. The
# quartic surface in P^3 has Euler characteristic 24.

# %%
proj = Ring({"h": 1}, 3)
h = proj.gen("h")
c_total = divide_by_class((1 + h) ** 4, 1 + 4 * h)
print("c(T) of the quartic:", c_total)
print("chi =", integrate_pn(4 * h * c_total, 3))
print("check:", integrate_pn(4 * h * c_total, 3) == Fraction(24))
