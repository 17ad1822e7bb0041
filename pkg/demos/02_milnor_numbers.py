# # Milnor numbers
#
# The local algebra of the Jacobian ideal is computed by truncating at
# growing degrees until the dimension stops changing.

# %%
from cydegen.milnor import CapExceeded, SmoothGerm, milnor_number, random_linear_change
from cydegen.polyparse import parse_poly

xy = ["x", "y"]

# %%
res = milnor_number(parse_poly("x^3 + y^2", xy))
print("cusp: mu =", res.mu, "basis", res.basis_strings())

# %% [markdown]
# The simple singularities.

# %%
forms = {
    "A4": "x^5 + y^2",
    "D5": "x^4 + x*y^2",
    "E6": "x^3 + y^4",
    "E7": "x^3 + x*y^3",
    "E8": "x^3 + y^5",
}
for name, text in forms.items():
    print(f"{name:3s} {text:12s} mu = {milnor_number(parse_poly(text, xy)).mu}")

# %% [markdown]
# The answer does not depend on coordinates.

# %%
f = parse_poly(forms["E7"], xy)
for seed in range(3):
    g = random_linear_change(f, seed)
    print(f"seed {seed}: mu = {milnor_number(g).mu}  for  {g}")

# %% [markdown]
# Smooth germs and non-isolated singularities are reported separately.

# %%
try:
    milnor_number(parse_poly("x + y^3", xy))
except SmoothGerm as exc:
    print("smooth:", exc)
try:
    milnor_number(parse_poly("x^2*y", xy), degree_cap=10)
except CapExceeded as exc:
    print("cap:", exc)
