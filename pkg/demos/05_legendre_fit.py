# # L^2 norm on the Legendre family near s = 0
#
# y^2 = x(x-1)(x-s) degenerates to a nodal cubic. The model predicts
# -log||eta||^2 = alpha log|s|^2 - beta log|log|s|^2| + const with alpha=0, beta=1.

# %%
import numpy as np

from cydegen.ncd import quadratic_model, theorem_a_report
from cydegen.periodfit import fit_asymptotics, legendre_l2, legendre_samples

print(theorem_a_report(quadratic_model(1, 1)))

# %%
for s in (1e-2, 1e-6, 1e-12):
    p = legendre_l2(s)
    print(f"s={s:.0e}  ||eta||^2={p.l2_norm:.6f}  8 pi log(16/s)={8 * np.pi * np.log(16 / s):.6f}")

# %% [markdown]
# The 1/log|s| tail is not small on this range, so the default fit carries
# one extra column for it. Compare with the bare three-term model.

# %%
samples = [(p.s, p.neglog) for p in legendre_samples(1e-12, 1e-3, 40)]
for k in (0, 1, 2):
    res = fit_asymptotics(samples, correction_terms=k)
    print(f"tail columns {k}: alpha={res.alpha_hat:+.4f} beta={res.beta_hat:.4f} cond={res.condition_estimate:.1e}")
