# # Asymptotic coefficients from a normal-crossings model
#
# alpha = 1 - lct governs the log|s|^2 term and beta, the degeneracy index,
# governs the log|log|s|^2| term of the L^2 metric on the Hodge bundle.

# %%
from cydegen.ncd import Component, NCDModel, quadratic_model, semistable_model, theorem_a_report, validate

# %% [markdown]
# Ordinary double points: blowing up each point gives an exceptional divisor
# with multiplicity 2 and discrepancy n.

# %%
for n in (1, 2, 3):
    rep = theorem_a_report(quadratic_model(n, 2))
    print(f"n={n}: lct={rep.lct} alpha={rep.alpha} beta={rep.beta} weight={rep.weight}")

# %% [markdown]
# For a reduced Kulikov fiber beta counts the deepest stratum.

# %%
model = semistable_model(2, ["V0", "V1", "V2"], [["V0", "V1", "V2"]])
print(theorem_a_report(model))
print(model.to_json(indent=1))

# %% [markdown]
# A non-reduced fiber gives a nontrivial monodromy eigenvalue.

# %%
rep = theorem_a_report(NCDModel(2, (Component("X0", 2, 1),)))
print("alpha =", rep.alpha, "eigenvalue =", rep.monodromy_eigenvalue)

# %%
print(validate(NCDModel(2, (Component("A", 1, 2), Component("B", 1, 3)))))
