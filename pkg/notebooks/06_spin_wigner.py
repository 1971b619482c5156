# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Wigner functions on the Bloch sphere
#
# The coherent state is a positive blob on the equator; the balanced Dicke
# state is a ring along the equator flanked by negative bands.

# %%
from squeezeqaoa import spin_wigner
from squeezeqaoa.spin import coherent_plus_state, dicke_state

for label, state in (("coherent", coherent_plus_state(12)), ("Dicke", dicke_state(12, 6))):
    grid = spin_wigner(state, 48)
    print(f"{label:>8}: norm={grid.normalization():.8f} min={grid.min():.4f} argmax={grid.argmax()}")

# %% [markdown]
# The grid is written as CSV with columns theta, phi, value, ready for any
# plotting tool.

# %%
print(spin_wigner(dicke_state(4, 2), 8).to_csv()[:200])
