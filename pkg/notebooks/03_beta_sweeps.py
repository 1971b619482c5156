# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Sweeping the last mixer angle
#
# Holding the cost angle fixed and sweeping beta traces the full squeezing
# curve of a single layer. With the wrong cost angle the state is
# anti-squeezed for every beta.

# %%
import math

import numpy as np

from squeezeqaoa import beta_sweep, depth_one_optimum

for n in (4, 6, 8):
    params, energy = depth_one_optimum(n)
    beta, s = beta_sweep(n, list(params.gammas), (0, math.pi), 1000).best()
    print(f"n={n}: gamma={params.gammas[0]:.4f}  best beta={beta:.4f}  S={s:.3f} dB  (energy {energy:.4f})")

# %% [markdown]
# Over-squeezing: at gamma = 5.097 the variance never drops below n/4. The
# endpoints beta = 0 and pi/2 return the coherent state exactly, so the grid
# is cell-centred.

# %%
h = math.pi / 2000
sweep = beta_sweep(12, [5.097], (h, math.pi - h), 1000)
print("min S:", sweep.squeezing_db.min())
print("S at pi/4:", np.interp(math.pi / 4, sweep.betas, sweep.squeezing_db))
