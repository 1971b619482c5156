# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # Certified and estimated entanglement depth
#
# The Fisher information about L_y certifies a lower bound on how many qubits
# must be entangled; the squeezing alone only gives an estimate that assumes a
# Gaussian state.

# %%
from squeezeqaoa import depth_one_optimum, metrology_report, trial_state
from squeezeqaoa.metrology import gaussian_depth_estimate, separable_fisher_bound

for n in (4, 6, 8):
    params, _ = depth_one_optimum(n)
    r = metrology_report(trial_state(n, params))
    bounds = [separable_fisher_bound(k, n) for k in range(1, n + 1)]
    print(f"n={n}: F_Q[Ly]={r.qfi_y:.3f} bounds={bounds} -> certified k>={r.e2_depth}, "
          f"estimate {r.e3_depth_estimate}")

# %%
for s, n in ((-4.80, 4), (-4.18, 6), (-4.02, 8)):
    print(n, s, gaussian_depth_estimate(s, n))
