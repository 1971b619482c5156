# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # How low can one layer go?
#
# With a single layer the energy landscape is two-dimensional, so it can be
# scanned exhaustively. Energy is not the whole story: the grid minimum is a
# state whose Dicke overlap is modest even though its energy ratio is close
# to one.

# %%
from squeezeqaoa import SpsaConfig, landscape_scan, multistart_optimize
from squeezeqaoa.benchmark import improvement_delta

n = 12
scan = landscape_scan(n, resolution=400)
print(f"grid minimum {scan.min_energy:.4f} at gamma={scan.argmin[0]:.4f}, beta={scan.argmin[1]:.4f}")
print(f"energy ratio {scan.approximation_ratio:.4f}, Dicke overlap {scan.dicke_overlap:.4f}")

# %% [markdown]
# SPSA with restarts at depth three gets past the single-layer floor.

# %%
best, traces = multistart_optimize(n, 3, 10, SpsaConfig(seed=7))
print("restart bests:", [round(t.best_value, 3) for t in traces])
print("best:", best.best_value, best.best_params)

# %%
for label, e in (("depth 1 grid", scan.min_energy), ("depth 3 SPSA", best.best_value)):
    print(f"{label}: Delta = {improvement_delta(-33, e, -36):.4f}")
