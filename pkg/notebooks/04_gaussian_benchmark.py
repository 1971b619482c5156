# ---
# jupyter:
#   jupytext:
#     formats: py:percent
# ---

# %% [markdown]
# # From squeezing to MaxCut success probability
#
# If p(m) is a discretised normal law with variance set by the squeezing,
# the chance of sampling a cut within a fraction alpha of the optimum follows
# directly. The window of allowed m only widens at isolated n, which shows
# up as jumps.

# %%
import numpy as np

from squeezeqaoa.benchmark import (
    benchmark_grid,
    discontinuities,
    p_alpha_gaussian,
    qaoa_line_cnot,
    qv_cnot_bound,
    window,
)

for n, s in ((4, -4.80), (6, -4.18), (8, -4.02), (4, -5.96)):
    print(f"n={n} S={s}: P = {100 * p_alpha_gaussian(n, s, 0.999):.2f}%  window {window(n, 0.999)[:2]}")

# %%
print("jumps at", discontinuities(0.999, 256).n_values)
pts = benchmark_grid(range(60, 70, 2), [-6.0], 0.999)
for pt in pts:
    print(pt.n, round(pt.p_alpha, 4), "jump" if pt.is_discontinuity else "")

# %% [markdown]
# Circuit cost: a QAOA layer on a line versus a square quantum-volume circuit.

# %%
for n in (4, 6, 8, 16):
    print(n, qaoa_line_cnot(n), qv_cnot_bound(n))
