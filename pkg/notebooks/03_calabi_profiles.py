"""
Calabi energy profiles
======================

The extremal Calabi energy for the Chen-LeBrun-Weber class and for the
Page class is a constant multiple of pi^2 times the minimum of a rational
function. Both minima are found by golden-section search with a Newton
polish, then fed into the conformally Kahler Einstein density formula.
"""

# %%
import math

import numpy as np

from ricci_density.density import (CLBW_PROFILE, CP2_BLOWUP_1, CP2_BLOWUP_2,
                                   PAGE_PROFILE, calabi_minimum,
                                   conformal_profile_density)

for prof in (CLBW_PROFILE, PAGE_PROFILE):
    res = calabi_minimum(prof)
    print("%-5s argmin %.8f  min %.8f  iterations %d"
          % (prof.name, res.x, res.value, res.iterations))

# %%
print(conformal_profile_density(CP2_BLOWUP_2, CLBW_PROFILE, "Chen-LeBrun-Weber").theta)
print(conformal_profile_density(CP2_BLOWUP_1, PAGE_PROFILE, "Page").theta)

# %% [markdown]
# Both profiles are unimodal on their brackets.

# %%
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

fig, axes = plt.subplots(1, 2, figsize=(9, 3.5))
for ax, prof in zip(axes, (CLBW_PROFILE, PAGE_PROFILE)):
    lo, hi = prof.bracket
    xs = np.linspace(max(lo, 0.2), hi, 400)
    ax.plot(xs, [prof.rational(x) for x in xs])
    res = calabi_minimum(prof)
    ax.plot([res.x], [res.value], "o")
    ax.set_title(prof.name)
fig.tight_layout()
fig.savefig("calabi_profiles.png", dpi=90)
