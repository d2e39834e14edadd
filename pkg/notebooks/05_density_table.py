"""
The four-metric table
=====================

Densities of the Koiso-Cao soliton and the Page metric on CP^2 # -CP^2,
and of the Chen-LeBrun-Weber metric and the Wang-Zhu soliton on
CP^2 # 2(-CP^2). On the first surface the soliton has the larger density;
on the second the order is reversed.
"""

# %%
from ricci_density.density import einstein_density, paper_table

rows = paper_table()
for r in rows:
    print("%-12s %-26s %-22s %.4f" % (r.manifold, r.metric_name, r.metric_type,
                                      r.report.theta))

# %%
kc, page, clbw, wz = (r.report.theta for r in rows)
print("Koiso-Cao > Page:", kc > page, "  CLBW > Wang-Zhu:", clbw > wz)

# %% [markdown]
# For comparison, the round 4-sphere (R = 12, volume 8 pi^2 / 3) has
# density 6 / e^2.

# %%
import math
print(einstein_density(12, 8 * math.pi ** 2 / 3, 4).theta, 6 / math.e ** 2)
