"""The three synthetic network families, side by side.

Every generator is a pure function of (params, seed): the same call always
yields a byte-identical edge list.

Run: python demos/00_networks.py
"""

import numpy as np

from layercast import (
    ErParams,
    GaussianPartitionParams,
    LfrParams,
    gen_er,
    gen_gaussian_partition,
    gen_lfr,
)


def describe(name, g, communities=None):
    degrees = g.degrees
    line = (
        f"{name:<22} {g.node_count:>5} nodes {g.edge_count:>6} edges  "
        f"mean degree {degrees.mean():5.2f}  max {degrees.max():3d}"
    )
    if communities is not None:
        counts = np.bincount(communities)
        inter = int((communities[g.edges[:, 0]] != communities[g.edges[:, 1]]).sum())
        line += f"  | {len(counts)} communities (sizes {counts.min()}-{counts.max()}), mixing {inter / g.edge_count:.3f}"
    print(line)


# Erdős–Rényi: one homogeneous community, every pair linked with probability p.
describe("ER dense (p=0.04)", gen_er(ErParams(n=1000, edge_exist_prob=0.04), 1))
describe("ER sparse (p=0.0005)", gen_er(ErParams(n=1000, edge_exist_prob=0.0005), 1))

# Gaussian random partition: planted communities with sizes drawn from a
# normal distribution (variance = mean_size / shape), dense inside and sparse
# across.
g, comm = gen_gaussian_partition(
    GaussianPartitionParams(n=1000, mean_size=40, shape=40, p_in=0.1, p_out=0.001), 1
)
describe("Gaussian similar sizes", g, comm)
g, comm = gen_gaussian_partition(
    GaussianPartitionParams(n=1000, mean_size=40, shape=1, p_in=0.1, p_out=0.001), 1
)
describe("Gaussian varying sizes", g, comm)

# LFR benchmark: heavy-tailed degrees AND community sizes, with a tunable
# fraction mu of cross-community edges.
g, comm = gen_lfr(
    LfrParams(n=1000, tau1=3.0, tau2=1.5, mu=0.1, average_degree=5.0, min_community=50), 1
)
describe("LFR (mu=0.1)", g, comm)

print("\nsame params + same seed = same network:")
a = gen_er(ErParams(n=1000, edge_exist_prob=0.04), 123)
b = gen_er(ErParams(n=1000, edge_exist_prob=0.04), 123)
print(f"  edge lists identical: {np.array_equal(a.edges, b.edges)}")
