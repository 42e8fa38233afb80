"""Brute-force oracles kept independent of the library implementations."""

import numpy as np


def voxel_hypervolume(points, ref_point, cells_per_dim):
    """Estimate dominated volume by midpoint sampling on a regular lattice.

    Counts lattice cells whose center is weakly dominated by some front
    point, over the box [componentwise min of points, ref_point].
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    ref = np.asarray(ref_point, dtype=float)
    lo = pts.min(axis=0)
    spans = ref - lo
    axes = [
        lo[d] + (np.arange(cells_per_dim) + 0.5) * spans[d] / cells_per_dim
        for d in range(ref.size)
    ]
    centers = np.meshgrid(*axes, indexing="ij")
    dominated = np.zeros(centers[0].shape, dtype=bool)
    for p in pts:
        mask = np.ones(centers[0].shape, dtype=bool)
        for d in range(ref.size):
            mask &= centers[d] >= p[d]
        dominated |= mask
    return dominated.mean() * float(np.prod(spans))


def exhaustive_scalar_minimum(values):
    """Independent reference for the solver's limit: a plain full scan."""
    smallest = values[0]
    for v in values[1:]:
        if v < smallest:
            smallest = v
    return float(smallest)
