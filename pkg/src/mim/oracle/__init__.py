from .search import brute_force_ks_split, brute_force_mim, conflict_masks
from .star import STAR123_EDGES, contains_star123, degrees_admit_star123, star123
from .routing import router

__all__ = [
    "STAR123_EDGES",
    "brute_force_ks_split",
    "brute_force_mim",
    "conflict_masks",
    "contains_star123",
    "degrees_admit_star123",
    "router",
    "star123",
]
