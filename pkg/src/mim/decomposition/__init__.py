from .models import DecompNode, NodeKind, PrimeForm, PrimeShape
from .complement import co_components
from .ks_split import implication_components, is_associated_partition, ks_split
from .prime import classify_prime, quotient_graph
from .builder import decompose
from .reconstruct import reconstruct
from .render import TreeStats, render_dot, render_tree, tree_stats
from .routing import router

__all__ = [
    "DecompNode",
    "NodeKind",
    "PrimeForm",
    "PrimeShape",
    "TreeStats",
    "classify_prime",
    "co_components",
    "decompose",
    "implication_components",
    "is_associated_partition",
    "ks_split",
    "quotient_graph",
    "reconstruct",
    "render_dot",
    "render_tree",
    "router",
    "tree_stats",
]
