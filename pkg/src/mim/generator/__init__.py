from .models import GenConfig, OpWeights
from .sampler import gen_graph, gen_tree
from .shapes import gen_adversarial, gen_shape
from .routing import router

__all__ = ["GenConfig", "OpWeights", "gen_adversarial", "gen_graph", "gen_shape", "gen_tree", "router"]
