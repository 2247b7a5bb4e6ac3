"""Maximum induced matching in bipartite Star123-free graphs."""
__version__ = "1.0.0"
