import logging

from mim.cli import CommandRouter, ExitStatus, arg
from mim.graph.io import read_graph

from .builder import decompose
from .render import render_dot, render_tree, tree_stats

logger = logging.getLogger(__name__)

router = CommandRouter()


# decompose <file> [--dot]
@router.command(
    "decompose",
    help="print the canonical decomposition tree of a graph file",
    arguments=[
        arg("path", help="graph in the text format"),
        arg("--dot", action="store_true", help="emit Graphviz DOT instead of the indented tree"),
    ],
)
def cmd_decompose(args) -> int:
    tree = decompose(read_graph(args.path))
    stats = tree_stats(tree)
    logger.debug("tree has %d nodes, depth %d", stats.nodes, stats.depth)
    print(render_dot(tree) if args.dot else render_tree(tree), end="")
    return ExitStatus.OK
