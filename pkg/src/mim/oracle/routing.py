from mim.cli import CommandRouter, ExitStatus, arg
from mim.graph.io import format_matching, read_graph

from .search import brute_force_mim

router = CommandRouter()


# oracle <file>
@router.command(
    "oracle",
    help="exact maximum induced matching by exhaustive search (small graphs only)",
    arguments=[arg("path", help="graph in the text format")],
)
def cmd_oracle(args) -> int:
    print(format_matching(brute_force_mim(read_graph(args.path))), end="")
    return ExitStatus.OK
