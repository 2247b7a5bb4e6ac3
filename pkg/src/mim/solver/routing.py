import logging

from mim import config
from mim.cli import CommandRouter, ExitStatus, arg
from mim.errors import VerificationFailed
from mim.graph.io import format_matching, read_graph, read_matching
from mim.graph.operations import find_matching_violation, orient_pairs
from mim.oracle.search import brute_force_mim

from .traversal import max_induced_matching

logger = logging.getLogger(__name__)

router = CommandRouter()


# solve <file> [--verify]
@router.command(
    "solve",
    help="print a maximum induced matching of a Star123-free graph",
    arguments=[
        arg("path", help="graph in the text format"),
        arg("--verify", action="store_true", help="re-check the witness and compare with the oracle"),
    ],
)
def cmd_solve(args) -> int:
    g = read_graph(args.path)
    matching = max_induced_matching(g)
    if args.verify:
        violation = find_matching_violation(g, matching)
        if violation is not None:
            raise VerificationFailed(f"solver witness is not an induced matching: {violation.describe()}")
        if g.m <= config.ORACLE_MAX_EDGES:
            expected = brute_force_mim(g).size
            if expected != matching.size:
                raise VerificationFailed(f"solver size {matching.size} differs from oracle size {expected}")
        else:
            logger.warning(
                "graph has %d edges, above the oracle guard of %d; oracle comparison skipped",
                g.m,
                config.ORACLE_MAX_EDGES,
            )
    print(format_matching(matching), end="")
    return ExitStatus.OK


# check <graph> <matching>
@router.command(
    "check",
    help="verify that a matching file is an induced matching of a graph",
    arguments=[
        arg("graph_path", help="graph in the text format"),
        arg("matching_path", help="matching in the text format"),
    ],
)
def cmd_check(args) -> int:
    g = read_graph(args.graph_path)
    matching = orient_pairs(g, read_matching(args.matching_path))
    violation = find_matching_violation(g, matching)
    if violation is None:
        print("valid")
        return ExitStatus.OK
    print(f"invalid: {violation.describe()}")
    return ExitStatus.VERIFICATION_FAILED
