"""Timing harness for the linear-time traversal."""
import logging
import time
from typing import Callable, List, Sequence

from pydantic import BaseModel

from mim.decomposition.builder import decompose
from mim.decomposition.reconstruct import reconstruct
from mim.decomposition.render import tree_stats
from mim.generator.models import GenConfig
from mim.generator.sampler import gen_tree
from mim.solver.models import SolveStats
from mim.solver.traversal import solve

logger = logging.getLogger(__name__)

COLUMNS = ("size", "nodes", "decompose_s", "solve_s", "solve_ns_per_node", "work_per_node")


class BenchRow(BaseModel):
    size: int
    edges: int
    nodes: int
    decompose_s: float
    solve_s: float
    solve_ns_per_node: float
    work_per_node: float


def best_of(repeats: int, action: Callable[[], object]) -> int:
    """Smallest wall time of ``repeats`` runs, in nanoseconds."""
    best = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        action()
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def bench_size(size: int, seed: int, repeats: int) -> BenchRow:
    g = reconstruct(gen_tree(GenConfig.sparse(seed, size)))

    start = time.perf_counter_ns()
    tree = decompose(g)
    decompose_ns = time.perf_counter_ns() - start

    nodes = tree_stats(tree).nodes
    stats = SolveStats()
    solve(tree, g, stats=stats)
    solve_ns = best_of(repeats, lambda: solve(tree))
    logger.info("size %d: %d edges, %d tree nodes", size, g.m, nodes)

    return BenchRow(
        size=size,
        edges=g.m,
        nodes=nodes,
        decompose_s=decompose_ns / 1e9,
        solve_s=solve_ns / 1e9,
        solve_ns_per_node=solve_ns / nodes,
        work_per_node=stats.work / nodes,
    )


def run_bench(sizes: Sequence[int], seed: int = 0, repeats: int = 3) -> List[BenchRow]:
    return [bench_size(size, seed, repeats) for size in sizes]


def per_node_ratio(rows: Sequence[BenchRow]) -> float:
    """Per-node solve time of the largest instance over that of the smallest."""
    ordered = sorted(rows, key=lambda row: row.nodes)
    return ordered[-1].solve_ns_per_node / ordered[0].solve_ns_per_node


def format_table(rows: Sequence[BenchRow]) -> str:
    lines = [" ".join(f"{name:>17}" for name in COLUMNS)]
    for row in rows:
        cells = (
            str(row.size),
            str(row.nodes),
            f"{row.decompose_s:.6f}",
            f"{row.solve_s:.6f}",
            f"{row.solve_ns_per_node:.1f}",
            f"{row.work_per_node:.3f}",
        )
        lines.append(" ".join(f"{cell:>17}" for cell in cells))
    if rows:
        lines.append(f"per-node ratio (largest/smallest): {per_node_ratio(rows):.2f}")
    return "\n".join(lines) + "\n"
