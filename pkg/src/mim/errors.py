"""Exception hierarchy.

Every error carries a ``detail`` string and a class-level ``exit_code`` that the
command-line app turns into the process status, the same way an HTTP error
carries its status code.
"""
from typing import Iterable, Optional

from mim.cli.models import ExitStatus


class MimError(Exception):
    exit_code: int = ExitStatus.USAGE

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# graph_core

class GraphError(MimError):
    pass


class EmptyGraph(GraphError):
    def __init__(self):
        super().__init__("a graph needs at least one vertex")


class BadIndex(GraphError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} out of range 0..{n - 1}")
        self.vertex = vertex


class MonochromaticEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u}, {v}) joins two vertices of the same color")
        self.u = u
        self.v = v


class DuplicateEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u}, {v}) listed more than once")
        self.u = u
        self.v = v


class GraphFormatError(GraphError):
    def __init__(self, line: Optional[int], message: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


class MatchingFormatError(GraphFormatError):
    pass


# decomposition

class DecompositionError(MimError):
    pass


class TooSmall(DecompositionError):
    def __init__(self, n: int):
        super().__init__(f"K+S split needs at least 2 vertices, got {n}")


class MalformedTree(DecompositionError):
    pass


class NotStar123Free(DecompositionError):
    exit_code = ExitStatus.NOT_STAR123_FREE

    def __init__(self, vertices: Iterable[int]):
        self.vertices = tuple(sorted(vertices))
        listed = " ".join(str(v) for v in self.vertices)
        super().__init__(
            f"graph is not Star123-free: prime piece on vertices {{{listed}}} "
            "is not an extended path/cycle or its bicomplement"
        )


# mim_solver

class SolverError(MimError):
    exit_code = ExitStatus.VERIFICATION_FAILED


class MissingAuxPair(SolverError):
    pass


class InternalInvariant(SolverError):
    pass


class VerificationFailed(MimError):
    exit_code = ExitStatus.VERIFICATION_FAILED


# oracle

class TooLarge(MimError):
    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what} is {size}, oracle guard allows at most {limit}")
        self.size = size
        self.limit = limit


# generator

class GeneratorError(MimError):
    pass


class BudgetTooSmall(GeneratorError):
    def __init__(self, target_n: int):
        super().__init__(f"vertex budget must be at least 1, got {target_n}")


class BadShapeParams(GeneratorError):
    pass
