"""Text formats for graphs and matchings.

Graph::

    <n> <m>
    <n color tokens, B or W>
    <u> <v>        (m lines)

Matching::

    size <s>
    <black> <white>   (s lines)

Blank lines and lines starting with ``#`` are ignored anywhere.
"""
from pathlib import Path
from typing import Iterable, Iterator, List, Tuple

from mim.errors import GraphFormatError, MatchingFormatError

from .models import BipartiteGraph, Color, InducedMatching
from .operations import new_graph


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    for number, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, stripped.split()


def _ints(tokens: List[str], count: int, line: int, error=GraphFormatError) -> List[int]:
    if len(tokens) != count:
        raise error(line, f"expected {count} integers, got {len(tokens)} tokens")
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise error(line, f"not an integer in {' '.join(tokens)!r}") from None
    return values


def parse_graph(text: str) -> BipartiteGraph:
    lines = _content_lines(text)
    try:
        line, tokens = next(lines)
    except StopIteration:
        raise GraphFormatError(None, "empty input, expected '<n> <m>'") from None
    n, m = _ints(tokens, 2, line)
    if n < 1:
        raise GraphFormatError(line, f"vertex count must be at least 1, got {n}")
    if m < 0:
        raise GraphFormatError(line, f"edge count must be non-negative, got {m}")

    try:
        line, tokens = next(lines)
    except StopIteration:
        raise GraphFormatError(None, "missing color line") from None
    if len(tokens) != n:
        raise GraphFormatError(line, f"expected {n} color tokens, got {len(tokens)}")
    try:
        colors = [Color(t) for t in tokens]
    except ValueError:
        raise GraphFormatError(line, "color tokens must be 'B' or 'W'") from None

    edges = []
    seen = set()
    for _ in range(m):
        try:
            line, tokens = next(lines)
        except StopIteration:
            raise GraphFormatError(None, f"expected {m} edges, found {len(edges)}") from None
        u, v = _ints(tokens, 2, line)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(line, f"vertex {x} out of range 0..{n - 1}")
        if colors[u] is colors[v]:
            raise GraphFormatError(line, f"edge ({u}, {v}) joins two vertices of the same color")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(line, f"edge ({u}, {v}) listed more than once")
        seen.add(key)
        edges.append((u, v))
    for line, _tokens in lines:
        raise GraphFormatError(line, f"unexpected content after {m} edges")
    return new_graph(n, colors, edges)


def read_graph(path) -> BipartiteGraph:
    return parse_graph(_read(path))


def format_graph(g: BipartiteGraph, header: Iterable[str] = ()) -> str:
    out = [f"# {h}" for h in header]
    out.append(f"{g.n} {g.m}")
    out.append(" ".join(c.value for c in g.colors))
    out.extend(f"{b} {w}" for b, w in g.edges)
    return "\n".join(out) + "\n"


def parse_matching(text: str) -> List[Tuple[int, int]]:
    """Pairs as written; orientation and validity are checked against a graph later."""
    lines = _content_lines(text)
    try:
        line, tokens = next(lines)
    except StopIteration:
        raise MatchingFormatError(None, "empty input, expected 'size <s>'") from None
    if len(tokens) != 2 or tokens[0] != "size":
        raise MatchingFormatError(line, "first line must be 'size <s>'")
    (size,) = _ints(tokens[1:], 1, line, MatchingFormatError)
    if size < 0:
        raise MatchingFormatError(line, f"matching size must be non-negative, got {size}")
    pairs = []
    for _ in range(size):
        try:
            line, tokens = next(lines)
        except StopIteration:
            raise MatchingFormatError(None, f"expected {size} pairs, found {len(pairs)}") from None
        u, v = _ints(tokens, 2, line, MatchingFormatError)
        pairs.append((u, v))
    for line, _tokens in lines:
        raise MatchingFormatError(line, f"unexpected content after {size} pairs")
    return pairs


def read_matching(path) -> List[Tuple[int, int]]:
    return parse_matching(_read(path))


def format_matching(m: InducedMatching) -> str:
    out = [f"size {m.size}"]
    out.extend(f"{b} {w}" for b, w in m.pairs)
    return "\n".join(out) + "\n"


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(None, f"cannot read {path}: {exc.strerror or exc}") from None
