"""Graph input, cut bookkeeping, and exhaustive Max-Cut solving.

Conventions used across the package:

* Vertices are integers ``0 .. n-1``.  A partition assigns a bit to each
  vertex; bit ``i`` of a basis-state index is the side of vertex ``i``
  (index = sum of ``bits[i] << i``, so vertex 0 is the least significant
  bit).  Human-readable bitstrings are printed most-significant-bit first,
  i.e. vertex ``n-1`` leftmost.
* Edges are stored as ``(min, max)`` pairs, sorted lexicographically, with
  self-loops and duplicates rejected rather than silently cleaned up.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetError, GraphFormatError

# Exhaustive search walks all 2^n partitions; above this it is a typo, not
# a workload.
MAX_BRUTE_FORCE_VERTICES = 24

# Chunk size for the vectorised partition sweep, bounds peak memory.
_SWEEP_CHUNK = 1 << 18


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n_vertices - 1``.

    Edges are normalised to ``(min, max)`` and sorted.  Construction
    validates endpoints, self-loops and duplicates.
    """

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n_vertices: int, edges: Iterable[Sequence[int]]):
        if not isinstance(n_vertices, int) or isinstance(n_vertices, bool):
            raise GraphFormatError("vertex count must be an integer")
        if n_vertices < 1:
            raise GraphFormatError(
                f"vertex count must be positive, got {n_vertices}")
        normalised = []
        seen = set()
        for pos, edge in enumerate(edges):
            edge = tuple(edge)
            if len(edge) != 2:
                raise GraphFormatError(
                    f"edges[{pos}]: expected two endpoints, got {len(edge)}")
            u, v = edge
            for w in (u, v):
                if not isinstance(w, int) or isinstance(w, bool):
                    raise GraphFormatError(
                        f"edges[{pos}]: endpoints must be integers, "
                        f"got {w!r}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise GraphFormatError(
                    f"edges[{pos}]: endpoint out of range for "
                    f"{n_vertices} vertices: ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"edges[{pos}]: self-loop at {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(
                    f"edges[{pos}]: duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
            normalised.append(key)
        normalised.sort()
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", tuple(normalised))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_array(self) -> np.ndarray:
        """Edges as an ``(n_edges, 2)`` int array (empty-safe)."""
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64)


@dataclass(frozen=True)
class Partition:
    """Two-colouring of the vertices; ``bits[i]`` is the side of vertex i."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"partition bits must be 0/1, got {self.bits}")

    @classmethod
    def from_index(cls, index: int, n_vertices: int) -> "Partition":
        """Decode a basis-state index (vertex i at bit i)."""
        if not 0 <= index < (1 << n_vertices):
            raise ValueError(
                f"index {index} out of range for {n_vertices} vertices")
        return cls(tuple((index >> i) & 1 for i in range(n_vertices)))

    @classmethod
    def from_bitstring(cls, word: str) -> "Partition":
        """Parse an MSB-first bitstring (leftmost char = highest vertex)."""
        if not word or any(c not in "01" for c in word):
            raise ValueError(f"not a bitstring: {word!r}")
        return cls(tuple(int(c) for c in reversed(word)))

    @property
    def n_vertices(self) -> int:
        return len(self.bits)

    @property
    def index(self) -> int:
        """Basis-state index of this partition."""
        out = 0
        for i, b in enumerate(self.bits):
            out |= b << i
        return out

    def bitstring(self) -> str:
        """MSB-first display form (vertex n-1 leftmost)."""
        return "".join(str(b) for b in reversed(self.bits))

    def complement(self) -> "Partition":
        """Swap the two sides; always preserves the cut value."""
        return Partition(tuple(1 - b for b in self.bits))


def cut_value(graph: Graph, partition: Partition) -> int:
    """Number of edges crossing the partition.

    Args:
        graph: the graph.
        partition: one bit per vertex; length must match the graph.

    Returns:
        Count of edges whose endpoints lie on different sides.
    """
    if partition.n_vertices != graph.n_vertices:
        raise ValueError(
            f"partition has {partition.n_vertices} bits, graph has "
            f"{graph.n_vertices} vertices")
    bits = partition.bits
    return sum(bits[u] != bits[v] for u, v in graph.edges)


def cut_values_all(graph: Graph) -> np.ndarray:
    """Cut value of every partition, indexed by basis-state index.

    Vectorised sweep over all ``2^n`` indices; used by the exhaustive
    solver and by the diagonal problem Hamiltonian.
    """
    n = graph.n_vertices
    if n > MAX_BRUTE_FORCE_VERTICES:
        raise BudgetError(
            f"exhaustive sweep limited to {MAX_BRUTE_FORCE_VERTICES} "
            f"vertices, got {n}")
    dim = 1 << n
    cuts = np.zeros(dim, dtype=np.uint32)
    ea = graph.edge_array()
    for start in range(0, dim, _SWEEP_CHUNK):
        idx = np.arange(start, min(start + _SWEEP_CHUNK, dim),
                        dtype=np.uint32)
        block = cuts[start:start + idx.size]
        for u, v in ea:
            block += ((idx >> np.uint32(u)) ^ (idx >> np.uint32(v))) & 1
    return cuts


@dataclass(frozen=True)
class MaxCutSolution:
    """Result of exhaustive Max-Cut: optimum, count, and all optima.

    ``solutions`` are in ascending basis-index order and always come in
    complement pairs, so ``degeneracy`` is even.
    """

    max_cut: int
    degeneracy: int
    solutions: tuple[Partition, ...] = field(repr=False)

    def solution_indices(self) -> tuple[int, ...]:
        return tuple(p.index for p in self.solutions)

    def bitstrings(self) -> tuple[str, ...]:
        return tuple(p.bitstring() for p in self.solutions)


def brute_force_maxcut(graph: Graph) -> MaxCutSolution:
    """Solve Max-Cut by checking every partition.

    Args:
        graph: input graph, at most ``MAX_BRUTE_FORCE_VERTICES`` vertices.

    Returns:
        MaxCutSolution with the optimal cut value, its degeneracy, and all
        optimal partitions in ascending index order.
    """
    cuts = cut_values_all(graph)
    best = int(cuts.max())
    winners = np.flatnonzero(cuts == best)
    sols = tuple(Partition.from_index(int(v), graph.n_vertices)
                 for v in winners)
    return MaxCutSolution(max_cut=best, degeneracy=len(sols), solutions=sols)


def parse_graph(text: str) -> Graph:
    """Parse the JSON graph format.

    Expected shape: ``{"vertices": <int>, "edges": [[i, j], ...]}``.
    Errors carry the JSON line/column or the offending field.

    Args:
        text: JSON document as a string.

    Returns:
        Validated, normalised Graph.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}") from exc
    if not isinstance(doc, dict):
        raise GraphFormatError(
            f"top level must be an object, got {type(doc).__name__}")
    missing = {"vertices", "edges"} - doc.keys()
    if missing:
        raise GraphFormatError(
            f"missing required field(s): {', '.join(sorted(missing))}")
    unknown = doc.keys() - {"vertices", "edges"}
    if unknown:
        raise GraphFormatError(
            f"unknown field(s): {', '.join(sorted(unknown))}")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError("field 'edges' must be a list")
    for pos, e in enumerate(edges):
        if not isinstance(e, list):
            raise GraphFormatError(
                f"edges[{pos}]: expected a two-element list, got "
                f"{type(e).__name__}")
    return Graph(doc["vertices"], edges)


def load_graph(path: str) -> Graph:
    """Read and parse a graph file; wraps I/O errors with the path."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read graph file {path}: "
                               f"{exc.strerror or exc}") from exc
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from exc
