from typing import Dict, Iterable, Iterator, List, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix

from ..errors import GraphInvariantError, NodeIndexError


class TagTable:
    """Bijection between tag strings and dense node ids ``0..N-1``."""

    def __init__(self, tags: Iterable[str] = ()):
        self._tags: List[str] = list()
        self._ids: Dict[str, int] = dict()
        for tag in tags:
            self.intern(tag)

    @classmethod
    def synthetic(cls, n: int) -> "TagTable":
        """Placeholder labels ``n0, n1, ...`` for generated graphs."""
        return cls(f"n{i}" for i in range(n))

    def intern(self, tag: str) -> int:
        node = self._ids.get(tag, None)
        if node is None:
            node = len(self._tags)
            self._ids[tag] = node
            self._tags.append(tag)
        return node

    def lookup(self, node: int) -> str:
        if not 0 <= node < len(self._tags):
            raise NodeIndexError(f"Node id {node} out of range [0, {len(self._tags)}).")
        return self._tags[node]

    def id_of(self, tag: str) -> int:
        return self._ids[tag]

    @property
    def tags(self) -> List[str]:
        return list(self._tags)

    def __contains__(self, tag: str) -> bool:
        return tag in self._ids

    def __iter__(self) -> Iterator[str]:
        return iter(self._tags)

    def __len__(self) -> int:
        return len(self._tags)

    def __eq__(self, other) -> bool:
        return isinstance(other, TagTable) and self._tags == other._tags

    def __repr__(self) -> str:
        return f"TagTable(size={len(self)})"


class TagGraph:
    """Undirected simple graph in compressed sparse row form.

    ``indices[indptr[i]:indptr[i + 1]]`` holds the sorted neighbors of node ``i``.
    Every edge is stored once per endpoint, so ``len(indices) == 2 * M``. The
    arrays are read-only: a built graph can be shared by concurrent readers.
    """

    def __init__(self, indptr: np.ndarray, indices: np.ndarray):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int32)
        self.indptr.flags.writeable = False
        self.indices.flags.writeable = False

    @classmethod
    def from_edges(
        cls, n: int, edges: Union[np.ndarray, Iterable[Tuple[int, int]]]
    ) -> "TagGraph":
        """Build a graph from an edge list.

        Endpoint order does not matter and repeated pairs collapse to one edge.

        Args:
            n (int): number of nodes
            edges (Union[np.ndarray, Iterable[Tuple[int, int]]]): node id pairs

        Returns:
            TagGraph: the simple graph
        """
        if not isinstance(edges, np.ndarray):
            edges = list(edges)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        if (lo == hi).any():
            raise GraphInvariantError("Self-loops are not allowed in a TagGraph.")
        if edges.size and (lo.min() < 0 or hi.max() >= n):
            raise GraphInvariantError(f"Edge endpoints must lie in [0, {n}).")

        keys = np.unique(lo * n + hi)
        lo, hi = keys // max(n, 1), keys % max(n, 1)

        rows = np.concatenate([lo, hi])
        cols = np.concatenate([hi, lo])
        order = np.lexsort((cols, rows))
        rows, cols = rows[order], cols[order]

        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
        return cls(indptr, cols)

    @property
    def node_count(self) -> int:
        return self.indptr.size - 1

    @property
    def edge_count(self) -> int:
        return self.indices.size // 2

    def _check_node(self, node: int):
        if not 0 <= node < self.node_count:
            raise NodeIndexError(f"Node id {node} out of range [0, {self.node_count}).")

    def degree(self, node: int) -> int:
        self._check_node(node)
        return int(self.indptr[node + 1] - self.indptr[node])

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def neighbors(self, node: int) -> np.ndarray:
        self._check_node(node)
        return self.indices[self.indptr[node] : self.indptr[node + 1]]

    def isolated_count(self) -> int:
        return int((self.degrees() == 0).sum())

    def edges(self) -> np.ndarray:
        """All edges as an ``(M, 2)`` array with ``i < j``, sorted."""
        rows = np.repeat(np.arange(self.node_count, dtype=np.int64), self.degrees())
        cols = self.indices.astype(np.int64)
        mask = rows < cols
        return np.column_stack([rows[mask], cols[mask]])

    def to_csr(self) -> csr_matrix:
        n = self.node_count
        data = np.ones(self.indices.size, dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(n, n))

    def subgraph(self, nodes: Iterable[int]) -> Tuple["TagGraph", np.ndarray]:
        """Induced subgraph on ``nodes``.

        Returns:
            Tuple[TagGraph, np.ndarray]: the subgraph and, for each of its nodes, the
            id it had in this graph
        """
        kept = np.unique(np.asarray(list(nodes), dtype=np.int64))
        remap = np.full(self.node_count, -1, dtype=np.int64)
        remap[kept] = np.arange(kept.size)
        edges = self.edges()
        new_edges = remap[edges]
        new_edges = new_edges[(new_edges >= 0).all(axis=1)]
        return TagGraph.from_edges(kept.size, new_edges), kept

    def validate(self):
        """Check the structural invariants, raising GraphInvariantError on failure."""
        n = self.node_count
        if n < 0 or self.indptr[0] != 0 or self.indptr[-1] != self.indices.size:
            raise GraphInvariantError("Inconsistent offset array.")
        if (np.diff(self.indptr) < 0).any():
            raise GraphInvariantError("Offsets must be non-decreasing.")
        if self.indices.size % 2:
            raise GraphInvariantError("Degree sum must be even (sum of degrees = 2M).")
        if self.indices.size == 0:
            return
        if self.indices.min() < 0 or self.indices.max() >= n:
            raise GraphInvariantError("Neighbor id out of range.")
        rows = np.repeat(np.arange(n), self.degrees())
        if (rows == self.indices).any():
            raise GraphInvariantError("Self-loop found.")
        # strictly increasing inside each row: sorted and no parallel edges
        same_row = rows[1:] == rows[:-1]
        if (np.diff(self.indices.astype(np.int64))[same_row] <= 0).any():
            raise GraphInvariantError("Adjacency rows must be sorted without duplicates.")
        adjacency = self.to_csr()
        if (adjacency != adjacency.T).nnz:
            raise GraphInvariantError("Adjacency is not symmetric.")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TagGraph)
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
        )

    def __repr__(self) -> str:
        return f"TagGraph(N={self.node_count}, M={self.edge_count})"


def degree(graph: TagGraph, node: int) -> int:
    """Number of distinct tags sharing at least one item with ``node``."""
    return graph.degree(node)
