import logging
from typing import List, Optional, Set

import numpy as np

from ..errors import GeneratorSpecError
from ..graph import TagGraph, TagTable
from ..ingest.normalization import ItemTagSets
from . import BaseGenerator, GeneratorSpec

logger = logging.getLogger(__name__)


def _to_graph(n: int, edges: List[np.ndarray]) -> TagGraph:
    stacked = np.concatenate(edges) if edges else np.empty((0, 2), dtype=np.int64)
    return TagGraph.from_edges(n, stacked)


class ErdosRenyiGenerator(BaseGenerator):
    """G(n, p): every unordered pair is an edge independently with probability p."""

    NAME = "er"

    def _generate(self, rng: np.random.Generator) -> TagGraph:
        n, p = self.spec.n, self.spec.p
        edges = list()
        for i in range(n - 1):
            hits = np.flatnonzero(rng.random(n - i - 1) < p) + i + 1
            if hits.size:
                edges.append(np.column_stack([np.full(hits.size, i), hits]))
        return _to_graph(n, edges)


class WattsStrogatzGenerator(BaseGenerator):
    """Ring lattice with k_ring/2 neighbors per side, far endpoints rewired with probability beta.

    Lattice edges ``(u, u + j)`` are visited for ``j = 1..k_ring/2`` and, inside
    each ``j``, for ``u = 0..n-1``. A rewired edge moves its far endpoint to a node
    drawn uniformly until it is neither ``u`` nor a current neighbor of ``u``. Nodes
    already linked to everyone keep their edge.
    """

    NAME = "ws"

    def _generate(self, rng: np.random.Generator) -> TagGraph:
        n, half, beta = self.spec.n, self.spec.k_ring // 2, self.spec.beta
        adjacency: List[Set[int]] = [set() for _ in range(n)]
        for u in range(n):
            for j in range(1, half + 1):
                v = (u + j) % n
                adjacency[u].add(v)
                adjacency[v].add(u)

        for j in range(1, half + 1):
            for u in range(n):
                v = (u + j) % n
                if rng.random() >= beta or len(adjacency[u]) >= n - 1:
                    continue
                w = int(rng.integers(n))
                while w == u or w in adjacency[u]:
                    w = int(rng.integers(n))
                adjacency[u].discard(v)
                adjacency[v].discard(u)
                adjacency[u].add(w)
                adjacency[w].add(u)

        edges = [
            np.array([(u, v) for v in sorted(adjacency[u]) if u < v], dtype=np.int64)
            for u in range(n)
            if any(v > u for v in adjacency[u])
        ]
        return _to_graph(n, edges)


class BarabasiAlbertGenerator(BaseGenerator):
    """Preferential attachment grown from a complete graph on m+1 nodes.

    Each arriving node links to m distinct existing nodes, each drawn with
    probability proportional to its current degree; a draw that repeats a chosen
    target is discarded and drawn again.
    """

    NAME = "ba"

    def _generate(self, rng: np.random.Generator) -> TagGraph:
        n, m = self.spec.n, self.spec.m
        core = np.triu_indices(m + 1, k=1)
        edges = [np.column_stack(core).astype(np.int64)]
        # every node appears once per incident edge
        repeated = [node for node in range(m + 1) for _ in range(m)]

        for source in range(m + 1, n):
            targets: Set[int] = set()
            while len(targets) < m:
                targets.add(repeated[int(rng.integers(len(repeated)))])
            chosen = sorted(targets)
            edges.append(np.array([(t, source) for t in chosen], dtype=np.int64))
            repeated.extend(chosen)
            repeated.extend([source] * m)
        return _to_graph(n, edges)


SUPPORTED_MODELS_TO_GENERATORS = {
    "er": ErdosRenyiGenerator,
    "ws": WattsStrogatzGenerator,
    "ba": BarabasiAlbertGenerator,
}


def create_generator(spec: GeneratorSpec) -> BaseGenerator:
    generator = SUPPORTED_MODELS_TO_GENERATORS.get(spec.model, None)
    if generator is None:
        raise GeneratorSpecError(
            f"Model {spec.model} is not supported. Specify one among: er, ws, ba."
        )
    return generator(spec)


def generate(spec: GeneratorSpec) -> TagGraph:
    graph = create_generator(spec).generate()
    logger.info(
        "Generated %s graph (seed %d): N=%d, M=%d",
        spec.model,
        spec.seed,
        graph.node_count,
        graph.edge_count,
    )
    return graph


def generate_er(n: int, p: float, seed: int = 0) -> TagGraph:
    return generate(GeneratorSpec("er", n, seed, p=p))


def generate_ws(n: int, k_ring: int, beta: float, seed: int = 0) -> TagGraph:
    return generate(GeneratorSpec("ws", n, seed, k_ring=k_ring, beta=beta))


def generate_ba(n: int, m: int, seed: int = 0) -> TagGraph:
    return generate(GeneratorSpec("ba", n, seed, m=m))


def graph_to_items(graph: TagGraph, table: Optional[TagTable] = None) -> ItemTagSets:
    """Express a graph as tagged items that rebuild it.

    Every edge ``(i, j)`` becomes item ``edge:i-j`` carrying the two node labels;
    every isolated node ``i`` becomes item ``node:i`` with its single label.
    """
    table = table if table is not None else TagTable.synthetic(graph.node_count)
    labels = table.tags
    items = ItemTagSets()
    for i, j in graph.edges().tolist():
        items.add(f"edge:{i}-{j}", [labels[i], labels[j]])
    for i in np.flatnonzero(graph.degrees() == 0).tolist():
        items.add(f"node:{i}", [labels[i]])
    return items
