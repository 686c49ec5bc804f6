"""Topology and centrality metrics.

All centrality scores are reported as fractions in [0, 1], never
percentages. Functions that need a minimum graph size raise
PreconditionError rather than guessing a value.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .errors import ConvergenceError, PreconditionError
from .graph import LabeledGraph, largest_connected_component


def density(g: LabeledGraph) -> float:
    """Fraction of the n(n-1)/2 possible edges that are present."""
    n = g.node_count
    if n < 2:
        raise PreconditionError("density needs at least 2 nodes")
    return (2.0 * g.edge_count) / (n * (n - 1))


def fragmentation(g: LabeledGraph) -> float:
    """One minus density: the fraction of node pairs left unconnected."""
    n = g.node_count
    if n < 2:
        raise PreconditionError("fragmentation needs at least 2 nodes")
    return 1.0 - (2.0 * g.edge_count) / (n * (n - 1))


def average_degree(g: LabeledGraph) -> float:
    if g.node_count == 0:
        raise PreconditionError("average degree of an empty graph")
    return (2.0 * g.edge_count) / g.node_count


def _bfs_distances(g: LabeledGraph, source: str, inside: frozenset[str]) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in inside and w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def diameter_lcc(g: LabeledGraph) -> int:
    """Longest shortest path within the largest connected component."""
    if g.edge_count == 0:
        raise PreconditionError("diameter needs at least one edge")
    lcc = largest_connected_component(g)
    best = 0
    for v in sorted(lcc):
        dist = _bfs_distances(g, v, lcc)
        ecc = max(dist.values())
        if ecc > best:
            best = ecc
    return best


def local_clustering(g: LabeledGraph, v: str) -> float:
    """Fraction of the node's neighbor pairs that are themselves linked."""
    nbrs = sorted(g.neighbors(v))
    d = len(nbrs)
    if d < 2:
        return 0.0
    links = 0
    for i in range(d):
        for j in range(i + 1, d):
            if g.has_edge(nbrs[i], nbrs[j]):
                links += 1
    return (2.0 * links) / (d * (d - 1))


def average_clustering(g: LabeledGraph) -> float:
    if g.node_count == 0:
        raise PreconditionError("average clustering of an empty graph")
    return sum(local_clustering(g, v) for v in sorted(g.nodes)) / g.node_count


def betweenness(g: LabeledGraph) -> dict[str, float]:
    """Shortest-path betweenness for every node, normalized to [0, 1].

    Raw pair-dependency sums are divided by (n-1)(n-2), which both
    removes the double count of unordered pairs and rescales so a
    node on every shortest path scores exactly 1.
    """
    n = g.node_count
    if n < 3:
        raise PreconditionError("betweenness needs at least 3 nodes")
    order = sorted(g.nodes)
    adj = {v: sorted(g.neighbors(v)) for v in order}
    raw = dict.fromkeys(order, 0.0)
    for s in order:
        sigma = dict.fromkeys(order, 0.0)
        sigma[s] = 1.0
        dist = {s: 0}
        preds: dict[str, list[str]] = {v: [] for v in order}
        stack: list[str] = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = dict.fromkeys(order, 0.0)
        for w in reversed(stack):
            for v in preds[w]:
                delta[v] += (sigma[v] / sigma[w]) * (1.0 + delta[w])
            if w != s:
                raw[w] += delta[w]
    scale = 1.0 / ((n - 1) * (n - 2))
    return {v: raw[v] * scale for v in order}


def mean_betweenness(g: LabeledGraph) -> float:
    scores = betweenness(g)
    return sum(scores[v] for v in sorted(scores)) / len(scores)


def eigenvector_centrality(
    g: LabeledGraph, tol: float = 1e-9, max_iter: int = 10000
) -> dict[str, float]:
    """Principal-eigenvector scores scaled so the maximum is 1.

    Power iteration runs on the largest connected component; nodes
    outside it score 0. Each update adds the previous iterate (a unit
    diagonal shift), which breaks the period-2 oscillation bipartite
    graphs otherwise exhibit without changing the eigenvector.
    """
    if g.node_count == 0:
        raise PreconditionError("eigenvector centrality of an empty graph")
    lcc = sorted(largest_connected_component(g))
    x = dict.fromkeys(lcc, 1.0)
    for _ in range(max_iter):
        y = {}
        for v in lcc:
            y[v] = x[v] + sum(x[u] for u in sorted(g.neighbors(v)))
        top = max(y.values())
        for v in lcc:
            y[v] /= top
        drift = max(abs(y[v] - x[v]) for v in lcc)
        x = y
        if drift < tol and _eigen_residual(g, lcc, x) <= 10.0 * tol:
            out = dict.fromkeys(g.nodes, 0.0)
            out.update(x)
            return {v: out[v] for v in sorted(out)}
    raise ConvergenceError(f"eigenvector centrality did not converge in {max_iter} iterations")


def _eigen_residual(g: LabeledGraph, lcc: list[str], x: Mapping[str, float]) -> float:
    ax = {v: sum(x[u] for u in sorted(g.neighbors(v))) for v in lcc}
    lam = sum(x[v] * ax[v] for v in lcc) / sum(x[v] * x[v] for v in lcc)
    return max(abs(ax[v] - lam * x[v]) for v in lcc)


def degree_centralization(g: LabeledGraph) -> float:
    """Freeman centralization: star graphs score 1, regular graphs 0."""
    n = g.node_count
    if n < 3:
        raise PreconditionError("degree centralization needs at least 3 nodes")
    degs = [g.degree(v) for v in g.nodes]
    top = max(degs)
    return sum(top - d for d in degs) / float((n - 1) * (n - 2))


@dataclass(frozen=True)
class MetricsReport:
    """One full set of topology metrics for a graph."""

    node_count: int
    edge_count: int
    density: float
    fragmentation: float
    average_degree: float
    diameter_lcc: int
    average_clustering: float
    mean_betweenness: float
    degree_centralization: float
    eigenvector_centrality: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "density": self.density,
            "fragmentation": self.fragmentation,
            "average_degree": self.average_degree,
            "diameter_lcc": self.diameter_lcc,
            "average_clustering": self.average_clustering,
            "mean_betweenness": self.mean_betweenness,
            "degree_centralization": self.degree_centralization,
            "eigenvector_centrality": {
                v: self.eigenvector_centrality[v] for v in sorted(self.eigenvector_centrality)
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def report(g: LabeledGraph) -> MetricsReport:
    """Compute every metric at once; needs n >= 3 and at least one edge."""
    return MetricsReport(
        node_count=g.node_count,
        edge_count=g.edge_count,
        density=density(g),
        fragmentation=fragmentation(g),
        average_degree=average_degree(g),
        diameter_lcc=diameter_lcc(g),
        average_clustering=average_clustering(g),
        mean_betweenness=mean_betweenness(g),
        degree_centralization=degree_centralization(g),
        eigenvector_centrality=eigenvector_centrality(g),
    )
