"""Cost-weighted spectral bisection.

Pipeline: per-node removal costs become a weighted adjacency matrix
B with entries A_ij * (w_i + w_j - 1), B yields the Laplacian
L = diag(B 1) - B, and the Laplacian's second-smallest eigenpair
(the Fiedler pair) splits the nodes by vector sign. Edges crossing
the split are the candidates a dismantler should attack.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import ConvergenceError, GraphError, PreconditionError
from .graph import LabeledGraph


def node_order(g: LabeledGraph) -> tuple[str, ...]:
    """Canonical (sorted) label order used for every matrix view."""
    return tuple(sorted(g.nodes))


def adjacency_matrix(g: LabeledGraph, order: Sequence[str] | None = None) -> np.ndarray:
    if order is None:
        order = node_order(g)
    idx = {v: i for i, v in enumerate(order)}
    a = np.zeros((len(order), len(order)))
    for u, v in g.edges():
        a[idx[u], idx[v]] = 1.0
        a[idx[v], idx[u]] = 1.0
    return a


def degree_costs(g: LabeledGraph) -> dict[str, float]:
    """The default removal-cost model: a node costs its degree."""
    return {v: float(g.degree(v)) for v in sorted(g.nodes)}


def _check_costs(g: LabeledGraph, costs: Mapping[str, float]) -> None:
    node_set = set(g.nodes)
    missing = node_set - set(costs)
    if missing:
        raise GraphError(f"cost missing for node {min(missing)!r}")
    extra = set(costs) - node_set
    if extra:
        raise GraphError(f"cost given for unknown node {min(extra)!r}")
    if any(costs[v] < 0 for v in costs):
        raise GraphError("costs must be non-negative")
    if g.node_count and not any(costs[v] > 0 for v in costs):
        raise GraphError("at least one cost must be positive")


def cost_matrix(
    g: LabeledGraph, costs: Mapping[str, float], order: Sequence[str] | None = None
) -> np.ndarray:
    """Weighted adjacency: entry (i, j) is A_ij * (w_i + w_j - 1).

    With unit costs this reduces to the plain adjacency matrix, so the
    unweighted problem is the w = 1 special case.
    """
    _check_costs(g, costs)
    if order is None:
        order = node_order(g)
    a = adjacency_matrix(g, order)
    w = np.array([float(costs[v]) for v in order])
    return a * (w[:, None] + w[None, :] - 1.0)


def weighted_laplacian(b: np.ndarray) -> np.ndarray:
    """L = diag(row sums) - b for a symmetric zero-diagonal matrix."""
    b = np.asarray(b, dtype=float)
    if b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise GraphError("cost matrix must be square")
    if not np.array_equal(b, b.T):
        raise GraphError("cost matrix must be symmetric")
    if np.any(b.diagonal() != 0.0):
        raise GraphError("cost matrix must have a zero diagonal")
    return np.diag(b.sum(axis=1)) - b


def _start_vectors(n: int) -> list[np.ndarray]:
    # two fixed generic starts; the chance that both are orthogonal to
    # the Fiedler eigenspace is negligible, and we keep the smaller
    # converged eigenvalue
    ramp = np.arange(1.0, n + 1.0)
    rng = random.Random(987654321)
    noise = np.array([rng.uniform(-1.0, 1.0) for _ in range(n)])
    return [ramp, noise]


def _power_iterate(
    l: np.ndarray, sigma: float, ones: np.ndarray, x: np.ndarray, tol: float, max_iter: int
) -> tuple[float, np.ndarray] | None:
    x = x - (x @ ones) * ones
    nx = np.linalg.norm(x)
    if nx < 1e-12:
        return None
    x = x / nx
    for _ in range(max_iter):
        y = sigma * x - l @ x
        y -= (y @ ones) * ones
        ny = np.linalg.norm(y)
        if ny < 1e-12 * max(sigma, 1.0):
            # (sigma I - L) annihilates x: x is an exact eigenvector
            # with eigenvalue sigma (K2 ends up here)
            lam = float(x @ l @ x)
            if np.linalg.norm(l @ x - lam * x) <= tol:
                return lam, x
            return None
        y /= ny
        lam = float(y @ l @ y)
        if np.linalg.norm(l @ y - lam * y) <= tol:
            return lam, y
        x = y
    return None


def fiedler(l: np.ndarray, tol: float = 1e-9, max_iter: int = 50000) -> tuple[float, np.ndarray]:
    """Second-smallest eigenpair of a connected graph's Laplacian.

    Power iteration on (sigma I - L) with sigma = 2 max_i L_ii turns
    the second-smallest eigenvalue into the dominant one once the
    constant vector (the kernel) is projected out each step. Returns
    (eigenvalue, unit vector); the vector's first nonzero component is
    made positive so reruns agree. An eigenvalue below 1e-10 means the
    graph was disconnected, which is reported as an error.
    """
    l = np.asarray(l, dtype=float)
    if l.ndim != 2 or l.shape[0] != l.shape[1]:
        raise GraphError("laplacian must be square")
    if not np.allclose(l, l.T, atol=1e-9):
        raise GraphError("laplacian must be symmetric")
    scale = max(1.0, float(np.abs(l).max()))
    if np.abs(l.sum(axis=1)).max() > 1e-8 * scale:
        raise GraphError("laplacian rows must sum to zero")
    n = l.shape[0]
    if n < 2:
        raise PreconditionError("fiedler pair needs at least 2 nodes")
    sigma = 2.0 * float(l.diagonal().max())
    if sigma <= 0.0:
        raise PreconditionError("graph has no edges, so it is disconnected")
    ones = np.full(n, 1.0 / np.sqrt(n))
    best: tuple[float, np.ndarray] | None = None
    for x0 in _start_vectors(n):
        got = _power_iterate(l, sigma, ones, x0, tol, max_iter)
        if got is not None and (best is None or got[0] < best[0] - 1e-12):
            best = got
    if best is None:
        raise ConvergenceError(f"fiedler iteration did not converge in {max_iter} steps")
    lam, vec = best
    if lam < 1e-10:
        raise PreconditionError("graph is disconnected (algebraic connectivity is zero)")
    for comp in vec:
        if abs(comp) > 1e-12:
            if comp < 0:
                vec = -vec
            break
    return lam, vec


@dataclass(frozen=True)
class SpectralBisection:
    """A sign split of the nodes induced by a Fiedler vector."""

    part_m: frozenset[str]
    part_m_bar: frozenset[str]
    fiedler_value: float
    fiedler_vector: dict[str, float]


def bisect(
    g: LabeledGraph, vector: Mapping[str, float], fiedler_value: float = 0.0
) -> SpectralBisection:
    """Split nodes by vector sign: v_i >= 0 goes to part_m.

    The stored vector is rescaled to unit length. A vector that puts
    every node on one side cannot drive a bisection and is rejected.
    """
    order = node_order(g)
    missing = set(order) - set(vector)
    if missing:
        raise GraphError(f"vector entry missing for node {min(missing)!r}")
    extra = set(vector) - set(order)
    if extra:
        raise GraphError(f"vector entry for unknown node {min(extra)!r}")
    arr = np.array([float(vector[v]) for v in order])
    part_m = frozenset(v for v, comp in zip(order, arr) if comp >= 0.0)
    part_m_bar = frozenset(order) - part_m
    if not part_m or not part_m_bar:
        raise PreconditionError("degenerate bisection: every node fell on one side")
    arr = arr / np.linalg.norm(arr)
    return SpectralBisection(
        part_m=part_m,
        part_m_bar=part_m_bar,
        fiedler_value=fiedler_value,
        fiedler_vector={v: float(comp) for v, comp in zip(order, arr)},
    )


def crossing_subgraph(g: LabeledGraph, bisection: SpectralBisection) -> LabeledGraph:
    """Subgraph of the edges whose endpoints straddle the bisection."""
    union = bisection.part_m | bisection.part_m_bar
    if union != set(g.nodes) or (bisection.part_m & bisection.part_m_bar):
        raise GraphError("bisection does not partition this graph's nodes")
    crossing = [
        (u, v)
        for u, v in g.edges()
        if (u in bisection.part_m) != (v in bisection.part_m)
    ]
    touched = {u for e in crossing for u in e}
    nodes = [v for v in g.nodes if v in touched]
    return LabeledGraph(nodes, crossing)


def spectral_bisection(
    g: LabeledGraph,
    costs: Mapping[str, float] | None = None,
    tol: float = 1e-9,
    max_iter: int = 50000,
) -> SpectralBisection:
    """Full pipeline: costs -> B -> L -> Fiedler pair -> sign split."""
    if costs is None:
        costs = degree_costs(g)
    order = node_order(g)
    b = cost_matrix(g, costs, order)
    l = weighted_laplacian(b)
    lam, vec = fiedler(l, tol=tol, max_iter=max_iter)
    return bisect(g, dict(zip(order, (float(c) for c in vec))), fiedler_value=lam)
