"""Simulated-annealing synthesis of graphs matching target statistics.

A synthesis target fixes the node roster and edge count, a set of
hard structural constraints (connectivity, pinned degrees, required
adjacencies, pair coverage, a protected top-degree pair), and a set
of soft metric targets scored as weighted squared deviations. The
annealer first repairs a random graph until every hard constraint
holds, then walks the feasible space with single edge swaps, keeping
the best-scoring graph it visits.

Every run is driven by one seeded RNG, so a target synthesizes to the
same graph on every machine.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    FileFormatError,
    GraphError,
    InfeasibleTargetError,
    PreconditionError,
)
from .graph import LabeledGraph, _check_label

SOFT_METRICS = (
    "density",
    "fragmentation",
    "average_degree",
    "diameter_lcc",
    "average_clustering",
    "mean_betweenness",
    "degree_centralization",
    "eigenvector_top3",
)

_REPAIR_ATTEMPTS = 8
_REPAIR_ITERATIONS = 50_000


@dataclass(frozen=True)
class AnnealingSchedule:
    initial_temperature: float = 1.0
    cooling_factor: float = 0.999
    iterations: int = 200_000
    rng_seed: int = 7

    def __post_init__(self):
        if self.initial_temperature <= 0.0:
            raise PreconditionError("initial_temperature must be positive")
        if not 0.0 < self.cooling_factor <= 1.0:
            raise PreconditionError("cooling_factor must be in (0, 1]")
        if self.iterations < 0:
            raise PreconditionError("iterations must be non-negative")


@dataclass(frozen=True)
class SoftTarget:
    """One metric the annealer should steer toward.

    `nodes` is only used by eigenvector_top3: the value scored is the
    fraction of those nodes present in the graph's top-3 eigenvector
    ranking, compared against `value` (normally 1.0).
    """

    metric: str
    value: float
    weight: float = 1.0
    nodes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.metric not in SOFT_METRICS:
            raise PreconditionError(f"unknown soft metric {self.metric!r}")
        if self.weight < 0.0:
            raise PreconditionError("soft target weight must be non-negative")
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if self.metric == "eigenvector_top3":
            if not 1 <= len(self.nodes) <= 3:
                raise PreconditionError("eigenvector_top3 takes between 1 and 3 nodes")
        elif self.nodes:
            raise PreconditionError(f"soft metric {self.metric!r} takes no node list")


@dataclass(frozen=True)
class HardConstraints:
    """Structural facts the synthesized graph must satisfy exactly."""

    connected: bool = True
    degrees: tuple[tuple[str, int], ...] = ()
    adjacent: tuple[tuple[str, str], ...] = ()
    pair_coverage: tuple[str, str, int] | None = None
    top_degree_pair: tuple[str, str] | None = None
    top_degree_margin: int = 2

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple((v, int(d)) for v, d in self.degrees))
        object.__setattr__(self, "adjacent", tuple((u, v) for u, v in self.adjacent))
        if self.top_degree_margin < 0:
            raise PreconditionError("top_degree_margin must be non-negative")


@dataclass(frozen=True)
class SynthesisTarget:
    nodes: tuple[str, ...]
    edge_count: int
    hard: HardConstraints = field(default_factory=HardConstraints)
    soft: tuple[SoftTarget, ...] = ()
    schedule: AnnealingSchedule = field(default_factory=AnnealingSchedule)
    missing_metric_penalty: float = 100.0

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "soft", tuple(self.soft))
        for v in self.nodes:
            _check_label(v)
        if len(set(self.nodes)) != len(self.nodes):
            raise PreconditionError("target roster contains duplicate labels")
        n = len(self.nodes)
        if self.edge_count < 0 or self.edge_count > n * (n - 1) // 2:
            raise InfeasibleTargetError(
                f"edge count {self.edge_count} is impossible on {n} nodes"
            )
        roster = set(self.nodes)

        def known(label: str) -> str:
            if label not in roster:
                raise PreconditionError(f"constraint names unknown node {label!r}")
            return label

        for v, d in self.hard.degrees:
            known(v)
            if not 0 <= d <= n - 1:
                raise InfeasibleTargetError(f"degree {d} pinned on {v!r} is impossible")
        for u, v in self.hard.adjacent:
            known(u), known(v)
            if u == v:
                raise PreconditionError("required adjacency cannot be a self-loop")
        if self.hard.pair_coverage is not None:
            u, v, count = self.hard.pair_coverage
            known(u), known(v)
            if u == v:
                raise PreconditionError("pair coverage needs two distinct nodes")
            if count < 0 or count > max(0, 2 * n - 3):
                raise InfeasibleTargetError(f"pair coverage {count} is impossible")
        if self.hard.top_degree_pair is not None:
            known(self.hard.top_degree_pair[0])
            known(self.hard.top_degree_pair[1])
        for t in self.soft:
            for v in t.nodes:
                known(v)
        if self.missing_metric_penalty < 0.0:
            raise PreconditionError("missing_metric_penalty must be non-negative")

    @property
    def node_count(self) -> int:
        return len(self.nodes)


def load_synthesis_target(text: str) -> SynthesisTarget:
    """Parse the JSON target format; see the README for the schema."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"target JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FileFormatError("target JSON must be an object")
    try:
        hard_doc = dict(doc.get("hard", {}))
        nodes_spec = hard_doc.pop("nodes")
        edge_count = int(hard_doc.pop("edges"))
        if isinstance(nodes_spec, int):
            width = len(str(nodes_spec))
            nodes = tuple(f"n{i:0{width}d}" for i in range(1, nodes_spec + 1))
        else:
            nodes = tuple(str(v) for v in nodes_spec)
        pair_cov = hard_doc.pop("pair_coverage", None)
        if pair_cov is not None:
            pair_cov = (str(pair_cov["pair"][0]), str(pair_cov["pair"][1]), int(pair_cov["count"]))
        top_pair = hard_doc.pop("top_degree_pair", None)
        margin = 2
        if top_pair is not None:
            margin = int(top_pair.get("margin", 2))
            top_pair = (str(top_pair["pair"][0]), str(top_pair["pair"][1]))
        hard = HardConstraints(
            connected=bool(hard_doc.pop("connected", True)),
            degrees=tuple(sorted(dict(hard_doc.pop("degrees", {})).items())),
            adjacent=tuple((str(u), str(v)) for u, v in hard_doc.pop("adjacent", [])),
            pair_coverage=pair_cov,
            top_degree_pair=top_pair,
            top_degree_margin=margin,
        )
        if hard_doc:
            raise FileFormatError(f"unknown hard constraint {min(hard_doc)!r}")
        soft = tuple(
            SoftTarget(
                metric=str(t["metric"]),
                value=float(t["value"]),
                weight=float(t.get("weight", 1.0)),
                nodes=tuple(str(v) for v in t.get("nodes", ())),
            )
            for t in doc.get("soft", [])
        )
        schedule = AnnealingSchedule(**dict(doc.get("schedule", {})))
        penalty = float(doc.get("missing_metric_penalty", 100.0))
    except InfeasibleTargetError:
        raise
    except FileFormatError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise FileFormatError(f"target JSON: {exc}") from None
    try:
        return SynthesisTarget(
            nodes=nodes,
            edge_count=edge_count,
            hard=hard,
            soft=soft,
            schedule=schedule,
            missing_metric_penalty=penalty,
        )
    except PreconditionError as exc:
        # a self-inconsistent file is a format problem for the caller
        raise FileFormatError(f"target JSON: {exc}") from None


class _State:
    """Mutable adjacency state with O(1) edge/non-edge sampling."""

    def __init__(self, n: int, edges: list[tuple[int, int]]):
        self.n = n
        self.a = np.zeros((n, n))
        self.deg = np.zeros(n, dtype=np.int64)
        self.bits = [0] * n
        self.edges: list[tuple[int, int]] = []
        self.edge_pos: dict[tuple[int, int], int] = {}
        self.non_edges: list[tuple[int, int]] = []
        self.non_edge_pos: dict[tuple[int, int], int] = {}
        edge_set = set(edges)
        for i in range(n):
            for j in range(i + 1, n):
                pair = (i, j)
                if pair in edge_set:
                    self._insert(pair)
                else:
                    self.non_edge_pos[pair] = len(self.non_edges)
                    self.non_edges.append(pair)

    def _insert(self, pair: tuple[int, int]) -> None:
        i, j = pair
        self.a[i, j] = self.a[j, i] = 1.0
        self.deg[i] += 1
        self.deg[j] += 1
        self.bits[i] |= 1 << j
        self.bits[j] |= 1 << i
        self.edge_pos[pair] = len(self.edges)
        self.edges.append(pair)

    def _delete(self, pair: tuple[int, int]) -> None:
        i, j = pair
        self.a[i, j] = self.a[j, i] = 0.0
        self.deg[i] -= 1
        self.deg[j] -= 1
        self.bits[i] &= ~(1 << j)
        self.bits[j] &= ~(1 << i)
        pos = self.edge_pos.pop(pair)
        last = self.edges.pop()
        if last != pair:
            self.edges[pos] = last
            self.edge_pos[last] = pos

    def _list_add_non_edge(self, pair: tuple[int, int]) -> None:
        self.non_edge_pos[pair] = len(self.non_edges)
        self.non_edges.append(pair)

    def _list_del_non_edge(self, pair: tuple[int, int]) -> None:
        pos = self.non_edge_pos.pop(pair)
        last = self.non_edges.pop()
        if last != pair:
            self.non_edges[pos] = last
            self.non_edge_pos[last] = pos

    def swap(self, out_pair: tuple[int, int], in_pair: tuple[int, int]) -> None:
        """Replace edge `out_pair` with non-edge `in_pair`."""
        self._delete(out_pair)
        self._list_add_non_edge(out_pair)
        self._list_del_non_edge(in_pair)
        self._insert(in_pair)

    def has(self, i: int, j: int) -> bool:
        return bool(self.bits[i] >> j & 1)

    def connected(self) -> bool:
        if self.n == 0:
            return True
        full = (1 << self.n) - 1
        reach = 1
        frontier = 1
        while frontier:
            grown = 0
            f = frontier
            while f:
                low = f & -f
                grown |= self.bits[low.bit_length() - 1]
                f ^= low
            frontier = grown & ~reach
            reach |= frontier
        return reach == full

    def component_count(self) -> int:
        seen = 0
        count = 0
        for start in range(self.n):
            if seen >> start & 1:
                continue
            count += 1
            frontier = 1 << start
            seen |= frontier
            while frontier:
                grown = 0
                f = frontier
                while f:
                    low = f & -f
                    grown |= self.bits[low.bit_length() - 1]
                    f ^= low
                frontier = grown & ~seen
                seen |= frontier
        return count


class _HardCheck:
    """Hard constraints compiled to node indexes for the hot loop."""

    def __init__(self, target: SynthesisTarget, order: tuple[str, ...]):
        idx = {v: i for i, v in enumerate(order)}
        hc = target.hard
        self.connected = hc.connected
        self.pins = tuple((idx[v], d) for v, d in hc.degrees)
        self.required = frozenset(
            (min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in hc.adjacent
        )
        self.pair_cov = None
        if hc.pair_coverage is not None:
            u, v, count = hc.pair_coverage
            self.pair_cov = (idx[u], idx[v], count)
        self.top_pair = None
        if hc.top_degree_pair is not None:
            u, v = hc.top_degree_pair
            others = np.ones(len(order), dtype=bool)
            others[idx[u]] = others[idx[v]] = False
            self.top_pair = (idx[u], idx[v], hc.top_degree_margin, others)

    def ok(self, state: _State) -> bool:
        deg = state.deg
        for i, want in self.pins:
            if deg[i] != want:
                return False
        for i, j in self.required:
            if not state.has(i, j):
                return False
        if self.pair_cov is not None:
            i, j, count = self.pair_cov
            if deg[i] + deg[j] - (1 if state.has(i, j) else 0) != count:
                return False
        if self.top_pair is not None:
            i, j, margin, others = self.top_pair
            lim = min(deg[i], deg[j]) - margin
            if state.n > 2 and int(deg[others].max()) > lim:
                return False
        if self.connected and not state.connected():
            return False
        return True

    def violations(self, state: _State) -> float:
        """Integer-valued distance from feasibility; zero means feasible."""
        deg = state.deg
        v = 0
        for i, want in self.pins:
            v += abs(int(deg[i]) - want)
        for i, j in self.required:
            if not state.has(i, j):
                v += 1
        if self.pair_cov is not None:
            i, j, count = self.pair_cov
            v += abs(int(deg[i]) + int(deg[j]) - (1 if state.has(i, j) else 0) - count)
        if self.top_pair is not None:
            i, j, margin, others = self.top_pair
            lim = min(int(deg[i]), int(deg[j])) - margin
            if state.n > 2:
                excess = deg[others] - lim
                v += int(excess[excess > 0].sum())
        if self.connected:
            v += state.component_count() - 1
        return float(v)


class _Evaluator:
    """Vectorized soft-metric scoring against one compiled target."""

    def __init__(self, target: SynthesisTarget, order: tuple[str, ...]):
        idx = {v: i for i, v in enumerate(order)}
        self.penalty = target.missing_metric_penalty
        self.terms = []
        for t in target.soft:
            self.terms.append((t.metric, t.value, t.weight, tuple(idx[v] for v in t.nodes)))
        wanted = {t.metric for t in target.soft}
        self.need_dist = bool(wanted & {"diameter_lcc", "mean_betweenness", "eigenvector_top3"})

    def values(self, state: _State) -> dict[str, float | None]:
        """Every requested metric's value, None where not computable."""
        n = state.n
        m = len(state.edges)
        a = state.a
        deg = state.deg.astype(float)
        out: dict[str, float | None] = {}
        dist = _bfs_all(a) if self.need_dist else None
        for metric, _value, _weight, nodes in self.terms:
            if metric in out:
                continue
            if metric == "density":
                out[metric] = (2.0 * m) / (n * (n - 1)) if n >= 2 else None
            elif metric == "fragmentation":
                out[metric] = 1.0 - (2.0 * m) / (n * (n - 1)) if n >= 2 else None
            elif metric == "average_degree":
                out[metric] = (2.0 * m) / n if n >= 1 else None
            elif metric == "diameter_lcc":
                out[metric] = _diameter(dist) if m else None
            elif metric == "average_clustering":
                out[metric] = _avg_clustering(a, deg) if n >= 1 else None
            elif metric == "mean_betweenness":
                out[metric] = _mean_betweenness(a, dist) if n >= 3 else None
            elif metric == "degree_centralization":
                out[metric] = (
                    float(deg.max() * n - deg.sum()) / ((n - 1) * (n - 2)) if n >= 3 else None
                )
            elif metric == "eigenvector_top3":
                out[metric] = _top3_fraction(a, dist, nodes) if n >= 1 else None
        return out

    def objective(self, state: _State) -> float:
        vals = self.values(state)
        total = 0.0
        for metric, value, weight, _nodes in self.terms:
            got = vals[metric]
            if got is None:
                total += weight * self.penalty
            else:
                diff = got - value
                total += weight * diff * diff
        return total


def _bfs_all(a: np.ndarray) -> np.ndarray:
    """All-pairs hop distances; -1 marks unreachable pairs."""
    n = a.shape[0]
    dist = np.full((n, n), -1.0)
    np.fill_diagonal(dist, 0.0)
    frontier = np.eye(n)
    d = 0
    while True:
        nxt = ((frontier @ a) > 0) & (dist < 0)
        if not nxt.any():
            return dist
        d += 1
        dist[nxt] = d
        frontier = nxt.astype(float)


def _diameter(dist: np.ndarray) -> float | None:
    if (dist < 0).any():
        return None
    return float(dist.max())


def _avg_clustering(a: np.ndarray, deg: np.ndarray) -> float:
    closed = ((a @ a) * a).sum(axis=1)  # per node: twice its triangle count
    pairs = deg * (deg - 1.0)
    safe = np.where(pairs > 0.0, pairs, 1.0)
    return float(np.where(pairs > 0.0, closed / safe, 0.0).mean())


def _mean_betweenness(a: np.ndarray, dist: np.ndarray) -> float:
    """Mean of normalized betweenness; sources are rows of `dist`."""
    n = a.shape[0]
    maxd = int(dist.max())
    sigma = np.eye(n)
    for k in range(1, maxd + 1):
        prev = sigma * (dist == k - 1)
        sigma = sigma + (prev @ a) * (dist == k)
    delta = np.zeros((n, n))
    for k in range(maxd, 0, -1):
        on_level = (dist == k) & (sigma > 0)
        ratio = np.where(on_level, (1.0 + delta) / np.where(sigma > 0, sigma, 1.0), 0.0)
        delta += (ratio @ a) * (dist == k - 1) * sigma
    raw = delta.sum(axis=0) - np.diag(delta)
    return float(raw.sum()) / (n * (n - 1) * (n - 2))


def _top3_fraction(a: np.ndarray, dist: np.ndarray, wanted: tuple[int, ...]) -> float:
    """Fraction of `wanted` present in the top-3 eigenvector ranking."""
    n = a.shape[0]
    sizes = (dist >= 0).sum(axis=1)
    root = int(sizes.argmax())
    members = np.flatnonzero(dist[root] >= 0)
    sub = a[np.ix_(members, members)]
    vec = np.linalg.eigh(sub)[1][:, -1]
    if vec[int(np.abs(vec).argmax())] < 0:
        vec = -vec
    scores = np.zeros(n)
    scores[members] = vec
    ranked = sorted(range(n), key=lambda i: (-scores[i], i))
    top = set(ranked[:3])
    return len(top.intersection(wanted)) / len(wanted)


def objective(g: LabeledGraph, target: SynthesisTarget) -> float:
    """Weighted squared deviation of g from the target's soft metrics."""
    if set(g.nodes) != set(target.nodes):
        raise GraphError("candidate graph and target roster disagree")
    order = tuple(sorted(target.nodes))
    idx = {v: i for i, v in enumerate(order)}
    pairs = [(min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in g.edges()]
    state = _State(len(order), pairs)
    return _Evaluator(target, order).objective(state)


def soft_report(g: LabeledGraph, target: SynthesisTarget) -> list[dict]:
    """Achieved-versus-target rows for every soft metric."""
    if set(g.nodes) != set(target.nodes):
        raise GraphError("candidate graph and target roster disagree")
    order = tuple(sorted(target.nodes))
    idx = {v: i for i, v in enumerate(order)}
    pairs = [(min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in g.edges()]
    state = _State(len(order), pairs)
    ev = _Evaluator(target, order)
    vals = ev.values(state)
    rows = []
    for t in target.soft:
        got = vals[t.metric]
        if got is None:
            contribution = t.weight * target.missing_metric_penalty
        else:
            contribution = t.weight * (got - t.value) ** 2
        rows.append(
            {
                "metric": t.metric,
                "target": t.value,
                "weight": t.weight,
                "achieved": got,
                "contribution": contribution,
            }
        )
    return rows


def _static_feasibility(target: SynthesisTarget) -> None:
    n = target.node_count
    m = target.edge_count
    hc = target.hard
    if hc.connected and n >= 2 and m < n - 1:
        raise InfeasibleTargetError(f"{m} edges cannot connect {n} nodes")
    distinct_required = {tuple(sorted(p)) for p in hc.adjacent}
    if len(distinct_required) > m:
        raise InfeasibleTargetError("more adjacencies are required than edges exist")
    if hc.connected and n >= 2 and any(d == 0 for _v, d in hc.degrees):
        raise InfeasibleTargetError("a degree-0 pin contradicts connectedness")
    if sum(d for _v, d in hc.degrees) > 2 * m:
        raise InfeasibleTargetError("pinned degrees exceed twice the edge count")
    pins = dict(hc.degrees)
    adjacency_load: dict[str, int] = {}
    for u, v in hc.adjacent:
        adjacency_load[u] = adjacency_load.get(u, 0) + 1
        adjacency_load[v] = adjacency_load.get(v, 0) + 1
    for v, load in adjacency_load.items():
        if v in pins and pins[v] < load:
            raise InfeasibleTargetError(
                f"{v!r} is pinned to degree {pins[v]} but {load} adjacencies are required"
            )
    if hc.pair_coverage is not None:
        u, v, count = hc.pair_coverage
        du, dv = pins.get(u), pins.get(v)
        if du is not None and dv is not None and count not in (du + dv, du + dv - 1):
            raise InfeasibleTargetError("pair coverage contradicts the pinned degrees")
    if hc.top_degree_pair is not None:
        u, v = hc.top_degree_pair
        margin = hc.top_degree_margin
        cap = n - 1 - margin
        for w, d in hc.degrees:
            if w not in (u, v) and d > cap:
                raise InfeasibleTargetError(
                    f"{w!r} pinned to degree {d} cannot sit {margin} below the top pair"
                )


def _random_fill(
    rng: random.Random, n: int, m: int, required: frozenset[tuple[int, int]]
) -> list[tuple[int, int]]:
    chosen = sorted(required)
    rest = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in required
    ]
    extra = rng.sample(rest, m - len(chosen))
    return chosen + extra


def _anneal(
    state: _State,
    rng: random.Random,
    iterations: int,
    t0: float,
    cooling: float,
    score,
    guard,
    protected: frozenset[tuple[int, int]],
    stop_at: float,
) -> tuple[float, float, list[tuple[int, int]]]:
    """Generic annealing loop over single edge swaps.

    Returns (final score, best score, best edge list). Temperature
    cools every proposal; the acceptance coin is only flipped for
    uphill moves, so the RNG sequence is reproducible.
    """
    cur = score(state)
    best = cur
    best_edges = list(state.edges)
    t = t0
    for _ in range(iterations):
        if cur <= stop_at:
            break
        if not state.edges or not state.non_edges:
            break
        out_pair = state.edges[rng.randrange(len(state.edges))]
        in_pair = state.non_edges[rng.randrange(len(state.non_edges))]
        t *= cooling
        if out_pair in protected:
            continue
        state.swap(out_pair, in_pair)
        if guard is not None and not guard(state):
            state.swap(in_pair, out_pair)
            continue
        new = score(state)
        diff = new - cur
        if diff <= 0.0 or (t > 0.0 and rng.random() < math.exp(-diff / t)):
            cur = new
            if cur < best:
                best = cur
                best_edges = list(state.edges)
        else:
            state.swap(in_pair, out_pair)
    return cur, best, best_edges


def _restore(state: _State, edges: list[tuple[int, int]]) -> None:
    want = set(edges)
    have = set(state.edges)
    for pair in sorted(have - want):
        state._delete(pair)
        state._list_add_non_edge(pair)
    for pair in sorted(want - have):
        state._list_del_non_edge(pair)
        state._insert(pair)


def synthesize_reference(
    target: SynthesisTarget, initial: LabeledGraph | None = None
) -> LabeledGraph:
    """Anneal a graph toward the target; deterministic per rng_seed.

    Raises InfeasibleTargetError when the hard constraints are
    provably unsatisfiable, or when repeated repair attempts cannot
    reach a feasible starting point.
    """
    _static_feasibility(target)
    order = tuple(sorted(target.nodes))
    idx = {v: i for i, v in enumerate(order)}
    n = len(order)
    check = _HardCheck(target, order)
    evaluator = _Evaluator(target, order)
    sched = target.schedule
    rng = random.Random(sched.rng_seed)

    initial_pairs: list[tuple[int, int]] | None = None
    if initial is not None:
        if set(initial.nodes) != set(order):
            raise GraphError("initial graph and target roster disagree")
        if initial.edge_count != target.edge_count:
            raise GraphError(
                f"initial graph has {initial.edge_count} edges, target wants {target.edge_count}"
            )
        initial_pairs = [
            (min(idx[u], idx[v]), max(idx[u], idx[v])) for u, v in initial.edges()
        ]

    state = None
    last_violations = None
    for attempt in range(_REPAIR_ATTEMPTS):
        if attempt == 0 and initial_pairs is not None:
            pairs = list(initial_pairs)
        else:
            pairs = _random_fill(rng, n, target.edge_count, check.required)
        candidate = _State(n, pairs)
        missing = [pair for pair in sorted(check.required) if not candidate.has(*pair)]
        traded_all = True
        for pair in missing:
            # force the required adjacency in by trading away an
            # expendable edge
            expendable = [e for e in candidate.edges if e not in check.required]
            if not expendable:
                traded_all = False
                break
            candidate.swap(expendable[rng.randrange(len(expendable))], pair)
        if not traded_all:
            continue
        if check.violations(candidate) > 0.0:
            cur, _best, _edges = _anneal(
                candidate,
                rng,
                iterations=_REPAIR_ITERATIONS,
                t0=sched.initial_temperature,
                cooling=sched.cooling_factor,
                score=check.violations,
                guard=None,
                protected=check.required,
                stop_at=0.0,
            )
            last_violations = cur
            if cur > 0.0:
                continue
        state = candidate
        break
    if state is None:
        raise InfeasibleTargetError(
            "hard constraints not satisfied after "
            f"{_REPAIR_ATTEMPTS} repair attempts (remaining violation score "
            f"{last_violations})"
        )

    _final, _best, best_edges = _anneal(
        state,
        rng,
        iterations=sched.iterations,
        t0=sched.initial_temperature,
        cooling=sched.cooling_factor,
        score=evaluator.objective,
        guard=check.ok,
        protected=check.required,
        stop_at=0.0,
    )
    _restore(state, best_edges)
    return LabeledGraph(order, [(order[i], order[j]) for i, j in sorted(state.edges)])
