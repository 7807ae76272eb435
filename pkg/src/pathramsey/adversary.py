"""Adversarial edge coloring from an affine plane partition.

High-degree vertices are split off into v0, the rest is partitioned at
random into q^2 parts identified with the plane's points, and each edge
is colored by the parallel class of the line through its endpoint parts.
A certificate consists of a partition under which every line's edge
count stays below n*d/2.
"""

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .affine_plane import AffinePlane
from .bounds import make_tail_bound, union_margin
from .finite_field import is_prime_power
from .graphs import HostGraph

MAX_TRIAL_CAP = 10 ** 4


@dataclass(frozen=True)
class AdversaryParams:
    r: int            # color count; q = r - 2 must be a prime power >= 2
    d: float          # target average degree of the forbidden graph
    beta: float       # independence ratio in (0, 1)
    C: float          # concentration slack constant
    seed: int = 0

    def __post_init__(self):
        if self.r < 4 or not is_prime_power(self.r - 2):
            raise ValueError("need r >= 4 with r - 2 a prime power")
        if not 0 < self.beta < 1:
            raise ValueError("beta must be in (0, 1)")
        if self.d <= 0 or self.C <= 0:
            raise ValueError("d and C must be positive")

    @property
    def q(self) -> int:
        return self.r - 2

    @property
    def degree_threshold(self) -> float:
        return self.r ** 2 * self.d / (1.0 - self.beta)


@dataclass
class Coloring:
    graph: HostGraph
    v0: frozenset
    parts: dict                 # vertex -> part label in 1..q^2 (outside v0)
    edge_colors: dict           # (u, v) sorted -> color in 1..r
    plane: AffinePlane

    @property
    def r(self) -> int:
        return self.plane.q + 2


@dataclass
class LineCounts:
    a_l: np.ndarray             # edge count inside each line's part union
    expectation: float          # rest-induced edge count / (r-2)^2
    gamma: float                # C*sqrt(n)/(r-2)^2 (nan if C unknown)
    threshold: float            # n*d/2 (nan if d unknown)

    def all_below(self) -> bool:
        return bool(np.all(self.a_l < self.threshold))


@dataclass
class ConfinementReport:
    ok: bool
    checked_components: int
    failures: list = field(default_factory=list)  # (color, component vertices)


@dataclass
class CertificateResult:
    success: bool
    coloring: Coloring | None
    counts: LineCounts | None
    trials_used: int
    worst_margin: float         # best over trials of (threshold - worst line's A_L)
    seed: int


def split_v0(g: HostGraph, params: AdversaryParams):
    """Vertices of degree >= r^2*d/(1-beta) versus the rest."""
    thr = params.degree_threshold
    v0 = {v for v in range(g.n) if len(g.adj[v]) >= thr}
    rest = [v for v in range(g.n) if v not in v0]
    return v0, rest


def random_partition(rest, q: int, seed) -> dict:
    """Assign each vertex independently and uniformly to a part 1..q^2."""
    if q < 2:
        raise ValueError("need q >= 2")
    rng = np.random.default_rng(seed)
    labels = rng.integers(1, q * q + 1, size=len(rest))
    return {v: int(x) for v, x in zip(rest, labels)}


def color_edges(g: HostGraph, v0, parts, plane: AffinePlane) -> Coloring:
    """Apply the three coloring rules; intra-part edges get color 1."""
    q = plane.q
    r = q + 2
    n_parts = q * q
    for v, x in parts.items():
        if not 1 <= x <= n_parts:
            raise ValueError(f"part label {x} for vertex {v} outside 1..{n_parts}")
    v0 = frozenset(v0)
    colors = {}
    for (u, v) in g.edges:
        if u in v0 or v in v0:
            colors[(u, v)] = r
            continue
        x, y = parts[u], parts[v]
        if x == y:
            colors[(u, v)] = 1
        else:
            colors[(u, v)] = plane.class_color(plane.line_through(x, y))
    return Coloring(graph=g, v0=v0, parts=dict(parts),
                    edge_colors=colors, plane=plane)


def check_confinement(col: Coloring) -> ConfinementReport:
    """Verify every component of each color class 1..q+1 sits inside the
    part union of a single line of that class."""
    plane = col.plane
    q = plane.q
    failures = []
    checked = 0
    for color in range(1, q + 2):
        adj = {}
        for (u, v), c in col.edge_colors.items():
            if c != color:
                continue
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        seen = set()
        class_lines = [set(plane.lines[i]) for i in plane.classes[color - 1]]
        for s in adj:
            if s in seen:
                continue
            stack = [s]
            seen.add(s)
            comp = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        stack.append(w)
            checked += 1
            comp_parts = {col.parts[v] for v in comp}
            if not any(comp_parts <= line for line in class_lines):
                failures.append((color, sorted(comp)))
    return ConfinementReport(ok=not failures, checked_components=checked,
                             failures=failures)


def _parts_array(g: HostGraph, v0, parts) -> np.ndarray:
    """Per-vertex part labels, 0 for v0 vertices."""
    arr = np.zeros(g.n, dtype=np.int64)
    for v, x in parts.items():
        arr[v] = x
    for v in v0:
        arr[v] = 0
    return arr

def _line_counts_from_arrays(edge_arr, part_arr, plane: AffinePlane) -> np.ndarray:
    q = plane.q
    counts = np.zeros(plane.n_lines, dtype=np.int64)
    if edge_arr.shape[0] == 0:
        return counts
    pu = part_arr[edge_arr[:, 0]]
    pv = part_arr[edge_arr[:, 1]]
    for idx, line in enumerate(plane.lines):
        member = np.zeros(q * q + 1, dtype=bool)
        member[list(line)] = True
        counts[idx] = int(np.count_nonzero(member[pu] & member[pv]))
    return counts


def count_lines(col: Coloring, plane: AffinePlane | None = None,
                params: AdversaryParams | None = None,
                n: int | None = None) -> LineCounts:
    """Edge count inside each line's part union (v0 edges excluded)."""
    plane = plane or col.plane
    part_arr = _parts_array(col.graph, col.v0, col.parts)
    a_l = _line_counts_from_arrays(col.graph.edge_array(), part_arr, plane)
    q = plane.q
    rest_edges = sum(1 for (u, v) in col.graph.edges
                     if u not in col.v0 and v not in col.v0)
    expectation = rest_edges / (q * q)
    n = n if n is not None else col.graph.n
    if params is not None:
        gamma = params.C * math.sqrt(n) / (q * q)
        threshold = n * params.d / 2.0
    else:
        gamma = math.nan
        threshold = math.nan
    return LineCounts(a_l=a_l, expectation=expectation, gamma=gamma,
                      threshold=threshold)


def default_max_trials(g: HostGraph, params: AdversaryParams, rest_size: int) -> int:
    """ceil(10 / union-bound margin), capped; the cap applies whenever the
    margin is nonpositive."""
    tail = make_tail_bound(params.r, g.n, params.d, params.beta, params.C,
                           rest_size)
    margin = union_margin(params.q, tail)
    if margin <= 0:
        return MAX_TRIAL_CAP
    return min(MAX_TRIAL_CAP, max(1, math.ceil(10.0 / margin)))


def find_certificate(g: HostGraph, params: AdversaryParams, plane: AffinePlane,
                     max_trials: int | None = None) -> CertificateResult:
    """Resample partitions until every line spans fewer than n*d/2 edges.

    On success the full coloring is rebuilt and its rule invariants,
    confinement, and color-r independence are asserted before returning.
    """
    if plane.q != params.q:
        raise ValueError("plane order does not match params")
    n = g.n
    threshold = n * params.d / 2.0
    budget = (params.d / 2.0) * n * params.q ** 2 - params.C * math.sqrt(n)
    if g.n_edges > budget:
        warnings.warn(
            f"edge count {g.n_edges} exceeds the certified budget {budget:.1f}; "
            "a certificate may not exist", stacklevel=2)
    if len(g.components()) > 1:
        warnings.warn("input graph is not connected", stacklevel=2)

    v0, rest = split_v0(g, params)
    if g.n_edges <= budget and not len(v0) < (1.0 - params.beta) * n:
        raise AssertionError("v0 size bound violated despite edge budget")

    if max_trials is None:
        max_trials = default_max_trials(g, params, len(rest))

    edge_arr = g.edge_array()
    rest_arr = np.asarray(rest, dtype=np.int64)
    q = params.q
    worst = -math.inf
    for trial in range(max_trials):
        trial_seed = params.seed + trial
        rng = np.random.default_rng(trial_seed)
        labels = rng.integers(1, q * q + 1, size=len(rest))
        part_arr = np.zeros(n, dtype=np.int64)
        part_arr[rest_arr] = labels
        a_l = _line_counts_from_arrays(edge_arr, part_arr, plane)
        margin = threshold - (a_l.max() if a_l.size else 0)
        worst = max(worst, margin) if math.isfinite(worst) else margin
        if np.all(a_l < threshold):
            parts = {v: int(x) for v, x in zip(rest, labels)}
            col = color_edges(g, v0, parts, plane)
            report = check_confinement(col)
            assert report.ok, "confinement claim failed on a produced coloring"
            color_r_edges = [(u, v) for (u, v), c in col.edge_colors.items()
                             if c == params.r]
            assert all(u in v0 or v in v0 for u, v in color_r_edges), \
                "a color-r edge avoids v0"
            counts = count_lines(col, plane, params)
            return CertificateResult(True, col, counts, trial + 1,
                                     margin, params.seed)
    return CertificateResult(False, None, None, max_trials, worst, params.seed)
