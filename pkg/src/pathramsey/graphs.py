"""Simple undirected host graphs with edge-list text I/O.

Vertices are dense 0-based integers.  The text format is one edge per
line, "u v", with '#' starting a comment line; the writer emits sorted
edges.  Duplicate input edges are merged silently, self-loops are hard
errors.
"""

from collections import deque

import numpy as np

EDGE_CAP = 10 ** 7


class HostGraph:
    """Simple graph; optionally bipartite with parts [0, n_left) and
    [n_left, n)."""

    def __init__(self, n_vertices, edges, bipartition=None):
        self.n = int(n_vertices)
        seen = set()
        clean = []
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            clean.append((u, v))
        if len(clean) > EDGE_CAP:
            raise ValueError(f"edge count {len(clean)} exceeds cap {EDGE_CAP}")
        clean.sort()
        self.edges = clean
        self.adj = [[] for _ in range(self.n)]
        for u, v in clean:
            self.adj[u].append(v)
            self.adj[v].append(u)
        if bipartition is not None:
            n_left, n_right = bipartition
            if n_left + n_right != self.n:
                raise ValueError("bipartition sizes must sum to n_vertices")
            for u, v in clean:
                if (u < n_left) == (v < n_left):
                    raise ValueError(f"edge ({u}, {v}) does not cross bipartition")
            self.bipartition = (int(n_left), int(n_right))
        else:
            self.bipartition = None

    @property
    def n_edges(self):
        return len(self.edges)

    def degree(self, v):
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return len(self.adj[v])

    def components(self):
        """Connected components as sorted vertex lists (BFS)."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            dq = deque([s])
            while dq:
                u = dq.popleft()
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        dq.append(w)
            out.append(sorted(comp))
        return out

    def is_independent(self, vertices):
        s = set(vertices)
        for v in s:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        return not any(u in s and v in s for u, v in self.edges)

    def edge_array(self):
        """Edges as an (m, 2) int64 array (empty -> shape (0, 2))."""
        if not self.edges:
            return np.empty((0, 2), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64)

    def __repr__(self):
        return f"HostGraph(n={self.n}, m={self.n_edges})"


def read_edge_list(source) -> HostGraph:
    """Parse an edge list from a string or readable text stream."""
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source.read().splitlines()
    edges = []
    max_label = -1
    bipartition = None
    for ln, raw in enumerate(lines, 1):
        line = raw.strip()
        if line.startswith("# bipartition "):
            try:
                a, b = line.split()[2:4]
                bipartition = (int(a), int(b))
            except (ValueError, IndexError):
                raise ValueError(f"line {ln}: malformed bipartition header") from None
            continue
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {ln}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {ln}: non-integer label in {raw!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {ln}: negative vertex label")
        if u == v:
            raise ValueError(f"line {ln}: self-loop at {u}")
        edges.append((u, v))
        max_label = max(max_label, u, v)
        if len(edges) > EDGE_CAP:
            raise ValueError(f"edge count exceeds cap {EDGE_CAP}")
    n = max_label + 1 if max_label >= 0 else 0
    if bipartition is not None:
        n = max(n, bipartition[0] + bipartition[1])
    return HostGraph(n, edges, bipartition=bipartition)


def write_edge_list(g: HostGraph, stream, header=None):
    if header:
        for line in header.splitlines():
            stream.write(f"# {line}\n")
    if g.bipartition is not None:
        stream.write(f"# bipartition {g.bipartition[0]} {g.bipartition[1]}\n")
    for u, v in g.edges:
        stream.write(f"{u} {v}\n")


def power_of_path(n: int, k: int) -> HostGraph:
    """Graph on n path vertices joining pairs at path-distance <= k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k >= n:
        raise ValueError("k must be < n")
    edges = [(i, j) for i in range(n) for j in range(i + 1, min(i + k, n - 1) + 1)]
    return HostGraph(n, edges)


def complete_graph(n: int) -> HostGraph:
    return HostGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gnm_random(n: int, m: int, seed) -> HostGraph:
    """Uniform random simple graph with exactly m edges."""
    total = n * (n - 1) // 2
    if m > total:
        raise ValueError(f"m = {m} exceeds {total} possible edges")
    rng = np.random.default_rng(seed)
    codes = rng.choice(total, size=m, replace=False)
    # row u covers codes [starts[u], starts[u+1]); within a row, v = u + 1 + offset
    row_sizes = np.arange(n - 1, 0, -1)
    starts = np.concatenate(([0], np.cumsum(row_sizes)))
    u = np.searchsorted(starts, codes, side="right") - 1
    v = u + 1 + (codes - starts[u])
    return HostGraph(n, list(zip(u.tolist(), v.tolist())))


def gnp_random(n: int, p: float, seed) -> HostGraph:
    """Erdos-Renyi G(n, p)."""
    rng = np.random.default_rng(seed)
    iu, iv = np.triu_indices(n, k=1)
    mask = rng.random(iu.shape[0]) < p
    return HostGraph(n, list(zip(iu[mask].tolist(), iv[mask].tolist())))
