"""Graph families, exact BFS distances, and structural tests.

Vertices are integer indices 0..n-1 with printable labels. All builders
expose a stable canonical vertex order (ordered pairs lexicographic,
subsets in colex order) so that matrices derived from them are
reproducible run to run.
"""

from typing import NamedTuple

from orbitspectra._kernels import bfs_all_pairs


class DisconnectedGraphError(ValueError):
    """Raised when a distance computation meets two unreachable vertices."""

    def __init__(self, u, v, label_u, label_v):
        self.u, self.v = u, v
        super().__init__(
            f"graph is disconnected: no path between vertex {label_u} and {label_v}"
        )


class Graph:
    """Immutable undirected simple graph with labeled vertices."""

    __slots__ = ("vertex_count", "vertex_labels", "_adj")

    def __init__(self, vertex_count, edges, labels=None):
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        if labels is None:
            labels = [str(v) for v in range(vertex_count)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != vertex_count:
            raise ValueError("need exactly one label per vertex")
        if len(set(labels)) != vertex_count:
            raise ValueError("vertex labels must be pairwise distinct")
        nbrs = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.vertex_count = vertex_count
        self.vertex_labels = labels
        self._adj = tuple(tuple(sorted(s)) for s in nbrs)

    @property
    def adjacency(self):
        return self._adj

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def edges(self):
        """Edge list as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.vertex_count) for v in self._adj[u] if u < v]

    @property
    def edge_count(self):
        return sum(len(a) for a in self._adj) // 2

    def is_regular(self):
        """The common degree if the graph is regular, else None."""
        degs = {len(a) for a in self._adj}
        if len(degs) == 1:
            return degs.pop()
        return None if degs else 0

    def label(self, v):
        return self.vertex_labels[v]

    def has_edge(self, u, v):
        return v in set(self._adj[u])

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.vertex_labels == other.vertex_labels
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.vertex_count, self.vertex_labels, self._adj))

    def __repr__(self):
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


class PairVertex(NamedTuple):
    """Ordered pair (i, j) with 1 <= i, j <= n and i != j."""

    i: int
    j: int


def pair_vertices(n):
    """All ordered pairs over [1..n] with distinct coordinates, lexicographic."""
    return [
        PairVertex(i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]


def _check_pair(n, p):
    i, j = p
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"({i},{j}) is not a valid ordered pair over [1..{n}]")
    return PairVertex(i, j)


def build_crown(n):
    """K_{n,n} minus a perfect matching: sides [1..n] and x1..xn, i ~ xj iff i != j."""
    if n < 3:
        raise ValueError("crown graph defined for n >= 3")
    labels = [str(i) for i in range(1, n + 1)] + [f"x{j}" for j in range(1, n + 1)]
    edges = [
        (i, n + j)
        for i in range(n)
        for j in range(n)
        if i != j
    ]
    return Graph(2 * n, edges, labels)


def build_cycle(n):
    if n < 3:
        raise ValueError("cycle graph defined for n >= 3")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def build_circulant(n, connections):
    """Circulant graph on Z_n with the given connection set (1 <= c <= n//2)."""
    if n < 3:
        raise ValueError("circulant graph defined for n >= 3")
    conns = sorted(set(connections))
    if not conns:
        raise ValueError("connection set must be nonempty")
    for c in conns:
        if not (1 <= c <= n // 2):
            raise ValueError(f"connection {c} outside 1..{n // 2}")
    edges = set()
    for v in range(n):
        for c in conns:
            edges.add(tuple(sorted((v, (v + c) % n))))
    return Graph(n, sorted(edges))


def build_complete(n):
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def build_lcr(n):
    """Line graph of the crown graph, built directly on ordered-pair vertices.

    Vertices are the pairs (i, j), i != j, in lexicographic order; (i, j)
    and (r, s) are adjacent iff i = r or j = s.
    """
    if n < 3:
        raise ValueError("pair-model line graph defined for n >= 3")
    verts = pair_vertices(n)
    index = {p: k for k, p in enumerate(verts)}
    edges = []
    for k, (i, j) in enumerate(verts):
        # same first coordinate
        for s in range(j + 1, n + 1):
            if s != i:
                edges.append((k, index[(i, s)]))
        # same second coordinate
        for r in range(i + 1, n + 1):
            if r != j:
                edges.append((k, index[(r, j)]))
    labels = [f"({i},{j})" for i, j in verts]
    return Graph(len(verts), edges, labels)


def build_johnson(n, k):
    """Johnson graph: k-subsets of [1..n], adjacent iff they share k-1 elements."""
    if not (1 <= k <= n - 1):
        raise ValueError("Johnson graph needs 1 <= k <= n-1")
    from itertools import combinations

    verts = sorted(combinations(range(1, n + 1), k), key=lambda s: tuple(reversed(s)))
    index = {s: t for t, s in enumerate(verts)}
    edges = []
    for t, s in enumerate(verts):
        inside = set(s)
        for drop in s:
            for add in range(1, n + 1):
                if add not in inside:
                    other = tuple(sorted(inside - {drop} | {add}))
                    t2 = index[other]
                    if t2 > t:
                        edges.append((t, t2))
    labels = ["{" + ",".join(str(x) for x in s) + "}" for s in verts]
    return Graph(len(verts), sorted(set(edges)), labels)


def build_line_graph(g):
    """Line graph: one vertex per edge of g, adjacent iff the edges share an endpoint."""
    base_edges = g.edges()
    index = {e: k for k, e in enumerate(base_edges)}
    edges = []
    for k, (u, v) in enumerate(base_edges):
        for w in (u, v):
            for x in g.neighbors(w):
                other = (w, x) if w < x else (x, w)
                k2 = index[other]
                if k2 > k:
                    edges.append((k, k2))
    labels = ["{" + g.label(u) + "," + g.label(v) + "}" for u, v in base_edges]
    return Graph(len(base_edges), sorted(set(edges)), labels)


class DistanceMatrix:
    """Square exact-integer matrix of pairwise shortest-path lengths."""

    __slots__ = ("order", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("distance matrix must be square")
        for u in range(n):
            if rows[u][u] != 0:
                raise ValueError(f"nonzero diagonal at vertex {u}")
            for v in range(u + 1, n):
                if rows[u][v] != rows[v][u]:
                    raise ValueError(f"asymmetric entries at ({u},{v})")
                if rows[u][v] < 1:
                    raise ValueError(f"off-diagonal entry < 1 at ({u},{v})")
        self.order = n
        self.rows = rows

    def entry(self, u, v):
        return self.rows[u][v]

    def row_sums(self):
        return [sum(r) for r in self.rows]

    def max_entry(self):
        return max((max(r) for r in self.rows), default=0)

    def __eq__(self, other):
        return isinstance(other, DistanceMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"DistanceMatrix(order={self.order})"


def all_pairs_distances(g):
    """Exact distance matrix by BFS from every source.

    Raises DisconnectedGraphError naming two vertices in distinct
    components if the graph is not connected.
    """
    if g.vertex_count == 0:
        raise ValueError("distance matrix of the empty graph is undefined")
    dist = bfs_all_pairs(g.vertex_count, [list(a) for a in g.adjacency])
    row0 = dist[0]
    for v, d in enumerate(row0):
        if d < 0:
            raise DisconnectedGraphError(0, v, g.label(0), g.label(v))
    return DistanceMatrix(dist)


def lcr_distance(n, a, b):
    """Closed-form distance between pair vertices of the crown line graph.

    0 for equal pairs, 1 when the first or second coordinates agree,
    3 between (i, j) and (j, i), and 2 in every remaining case.
    """
    if n < 4:
        raise ValueError("closed-form distance defined for n >= 4")
    i, j = _check_pair(n, a)
    r, s = _check_pair(n, b)
    if (i, j) == (r, s):
        return 0
    if i == r or j == s:
        return 1
    if (r, s) == (j, i):
        return 3
    return 2


class DistanceRegularity(NamedTuple):
    """Outcome of the distance-regularity test.

    ``intersection_array`` is ((b_0..b_{d-1}), (c_1..c_d)) when the graph
    is distance-regular; otherwise ``witness`` holds
    (distance, (v, w), counts, (v2, w2), counts2) with counts =
    (c, a, b) = neighbors of w at distance i-1, i, i+1 from v.
    """

    is_distance_regular: bool
    intersection_array: tuple | None
    witness: tuple | None


def is_distance_regular(g):
    """Test distance-regularity by checking all intersection numbers.

    For every ordered pair (v, w) at distance i the neighbor counts of w
    at distances i-1, i, i+1 from v must depend on i alone. The i = 0
    case forces regularity automatically.
    """
    d = all_pairs_distances(g)
    seen = {}  # distance -> ((v, w), (c, a, b))
    diam = d.max_entry()
    for v in range(g.vertex_count):
        dv = d.rows[v]
        for w in range(g.vertex_count):
            i = dv[w]
            c = a = b = 0
            for x in g.neighbors(w):
                dx = dv[x]
                if dx == i - 1:
                    c += 1
                elif dx == i:
                    a += 1
                else:
                    b += 1
            counts = (c, a, b)
            if i not in seen:
                seen[i] = ((v, w), counts)
            elif seen[i][1] != counts:
                witness = (i, seen[i][0], seen[i][1], (v, w), counts)
                return DistanceRegularity(False, None, witness)
    b_arr = tuple(seen[i][1][2] for i in range(diam))
    c_arr = tuple(seen[i][1][0] for i in range(1, diam + 1))
    return DistanceRegularity(True, (b_arr, c_arr), None)


def _refine(adj, colors):
    # 1-dimensional Weisfeiler-Leman color refinement to a fixed point.
    n = len(adj)
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)
        ]
        order = {k: c for c, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def canonical_form(g):
    """Canonical adjacency signature, equal iff graphs are isomorphic.

    Individualization-refinement search over all discrete colorings;
    the signature is the lexicographically smallest relabeled adjacency
    table. Exhaustive, so intended for the small graphs (<= ~30
    vertices) the test corpus uses.
    """
    n = g.vertex_count
    adj = g.adjacency
    best = None

    def signature(colors):
        pos = [0] * n
        for v in range(n):
            pos[colors[v]] = v
        return tuple(
            tuple(sorted(colors[w] for w in adj[pos[c]])) for c in range(n)
        )

    def search(colors):
        nonlocal best
        colors = _refine(adj, colors)
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            sig = signature(colors)
            if best is None or sig < best:
                best = sig
            return
        for v in target:
            branch = [c * 2 for c in colors]
            branch[v] -= 1
            search(branch)

    search([0] * n)
    return best if best is not None else ()


def are_isomorphic(g, h):
    """Isomorphism by canonical-form comparison."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    return canonical_form(g) == canonical_form(h)


def is_isomorphism(g, h, mapping):
    """Check an explicit vertex bijection g -> h for edge preservation."""
    n = g.vertex_count
    if h.vertex_count != n or sorted(mapping) != list(range(n)):
        return False
    if g.edge_count != h.edge_count:
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())
