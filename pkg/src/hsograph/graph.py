"""Simple undirected graphs as immutable bitmask-adjacency values.

Vertices are the integers 0..n-1.  Each vertex stores its neighborhood as
an integer bitmask, which keeps edge tests, frontier expansion and the
canonical-labeling inner loops at roughly one machine word per operation
for the orders this package targets (n <= 62 for graph6 serialization,
n <= 16 for canonical forms).

Graphs are values: every mutating operation returns a fresh Graph and the
input is never touched, so instances can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

GRAPH6_MAX_N = 62
CANONICAL_MAX_N = 16

TREE = "tree"
UNICYCLIC = "unicyclic"
BICYCLIC = "bicyclic"
OTHER_CONNECTED = "other-connected"
DISCONNECTED = "disconnected"

_G6_PREFIX = ">>graph6<<"


class GraphError(ValueError):
    """Base for graph construction and mutation failures."""


class VertexOutOfRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EdgePresentError(GraphError):
    pass


class EdgeAbsentError(GraphError):
    pass


class OrderTooLargeError(GraphError):
    pass


class Graph6Error(GraphError):
    """Base for graph6 encode/decode failures."""


class MalformedHeaderError(Graph6Error):
    pass


class TruncatedBodyError(Graph6Error):
    pass


class IllegalCharacterError(Graph6Error):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple graph; build instances via from_edge_list or parse_graph6."""

    __slots__ = ("n", "rows", "degrees")

    def __init__(self, n: int, rows: tuple[int, ...]):
        # Trusted constructor: rows must already be a symmetric, loop-free
        # adjacency.  The public entry points validate.
        self.n = n
        self.rows = rows
        self.degrees = tuple(r.bit_count() for r in rows)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __reduce__(self):
        return (Graph, (self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise VertexOutOfRangeError(f"vertex {v} not in [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self.rows[v]))

    def edges(self):
        """Yield edges as (u, v) pairs with u < v, in row order."""
        for u in range(self.n):
            high = self.rows[u] >> (u + 1)
            for off in _bits(high):
                yield (u, u + 1 + off)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"cannot add loop at vertex {u}")
        if self.rows[u] >> v & 1:
            raise EdgePresentError(f"edge ({u}, {v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"no loop can exist at vertex {u}")
        if not self.rows[u] >> v & 1:
            raise EdgeAbsentError(f"edge ({u}, {v}) not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def is_connected(self) -> bool:
        """Breadth-first sweep from vertex 0 over whole frontiers at once."""
        rows = self.rows
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def classify(self) -> str:
        """Class tag by cyclomatic number m - n + 1 (tree/unicyclic/bicyclic/...)."""
        if not self.is_connected():
            return DISCONNECTED
        c = self.m - self.n + 1
        if c == 0:
            return TREE
        if c == 1:
            return UNICYCLIC
        if c == 2:
            return BICYCLIC
        return OTHER_CONNECTED

    def to_graph6(self) -> str:
        """Encode in graph6: header byte 63+n, upper triangle packed column-major."""
        if self.n > GRAPH6_MAX_N:
            raise OrderTooLargeError(f"graph6 short form requires n <= {GRAPH6_MAX_N}")
        out = [chr(63 + self.n)]
        acc = 0
        nbits = 0
        for j in range(1, self.n):
            rj = self.rows[j]
            for i in range(j):
                acc = (acc << 1) | (rj >> i & 1)
                nbits += 1
                if nbits == 6:
                    out.append(chr(63 + acc))
                    acc = 0
                    nbits = 0
        if nbits:
            out.append(chr(63 + (acc << (6 - nbits))))
        return "".join(out)


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph on vertices 0..n-1 with exactly the given edges."""
    if n < 1:
        raise GraphError("graph order must be at least 1")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(f"edge ({u}, {v}) listed twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string (short header form, n <= 62)."""
    s = text.strip()
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise MalformedHeaderError("empty graph6 string")
    head = ord(s[0])
    if head == 126:
        raise MalformedHeaderError("extended graph6 headers (n > 62) are not supported")
    if not 63 <= head <= 125:
        raise MalformedHeaderError(f"invalid graph6 header byte {s[0]!r}")
    n = head - 63
    if n == 0:
        raise MalformedHeaderError("empty graphs (n = 0) are not supported")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise TruncatedBodyError(f"graph6 body needs {need} characters, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"unexpected trailing characters after graph6 body: {body[need:]!r}")
    rows = [0] * n
    i, j = 0, 1
    k = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise IllegalCharacterError(f"illegal graph6 body character {ch!r}")
        for t in range(5, -1, -1):
            if k >= npairs:
                break  # padding bits, ignored
            if val >> t & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j += 1
                i = 0
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical forms
#
# Exact canonical labeling by individualization-refinement inside the degree
# partition.  The refinement is the usual equitable one (split cells by
# neighbor counts against every cell, sub-cells ordered by count vector), and
# at each branching step only one representative per "swap-equivalent" pair
# class is tried: u and v branch identically whenever transposing them is an
# automorphism, i.e. N(u)\{v} = N(v)\{u}.  The minimum leaf code over the
# search tree is a full isomorphism invariant: equal codes iff isomorphic.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant code: upper-triangle bits under the canonical order.

    The code packs pair (i, j) bits in column-major order (0,1), (0,2),
    (1,2), (0,3), ... with the first pair most significant, so integer
    comparison equals lexicographic bit-string comparison and agrees with
    graph6 ordering at fixed n.
    """

    n: int
    code: int


def _refine(rows, cells):
    """Equitable refinement of an ordered partition (list of vertex lists)."""
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            keyed = {}
            for v in cell:
                rv = rows[v]
                key = tuple((rv & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(keyed):
                    new_cells.append(keyed[key])
        if not changed:
            return new_cells
        cells = new_cells


def _canonical_code_order(rows, n):
    """Return (code, order): minimal leaf code and one vertex order achieving it."""
    if n == 1:
        return 0, (0,)
    by_deg = {}
    for v in range(n):
        by_deg.setdefault(rows[v].bit_count(), []).append(v)
    start = _refine(rows, [by_deg[d] for d in sorted(by_deg)])
    best_code = None
    best_order = None
    stack = [start]
    while stack:
        cells = stack.pop()
        split_at = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                split_at = idx
                break
        if split_at < 0:
            order = [cell[0] for cell in cells]
            code = 0
            for j in range(1, n):
                rj = rows[order[j]]
                for i in range(j):
                    code = (code << 1) | (rj >> order[i] & 1)
            if best_code is None or code < best_code:
                best_code = code
                best_order = tuple(order)
            continue
        cell = cells[split_at]
        reps = []
        for v in cell:
            rv = rows[v]
            if not any((rv & ~(1 << r)) == (rows[r] & ~(1 << v)) for r in reps):
                reps.append(v)
        pre = cells[:split_at]
        post = cells[split_at + 1:]
        for v in reps:
            rest = [u for u in cell if u != v]
            stack.append(_refine(rows, pre + [[v], rest] + post))
    return best_code, best_order


def _relabel_rows(rows, order):
    n = len(order)
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    new_rows = [0] * n
    for p, v in enumerate(order):
        acc = 0
        for u in _bits(rows[v]):
            acc |= 1 << pos[u]
        new_rows[p] = acc
    return tuple(new_rows)


def _check_canonical_order(n):
    if n > CANONICAL_MAX_N:
        raise OrderTooLargeError(f"canonical forms support n <= {CANONICAL_MAX_N}, got {n}")


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical code of g; equal codes iff isomorphic (exact at supported orders)."""
    _check_canonical_order(g.n)
    code, _ = _canonical_code_order(g.rows, g.n)
    return CanonicalForm(g.n, code)


def canonical_relabel(g: Graph) -> Graph:
    """Copy of g relabeled into its canonical vertex order."""
    _check_canonical_order(g.n)
    _, order = _canonical_code_order(g.rows, g.n)
    return Graph(g.n, _relabel_rows(g.rows, order))
