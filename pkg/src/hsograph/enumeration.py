"""Exhaustive enumeration of small graphs, one representative per isomorphism class.

Generation is level-by-level vertex augmentation with canonical-form
deduplication: every representative on n-1 vertices is extended by a new
vertex joined to every subset of the old vertices, and canonical codes weed
out repeats.  Intermediate levels keep disconnected graphs (a connected
graph minus a vertex need not be connected); connectivity is filtered at
the end.  Trees get a cheaper dedicated chain that only attaches leaves.

Streams are deterministic: each level is sorted by canonical code and every
emitted graph is already in its canonical labeling, so repeated runs yield
byte-identical graph6 sequences and consumers may slice a stream by index
ranges for parallel work.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import (
    Graph,
    OrderTooLargeError,
    _canonical_code_order,
    _relabel_rows,
)

TREE_MAX_N = 12
CONNECTED_MAX_N = 9
EDGE_CONSTRAINED_MAX_N = 9  # n = 10 additionally allowed while m <= 10


class InfeasibleEdgeCountError(ValueError):
    pass


def _single_vertex():
    return (Graph(1, (0,)),)


def _augment(parents, edge_cap):
    """All graphs obtained by adding one vertex to the parents, deduplicated.

    edge_cap, when given, discards children with more than edge_cap edges;
    the surviving levels then contain every graph with at most edge_cap
    edges because deleting a vertex never increases the edge count.
    """
    found = {}
    for parent in parents:
        old_n = parent.n
        n = old_n + 1
        top = 1 << old_n
        base = parent.rows
        budget = None if edge_cap is None else edge_cap - parent.m
        if budget is not None and budget < 0:
            continue
        for mask in range(1 << old_n):
            if budget is not None and mask.bit_count() > budget:
                continue
            rows = list(base)
            rows.append(mask)
            rest = mask
            while rest:
                low = rest & -rest
                rows[low.bit_length() - 1] |= top
                rest ^= low
            rows = tuple(rows)
            code, order = _canonical_code_order(rows, n)
            if code not in found:
                found[code] = Graph(n, _relabel_rows(rows, order))
    return tuple(found[code] for code in sorted(found))


@lru_cache(maxsize=None)
def _all_level(n):
    """All graphs on n vertices (connected or not), canonical and sorted."""
    if n == 1:
        return _single_vertex()
    return _augment(_all_level(n - 1), None)


@lru_cache(maxsize=None)
def _budget_level(n, edge_cap):
    """All graphs on n vertices with at most edge_cap edges."""
    if n == 1:
        return _single_vertex()
    return _augment(_budget_level(n - 1, edge_cap), edge_cap)


@lru_cache(maxsize=None)
def _tree_level(n):
    """All free trees on n vertices via leaf attachment."""
    if n == 1:
        return _single_vertex()
    found = {}
    for parent in _tree_level(n - 1):
        top = 1 << parent.n
        for v in range(parent.n):
            rows = list(parent.rows)
            rows[v] |= top
            rows.append(1 << v)
            rows = tuple(rows)
            code, order = _canonical_code_order(rows, n)
            if code not in found:
                found[code] = Graph(n, _relabel_rows(rows, order))
    return tuple(found[code] for code in sorted(found))


def trees(n: int):
    """Every free tree on n vertices exactly once, sorted by canonical code."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > TREE_MAX_N:
        raise OrderTooLargeError(f"tree enumeration supports n <= {TREE_MAX_N}")
    yield from _tree_level(n)


def connected_graphs(n: int):
    """Every connected graph on n vertices exactly once, sorted by canonical code."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > CONNECTED_MAX_N:
        raise OrderTooLargeError(f"connected enumeration supports n <= {CONNECTED_MAX_N}")
    for g in _all_level(n):
        if g.is_connected():
            yield g


def connected_graphs_with_edges(n: int, m: int):
    """Every connected graph with exactly m edges on n vertices, once per class."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if not n - 1 <= m <= n * (n - 1) // 2:
        raise InfeasibleEdgeCountError(
            f"no connected graph on {n} vertices has {m} edges"
        )
    if n > EDGE_CONSTRAINED_MAX_N and not (n == EDGE_CONSTRAINED_MAX_N + 1 and m <= 10):
        raise OrderTooLargeError(
            f"edge-constrained enumeration supports n <= {EDGE_CONSTRAINED_MAX_N} "
            f"(n = {EDGE_CONSTRAINED_MAX_N + 1} only for m <= 10)"
        )
    for g in _budget_level(n, m):
        if g.m == m and g.is_connected():
            yield g


def unicyclic_graphs(n: int):
    """Connected graphs with exactly one cycle (m = n)."""
    if n < 3:
        raise InfeasibleEdgeCountError("unicyclic graphs need n >= 3")
    return connected_graphs_with_edges(n, n)


def bicyclic_graphs(n: int):
    """Connected graphs with cyclomatic number two (m = n + 1)."""
    if n < 4:
        raise InfeasibleEdgeCountError("bicyclic graphs need n >= 4")
    return connected_graphs_with_edges(n, n + 1)


def graphs_in_class(tag: str, n: int):
    """Dispatch a class stream by tag: tree, unicyclic, bicyclic or connected."""
    if tag == "tree":
        return trees(n)
    if tag == "unicyclic":
        return unicyclic_graphs(n)
    if tag == "bicyclic":
        return bicyclic_graphs(n)
    if tag == "connected":
        return connected_graphs(n)
    raise ValueError(f"unknown graph class {tag!r}")
