"""Degree-based indices: hyperbolic Sombor (HSO) and Sombor (SO).

HSO sums sqrt(du^2 + dv^2) / min(du, dv) over edges; SO drops the divisor.
Sums use math.fsum so closed-form comparisons are not polluted by
accumulation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)


class ZeroDegreeError(ValueError):
    pass


class DegreeExceedsDeltaError(ValueError):
    pass


class K2EdgeError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeTerm:
    """One edge's HSO contribution together with its endpoint degrees."""

    u: int
    v: int
    du: int
    dv: int
    value: float


@dataclass(frozen=True)
class IndexValue:
    hso: float
    so: float
    per_edge: tuple[EdgeTerm, ...]


def edge_term(du: int, dv: int) -> float:
    """sqrt(du^2 + dv^2) / min(du, dv); symmetric in its arguments."""
    if du < 1 or dv < 1:
        raise ZeroDegreeError("an edge endpoint cannot have degree zero")
    return math.sqrt(du * du + dv * dv) / min(du, dv)


def hso(g: Graph) -> IndexValue:
    """HSO and SO of g with the full per-edge breakdown."""
    terms = []
    so_parts = []
    degs = g.degrees
    for u, v in g.edges():
        du, dv = degs[u], degs[v]
        root = math.sqrt(du * du + dv * dv)
        so_parts.append(root)
        terms.append(EdgeTerm(u, v, du, dv, root / min(du, dv)))
    return IndexValue(
        hso=math.fsum(t.value for t in terms),
        so=math.fsum(so_parts),
        per_edge=tuple(terms),
    )


def so(g: Graph) -> float:
    """Sombor index: sum of sqrt(du^2 + dv^2) over edges."""
    degs = g.degrees
    return math.fsum(
        math.sqrt(degs[u] * degs[u] + degs[v] * degs[v]) for u, v in g.edges()
    )


def edge_term_bounds(du: int, dv: int, max_degree: int) -> tuple[float, float]:
    """Interval guaranteed to contain edge_term(du, dv) in a graph with the
    given maximum degree.

    Pendant edges (one endpoint of degree 1) lie in [sqrt(5), sqrt(D^2+1)];
    edges between two vertices of degree >= 2 lie in [sqrt(2), sqrt(D^2+4)/2].
    An isolated K2 edge (both degrees 1) is outside the pendant interval and
    is rejected rather than silently mis-bounded.
    """
    lo, hi = min(du, dv), max(du, dv)
    if lo < 1:
        raise ZeroDegreeError("an edge endpoint cannot have degree zero")
    if hi > max_degree:
        raise DegreeExceedsDeltaError(
            f"degree {hi} exceeds stated maximum degree {max_degree}"
        )
    if lo == 1 and hi == 1:
        raise K2EdgeError("bounds are undefined for an isolated K2 edge")
    if lo == 1:
        return (SQRT5, math.sqrt(max_degree * max_degree + 1))
    return (SQRT2, math.sqrt(max_degree * max_degree + 4) / 2.0)
