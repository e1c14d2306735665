"""Tight cliques, clusters, and the derived common-neighborhood data.

Under a degree cap r, a clique T is tight when its weight meets the
ceiling r+1-|T|.  Every vertex of a tight clique then has degree exactly
r, the common neighborhood S has size exactly r+1-|T|, and the deficiency
graph R (complement of the subgraph induced on S) records the edges that
the clique-fill rewrite would add.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

from .counting import clique_weights, cliques_of_size
from .errors import InternalConsistencyError
from .graphs import Graph, bits, common_neighbors, complement, induced
from .records import ConsistencyRecord


@dataclass(frozen=True)
class TightStructure:
    """A tight clique with its common neighborhood and deficiency graph.

    ``label_map`` sends vertex i of R back to its original label in G;
    R's vertices are S in increasing original-label order.
    """

    T: int
    S: int
    R: Graph
    label_map: Tuple[int, ...]
    is_cluster: bool

    @property
    def t(self) -> int:
        return self.T.bit_count()

    @property
    def s(self) -> int:
        return self.S.bit_count()


def is_tight(g: Graph, r: int, c: int) -> bool:
    """Whether clique ``c`` meets the weight ceiling r+1-|c|.

    The empty clique has weight n, so it is tight exactly when n = r+1.
    """
    if g.max_degree() > r:
        raise ValueError("tightness needs the degree cap to hold")
    if not g.is_clique(c):
        raise ValueError("tightness is defined only for cliques")
    return common_neighbors(g, c).bit_count() == r + 1 - c.bit_count()


def tight_cliques(g: Graph, r: int, min_size: int = 1) -> Iterator[int]:
    """All tight cliques of size >= min_size, by size then mask order."""
    if g.max_degree() > r:
        raise ValueError("tightness needs the degree cap to hold")
    found: List[Tuple[int, int]] = []
    for mask, size, weight in clique_weights(g):
        if size >= min_size and weight == r + 1 - size:
            found.append((size, mask))
    found.sort()
    return iter([mask for _, mask in found])


def derive(g: Graph, r: int, tight: int) -> TightStructure:
    """S, R, and cluster status for a tight clique."""
    if not is_tight(g, r, tight):
        raise ValueError("derive requires a tight clique")
    s_mask = common_neighbors(g, tight)
    sub, labels = induced(g, s_mask)
    r_graph = complement(sub)
    # maximal iff no tight strict superset; any such superset extends into S
    maximal = True
    for v in bits(s_mask):
        if is_tight(g, r, tight | (1 << v)):
            maximal = False
            break
    return TightStructure(tight, s_mask, r_graph, tuple(labels), maximal)


def clusters(g: Graph, r: int) -> List[TightStructure]:
    """All maximal tight cliques, cross-validated against closed-neighborhood
    equivalence classes of the degree-r vertices.

    The two computations must agree; a mismatch raises rather than silently
    preferring one.
    """
    maximal = [derive(g, r, t) for t in tight_cliques(g, r, 1)]
    maximal = [ts for ts in maximal if ts.is_cluster]

    # Independent route: vertices lying in some tight clique all have degree
    # exactly r, and sharing a tight clique is the same as sharing a closed
    # neighborhood.
    tight_vertices = [v for v in range(g.n) if g.degree(v) == r]
    classes = {}
    for v in tight_vertices:
        classes.setdefault(g.closed_neighborhood(v), 0)
        classes[g.closed_neighborhood(v)] |= 1 << v
    expected = sorted(classes.values())
    if sorted(ts.T for ts in maximal) != expected:
        raise InternalConsistencyError(
            f"cluster computations disagree: maximal tight cliques "
            f"{sorted(ts.T for ts in maximal)} vs closed-neighborhood classes {expected}"
        )
    return sorted(maximal, key=lambda ts: ts.T)


def associated_cliques(g: Graph, cluster: int, c: int) -> Iterator[int]:
    """c-cliques meeting the cluster in exactly c-1 vertices."""
    if c < 2:
        raise ValueError("association is defined for cliques of size >= 2")
    for mask in cliques_of_size(g, c):
        if (mask & cluster).bit_count() == c - 1:
            yield mask


def outside_degree_check(g: Graph, r: int, tight: int) -> ConsistencyRecord:
    """For each x in S: the number of G-neighbors outside T u S is at most
    the degree of x in R.  Violations are recorded, never raised."""
    ts = derive(g, r, tight)
    inside = tight | ts.S
    per_vertex = {}
    worst = None
    for i, x in enumerate(ts.label_map):
        outside = (g.adj[x] & ~inside).bit_count()
        r_deg = ts.R.degree(i)
        per_vertex[x] = (outside, r_deg)
        if worst is None or outside - r_deg > worst[0] - worst[1]:
            worst = (outside, r_deg)
    lhs, rhs = worst if worst is not None else (0, 0)
    return ConsistencyRecord(
        predicate="outside_degree",
        subject=f"T={tight:#x}",
        lhs=lhs,
        rhs=rhs,
        applicable=True,
        passed=all(o <= d for o, d in per_vertex.values()),
        detail={"per_vertex": per_vertex},
    )
