"""Hasse diagrams: multiplication by a dominant divisor class.

The diagram of a quotient W^Q under a weight lambda (non-negative integer
coefficients on fundamental weights supported away from Delta(Q)) has an
edge u -> u*s_beta of multiplicity <lambda, beta^vee> for every cover with
positive-root witness beta and positive pairing.  The same rule runs
unchanged inside a Levi subsystem, where <omega_t, beta^vee> is read off
the coefficient of the t-th simple coroot in beta^vee.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple

from .cosets import ParabolicQuotient
from . import weyl


class HasseError(ValueError):
    """Invalid weight for the requested quotient."""


class Edge(NamedTuple):
    u: int
    w: int
    mult: int
    root: int  # witness index into rs.positive_roots


Weight = Tuple[Tuple[int, int], ...]  # sorted ((node, coefficient), ...)


def normalize_weight(weight: Mapping[int, int] | Iterable[Tuple[int, int]]) -> Weight:
    items = dict(weight).items() if isinstance(weight, Mapping) else dict(weight).items()
    out = tuple(sorted((int(n), int(c)) for n, c in items if c))
    if any(c < 0 for _, c in out):
        raise HasseError("weight coefficients must be non-negative")
    return out


@dataclass(frozen=True, eq=False)
class HasseDiagram:
    quotient: ParabolicQuotient
    weight: Weight
    edges: Tuple[Edge, ...]

    def vertex_count(self) -> int:
        return len(self.quotient.elements)

    def edge_dict(self) -> Dict[Tuple[int, int], int]:
        return {(e.u, e.w): e.mult for e in self.edges}

    def total_multiplicity(self) -> int:
        return sum(e.mult for e in self.edges)


def _validate_weight(pq: ParabolicQuotient, weight: Weight) -> None:
    support = {n for n, _ in weight}
    if not support:
        raise HasseError("weight has empty support")
    if not support <= pq.nodes:
        raise HasseError(
            "weight support %s outside the node set %s" % (sorted(support), sorted(pq.nodes))
        )
    inside = support & pq.j_q
    if inside:
        raise HasseError(
            "weight supported on Delta(Q) nodes %s: the class vanishes on the quotient"
            % sorted(inside)
        )


def pairing_with_coroot(pq: ParabolicQuotient, weight: Weight, root_idx: int) -> int:
    """<lambda, beta^vee> as a sum of simple-coroot coefficients."""
    coords = pq.rs.coroot_coords[root_idx]
    return sum(c * coords[n - 1] for n, c in weight)


def chevalley_edges(
    pq: ParabolicQuotient, u_idx: int, weight: Mapping[int, int] | Weight
) -> List[Tuple[int, int]]:
    """Multiplicity-weighted covers above one vertex: list of (w_idx, mult)."""
    wt = normalize_weight(weight)
    _validate_weight(pq, wt)
    out = []
    for cover in pq.covers:
        if cover.u != u_idx:
            continue
        mult = pairing_with_coroot(pq, wt, cover.root)
        if mult > 0:
            out.append((cover.w, mult))
    return out


def build_hasse(pq: ParabolicQuotient, weight: Mapping[int, int] | Weight) -> HasseDiagram:
    wt = normalize_weight(weight)
    _validate_weight(pq, wt)
    edges = []
    for cover in pq.covers:
        mult = pairing_with_coroot(pq, wt, cover.root)
        if mult > 0:
            edges.append(Edge(cover.u, cover.w, mult, cover.root))
    edges.sort()
    return HasseDiagram(pq, wt, tuple(edges))


def poincare_poly(pq: ParabolicQuotient) -> List[int]:
    """Vertex counts per degree (coefficients of the rank generating function)."""
    return list(pq.rank_counts())


def weighted_path_count(diagram: HasseDiagram, reverse: bool = False) -> int:
    """Sum over maximal chains of the product of edge multiplicities.

    Computed bottom-to-top, or top-to-bottom on the transposed diagram when
    `reverse` is set; the two agree for these self-dual diagrams.
    """
    pq = diagram.quotient
    n = len(pq.elements)
    counts = [0] * n
    if not reverse:
        counts[0] = 1
        order = range(n)
        incoming: Dict[int, List[Tuple[int, int]]] = {}
        for e in diagram.edges:
            incoming.setdefault(e.w, []).append((e.u, e.mult))
        for k in order:
            for u, mult in incoming.get(k, []):
                counts[k] += counts[u] * mult
        return counts[n - 1]
    counts[n - 1] = 1
    outgoing: Dict[int, List[Tuple[int, int]]] = {}
    for e in diagram.edges:
        outgoing.setdefault(e.u, []).append((e.w, e.mult))
    for k in range(n - 1, -1, -1):
        for w, mult in outgoing.get(k, []):
            counts[k] += counts[w] * mult
    return counts[0]


def diagram_json(diagram: HasseDiagram, strata: Tuple[int, ...] | None = None) -> dict:
    """Stable JSON graph; vertex order is the quotient's element order."""
    pq = diagram.quotient
    vertices = []
    for k, w in enumerate(pq.elements):
        entry = {"window": weyl.window_str(w.window), "length": w.length}
        if strata is not None:
            entry["stratum"] = strata[k]
        vertices.append(entry)
    return {
        "vertices": vertices,
        "edges": [{"from": e.u, "to": e.w, "mult": e.mult} for e in diagram.edges],
    }
