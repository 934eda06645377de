"""Orbit decomposition of a Hasse diagram, its certification, and emission.

Every stratum of a classical Grassmannian fixture is matched, edge for
edge, against the divisor diagram of its Levi flag variety through the
explicit cell map u -> u * w_min.  The map is certified (length-additive
bijection onto the stratum); the within-stratum multiplicities must equal
the flag multiplicities times the stratum scale (2 exactly on the odd
orthogonal doubling stratum, 1 otherwise).  Cross-stratum edges are
reported and checked to increase the stratum exponent.

Output formats: DOT, TikZ and JSON, all byte-deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import cosets, hasse, strata, weyl
from .cosets import ParabolicQuotient
from .fixtures import Fixture
from .hasse import Edge, HasseDiagram
from .strata import OrbitStratum

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b")


class DecompositionError(ValueError):
    """Cell-map certification failure; carries the offending element."""


@dataclass(frozen=True, eq=False)
class StratumComparison:
    stratum: OrbitStratum
    flag_quotient: ParabolicQuotient
    flag_diagram: Optional[HasseDiagram]
    #: flag element index -> X element index
    phi: Tuple[int, ...]
    scale: int
    edges_match: bool
    mismatches: Tuple[str, ...]


@dataclass(frozen=True, eq=False)
class DecomposedDiagram:
    fixture: Fixture
    pq: ParabolicQuotient
    diagram: HasseDiagram
    strata: Tuple[OrbitStratum, ...]
    #: stratum index of each vertex
    vertex_stratum: Tuple[int, ...]
    cross_edges: Tuple[Edge, ...]
    comparisons: Tuple[StratumComparison, ...]

    def all_pass(self) -> bool:
        return all(c.edges_match for c in self.comparisons)


def flag_quotient(stratum: OrbitStratum) -> ParabolicQuotient:
    """The stratum's flag variety as a quotient inside the Levi of P."""
    return cosets.build_quotient(
        stratum.fixture.rs, frozenset(stratum.K), frozenset(stratum.dc.j_p)
    )


def phi(stratum: OrbitStratum, u: weyl.WeylElement) -> weyl.WeylElement:
    """Cell map of the stratum: u -> u * w_min, certified length-additive."""
    image = weyl.multiply(u, stratum.dc.w_min)
    if image.length != u.length + stratum.dc.w_min.length:
        raise DecompositionError(
            "cell map is not length-additive at %r (stratum delta=%d of %s)"
            % (u, stratum.delta, stratum.fixture.label)
        )
    return image


def phi_map(stratum: OrbitStratum, fq: Optional[ParabolicQuotient] = None) -> Tuple[ParabolicQuotient, Tuple[int, ...]]:
    """Certified bijection from the flag quotient onto the stratum members."""
    pq = stratum.dc.pq
    fq = fq if fq is not None else flag_quotient(stratum)
    member_set = set(stratum.dc.members)
    images = []
    for u in fq.elements:
        image = phi(stratum, u)
        idx = pq.index.get(image.window)
        if idx is None or idx not in member_set:
            raise DecompositionError(
                "cell map leaves the stratum at %r (stratum delta=%d of %s)"
                % (u, stratum.delta, stratum.fixture.label)
            )
        images.append(idx)
    if len(set(images)) != len(member_set):
        raise DecompositionError(
            "cell map is not a bijection on stratum delta=%d of %s"
            % (stratum.delta, stratum.fixture.label)
        )
    return fq, tuple(images)


def _compare_stratum(
    stratum: OrbitStratum, diagram: HasseDiagram, vertex_stratum: Tuple[int, ...], si: int
) -> StratumComparison:
    fq, phi_images = phi_map(stratum)
    weight, doubling = strata.h_prime_of(stratum)
    scale = 2 if doubling else 1
    if not weight:
        fd = None
        flag_edges: Dict[Tuple[int, int], int] = {}
    else:
        fd = hasse.build_hasse(fq, weight)
        flag_edges = {(phi_images[e.u], phi_images[e.w]): e.mult * scale for e in fd.edges}
    x_edges = {
        (e.u, e.w): e.mult
        for e in diagram.edges
        if vertex_stratum[e.u] == si and vertex_stratum[e.w] == si
    }
    mismatches = []
    for key in sorted(set(flag_edges) | set(x_edges)):
        got = x_edges.get(key)
        want = flag_edges.get(key)
        if got != want:
            mismatches.append(
                "edge %s->%s: diagram mult %s, flag mult (scaled) %s"
                % (key[0], key[1], got, want)
            )
    return StratumComparison(
        stratum=stratum,
        flag_quotient=fq,
        flag_diagram=fd,
        phi=phi_images,
        scale=scale,
        edges_match=not mismatches,
        mismatches=tuple(mismatches),
    )


def build_decomposition(fix: Fixture) -> DecomposedDiagram:
    pq, sts = strata.stratify(fix)
    diagram = hasse.build_hasse(pq, {fix.q_node: 1})
    vertex_stratum = [-1] * len(pq.elements)
    for si, st in enumerate(sts):
        for k in st.dc.members:
            vertex_stratum[k] = si
    vs = tuple(vertex_stratum)
    cross = tuple(e for e in diagram.edges if vs[e.u] != vs[e.w])
    comparisons = tuple(
        _compare_stratum(st, diagram, vs, si) for si, st in enumerate(sts)
    )
    return DecomposedDiagram(fix, pq, diagram, sts, vs, cross, comparisons)


def verify_decomposition(fix: Fixture) -> dict:
    """Per-stratum pass/fail report for the flag-diagram identification."""
    dec = build_decomposition(fix)
    strata_report = []
    for comp in dec.comparisons:
        strata_report.append(
            {
                "delta": comp.stratum.delta,
                "flag": comp.stratum.flag.label,
                "scale": comp.scale,
                "pass": comp.edges_match,
            }
        )
    cross_ok = all(
        dec.strata[dec.vertex_stratum[e.w]].delta > dec.strata[dec.vertex_stratum[e.u]].delta
        for e in dec.cross_edges
    )
    return {
        "fixture": fix.label,
        "strata": strata_report,
        "cross_edges": len(dec.cross_edges),
        "all_pass": dec.all_pass() and cross_ok,
    }


# ---------------------------------------------------------------------------
# emission


def _vertex_positions(dec_pq: ParabolicQuotient) -> List[Tuple[int, int]]:
    """(degree, centered slot) per vertex, stable within each degree."""
    by_degree: Dict[int, List[int]] = {}
    for k, w in enumerate(dec_pq.elements):
        by_degree.setdefault(w.length, []).append(k)
    pos = [(0, 0)] * len(dec_pq.elements)
    for degree, members in sorted(by_degree.items()):
        for slot, k in enumerate(members):
            pos[k] = (degree, slot)
    return pos


def _emit_json(
    label: str,
    space: str,
    pq: ParabolicQuotient,
    diagram: HasseDiagram,
    vertex_stratum: Optional[Tuple[int, ...]],
    strata_payload: Optional[list],
) -> str:
    vertices = []
    for k, w in enumerate(pq.elements):
        entry = {"window": weyl.window_str(w.window), "length": w.length}
        if vertex_stratum is not None:
            entry["stratum"] = vertex_stratum[k]
        vertices.append(entry)
    edges = []
    for e in diagram.edges:
        entry = {"from": e.u, "to": e.w, "mult": e.mult}
        if vertex_stratum is not None:
            entry["cross"] = vertex_stratum[e.u] != vertex_stratum[e.w]
        edges.append(entry)
    payload = {"fixture": label, "space": space, "vertices": vertices, "edges": edges}
    if strata_payload is not None:
        payload["strata"] = strata_payload
    return json.dumps(payload, indent=2) + "\n"


def _emit_dot(
    label: str,
    pq: ParabolicQuotient,
    diagram: HasseDiagram,
    vertex_stratum: Optional[Tuple[int, ...]],
    stratum_delta: Optional[Tuple[int, ...]],
) -> str:
    lines = [
        'digraph "%s" {' % label,
        "  rankdir=LR;",
        "  node [shape=circle, style=filled, fixedsize=true, width=0.25, fontsize=6];",
    ]
    for k, w in enumerate(pq.elements):
        attrs = ['label="%s"' % weyl.window_str(w.window)]
        if vertex_stratum is not None:
            si = vertex_stratum[k]
            attrs.append('class="stratum%d"' % stratum_delta[si])
            attrs.append('fillcolor="%s"' % PALETTE[si % len(PALETTE)])
        lines.append("  n%d [%s];" % (k, ", ".join(attrs)))
    for e in diagram.edges:
        attrs = ["penwidth=%d" % e.mult]
        if vertex_stratum is not None and vertex_stratum[e.u] == vertex_stratum[e.w]:
            attrs.append('color="%s"' % PALETTE[vertex_stratum[e.u] % len(PALETTE)])
        lines.append("  n%d -> n%d [%s];" % (e.u, e.w, ", ".join(attrs)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _emit_tikz(
    pq: ParabolicQuotient,
    diagram: HasseDiagram,
    vertex_stratum: Optional[Tuple[int, ...]],
) -> str:
    colors = ("blue", "red", "green!60!black", "orange", "violet", "brown")
    pos = _vertex_positions(pq)
    counts: Dict[int, int] = {}
    for degree, _ in pos:
        counts[degree] = counts.get(degree, 0) + 1
    lines = [
        "\\documentclass[tikz]{standalone}",
        "\\begin{document}",
        "\\begin{tikzpicture}[x=2em, y=2em,",
        "  every node/.style={draw, circle, minimum size=4pt, inner sep=0pt}]",
    ]
    for k in range(len(pq.elements)):
        degree, slot = pos[k]
        y = slot - (counts[degree] - 1) / 2.0
        fill = ""
        if vertex_stratum is not None:
            fill = "fill=%s" % colors[vertex_stratum[k] % len(colors)]
        lines.append(
            "  \\node[%s] (n%d) at (%d, %.1f) {};" % (fill, k, degree, y)
        )
    for e in diagram.edges:
        style = []
        if vertex_stratum is not None and vertex_stratum[e.u] == vertex_stratum[e.w]:
            style.append(colors[vertex_stratum[e.u] % len(colors)])
        if e.mult >= 2:
            style.append("double")
        opts = "[%s]" % ",".join(style) if style else ""
        lines.append("  \\draw%s (n%d) -- (n%d);" % (opts, e.u, e.w))
    lines.extend(["\\end{tikzpicture}", "\\end{document}"])
    return "\n".join(lines) + "\n"


def emit(dec: DecomposedDiagram, fmt: str, path: Optional[str] = None) -> str:
    deltas = tuple(st.delta for st in dec.strata)
    if fmt == "json":
        text = _emit_json(
            dec.fixture.label,
            dec.fixture.space_label,
            dec.pq,
            dec.diagram,
            dec.vertex_stratum,
            [strata.stratum_json(st) for st in dec.strata],
        )
    elif fmt == "dot":
        text = _emit_dot(dec.fixture.label, dec.pq, dec.diagram, dec.vertex_stratum, deltas)
    elif fmt == "tikz":
        text = _emit_tikz(dec.pq, dec.diagram, dec.vertex_stratum)
    else:
        raise ValueError("unknown format %r (expected dot, tikz or json)" % fmt)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def emit_plain(fix: Fixture, fmt: str, path: Optional[str] = None) -> str:
    """Uncolored Hasse diagram of the fixture's space."""
    pq = cosets.enumerate_WQ(fix.rs, fix.j_q)
    diagram = hasse.build_hasse(pq, {fix.q_node: 1})
    if fmt == "json":
        text = _emit_json(fix.label, fix.space_label, pq, diagram, None, None)
    elif fmt == "dot":
        text = _emit_dot(fix.label, pq, diagram, None, None)
    elif fmt == "tikz":
        text = _emit_tikz(pq, diagram, None)
    else:
        raise ValueError("unknown format %r (expected dot, tikz or json)" % fmt)
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text
