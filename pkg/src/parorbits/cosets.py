"""Parabolic quotients W^Q and double-coset strata.

A quotient may live in the full Weyl group or in any standard Levi
subgroup (node subset), which lets the flag varieties appearing inside
orbit strata reuse the same machinery.  Elements are minimal-length coset
representatives, graded by length; covers carry a positive-root witness
beta with w = u * s_beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

from . import weyl
from .rootsys import RootSystem
from .weyl import WeylElement


class CosetError(ValueError):
    """Invalid quotient or double-coset request."""


class Cover(NamedTuple):
    u: int
    w: int
    root: int  # index into rs.positive_roots


@dataclass(frozen=True, eq=False)
class ParabolicQuotient:
    rs: RootSystem
    nodes: FrozenSet[int]
    j_q: FrozenSet[int]
    elements: Tuple[WeylElement, ...]
    covers: Tuple[Cover, ...]
    index: Dict[Tuple[int, ...], int]

    def __repr__(self) -> str:
        return "ParabolicQuotient(%s%d, nodes=%s, J_Q=%s, %d elements)" % (
            self.rs.type_label,
            self.rs.rank,
            sorted(self.nodes),
            sorted(self.j_q),
            len(self.elements),
        )

    def index_of(self, w: WeylElement) -> int:
        return self.index[w.window]

    def top_degree(self) -> int:
        return self.elements[-1].length

    def rank_counts(self) -> Tuple[int, ...]:
        counts = [0] * (self.top_degree() + 1)
        for w in self.elements:
            counts[w.length] += 1
        return tuple(counts)


@lru_cache(maxsize=None)
def reflection_by_index(rs: RootSystem, root_idx: int) -> WeylElement:
    return weyl.reflection(rs, rs.positive_roots[root_idx])


@lru_cache(maxsize=None)
def build_quotient(
    rs: RootSystem, j_q: FrozenSet[int], nodes: Optional[FrozenSet[int]] = None
) -> ParabolicQuotient:
    """Graded quotient W_L / W_J with cover relations and root witnesses."""
    if nodes is None:
        nodes = frozenset(rs.nodes)
    if not j_q <= nodes:
        raise CosetError("J_Q %s is not contained in the node set %s" % (sorted(j_q), sorted(nodes)))
    group = weyl.enumerate_group(rs, nodes)
    seen = {}
    for w in group:
        rep = weyl.min_rep(w, j_q)
        seen.setdefault(rep.window, rep)
    elements = tuple(sorted(seen.values(), key=lambda w: (w.length, w.window)))
    index = {w.window: k for k, w in enumerate(elements)}

    ambient_roots = set(rs.positive_roots_of(nodes))
    q_roots = set(rs.positive_roots_of(j_q))
    candidate_roots = sorted(ambient_roots - q_roots)
    covers: List[Cover] = []
    for u_idx, u in enumerate(elements):
        lu = u.length
        for root_idx in candidate_roots:
            w = weyl.multiply(u, reflection_by_index(rs, root_idx))
            w_idx = index.get(w.window)
            if w_idx is not None and w.length == lu + 1:
                covers.append(Cover(u_idx, w_idx, root_idx))
    covers.sort()
    return ParabolicQuotient(rs, nodes, j_q, elements, tuple(covers), index)


def enumerate_WQ(rs: RootSystem, j_q: Iterable[int]) -> ParabolicQuotient:
    """Quotient of the full Weyl group by the standard parabolic W_Q.

    For type D the quotient omitting node n-1 is rejected: the associated
    variety of (n-1)-dimensional isotropic subspaces has Picard rank two
    and sits outside the supported family.
    """
    j_set = frozenset(j_q)
    omitted = frozenset(rs.nodes) - j_set
    if rs.type_label == "D" and omitted == {rs.rank - 1}:
        raise CosetError(
            "D_%d with q_node %d has Picard rank 2 -- excluded"
            % (rs.rank, rs.rank - 1)
        )
    return build_quotient(rs, j_set)


@dataclass(frozen=True, eq=False)
class DoubleCoset:
    pq: ParabolicQuotient
    j_p: FrozenSet[int]
    members: Tuple[int, ...]  # sorted element indices
    w_min: WeylElement
    w_max: WeylElement

    @property
    def size(self) -> int:
        return len(self.members)

    def member_elements(self) -> Tuple[WeylElement, ...]:
        return tuple(self.pq.elements[k] for k in self.members)


def double_cosets(pq: ParabolicQuotient, j_p: Iterable[int]) -> Tuple[DoubleCoset, ...]:
    """Partition of the quotient into orbits of the left W_P action.

    Orbits are computed by closing each element under w -> min_rep(s_p w)
    over the generators of W_P, mirroring the double-coset description
    W_P \\ W / W_Q.
    """
    j_p_set = frozenset(j_p)
    if not j_p_set <= pq.nodes:
        raise CosetError("J_P %s not contained in nodes %s" % (sorted(j_p_set), sorted(pq.nodes)))
    gens = [weyl.simple_reflection(pq.rs, p) for p in sorted(j_p_set)]
    index = pq.index
    assigned = [-1] * len(pq.elements)
    classes: List[List[int]] = []
    for start in range(len(pq.elements)):
        if assigned[start] >= 0:
            continue
        cls_id = len(classes)
        stack = [start]
        assigned[start] = cls_id
        members = [start]
        while stack:
            k = stack.pop()
            w = pq.elements[k]
            for s in gens:
                image = weyl.min_rep(weyl.multiply(s, w), pq.j_q)
                m = index[image.window]
                if assigned[m] < 0:
                    assigned[m] = cls_id
                    members.append(m)
                    stack.append(m)
        classes.append(sorted(members))

    out = []
    for members in classes:
        elems = [pq.elements[k] for k in members]
        min_len = min(e.length for e in elems)
        max_len = max(e.length for e in elems)
        mins = [e for e in elems if e.length == min_len]
        maxs = [e for e in elems if e.length == max_len]
        if len(mins) != 1 or len(maxs) != 1:
            raise CosetError(
                "double coset without unique length extremes: %s" % (elems,)
            )
        out.append(DoubleCoset(pq, j_p_set, tuple(members), mins[0], maxs[0]))
    return tuple(sorted(out, key=lambda dc: (dc.w_min.length, dc.w_min.window)))


def certify_interval(dc: DoubleCoset, pq: Optional[ParabolicQuotient] = None) -> bool:
    """Check members == Bruhat interval [w_min, w_max], independently.

    Uses only the subword-property comparator over the whole quotient, so
    it does not trust how the double coset was generated.
    """
    pq = pq if pq is not None else dc.pq
    member_set = set(dc.members)
    interval = set()
    for k, x in enumerate(pq.elements):
        if weyl.bruhat_leq(dc.w_min, x) and weyl.bruhat_leq(x, dc.w_max):
            interval.add(k)
    return interval == member_set


def quotient_json(pq: ParabolicQuotient) -> dict:
    """Stable JSON form: elements sorted by (length, window), covers by index."""
    omitted = sorted(frozenset(pq.rs.nodes) - pq.j_q)
    return {
        "type": pq.rs.type_label,
        "rank": pq.rs.rank,
        "q_node": omitted[0] if len(omitted) == 1 else omitted,
        "elements": [
            {"window": weyl.window_str(w.window), "length": w.length}
            for w in pq.elements
        ],
        "covers": [
            {
                "from": c.u,
                "to": c.w,
                "root": [int(x) for x in pq.rs.positive_roots[c.root]],
            }
            for c in pq.covers
        ],
    }
