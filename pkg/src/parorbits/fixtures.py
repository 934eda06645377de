"""Classical Grassmannian fixtures: a quotient node plus an acting node.

A fixture names X = G/Q for a maximal parabolic Q = P_(q_node) together
with a cominuscule node p_node defining the acting parabolic P.  Fixture
labels follow the convention "<Type><rank>/P<q_node>+P<p_node>".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List

from . import rootsys
from .rootsys import RootSystem


class FixtureError(ValueError):
    """Fixture outside the supported classical families."""


@dataclass(frozen=True)
class Fixture:
    type_label: str
    rank: int
    q_node: int
    p_node: int

    def __post_init__(self):
        rs = rootsys.build(self.type_label, self.rank)  # validates type and rank
        n = rs.rank
        if not 1 <= self.q_node <= n:
            raise FixtureError("q_node %d out of range 1..%d" % (self.q_node, n))
        if rs.type_label == "D" and self.q_node == n - 1:
            raise FixtureError(
                "D_%d with q_node %d has Picard rank 2 -- excluded" % (n, n - 1)
            )
        if self.p_node not in rootsys.cominuscule_nodes(rs):
            raise FixtureError(
                "node %d is not cominuscule for %s_%d (allowed: %s)"
                % (
                    self.p_node,
                    self.type_label,
                    n,
                    sorted(rootsys.cominuscule_nodes(rs)),
                )
            )

    @property
    def rs(self) -> RootSystem:
        return rootsys.build(self.type_label, self.rank)

    @property
    def j_q(self) -> FrozenSet[int]:
        return frozenset(self.rs.nodes) - {self.q_node}

    @property
    def j_p(self) -> FrozenSet[int]:
        return frozenset(self.rs.nodes) - {self.p_node}

    @property
    def label(self) -> str:
        return "%s%d/P%d+P%d" % (self.type_label, self.rank, self.q_node, self.p_node)

    @property
    def space_label(self) -> str:
        """Conventional name of X, e.g. IG(2,8) for C4/P2."""
        n, m = self.rank, self.q_node
        if self.type_label == "A":
            return "G(%d,%d)" % (m, n + 1)
        if self.type_label == "B":
            return "OG(%d,%d)" % (m, 2 * n + 1)
        if self.type_label == "C":
            return "IG(%d,%d)" % (m, 2 * n)
        return "OG(%d,%d)" % (m, 2 * n)

    def __str__(self) -> str:
        return self.label


def parse_fixture(text: str) -> Fixture:
    """Parse "C,4,2,4" or "C4/P2+P4" into a fixture."""
    text = text.strip()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise FixtureError("expected TYPE,RANK,Q_NODE,P_NODE: %r" % text)
        return Fixture(parts[0], int(parts[1]), int(parts[2]), int(parts[3]))
    try:
        head, tail = text.split("/")
        q_part, p_part = tail.split("+")
        return Fixture(head[0], int(head[1:]), int(q_part[1:]), int(p_part[1:]))
    except (ValueError, IndexError) as exc:
        raise FixtureError("cannot parse fixture %r" % text) from exc


def sweep_fixtures(
    max_a: int = 5, max_b: int = 5, max_c: int = 5, max_d: int = 5
) -> List[Fixture]:
    """Every classical fixture (all maximal Q x all cominuscule P) up to caps."""
    out: List[Fixture] = []
    for n in range(1, max_a + 1):
        for q in range(1, n + 1):
            for p in range(1, n + 1):
                out.append(Fixture("A", n, q, p))
    for n in range(2, max_b + 1):
        for q in range(1, n + 1):
            out.append(Fixture("B", n, q, 1))
    for n in range(2, max_c + 1):
        for q in range(1, n + 1):
            out.append(Fixture("C", n, q, n))
    for n in range(4, max_d + 1):
        for q in [q for q in range(1, n + 1) if q != n - 1]:
            for p in (1, n - 1, n):
                out.append(Fixture("D", n, q, p))
    return out
