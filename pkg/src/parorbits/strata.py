"""Orbit strata of a classical Grassmannian under a cominuscule parabolic.

Each double coset of the quotient carries:

  * delta: the stratum exponent eta_Q(omega_i^vee - w^(-1) omega_i^vee),
    computed from exact coweight arithmetic and constant on the stratum;
  * d_geometric: the signed-permutation statistic recording the incidence
    dimension with the reference flag (the case-by-case window count);
  * K and a flag descriptor: the Levi flag variety the stratum fibres over;
  * the expected fiber dimension from the case formulas, tested against
    the length of the minimal representative.

Orientation convention: delta is 0 on the closed stratum (the one through
the base point) and maximal on the open stratum; d_of returns the same
label, derived from d_geometric via the case's admissible range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from . import cosets, rootsys, weyl
from .cosets import DoubleCoset, ParabolicQuotient
from .fixtures import Fixture
from .rootsys import RootSystem
from .weyl import WeylElement


class StrataError(ValueError):
    """Stratification invariant violation or unsupported case."""


# ---------------------------------------------------------------------------
# delta and the combinatorial statistic d


def delta(fix: Fixture, w: WeylElement) -> int:
    """Stratum exponent of w: the q-power in the cominuscule quantum product."""
    rs = fix.rs
    omega = rs.fundamental_coweight(fix.p_node)
    moved = weyl.act(weyl.inverse(w), omega)
    diff = tuple(a - b for a, b in zip(omega, moved))
    val = rootsys.eta(rs, diff, fix.q_node)
    if val.denominator != 1 or val < 0:
        raise StrataError("non-integer stratum exponent %s at %r" % (val, w))
    return int(val)


def d_geometric(fix: Fixture, w: WeylElement) -> int:
    """Incidence dimension of the w-cell with the reference flag of P.

    This is the window statistic of the double-coset case analysis: e.g.
    #{j <= m : w(j) <= i} in type A, #{j <= m : w(j) > 0} in type C.
    """
    t, n, m, i = fix.type_label, fix.rank, fix.q_node, fix.p_node
    b = w.window
    head = b[:m]
    if t == "A":
        return sum(1 for v in head if v <= i)
    if t == "B" or (t == "D" and i == 1):
        if any(v == 1 for v in head):
            return 2 if m <= _p1_max_m(fix) else 1
        if any(v == -1 for v in head):
            return 0
        return 1
    if t == "C" or (t == "D" and i == n):
        return sum(1 for v in head if v > 0)
    if t == "D" and i == n - 1:
        pos = sum(1 for v in head if v > 0)
        return pos - (1 if n in head else 0) + (1 if -n in head else 0)
    raise StrataError("unsupported case %s" % (fix,))


def _p1_max_m(fix: Fixture) -> int:
    # largest m with the three-orbit picture for P_(omega_1)
    return fix.rank - 1 if fix.type_label == "B" else fix.rank - 2


def d_range(fix: Fixture) -> Tuple[int, int, int]:
    """Admissible (lo, hi, step) of d_geometric for the fixture's case."""
    t, n, m, i = fix.type_label, fix.rank, fix.q_node, fix.p_node
    if t == "A":
        return (max(0, i + m - n - 1), min(m, i), 1)
    if t == "B" or (t == "D" and i == 1):
        if m <= _p1_max_m(fix):
            return (0, 2, 1)
        return (0, 1, 1)
    if t == "C":
        return (0, m, 1)
    if t == "D" and i in (n - 1, n):
        if m <= n - 2:
            return (0, m, 1)
        top = n if i == n else n - 1
        return (top % 2, top, 2)
    raise StrataError("unsupported case %s" % (fix,))


def stratum_count(fix: Fixture) -> int:
    lo, hi, step = d_range(fix)
    return (hi - lo) // step + 1


def d_of(fix: Fixture, w: WeylElement) -> int:
    """Stratum label of w from the window statistic, oriented to match delta.

    The label is (hi - d_geometric)/step for the case range (lo, hi, step),
    so the closed stratum (through the base point) gets 0 and the open
    stratum gets the maximal label.
    """
    lo, hi, step = d_range(fix)
    dg = d_geometric(fix, w)
    if not (lo <= dg <= hi) or (hi - dg) % step:
        raise StrataError(
            "window statistic %d outside the admissible range %s for %s"
            % (dg, (lo, hi, step), fix)
        )
    return (hi - dg) // step


def expected_fiber_dim(fix: Fixture, d_geom: int) -> int:
    """Fiber dimension of the stratum's vector-bundle structure over its flag.

    `d_geom` is the geometric statistic (d_geometric), not the delta label.
    """
    t, n, m, i = fix.type_label, fix.rank, fix.q_node, fix.p_node
    d = d_geom
    lo, hi, step = d_range(fix)
    if not (lo <= d <= hi) or (hi - d) % step:
        raise StrataError("d=%d outside the admissible range for %s" % (d, fix))
    if t == "A":
        return (m - d) * (i - d)
    if t == "B" and m < n:
        return {0: 2 * n - m, 1: m, 2: 0}[d]
    if t == "B":
        return {0: n, 1: 0}[d]
    if t == "C":
        k = m - d
        return k * (n - d) - k * (k - 1) // 2
    if t == "D" and i == 1:
        if m <= n - 2:
            return {0: 2 * n - 1 - m, 1: m, 2: 0}[d]
        return {0: n - 1, 1: 0}[d]
    if t == "D":
        if m <= n - 2:
            k = m - d
            return k * (n - d) - k * (k + 1) // 2
        k = n - d
        return k * (k - 1) // 2
    raise StrataError("unsupported case %s" % (fix,))


# ---------------------------------------------------------------------------
# Levi flag descriptors


@dataclass(frozen=True)
class FlagComponent:
    type_label: str
    rank: int
    #: ambient node of each Bourbaki position (position k is node k+1)
    ambient_order: Tuple[int, ...]
    #: marked nodes in component numbering, sorted
    marked: Tuple[int, ...]

    @property
    def label(self) -> str:
        t, r, marked = self.type_label, self.rank, self.marked
        if t == "A":
            if len(marked) == 1:
                return "G(%d,%d)" % (marked[0], r + 1)
            return "F(%s;%d)" % (",".join(str(k) for k in marked), r + 1)
        if t == "B" and len(marked) == 1:
            return "OG(%d,%d)" % (marked[0], 2 * r + 1)
        if t == "C" and len(marked) == 1:
            return "IG(%d,%d)" % (marked[0], 2 * r)
        if t == "D":
            if marked in ((r,), (r - 1,)):
                return "OG(%d,%d)" % (r, 2 * r)
            if marked == (r - 1, r):
                return "OG(%d,%d)" % (r - 1, 2 * r)
            if len(marked) == 1:
                return "OG(%d,%d)" % (marked[0], 2 * r)
        return "%s%d/P{%s}" % (t, r, ",".join(str(k) for k in marked))


@dataclass(frozen=True)
class FlagDescriptor:
    components: Tuple[FlagComponent, ...]
    marked_ambient: Tuple[int, ...]
    dim: int

    @property
    def label(self) -> str:
        if not self.components:
            return "pt"
        return " x ".join(c.label for c in self.components)


def K_of(dc: DoubleCoset) -> FrozenSet[int]:
    """Nodes of Delta(P) whose simple root is carried onto Delta(Q) by w_min."""
    rs = dc.pq.rs
    winv = weyl.inverse(dc.w_min)
    q_simples = {rs.simple_root(t): t for t in sorted(dc.pq.j_q)}
    out = set()
    for s in sorted(dc.j_p):
        if tuple(weyl.act(winv, rs.simple_root(s))) in q_simples:
            out.add(s)
    return frozenset(out)


def _component_nodes(rs: RootSystem, nodes: FrozenSet[int]) -> List[List[int]]:
    adj = rs.adjacency()
    remaining = set(nodes)
    comps = []
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            x = stack.pop()
            for y in adj[x] & remaining:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        remaining -= comp
        comps.append(sorted(comp))
    return comps


def _path_order(adj: Dict[int, List[int]], start: int) -> List[int]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [y for y in adj[cur] if y != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _orderings(rs: RootSystem, comp: Sequence[int]) -> Tuple[str, List[List[int]]]:
    """Component type plus all valid Bourbaki orderings of its nodes."""
    comp = list(comp)
    r = len(comp)
    adj = {
        x: [y for y in comp if y != x and rs.cartan_matrix[x - 1][y - 1] != 0]
        for x in comp
    }
    norm = {x: rootsys.pair(rs.simple_root(x), rs.simple_root(x)) for x in comp}
    norms = sorted(set(norm.values()))
    if r == 1:
        t = {1: "B", 2: "A", 4: "C"}[int(norms[0])]
        return t, [comp]
    if len(norms) > 1:
        # one short end (type B, norms 2..2,1) or one long end (type C,
        # norms 2..2,4); the fixed realizations make this an absolute test
        special_norm = norms[0] if norms == [1, 2] else norms[-1]
        t = "B" if special_norm == norms[0] else "C"
        special = next(x for x in comp if norm[x] == special_norm)
        if len(adj[special]) != 1:
            raise StrataError("non-terminal special root in component %s" % comp)
        far = next(x for x in comp if len(adj[x]) == 1 and x != special)
        order = _path_order(adj, far)
        if order[-1] != special:
            raise StrataError("component %s is not a B/C path" % comp)
        return t, [order]
    branch = [x for x in comp if len(adj[x]) == 3]
    if not branch:
        leaves = [x for x in comp if len(adj[x]) <= 1]
        first = _path_order(adj, leaves[0])
        return "A", [first, list(reversed(first))]
    center = branch[0]
    pruned = {k: [z for z in v if z != center] for k, v in adj.items()}
    arms = [_path_order(pruned, y) for y in adj[center]]
    arms.sort(key=len)
    orderings = []
    tails = [a for a in arms if len(a) == len(arms[-1])]
    for tail in tails:
        short = [a for a in arms if a is not tail]
        if not all(len(a) == 1 for a in short) or len(short) != 2:
            continue
        f1, f2 = short[0][0], short[1][0]
        base = list(reversed(tail)) + [center]
        orderings.append(base + [f1, f2])
        orderings.append(base + [f2, f1])
    if not orderings:
        raise StrataError("component %s is not a D diagram" % comp)
    return "D", orderings


def _classify_component(
    rs: RootSystem, comp: Sequence[int], marked_ambient: FrozenSet[int]
) -> FlagComponent:
    t, orderings = _orderings(rs, comp)
    best = None
    for order in orderings:
        marked = tuple(
            sorted(order.index(x) + 1 for x in comp if x in marked_ambient)
        )
        key = (marked, tuple(order))
        if best is None or key < best[0]:
            best = (key, order, marked)
    _, order, marked = best
    return FlagComponent(t, len(comp), tuple(order), marked)


def flag_descriptor(rs: RootSystem, j_p: FrozenSet[int], k_set: FrozenSet[int]) -> FlagDescriptor:
    marked = frozenset(j_p) - k_set
    dim = len(rs.positive_roots_of(frozenset(j_p))) - len(rs.positive_roots_of(k_set))
    comps = []
    for comp in _component_nodes(rs, frozenset(j_p)):
        if marked & set(comp):
            comps.append(_classify_component(rs, comp, marked))
    return FlagDescriptor(tuple(comps), tuple(sorted(marked)), dim)


# ---------------------------------------------------------------------------
# strata


@dataclass(frozen=True, eq=False)
class OrbitStratum:
    fixture: Fixture
    dc: DoubleCoset
    delta: int
    d_geom: int
    K: FrozenSet[int]
    flag: FlagDescriptor
    fiber_dim: int
    doubling: bool

    @property
    def size(self) -> int:
        return self.dc.size


def h_prime_of(stratum: OrbitStratum) -> Tuple[Dict[int, int], bool]:
    """Divisor weight on the stratum's flag, plus the doubling flag.

    The weight is 1 on each marked ambient node, with one degeneration:
    on the Lagrangian Grassmannian (type C with q_node = rank) the two
    isotropic flag steps of a stratum coincide, so the restricted divisor
    is twice the single marked generator and the coefficient is 2.

    The boolean is the odd orthogonal doubling flag: the middle stratum
    of OG(n-1, 2n+1) compares against its (maximal orthogonal) flag
    diagram with every multiplicity doubled.
    """
    fix = stratum.fixture
    coeff = 1
    if fix.type_label == "C" and fix.q_node == fix.rank and stratum.flag.marked_ambient:
        coeff = 2
    return {node: coeff for node in stratum.flag.marked_ambient}, stratum.doubling


def _doubling(fix: Fixture, delta_value: int) -> bool:
    return (
        fix.type_label == "B"
        and fix.q_node == fix.rank - 1
        and fix.p_node == 1
        and delta_value == 1
    )


def stratify(fix: Fixture) -> Tuple[ParabolicQuotient, Tuple[OrbitStratum, ...]]:
    """Quotient of X with its orbit strata, sorted by increasing delta."""
    rs = fix.rs
    pq = cosets.enumerate_WQ(rs, fix.j_q)
    strata = []
    for dc in cosets.double_cosets(pq, fix.j_p):
        values = {delta(fix, pq.elements[k]) for k in dc.members}
        if len(values) != 1:
            raise StrataError(
                "stratum exponent not constant on %s: %s" % (dc.members, sorted(values))
            )
        dval = values.pop()
        k_set = K_of(dc)
        flag = flag_descriptor(rs, dc.j_p, k_set)
        strata.append(
            OrbitStratum(
                fixture=fix,
                dc=dc,
                delta=dval,
                d_geom=d_geometric(fix, dc.w_min),
                K=k_set,
                flag=flag,
                fiber_dim=dc.w_min.length,
                doubling=_doubling(fix, dval),
            )
        )
    strata.sort(key=lambda st: (st.delta, st.dc.w_min.window))
    return pq, tuple(strata)


def stratum_json(st: OrbitStratum) -> dict:
    return {
        "delta": st.delta,
        "w_min": weyl.window_str(st.dc.w_min.window),
        "w_max": weyl.window_str(st.dc.w_max.window),
        "size": st.size,
        "K": sorted(st.K),
        "flag": {
            "components": [
                {
                    "type": c.type_label,
                    "rank": c.rank,
                    "nodes": list(c.ambient_order),
                    "marked": list(c.marked),
                    "label": c.label,
                }
                for c in st.flag.components
            ],
            "marked": list(st.flag.marked_ambient),
            "dim": st.flag.dim,
        },
        "fiber_dim": st.fiber_dim,
        "doubling": st.doubling,
    }
