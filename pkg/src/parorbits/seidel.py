"""Quantum product by cominuscule Seidel classes.

The Seidel element of a cominuscule node i is the shortest Weyl element
carrying the fundamental coweight of i to its image under the longest
element; it acts on Schubert classes by

    sigma_v * sigma_w = q^delta(w) sigma_[v w],

where the class index is reduced to its minimal coset representative and
delta is the stratum exponent of `strata`.  The induced map on classes is
a bijection whose iterates accumulate q-exponents linearly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Tuple

from . import cosets, rootsys, strata, weyl
from .fixtures import Fixture
from .rootsys import RootSystem
from .weyl import WeylElement


class SeidelError(ValueError):
    """Invalid node or failed certification."""


@dataclass(frozen=True, eq=False)
class SeidelElement:
    rs: RootSystem
    i: int
    v: WeylElement


@dataclass(frozen=True)
class QuantumTerm:
    q_exp: int
    class_index: WeylElement


def v_elt(rs: RootSystem, i: int, certify: bool = True) -> SeidelElement:
    """Seidel element of node i, built as w_0 * w_(0,P_i).

    The defining coweight equation is always checked exactly.  Minimality
    is certified by brute force over every shorter group element up to
    rank 5; past that the certificate is a seeded sample of random short
    words (full enumeration grows past desk scale).
    """
    if i not in rootsys.cominuscule_nodes(rs):
        raise SeidelError(
            "node %d is not cominuscule for %s_%d" % (i, rs.type_label, rs.rank)
        )
    w0 = weyl.longest(rs, rs.nodes)
    w0_levi = weyl.longest(rs, [k for k in rs.nodes if k != i])
    v = weyl.multiply(w0, w0_levi)
    omega = rs.fundamental_coweight(i)
    target = weyl.act(w0, omega)
    if weyl.act(v, omega) != target:
        raise SeidelError("Seidel element fails its coweight equation at node %d" % i)
    if certify:
        for u in _minimality_candidates(rs, v.length):
            if u.length < v.length and weyl.act(u, omega) == target:
                raise SeidelError(
                    "shorter element %r satisfies the coweight equation" % (u,)
                )
    return SeidelElement(rs, i, v)


def _minimality_candidates(rs: RootSystem, bound: int):
    if rs.rank <= 5:
        return weyl.full_group(rs)
    import random

    rng = random.Random(20260808)
    out = []
    for _ in range(500):
        word = [rng.randrange(1, rs.rank + 1) for _ in range(rng.randrange(bound))]
        out.append(weyl.from_word(rs, word))
    return out


def seidel_apply(se: SeidelElement, w: WeylElement, fix: Fixture) -> QuantumTerm:
    """One quantum product: q-exponent delta(w), class index of v*w."""
    image = weyl.min_rep(weyl.multiply(se.v, w), fix.j_q)
    return QuantumTerm(strata.delta(fix, w), image)


def seidel_table(fix: Fixture) -> List[Tuple[WeylElement, QuantumTerm]]:
    """The full operator table over the quotient, in element order."""
    se = v_elt(fix.rs, fix.p_node, certify=False)
    pq = cosets.enumerate_WQ(fix.rs, fix.j_q)
    return [(w, seidel_apply(se, w, fix)) for w in pq.elements]


def seidel_permutation(fix: Fixture) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Induced map on element indices plus the q-exponent per source."""
    pq = cosets.enumerate_WQ(fix.rs, fix.j_q)
    table = seidel_table(fix)
    perm = []
    qexp = []
    for w, term in table:
        perm.append(pq.index_of(term.class_index))
        qexp.append(term.q_exp)
    return tuple(perm), tuple(qexp)


def permutation_order(perm: Tuple[int, ...]) -> int:
    order = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, n = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            n += 1
        order = order * n // gcd(order, n)
    return order


def accumulated_q(perm: Tuple[int, ...], qexp: Tuple[int, ...], steps: int, start: int) -> int:
    total = 0
    k = start
    for _ in range(steps):
        total += qexp[k]
        k = perm[k]
    return total


def quantum_q_degree(fix: Fixture) -> int:
    """Degree of q on the quotient: first Chern number on the basic curve."""
    rs = fix.rs
    total = 0
    for k, beta in enumerate(rs.positive_roots):
        if rs.root_support[k] <= fix.j_q:
            continue
        total += int(rootsys.pair(beta, rs.simple_coroot(fix.q_node)))
    return total


def table_rows(fix: Fixture) -> List[Dict[str, object]]:
    """Serializable operator table: window, length, q_exp, image_window."""
    rows = []
    for w, term in seidel_table(fix):
        rows.append(
            {
                "window": weyl.window_str(w.window),
                "length": w.length,
                "q_exp": term.q_exp,
                "image_window": weyl.window_str(term.class_index.window),
            }
        )
    return rows
