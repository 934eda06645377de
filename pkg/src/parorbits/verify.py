"""Invariant suites over classical fixtures, with machine-readable reports.

Each fixture runs the full battery: interval certification, stratum
exponent laws (constancy, monotonicity, the window-statistic identity),
the dimension ledger, the flag-diagram decomposition, divisor-diagram
self-checks, and the Seidel operator laws.  Reports are deterministic
dictionaries; nothing here depends on wall-clock or iteration order.
"""

from __future__ import annotations

from typing import Dict, Optional, Tuple

from . import cosets, decomp, hasse, seidel, strata, weyl
from .fixtures import Fixture, sweep_fixtures


def _check_interval(fix: Fixture, pq, sts) -> bool:
    return all(cosets.certify_interval(st.dc) for st in sts)


def _check_delta_laws(fix: Fixture, pq, sts) -> Dict[str, bool]:
    constant = True
    for st in sts:
        values = {strata.delta(fix, pq.elements[k]) for k in st.dc.members}
        if values != {st.delta}:
            constant = False
    equal_d = all(strata.delta(fix, w) == strata.d_of(fix, w) for w in pq.elements)
    deltas = sorted(st.delta for st in sts)
    consecutive = deltas == list(range(len(sts)))
    count_ok = len(sts) == strata.stratum_count(fix)
    vertex_delta = {}
    for st in sts:
        for k in st.dc.members:
            vertex_delta[k] = st.delta
    monotone = True
    for c in pq.covers:
        du, dw = vertex_delta[c.u], vertex_delta[c.w]
        if du == dw:
            continue
        if not dw > du:
            monotone = False
    return {
        "delta_constant": constant,
        "delta_equals_d": equal_d,
        "delta_consecutive": consecutive,
        "stratum_count": count_ok,
        "delta_monotone": monotone,
    }


def _check_dimension_ledger(fix: Fixture, sts) -> bool:
    ok = True
    for st in sts:
        if st.fiber_dim != strata.expected_fiber_dim(fix, st.d_geom):
            ok = False
        if st.dc.w_max.length - st.dc.w_min.length != st.flag.dim:
            ok = False
        fq = decomp.flag_quotient(st)
        if len(fq.elements) != st.size:
            ok = False
    return ok


def _check_decomposition(fix: Fixture) -> dict:
    return decomp.verify_decomposition(fix)


def _check_chevalley_witnesses(fix: Fixture, pq) -> bool:
    diagram = hasse.build_hasse(pq, {fix.q_node: 1})
    for e in diagram.edges:
        u = pq.elements[e.u]
        w = weyl.multiply(u, cosets.reflection_by_index(pq.rs, e.root))
        if w != pq.elements[e.w]:
            return False
        if hasse.pairing_with_coroot(pq, diagram.weight, e.root) != e.mult:
            return False
    return True


def _check_seidel(fix: Fixture, pq) -> Dict[str, bool]:
    se = seidel.v_elt(fix.rs, fix.p_node, certify=False)
    perm, qexp = seidel.seidel_permutation(fix)
    bijection = sorted(perm) == list(range(len(perm)))

    # two applications match one application of the squared element, and the
    # accumulated exponent is the sum along the path
    vv = weyl.multiply(se.v, se.v)
    compose_ok = True
    for k, w in enumerate(pq.elements):
        term1 = seidel.seidel_apply(se, w, fix)
        term2 = seidel.seidel_apply(se, term1.class_index, fix)
        direct = weyl.min_rep(weyl.multiply(vv, w), fix.j_q)
        if term2.class_index != direct:
            compose_ok = False
        if term1.q_exp + term2.q_exp != qexp[k] + qexp[perm[k]]:
            compose_ok = False

    order = seidel.permutation_order(perm)
    identity_ok = all(
        _iterate(perm, k, order) == k for k in range(len(perm))
    )
    totals = {
        seidel.accumulated_q(perm, qexp, order, k) for k in range(len(perm))
    }
    constant_q = len(totals) == 1

    qdeg = seidel.quantum_q_degree(fix)
    v_class = weyl.min_rep(se.v, fix.j_q)
    degree_ok = True
    for k, w in enumerate(pq.elements):
        image = pq.elements[perm[k]]
        if v_class.length + w.length != qexp[k] * qdeg + image.length:
            degree_ok = False
    return {
        "seidel_bijection": bijection,
        "seidel_composition": compose_ok,
        "seidel_finite_order": identity_ok,
        "seidel_orbit_q_constant": constant_q,
        "seidel_degree_bookkeeping": degree_ok,
    }


def _iterate(perm: Tuple[int, ...], start: int, steps: int) -> int:
    k = start
    for _ in range(steps):
        k = perm[k]
    return k


def verify_fixture(fix: Fixture) -> dict:
    """Every invariant suite on one fixture; deterministic report."""
    pq, sts = strata.stratify(fix)
    checks: Dict[str, object] = {}
    checks["interval"] = _check_interval(fix, pq, sts)
    checks.update(_check_delta_laws(fix, pq, sts))
    checks["dimension_ledger"] = _check_dimension_ledger(fix, sts)
    decomposition = _check_decomposition(fix)
    checks["decomposition"] = decomposition["all_pass"]
    checks["chevalley_witnesses"] = _check_chevalley_witnesses(fix, pq)
    checks.update(_check_seidel(fix, pq))
    ok = all(bool(v) for v in checks.values())
    return {
        "fixture": fix.label,
        "space": fix.space_label,
        "classes": len(pq.elements),
        "strata": [
            {"delta": st.delta, "size": st.size, "flag": st.flag.label, "scale": 2 if st.doubling else 1}
            for st in sts
        ],
        "checks": checks,
        "decomposition": decomposition,
        "pass": ok,
    }


def type_a_composition_report(max_rank: int = 4) -> dict:
    """Cyclic composition of type A Seidel elements, exhaustively per rank."""
    from . import rootsys

    results = {}
    for n in range(1, max_rank + 1):
        rs = rootsys.build("A", n)
        velems = {0: weyl.identity(rs)}
        for i in range(1, n + 1):
            velems[i] = seidel.v_elt(rs, i, certify=(n <= 4)).v
        ok = True
        for i in range(1, n + 1):
            for k in range(1, n + 1):
                expected = velems[(i + k) % (n + 1)]
                if weyl.multiply(velems[i], velems[k]) != expected:
                    ok = False
        results["A%d" % n] = ok
    return {"cyclic_law": results, "pass": all(results.values())}


def run_verify(
    max_a: int = 5,
    max_b: int = 5,
    max_c: int = 5,
    max_d: int = 5,
    fixture: Optional[Fixture] = None,
) -> dict:
    fixtures = [fixture] if fixture is not None else sweep_fixtures(max_a, max_b, max_c, max_d)
    reports = [verify_fixture(fix) for fix in fixtures]
    type_a = type_a_composition_report(min(max_a, 4))
    all_pass = all(r["pass"] for r in reports) and type_a["pass"]
    return {
        "fixtures": reports,
        "type_a_composition": type_a,
        "count": len(reports),
        "all_pass": all_pass,
    }


def corrupted_oracle_selftest() -> dict:
    """Negative control: a deliberately damaged stratum must fail certification."""
    import dataclasses

    fix = Fixture("A", 3, 2, 2)
    pq, sts = strata.stratify(fix)
    middle = next(st for st in sts if st.size > 2)
    extremes = {pq.index_of(middle.dc.w_min), pq.index_of(middle.dc.w_max)}
    interior = [k for k in middle.dc.members if k not in extremes]
    keep = tuple(sorted(set(middle.dc.members) - {interior[0]}))
    corrupted = dataclasses.replace(middle.dc, members=keep)
    detected = not cosets.certify_interval(corrupted)
    return {"self_test_corrupt": {"detected": detected}}
