import pytest

from parorbits import cosets, weyl
from parorbits.fixtures import Fixture, FixtureError, sweep_fixtures
from parorbits.strata import (
    StrataError,
    d_geometric,
    d_of,
    delta,
    expected_fiber_dim,
    h_prime_of,
    stratify,
    stratum_count,
    stratum_json,
)


def _element(fix, window):
    return weyl.element(fix.rs, window)


def test_delta_examples():
    g24 = Fixture("A", 3, 2, 2)
    assert delta(g24, weyl.identity(g24.rs)) == 0
    assert delta(g24, _element(g24, (3, 4, 1, 2))) == 2
    ig = Fixture("C", 4, 2, 4)
    pq = cosets.enumerate_WQ(ig.rs, ig.j_q)
    values = {delta(ig, w) for w in pq.elements}
    assert values == {0, 1, 2}


def test_d_of_matches_delta_orientation():
    # d_of is the stratum label: 0 on the closed stratum through the base
    # point, maximal on the open stratum
    g24 = Fixture("A", 3, 2, 2)
    assert d_of(g24, _element(g24, (3, 4, 1, 2))) == 2
    assert d_of(g24, weyl.identity(g24.rs)) == 0
    ig = Fixture("C", 4, 2, 4)
    assert d_geometric(ig, weyl.identity(ig.rs)) == 2  # window count #{j<=m: w(j)>0}
    assert d_of(ig, weyl.identity(ig.rs)) == 0
    og = Fixture("B", 4, 3, 1)
    w = _element(og, (-1, 2, 3, 4))
    assert d_geometric(og, w) == 0  # some w(j) = -1 among the first m entries
    assert d_of(og, w) == 2


def test_d_equals_delta_everywhere_small():
    for fix in sweep_fixtures(4, 4, 4, 4):
        pq = cosets.enumerate_WQ(fix.rs, fix.j_q)
        for w in pq.elements:
            assert delta(fix, w) == d_of(fix, w)


def test_d_range_counts():
    assert stratum_count(Fixture("A", 5, 3, 2)) == 3  # min(3,2)-max(0,3+2-6)+1
    assert stratum_count(Fixture("C", 4, 2, 4)) == 3
    assert stratum_count(Fixture("B", 4, 3, 1)) == 3
    assert stratum_count(Fixture("B", 4, 4, 1)) == 2
    assert stratum_count(Fixture("D", 4, 4, 4)) == 3  # intersections 0, 2, 4
    assert stratum_count(Fixture("D", 4, 4, 3)) == 2  # odd-parity intersections 1, 3
    assert stratum_count(Fixture("D", 5, 5, 5)) == 3
    assert stratum_count(Fixture("A", 3, 2, 2)) == 3


def test_stratum_count_matches_strata():
    for fix in sweep_fixtures(4, 4, 4, 4):
        pq, sts = stratify(fix)
        assert len(sts) == stratum_count(fix)
        assert sorted(st.delta for st in sts) == list(range(len(sts)))


def test_expected_fiber_dims():
    assert expected_fiber_dim(Fixture("A", 3, 2, 2), 2) == 0
    assert expected_fiber_dim(Fixture("A", 3, 2, 2), 1) == 1
    assert expected_fiber_dim(Fixture("A", 3, 2, 2), 0) == 4
    assert expected_fiber_dim(Fixture("C", 4, 2, 4), 0) == 7
    assert expected_fiber_dim(Fixture("B", 4, 3, 1), 0) == 5  # 2n - m
    assert expected_fiber_dim(Fixture("B", 4, 3, 1), 1) == 3
    assert expected_fiber_dim(Fixture("B", 4, 4, 1), 0) == 4
    assert expected_fiber_dim(Fixture("D", 4, 4, 4), 0) == 6  # open cell of the spinor
    with pytest.raises(StrataError):
        expected_fiber_dim(Fixture("C", 4, 2, 4), 5)


def test_dimension_ledger_small():
    for fix in sweep_fixtures(4, 4, 4, 4):
        pq, sts = stratify(fix)
        for st in sts:
            assert st.fiber_dim == st.dc.w_min.length
            assert st.fiber_dim == expected_fiber_dim(fix, st.d_geom)
            assert st.dc.w_max.length - st.dc.w_min.length == st.flag.dim
            fq = cosets.build_quotient(fix.rs, st.K, frozenset(st.dc.j_p))
            assert len(fq.elements) == st.size
        # the open stratum reaches the top cell, the closed one starts at 0
        assert sts[-1].dc.w_max.length == pq.top_degree()
        assert sts[0].dc.w_min.length == 0


def test_K_and_flag_examples():
    g24 = Fixture("A", 3, 2, 2)
    _, sts = stratify(g24)
    assert sorted(sts[0].K) == [1, 3] and sts[0].flag.label == "pt"
    ig = Fixture("C", 4, 2, 4)
    _, ig_sts = stratify(ig)
    assert [st.flag.label for st in ig_sts] == ["G(2,4)", "F(1,3;4)", "G(2,4)"]
    # the two-step flag F(1,3;4) carries the middle stratum (the middle
    # color class of the reference diagram); its marked Levi nodes are 1 and 3
    middle = ig_sts[1]
    assert sorted(middle.K) == [2] and middle.flag.marked_ambient == (1, 3)
    og = Fixture("B", 4, 3, 1)
    _, og_sts = stratify(og)
    assert [st.flag.label for st in og_sts] == ["OG(2,7)", "OG(3,7)", "OG(2,7)"]
    assert og_sts[1].flag.components[0].type_label == "B"


def test_delta_constant_and_monotone_small():
    for fix in sweep_fixtures(4, 4, 4, 4):
        pq, sts = stratify(fix)
        label = {}
        for st in sts:
            for k in st.dc.members:
                label[k] = st.delta
            assert {delta(fix, pq.elements[k]) for k in st.dc.members} == {st.delta}
        for c in pq.covers:
            if label[c.u] != label[c.w]:
                assert label[c.w] > label[c.u]


def test_h_prime():
    ig = Fixture("C", 4, 2, 4)
    _, ig_sts = stratify(ig)
    weight, doubled = h_prime_of(ig_sts[1])
    assert weight == {1: 1, 3: 1} and not doubled
    assert h_prime_of(ig_sts[2])[0] == {2: 1}
    og = Fixture("B", 4, 3, 1)
    _, og_sts = stratify(og)
    weight, doubled = h_prime_of(og_sts[1])
    assert weight == {4: 1} and doubled  # spinor node of the B3 Levi
    g24 = Fixture("A", 3, 2, 2)
    _, g_sts = stratify(g24)
    assert h_prime_of(g_sts[0]) == ({}, False)
    # Lagrangian degeneration: both flag steps coincide, coefficient 2
    lg = Fixture("C", 4, 4, 4)
    _, lg_sts = stratify(lg)
    weight, doubled = h_prime_of(lg_sts[1])
    assert set(weight.values()) == {2} and not doubled


def test_doubling_flag_localized():
    seen = []
    for fix in sweep_fixtures(4, 4, 4, 4):
        _, sts = stratify(fix)
        for st in sts:
            if st.doubling:
                seen.append((fix.label, st.delta))
    assert seen == [("B2/P1+P1", 1), ("B3/P2+P1", 1), ("B4/P3+P1", 1)]


def test_stratum_json_schema():
    ig = Fixture("C", 4, 2, 4)
    _, sts = stratify(ig)
    payload = stratum_json(sts[1])
    assert set(payload) == {
        "delta", "w_min", "w_max", "size", "K", "flag", "fiber_dim", "doubling",
    }
    assert set(payload["flag"]) == {"components", "marked", "dim"}
    assert payload["delta"] == 1 and payload["size"] == 12


def test_invalid_fixtures_rejected():
    with pytest.raises(FixtureError):
        Fixture("D", 4, 3, 1)  # Picard rank two
    with pytest.raises(FixtureError):
        Fixture("B", 4, 2, 2)  # not cominuscule
    with pytest.raises(FixtureError):
        Fixture("C", 4, 5, 4)  # q_node out of range
