import pytest

from idcodes.codes import CodeKind
from idcodes.enumeration import canonical_key, is_isomorphic
from idcodes.families import (
    a_k,
    basic,
    calT,
    complete,
    complete_minus_matching,
    corona,
    cycle,
    eid_gap,
    empty,
    extremal_tid,
    family_A,
    family_A_star_members,
    integer_partitions,
    ld_gap,
    path,
    sid_gap,
    star,
    subdivided_star,
)
from idcodes.graph import GraphError, build_graph, induced_subgraph, is_tree, is_twin_free, leaves, supports
from idcodes.solver import parameter

K = CodeKind
BULL = build_graph(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)])


def test_a_k_small_cases():
    assert a_k(0).n == 0
    assert a_k(1) == empty(2)
    assert is_isomorphic(a_k(2), path(4))
    for k in range(6):
        assert a_k(k).n == 2 * k


def test_family_A_examples():
    assert is_isomorphic(family_A((1, 1)), cycle(4))
    assert is_isomorphic(family_A((1,), True), path(3))
    fig = family_A((1, 1, 2, 3))
    # 68 cross edges between blocks, plus 3 inside A_2 and 9 inside A_3
    assert fig.n == 14 and fig.num_edges() == 80


def test_extremal_tid_examples():
    assert is_isomorphic(extremal_tid((), False, 2), path(4))
    assert is_isomorphic(extremal_tid((), True, 2), BULL)
    G = extremal_tid((1,), True, 1)
    assert G.n == 5 and sorted(G.degrees()) == [1, 2, 2, 3, 4]
    for parts in [(), (1,), (2, 1)]:
        for universal in (False, True):
            for m in (1, 2, 3):
                assert extremal_tid(parts, universal, m).n == 2 * sum(parts) + universal + 2 * m
    with pytest.raises(GraphError):
        extremal_tid((), False, 0)


def test_corona_examples():
    assert is_isomorphic(corona(complete(1), 3), path(4))
    G = corona(path(2), 3)
    assert G.n == 8 and is_tree(G) and parameter(G, K.TID) == 6
    G = corona(complete(4), 1)
    assert G.n == 8 and supports(G).to_list() == [0, 1, 2, 3]
    for t in (1, 2, 3):
        assert corona(cycle(5), t).n == 5 * (t + 1)
    with pytest.raises(GraphError):
        corona(path(2), 4)


def test_basic_and_matching():
    assert is_isomorphic(complete_minus_matching(7), family_A((1, 1, 1), True))
    assert basic("star", 5) == star(5)
    assert basic("cycle", 6) == cycle(6)
    assert complete_minus_matching(4).num_edges() == 4
    with pytest.raises(GraphError):
        basic("cycle", 2)
    with pytest.raises(GraphError):
        basic("wheel", 5)


def test_subdivided_star():
    for k in (1, 2, 3):
        T = subdivided_star(k)
        assert T.n == 3 * k + 2 and is_tree(T)
        assert len(leaves(T)) == k + 1
        assert parameter(T, K.LD) == k + 1
        assert parameter(T, K.TLD) == 2 * k + 1
    with pytest.raises(GraphError):
        subdivided_star(0)


def test_gadget_orders_and_values():
    for k in (2, 3):
        assert ld_gap(k).n == 2 * k + 4 * (2 ** k - k - 1)
    assert ld_gap(2).n == 8
    G = ld_gap(2)
    assert parameter(G, K.LD) == 3 and parameter(G, K.TID) == 5
    S = sid_gap(4)
    assert S.n == 14 and parameter(S, K.TID) == 4 and parameter(S, K.SID) == 14
    E = eid_gap(4)
    assert E.n == 15 and parameter(E, K.TID) == 4 and parameter(E, K.EID) == 15
    assert sid_gap(6).n == 62 and eid_gap(5).n == 31
    with pytest.raises(GraphError):
        sid_gap(5)
    with pytest.raises(GraphError):
        eid_gap(3)
    with pytest.raises(GraphError):
        ld_gap(1)


def test_gadget_codes_from_constructions():
    # X itself is a total dominating identifying code in both gadgets
    from idcodes.codes import is_valid

    assert is_valid(sid_gap(4), K.TID, range(4))
    assert is_valid(eid_gap(4), K.TID, range(4))


def test_calT_base_and_rules():
    base = calT()
    assert base.tree == path(8) and "".join(base.status) == "CABDDBAC"
    grown = calT([("phi2", 3)])
    assert grown.tree.n == 12 and is_isomorphic(grown.tree, corona(path(3), 3))
    assert calT([("phi1", 0)]).tree.n == 13
    with pytest.raises(GraphError):
        calT([("phi1", 3)])
    with pytest.raises(GraphError):
        calT([("phi3", 0)])


def test_calT_members_twin_free_with_equal_leaves_and_supports():
    sequences = [[], [("phi1", 0)], [("phi2", 3)], [("phi2", 4), ("phi1", 11)], [("phi2", 3), ("phi2", 8)]]
    for ops in sequences:
        T = calT(ops).tree
        assert is_tree(T) and is_twin_free(T)
        assert len(leaves(T)) == len(supports(T))


def test_phi2_only_members_are_3_coronas():
    cases = {
        (): path(2),
        (("phi2", 3),): path(3),
        (("phi2", 3), ("phi2", 3)): star(4),
        (("phi2", 3), ("phi2", 4)): path(4),
        (("phi2", 3), ("phi2", 8)): path(4),
    }
    for ops, base in cases.items():
        member = calT(list(ops))
        d_vertices = [v for v, s in enumerate(member.status) if s == "D"]
        core = induced_subgraph(member.tree, d_vertices)
        assert is_isomorphic(core, base)
        assert canonical_key(member.tree) == canonical_key(corona(core, 3))


def test_prop_2_2_values_and_partitions():
    assert list(integer_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    for universal in (False, True):
        members = list(family_A_star_members(10, universal))
        assert all(parts not in ((), (1,)) for parts, _ in members)
        for _, G in members:
            assert parameter(G, K.SEP) == parameter(G, K.TID) == G.n - 1


def test_extremal_tid_values_and_id_gap():
    for parts in [(), (1,), (2,), (1, 1), (3,)]:
        for universal in (False, True):
            for m in range(1, 5):
                G = extremal_tid(parts, universal, m)
                if G.n > 12 or G.n < 3:
                    continue
                assert parameter(G, K.TID) >= G.n - 1, (parts, universal, m)
    gap_cases = [((), False, 2), ((), True, 2), ((1,), False, 1), ((1,), True, 1), ((2,), False, 1)]
    for parts, universal, m_min in gap_cases:
        for m in range(m_min, 6):
            G = extremal_tid(parts, universal, m)
            if G.n == 4:
                # the order-4 instances are P_4 and K_{1,3}, where ID needs n-1 too
                assert parameter(G, K.ID) == 3
                assert is_isomorphic(G, path(4)) or is_isomorphic(G, star(4))
            elif G.n <= 12:
                assert parameter(G, K.ID) <= G.n - 2, (parts, universal, m)
