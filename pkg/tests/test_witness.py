import pytest

from mostar import (
    BadParams,
    NotRealizable,
    OddTarget,
    OutOfRange,
    UnknownRealizability,
    alternative_even_witness,
    canonical_certificate,
    chemical_witness,
    cycle,
    layered_even,
    mostar_index,
    path,
    starlike,
    three_layer,
    tree_witness,
    witness,
)
from mostar.witness import (
    COMPLETE_PLUS_PENDANT,
    CYCLE,
    CYCLE_TRIANGLE_SHARED,
    EVEN_CYCLE_PLUS_PENDANT,
    ODD_CYCLE_ONE_PENDANT,
    ODD_CYCLE_PENDANT_CHORD,
    ODD_CYCLE_TWO_PENDANTS,
    PATH,
    THREE_LAYER,
    TREE_PATH,
    TREE_STARLIKE,
)


def test_witness_dispatch():
    assert witness(0).family == CYCLE and witness(0).graph == cycle(3)
    assert witness(2).family == PATH and witness(2).graph == path(3)
    assert witness(3).family == THREE_LAYER and witness(3).graph.n == 9
    assert witness(5).family == THREE_LAYER and witness(5).graph.n == 15
    assert witness(8).family == COMPLETE_PLUS_PENDANT
    assert witness(7).family == EVEN_CYCLE_PLUS_PENDANT and witness(7).graph.n == 5
    assert witness(9).family == ODD_CYCLE_PENDANT_CHORD


def test_witness_errors():
    with pytest.raises(NotRealizable):
        witness(1)
    with pytest.raises(BadParams):
        witness(-2)


def test_witness_certified_small_sweep():
    for p in range(0, 200):
        if p == 1:
            continue
        plan = witness(p)
        assert plan.certified_mo == p
        assert mostar_index(plan.graph) == p


def test_witness_vertex_counts():
    # ceil((p+3)/2) vertices for p >= 6 outside {3,5}; also true at p = 4
    for p in list(range(6, 40)) + [4]:
        assert witness(p).graph.n == (p + 3 + 1) // 2


def test_witness_out_of_range():
    with pytest.raises(OutOfRange):
        witness(10002)


def test_tree_witness_dispatch():
    assert tree_witness(0).graph == path(2)
    assert tree_witness(2).graph == path(3)
    assert tree_witness(8).graph == path(5)
    assert tree_witness(8).family == TREE_PATH
    assert tree_witness(10).family == TREE_STARLIKE
    assert tree_witness(10).graph == starlike(5, (1, 1, 2))
    assert tree_witness(12).graph == path(6)


def test_tree_witness_odd_rejected():
    with pytest.raises(OddTarget):
        tree_witness(7)
    with pytest.raises(OddTarget):
        tree_witness(1)


def test_tree_witness_sweep():
    for p in range(0, 2001, 2):
        plan = tree_witness(p)
        g = plan.graph
        assert plan.certified_mo == p
        assert g.m == g.n - 1
        assert max(g.degrees()) <= 3


def test_three_layer():
    for p in (3, 5, 7):
        plan = three_layer(p)
        assert plan.graph.n == 3 * p
        assert plan.certified_mo == p
    with pytest.raises(BadParams):
        three_layer(2)


def test_three_layer_degrees_constant_per_layer():
    g = three_layer(5).graph
    degs = g.degrees()
    assert len(set(degs[0:5])) == 1     # cycle layer
    assert len(set(degs[5:10])) == 1    # middle layer
    assert len(set(degs[10:15])) == 1   # clique layer


def test_layered_even():
    plan = layered_even(3, 1)
    assert plan.certified_mo == 6
    assert plan.graph.n == 17
    assert layered_even(1, 2).certified_mo == 2
    # m = 0 degenerates to the cycle C_{4k+4}
    for k in range(1, 5):
        assert canonical_certificate(layered_even(0, k).graph) == canonical_certificate(
            cycle(4 * k + 4)
        )


def test_layered_even_errors():
    with pytest.raises(BadParams):
        layered_even(-1, 1)
    with pytest.raises(BadParams):
        layered_even(2, 0)
    with pytest.raises(OutOfRange):
        layered_even(8, 4)  # 92 vertices


def test_chemical_witness():
    plan = chemical_witness(6)
    assert plan.certified_mo == 6 and max(plan.graph.degrees()) <= 3
    assert chemical_witness(3).family == THREE_LAYER
    assert max(chemical_witness(3).graph.degrees()) <= 4
    for p in (7, 11, 9, 13):
        plan = chemical_witness(p)
        assert plan.certified_mo == p and max(plan.graph.degrees()) <= 3
    with pytest.raises(UnknownRealizability):
        chemical_witness(5)
    with pytest.raises(NotRealizable):
        chemical_witness(1)


def test_chemical_witness_even_sweep():
    for p in range(0, 101, 2):
        plan = chemical_witness(p)
        assert plan.certified_mo == p
        assert max(plan.graph.degrees()) <= 4


def test_alternative_even_families():
    plan = alternative_even_witness(4)
    assert plan.family == ODD_CYCLE_ONE_PENDANT and plan.graph.n == 4  # the paw
    plan = alternative_even_witness(10)
    assert plan.family == ODD_CYCLE_TWO_PENDANTS and plan.graph.n == 5
    plan = alternative_even_witness(14)
    assert plan.family == CYCLE_TRIANGLE_SHARED and plan.graph.n == 6
    for p in range(4, 300, 2):
        if p % 8 == 2 and p < 10:
            continue
        if p % 8 == 6 and p < 14:
            continue
        plan = alternative_even_witness(p)
        assert plan.certified_mo == p
        assert max(plan.graph.degrees()) <= 4


def test_alternative_even_errors():
    with pytest.raises(BadParams):
        alternative_even_witness(3)
    with pytest.raises(BadParams):
        alternative_even_witness(2)
    with pytest.raises(BadParams):
        alternative_even_witness(6)
