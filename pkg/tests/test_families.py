import pytest

from mostar import (
    BadParams,
    cocktail_party,
    complete,
    complete_bipartite,
    cycle,
    family,
    mostar_index,
    path,
    split,
    star,
    starlike,
)


def test_family_dispatch():
    assert family("path", 4) == path(4)
    assert family("cycle", 5) == cycle(5)
    assert family("complete", 4) == complete(4)
    assert family("star", 4) == star(4)
    assert family("complete_bipartite", 2, 3) == complete_bipartite(2, 3)
    assert family("cocktail_party", 6) == cocktail_party(6)
    assert family("split", 2, 4) == split(2, 4)


def test_family_errors():
    with pytest.raises(BadParams):
        family("wheel", 5)
    with pytest.raises(BadParams):
        family("cycle", 2)
    with pytest.raises(BadParams):
        family("cocktail_party", 5)
    with pytest.raises(BadParams):
        family("cocktail_party", 2)
    with pytest.raises(BadParams):
        family("split", 2)


def test_named_values():
    assert mostar_index(cycle(5)) == 0
    assert mostar_index(star(4)) == 6
    assert mostar_index(split(2, 4)) == 24
    assert mostar_index(cocktail_party(6)) == 0


def test_distance_balanced_families():
    for g in (cycle(8), complete(6), complete_bipartite(4, 4), cocktail_party(8)):
        assert mostar_index(g) == 0


def test_split_closed_form():
    for a in range(1, 7):
        for b in range(1, 7):
            assert mostar_index(split(a, b)) == a * b * (b - 1)


def test_complete_bipartite_closed_form():
    for a in range(1, 8):
        for b in range(1, 8):
            assert mostar_index(complete_bipartite(a, b)) == a * b * abs(a - b)


def test_structure_counts():
    g = split(3, 4)
    assert g.n == 7
    # clique side pairwise adjacent, independent side pairwise non-adjacent
    assert g.has_edge(0, 1) and g.has_edge(1, 2)
    assert not g.has_edge(3, 4)
    assert all(g.has_edge(i, j) for i in range(3) for j in range(3, 7))
    cp = cocktail_party(6)
    assert cp.degrees() == (4,) * 6
    assert not cp.has_edge(0, 1) and cp.has_edge(0, 2)


def test_starlike():
    assert mostar_index(starlike(5, (1, 1, 2))) == 10
    assert starlike(4, (1, 1, 1)) == star(4)
    assert mostar_index(starlike(4, (1, 1, 1))) == 6
    # formula floor((n-1)^2/2) + 2k cross-checked by the oracle
    assert mostar_index(starlike(7, (1, 2, 3))) == 22


def test_starlike_formula_range():
    for n in range(4, 13):
        lower = (n - 1) ** 2 // 2
        for k in range(1, (n - 2) // 2 + 1):
            assert mostar_index(starlike(n, (1, k, n - 2 - k))) == lower + 2 * k


def test_starlike_errors():
    with pytest.raises(BadParams):
        starlike(5, (2, 2))  # fewer than 3 paths
    with pytest.raises(BadParams):
        starlike(5, (1, 1, 1))  # lengths don't sum to n-1
    with pytest.raises(BadParams):
        starlike(5, (0, 2, 2))  # zero length
