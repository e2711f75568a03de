import pytest

import letterkit as lk


def path(n):
    g = lk.Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def test_decode_path():
    g = lk.decode("2\n0 1", "abab")
    assert g.n == 4
    assert sorted(g.edges()) == [(0, 1), (0, 3), (2, 3)]
    assert lk.canonical_form(g) == lk.canonical_form(path(4))


def test_edge_list_round_trip():
    g = lk.parse_edge_list("4\n0 1\n1 2\n2 3\n3 0")
    assert lk.parse_edge_list(lk.to_edge_list(g)) == g
    assert lk.parse_graph6(lk.to_graph6(g)) == g


def test_lettericity_certificate():
    res = lk.lettericity(path(4), max_k=3)
    assert res["k"] == 2
    assert lk.verify(path(4), res["decoder"], res["word"], res["order"]) is None
    assert lk.lettericity(path(4), max_k=3, method="brute")["k"] == 2
    assert lk.lettericity_value(path(4)) == 2


def test_exceeds():
    c5 = path(5)
    c5.add_edge(4, 0)
    assert lk.lettericity(c5, max_k=2) is None


def test_rankwidth():
    width, order = lk.linear_rankwidth(path(6))
    assert width == 1
    assert sorted(order) == list(range(6))
    assert lk.cutrank(path(4), [0, 1]) == 1


def test_complement_and_twins():
    c4 = lk.parse_edge_list("4\n0 1\n1 2\n2 3\n3 0")
    assert lk.twin_classes(c4) == [[0, 2], [1, 3]]
    assert lk.lettericity_value(lk.complement(c4)) == lk.lettericity_value(c4)


def test_obstructions():
    assert lk.is_obstruction(path(3), 1)
    reports = lk.find_obstructions(1, 4)
    assert len(reports) == 2
    assert all(r["k"] == 1 for r in reports)


def test_bound_table():
    rows = lk.bound_table(2)
    assert rows == [(1, "3"), (2, "23")]


def test_word_stats():
    stats = lk.word_stats("ababab")
    assert stats["length"] == 6
    assert stats["inter"][0][1] == 3
    assert stats["inter"][1][0] == 2


def test_parse_errors():
    with pytest.raises(ValueError):
        lk.parse_edge_list("2\n0 5")
    with pytest.raises(ValueError):
        lk.parse_graph6("~??")
