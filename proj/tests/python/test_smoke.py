"""Smoke tests for the python bindings."""

import pytest

import sparsedom as sd


def path(n):
    g = sd.Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def star(leaves):
    g = sd.Graph(leaves + 1)
    for i in range(1, leaves + 1):
        g.add_edge(0, i)
    return g


def test_graph_basics():
    g = path(5)
    assert g.n == 5 and g.m == 4
    assert g.neighbors(2) == [1, 3]
    assert sd.bfs_distances(g, 2, 1) == {1: 1, 2: 0, 3: 1}
    assert sd.ball(g, 0, 2) == [0, 1, 2]
    assert sd.dominates(g, [1, 3], list(range(5)), 1)
    assert sd.is_scattered(g, [0, 3], 1)
    assert not sd.is_scattered(g, [0, 2], 1)


def test_generate_and_power():
    c6 = sd.generate("cycle", [6])
    sq = sd.power(c6, 2)
    assert all(sq.degree(v) == 4 for v in range(6))
    sub = sd.generate("subdivided_clique", [5, 2])
    assert sub.n == 25 and sub.m == 30


def test_solvers_agree_with_oracle_on_a_path():
    g = path(9)
    res = sd.solve_domset(g, k=3, d=1)
    assert res["answer"] == "yes"
    assert res["witness"] == [1, 4, 7]
    assert sd.solve_domset(g, k=2, d=1)["answer"] == "no"
    assert sd.brute_force_min_domset(g, k_max=9, d=1) == [1, 4, 7]
    assert sd.brute_force_min_domset(path(5), k_max=5, d=1) == [1, 3]


def test_scattering_and_reduction():
    g = star(30)
    wit = sd.find_scattered(g, list(range(31)), 1, 6, 3)
    assert wit is not None
    assert wit["bottleneck"] == [0]
    removed = sd.reduce_step(g, list(range(31)), 1, 1, wit["bottleneck"], wit["scattered"])
    assert removed in wit["scattered"]
    assert sd.brute_force_scattered(g, list(range(1, 31)), 1, 2, 0) is None


def test_variants():
    p7 = path(7)
    assert sd.solve_connected(p7, k=5, d=1)["answer"] == "yes"
    assert sd.solve_connected(p7, k=4, d=1)["answer"] == "no"
    c6 = sd.generate("cycle", [6])
    assert sd.solve_efficient(c6, 2)["answer"] == "yes"
    c7 = sd.generate("cycle", [7])
    assert sd.solve_efficient(c7, 2)["answer"] == "no"
    c4 = sd.generate("cycle", [4])
    assert sd.solve_roman(c4, 2)["answer"] == "no"
    roman = sd.solve_roman(c4, 3)
    assert roman["answer"] == "yes" and roman["weight"] <= 3
    assert len(sd.enumerate_trees(4)) == 16
    assert sd.solve_d_connected(path(5), k=2, d=2)["answer"] == "yes"


def test_bounds():
    assert sd.ramsey_upper(2, 1, 3) == 5
    assert sd.ramsey_upper(2, 2, 3) >= 6
    assert sd.n_threshold(3, 0, 9) == 9
    assert sd.n_threshold(5, 3, 10) is None  # saturated


def test_instance_roundtrip():
    g = path(3)
    text = sd.emit_instance(g, k=1, d=1)
    data = sd.parse_instance(text)
    assert data["graph"].n == 3 and data["k"] == 1
    with pytest.raises(sd.ParseError):
        sd.parse_instance("p ds 3 2\n0 1\n0 9\n")


def test_gadget():
    d = sd.Graph(4, directed=True)
    for u in range(3):
        d.add_edge(u, 3)
    g, originals, terminals = sd.degree_reduction_gadget(d, [(0, 3)])
    assert originals == 4
    assert g.n == 5
    assert terminals == [(0, 3)]
