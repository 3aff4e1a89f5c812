import itertools

import pytest

from preprank.errors import CycleError, PreprankError, QuiverParseError, ZeroWeightError
from preprank.fixtures import fixture_names, load_fixture
from preprank.quiver import (Path, Quiver, Weights, double, format_quiver, parse_quiver,
                             paths_of_degree, quiver_hash)

from .conftest import F2, F5


def test_parse_basic():
    q, w = parse_quiver("# demo\nvertices 3\narrow x: 1 -> 2  # first\narrow y: 3 -> 2\nweight b y = 4\n")
    assert q.vertex_count == 3
    assert [(a.label, a.source, a.target) for a in q.arrows] == [("x", 0, 1), ("y", 2, 1)]
    assert w.a == (1, 1) and w.b == (1, 4)


def test_vertices_inferred():
    q, _ = parse_quiver("arrow x: 1 -> 4\n")
    assert q.vertex_count == 4


@pytest.mark.parametrize("text,line", [
    ("vertices 2\narrow x 1 -> 2\n", 2),
    ("vertices 2\narrow x: 1 -> 3\n", 2),
    ("vertices 2\narrow x: 1 -> 2\narrow x: 2 -> 1\n", 3),
    ("vertices 2\nweight a z = 2\n", 2),
    ("", 1),
])
def test_parse_errors_report_line(text, line):
    with pytest.raises(QuiverParseError) as exc:
        parse_quiver(text)
    assert exc.value.line == line


def test_cycle_rejected():
    with pytest.raises(CycleError) as exc:
        parse_quiver("vertices 3\narrow x: 1 -> 2\narrow y: 2 -> 3\narrow z: 3 -> 1\n")
    assert exc.value.cycle[0] == exc.value.cycle[-1]
    with pytest.raises(CycleError):
        parse_quiver("vertices 1\narrow loop: 1 -> 1\n")


def test_zero_weight():
    with pytest.raises(ZeroWeightError):
        parse_quiver("vertices 2\narrow x: 1 -> 2\nweight a x = 0\n")
    q, w = parse_quiver("vertices 2\narrow x: 1 -> 2\nweight a x = 5\n")
    with pytest.raises(ZeroWeightError):
        w.values(q, F5)
    assert w.values(q, F2) == ([1], [1])


@pytest.mark.parametrize("name", fixture_names())
def test_format_roundtrip_and_hash(name):
    q, w = load_fixture(name)
    q2, w2 = parse_quiver(format_quiver(q, w))
    assert (q2, w2) == (q, w)
    assert quiver_hash(q, w) == quiver_hash(q2, w2)


def test_hash_sees_weights():
    q, w = load_fixture("a2")
    assert quiver_hash(q, w) != quiver_hash(q, Weights((2,), (1,)))


def test_doubled_quiver():
    q, _ = load_fixture("kronecker")
    dq = double(q)
    assert [a.label for a in dq.arrows] == ["alpha", "beta", "alpha*", "beta*"]
    assert dq.star(1).source == 1 and dq.star(1).target == 0 and dq.star(1).degree == 1


def test_composition_convention():
    q, _ = load_fixture("a2")
    dq = double(q)
    beta, beta_star = 0, 1
    # beta* beta: walk beta (1 -> 2) first, then beta* back to 1
    p = dq.path(0, (beta_star, beta))
    assert (p.start, p.end, p.degree) == (0, 0, 1)
    assert dq.render(p) == "beta*.beta"
    with pytest.raises(PreprankError):
        dq.path(0, (beta, beta_star))
    e = Path.trivial(0)
    assert dq.compose(dq.path(1, (beta_star,)), dq.path(0, (beta,))) == p
    assert dq.compose(p, e) == p and dq.render(e) == "e_1"


def brute_paths(dq, start, d, max_len=12):
    out = set()
    for n in range(max_len + 1):
        for seq in itertools.product(range(len(dq.arrows)), repeat=n):
            try:
                p = dq.path(start, seq)
            except PreprankError:
                continue
            if p.degree == d:
                out.add(p)
    return out


@pytest.mark.parametrize("name,d", [("a2", 2), ("a3_rl", 1), ("kronecker", 1)])
def test_paths_of_degree_against_brute_force(name, d):
    q, _ = load_fixture(name)
    dq = double(q)
    for t in range(q.vertex_count):
        got = paths_of_degree(dq, t, d)
        assert got == sorted(got, key=Path.sort_key)
        assert set(got) == brute_paths(dq, t, d, max_len=2 * d + 2)


def test_topological_order():
    q = Quiver.from_edges(4, [(2, 0), (0, 1), (3, 2)])
    order = q.topological_order()
    assert all(order.index(a.source) < order.index(a.target) for a in q.arrows)
