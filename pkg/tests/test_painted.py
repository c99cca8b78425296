import pytest

from crlie import painted as pt
from crlie import rootsys as rs
from crlie.rootsys import format_vector


def G(text):
    return pt.PaintedGraph.parse(text)


def test_serialization_roundtrip():
    for s in ("B3:w,g,w", "A2+A3:g,b|w,w,g", "E6:g,w,w,w,b,w"):
        assert G(s).serialize() == s
    with pytest.raises(pt.GraphError):
        G("B3:w,g")
    with pytest.raises(pt.GraphError):
        G("B3:w,g,x")


def test_def_17_shapes_are_good():
    expected = {
        "A5:g,b,w,w,w": ("I", "e1-e2"),
        "A5:w,g,w,b,w": ("III", "e1+e2-e3-e4"),
        "D5:b,w,w,w,g": ("IV", "e2+e3+e4+e5"),
        "E6:g,w,w,w,b,w": ("V", "2e1+e6+e"),
        "A2+A2:g,b|g,b": ("II", "e1-e2-e'1+e'2"),
        "A1+A2:g|g,b": ("II", "e1-e2-e'1+e'2"),
    }
    for s, (cr, theta) in expected.items():
        v = pt.is_good(G(s))
        assert v.admissible and v.good, s
        assert v.cr_type == cr
        assert format_vector(v.theta) == theta


def test_type_v_theta_expansion():
    # 2(a1+a2+a3) + a4 + a6 evaluates exactly to 2e1+e6+eps
    e6 = rs.build("E6")
    a = e6.simple_roots
    total = e6.vector([0] * 7)
    for i, c in [(0, 2), (1, 2), (2, 2), (3, 1), (5, 1)]:
        total = total + c * a[i]
    assert total == e6.vector([2, 0, 0, 0, 0, 1, 1])
    v = pt.is_admissible(G("E6:g,w,w,w,b,w"))
    assert v.theta == total


def test_admissibility_negatives():
    assert not pt.is_admissible(G("A3:w,w,w")).admissible  # no grey
    assert not pt.is_admissible(G("A5:g,w,b,w,w")).admissible  # wrong black position
    assert not pt.is_admissible(G("A5:g,w,w,w,w")).admissible  # no black next to grey
    assert not pt.is_admissible(G("A2+A2:g,b|w,b")).admissible  # single grey in a product
    v = pt.is_admissible(G("D6:b,w,w,g,w,w"))
    assert not v.admissible  # two candidate subgraphs


def test_goodness_witnesses_named_cases():
    cases = {
        "B5:w,g,w,b,w": "e2+e3",       # middle A3 in the B series
        "E7:g,w,w,w,w,b,w": "e7-e8",
        "E8:w,w,b,w,w,w,g,w": "e1+e2+e4",
        "E8:g,w,w,w,w,w,b,w": "e7-e9",
    }
    for s, named in cases.items():
        v = pt.is_good(G(s))
        assert v.admissible and v.good is False, s
        names = {format_vector(x) for x in v.violations}
        assert named in names, (s, sorted(names))
        assert v.witness is not None


def test_d_series_good_only_at_rank5():
    for n in range(4, 9):
        s = rs.build("D", n)
        graphs = pt.enumerate_cr_graphs(s)
        if n == 5:
            assert [g.cr_type for g in graphs] == ["IV"]
        else:
            assert graphs == []
    # the mirrored D painting with theta = 2e_{n-3} is never good
    v = pt.is_good(G("D6:w,b,g,w,w,w"))
    assert v.admissible and v.good is False


def test_enumeration_matches_family_table():
    # simple types
    assert [c.cr_type for c in pt.enumerate_cr_graphs(rs.build("A2"))] == ["I"]
    assert [c.cr_type for c in pt.enumerate_cr_graphs(rs.build("A3"))] == ["I"]
    assert sorted(c.cr_type for c in pt.enumerate_cr_graphs(rs.build("A6"))) == ["I", "III"]
    assert [c.cr_type for c in pt.enumerate_cr_graphs(rs.build("E6"))] == ["V"]
    for tag in ("B4", "C4", "E7", "F4", "G2"):
        assert pt.enumerate_cr_graphs(rs.parse_type(tag)) == []
    # products: every A_p + A_q with p + q > 2 carries exactly one type II
    out = pt.enumerate_cr_graphs(rs.build_product([("A", 2), ("A", 3)]))
    assert [c.cr_type for c in out] == ["II"]
    assert pt.enumerate_cr_graphs(rs.build_product([("A", 1), ("A", 1)])) == []


def test_canonicalization_idempotent_and_triality():
    g = G("D5:b,w,w,g,w")
    c1 = pt.canonicalize(g)
    assert pt.canonicalize(c1) == c1
    assert c1.serialize() == "D5:b,w,w,w,g"
    # D4 triality: node permutations form a group of order 6 x 2
    d4 = rs.build("D4")
    autos = d4.diagram_automorphisms()
    assert len(autos) == 6


def test_flag_pair():
    k, q = pt.flag_pair(G("A5:g,b,w,w,w"))
    assert k.type_str() == "A3" and q.type_str() == "A1+A3"
    assert k.members <= q.members
    k, q = pt.flag_pair(G("D5:b,w,w,w,g"))
    assert k.type_str() == "A3" and q.type_str() == "D4"
    # all-grey turns into the full system on the Q side
    g = G("A2:g,g")
    k, q = pt.flag_pair(g)
    assert len(k) == 0 and len(q) == len(g.system.roots)


def test_d_shape_theta_orthogonality():
    # the contact form of a connected D-shape subgraph is orthogonal to the
    # subgraph minus its grey node, which spans the next-lower D system
    for text, sub_expect in [("D6:w,b,g,w,w,w", "A3"), ("D5:b,w,w,w,g", "A3"),
                             ("E6:g,w,w,w,b,w", "D4")]:
        g = G(text)
        v = pt.is_admissible(g)
        assert v.admissible and v.shape == "d-shape"
        sysm = g.system
        rest = [sysm.simple_roots[i] for i in v.gamma_e if g.colors[i] == "w"]
        assert all(sysm.inner(v.theta, a) == 0 for a in rest)
        assert sysm.closed_span(rest).type_str() == sub_expect


def test_good_graph_white_span_equals_orthogonal():
    for s in ("A5:g,b,w,w,w", "D5:b,w,w,w,g", "E6:g,w,w,w,b,w"):
        g = G(s)
        v = pt.is_good(g)
        span = pt.white_span(g)
        sysm = g.system
        ortho = {i for i, r in enumerate(sysm.roots) if sysm.inner(r, v.theta) == 0}
        assert span.members == frozenset(ortho)
