from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from crlie import rootsys as rs

ALL_SIMPLE = ["A1", "A2", "A5", "B2", "B3", "B5", "C3", "C4", "D3", "D4", "D5",
              "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("tag", ALL_SIMPLE)
def test_root_counts_and_positivity(tag):
    s = rs.parse_type(tag)
    t, r = s.components[0]
    expected = {"A": r * (r + 1), "B": 2 * r * r, "C": 2 * r * r,
                "D": 2 * r * (r - 1), "F": 48, "G": 12,
                "E": {6: 72, 7: 126, 8: 240}.get(r)}[t]
    assert len(s.roots) == expected
    assert sum(s.positive) * 2 == len(s.roots)
    # every expansion is integral with uniform sign
    for e in s.expansions:
        assert all(x.denominator == 1 for x in e)
        assert all(x >= 0 for x in e) or all(x <= 0 for x in e)


def test_invalid_types_raise():
    with pytest.raises(rs.RootSystemError):
        rs.build("D", 2)
    with pytest.raises(rs.RootSystemError):
        rs.build("E", 5)
    with pytest.raises(rs.RootSystemError):
        rs.build("F", 5)
    with pytest.raises(rs.RootSystemError):
        rs.parse_type("H4")


def test_relation_basis_inner_products():
    a5 = rs.build("A5")
    e1 = a5.vector([1, 0, 0, 0, 0, 0])
    e2 = a5.vector([0, 1, 0, 0, 0, 0])
    assert a5.inner(e1, e1) == Q(5, 6)
    assert a5.inner(e1, e2) == Q(-1, 6)
    e6 = rs.build("E6")
    eps = e6.vector([0] * 6 + [1])
    assert e6.inner(eps, eps) == Q(1, 2)
    assert e6.inner(eps, e6.vector([1, 0, 0, 0, 0, 0, 0])) == 0


def test_relation_gauge_identifications():
    g2 = rs.build("G2")
    # e1 = -e2 - e3 in the relation basis
    assert g2.vector([1, 0, 0]) == g2.vector([0, -1, -1])
    e7 = rs.build("E7")
    quad = e7.vector([1, 1, 1, 1, 0, 0, 0, 0])
    comp = e7.vector([0, 0, 0, 0, -1, -1, -1, -1])
    assert quad == comp


def test_pairing_examples():
    b2 = rs.build("B2")
    assert b2.pairing(b2.vector([-1, 1]), b2.vector([1, 0])) == -2
    g2 = rs.build("G2")
    assert g2.pairing(g2.vector([-1, 1, 0]), g2.vector([0, -1, 0])) == -3
    # <alpha|alpha> = 2 always
    for tag in ("A3", "C3", "G2", "F4"):
        s = rs.parse_type(tag)
        for r in s.roots[:6]:
            assert s.pairing(r, r) == 2


def test_pairing_linearity_and_integrality():
    s = rs.build("B3")
    u, v = s.roots[0], s.roots[5]
    beta = s.roots[2]
    left = s.pairing(u + v, beta)
    assert left == s.pairing(u, beta) + s.pairing(v, beta)
    for i, r in enumerate(s.roots):
        for j in range(len(s.roots)):
            assert s.pairing(r, s.roots[j]).denominator == 1


def test_highest_roots():
    cases = {
        "A5": [1, 0, 0, 0, 0, -1],
        "C4": [2, 0, 0, 0],
        "E7": [0, 0, 0, 0, 0, 0, -1, 1],
        "B4": [1, 1, 0, 0],
        "E6": [0, 0, 0, 0, 0, 0, 2],
    }
    for tag, coords in cases.items():
        s = rs.parse_type(tag)
        assert s.highest_root() == s.vector(coords)
    with pytest.raises(rs.RootSystemError):
        rs.build_product([("A", 1), ("A", 1)]).highest_root()


def test_reflection_and_orbits():
    b3 = rs.build("B3")
    mu = b3.highest_root()
    assert b3.reflect(mu, mu) == -mu
    w = b3.reflect(mu, b3.vector([0, 0, 1]))
    assert b3.reflect(mu, w) == b3.vector([0, 0, 1])
    assert len(b3.weyl_orbit(mu)) == 12  # all long roots
    assert len(b3.weyl_orbit(b3.vector([1, 0, 0]))) == 6  # all short roots


@pytest.mark.parametrize("tag", ["A3", "D4", "E6"])
def test_simply_laced_single_orbit(tag):
    s = rs.parse_type(tag)
    assert len(s.weyl_orbit(s.roots[0])) == len(s.roots)


def test_orbits_partition_by_length():
    for tag in ("B3", "C3", "F4", "G2"):
        s = rs.parse_type(tag)
        norms = {}
        for i, r in enumerate(s.roots):
            norms.setdefault(s.norm2(i), set()).add(r.canon())
        for n, members in norms.items():
            rep = next(iter(members))
            orbit = {v.canon() for v in s.weyl_orbit(s.vector(rep))}
            assert orbit == members


def test_closed_span():
    a4 = rs.build("A4")
    sub = a4.closed_span([a4.vector([1, -1, 0, 0, 0]), a4.vector([0, 0, 1, -1, 0])])
    assert sub.type_str() == "A1+A1" and len(sub) == 4
    assert sub.is_closed()
    # a seed spanning an A3 = D3 inside A4
    seed = [a4.vector([1, -1, 0, 0, 0]), a4.vector([0, 0, 1, -1, 0]),
            a4.vector([1, 0, -1, 0, 0])]
    sub2 = a4.closed_span(seed)
    assert sub2.type_str() == "A3" and len(sub2) == 12
    full = a4.closed_span(a4.simple_roots)
    assert len(full) == len(a4.roots)


def test_subsystem_classification():
    f4 = rs.build("F4")
    longs = [f4.roots[i] for i in range(48) if f4.norm2(i) == 2]
    assert f4.subsystem(longs).classify() == [("D", 4)]
    shorts = [f4.roots[i] for i in range(48) if f4.norm2(i) == 1]
    assert f4.subsystem(shorts).classify() == [("D", 4)]
    b3 = rs.build("B3")
    assert b3.closed_span(b3.simple_roots).classify() == [("B", 3)]


def test_cartan_matrices():
    g2 = rs.build("G2")
    C = g2.cartan_matrix()
    assert C[0][0] == C[1][1] == 2
    assert {C[0][1], C[1][0]} == {-1, -3}
    f4 = rs.build("F4")
    C = f4.cartan_matrix()
    assert sorted(abs(C[i][j]) for i in range(4) for j in range(4) if i != j).count(2) == 1


def test_dominant_and_canonical_form():
    d4 = rs.build("D4")
    v = d4.vector([0, 0, 0, 2])
    d = d4.dominant(v)
    assert all(d4.inner(d, a) >= 0 for a in d4.simple_roots)
    # triality fuses 2e1 with e1+e2+e3+-e4
    forms = [d4.vector([2, 0, 0, 0]), d4.vector([1, 1, 1, 1]), d4.vector([1, 1, 1, -1])]
    canon = {d4.canonical_form(f).canon() for f in forms}
    assert len(canon) == 1


def test_product_systems():
    p = rs.build_product([("A", 2), ("A", 3)])
    assert len(p.roots) == 6 + 12
    a = p.roots[0]
    b = p.roots[-1]
    # cross-block inner products vanish
    v1 = p.vector([1, -1, 0] + [0, 0, 0, 0])
    v2 = p.vector([0, 0, 0] + [1, -1, 0, 0])
    assert p.inner(v1, v2) == 0
    assert p.type_str() == "A2+A3"


def test_display_format():
    b3 = rs.build("B3")
    assert rs.format_vector(b3.vector([1, 1, 0])) == "e1+e2"
    a3 = rs.build("A3")
    assert rs.format_vector(a3.highest_root()) == "e1-e4"
    f4 = rs.build("F4")
    half = f4.vector([Q(1, 2)] * 4)
    assert rs.format_vector(half) == "(e1+e2+e3+e4)/2"
    e6 = rs.build("E6")
    assert rs.format_vector(e6.vector([2, 0, 0, 0, 0, 0, 0])) == "2e1"
    assert rs.format_vector(e6.highest_root()) == "2e"


@given(st.integers(min_value=0, max_value=11), st.integers(min_value=0, max_value=11))
@settings(max_examples=30, deadline=None)
def test_reflect_involution_property(i, j):
    g2 = rs.build("G2")
    alpha = g2.roots[i]
    v = g2.roots[j]
    assert g2.reflect(alpha, g2.reflect(alpha, v)) == v
