from fractions import Fraction as Q

import pytest

from crlie import classify
from crlie import contact as ct
from crlie import crstruct as cs
from crlie import families as fam
from crlie import rootsys as rs
from crlie.painted import CRGraph, PaintedGraph, is_good
from crlie.scalars import Gauss, Poly

T_HALF = Gauss(Q(1, 2))
UNIT = Gauss(Q(3, 5), Q(4, 5))  # |t| = 1


def vals_for(h, tv):
    out = {"t": tv}
    if "u" in h.parameters():
        out["u"] = Gauss(1) / tv
    return out


def full(h, vals):
    return classify._full_values(h, vals)


def test_su_family_integrability():
    F = fam.special_su_families(rs.build("A4"))
    assert cs.check_integrability(F.j_family).unconditional
    assert cs.check_integrability(F.j_prime_family).unconditional
    assert cs.check_integrability(F.j0_family).unconditional
    gen = cs.check_integrability(F.generic_two_param)
    assert str(gen) == "t = s^2"
    for std in F.standard:
        assert cs.check_integrability(std).unconditional


def test_short_root_family_integrability():
    for tag in ("C3", "C5", "F4"):
        R = fam.short_root_families(rs.build(tag))
        assert str(cs.check_integrability(R.generic_two_param)) == "s = t^2"
        assert cs.check_integrability(R.family).unconditional
    R = fam.short_root_families(rs.build("B4"))
    assert R.generic_two_param is None
    assert cs.check_integrability(R.family).unconditional


def test_constraints_hold_at_sample_points():
    F = fam.special_su_families(rs.build("A3"))
    gen = cs.check_integrability(F.generic_two_param)
    for tv in classify.SAMPLES:
        good = {"t": tv * tv, "s": tv, "t~": (tv * tv).conj(), "s~": tv.conj()}
        bad = {"t": tv, "s": tv, "t~": tv.conj(), "s~": tv.conj()}
        assert gen.holds_at(good)
        if tv * tv != tv:
            assert not gen.holds_at(bad)
    R = fam.short_root_families(rs.build("C3"))
    gen = cs.check_integrability(R.generic_two_param)
    for tv in classify.SAMPLES:
        good = {"s": tv * tv, "t": tv, "s~": (tv * tv).conj(), "t~": tv.conj()}
        assert gen.holds_at(good)


def test_reciprocal_charts():
    b3 = rs.build("B3")
    P = fam.pair_family(ct.contact_datum(b3, b3.vector([1, 1, 1])))
    gen = cs.check_integrability(P.family)
    assert str(gen) == "1 = t*u"
    prod = rs.build_product([("A", 1), ("A", 1)])
    P2 = fam.pair_family(ct.contact_datum(prod, prod.vector([1, -1, -1, 1])))
    assert str(cs.check_integrability(P2.family)) == "1 = t*u"
    # sampled verification of the reciprocal locus
    for tv in classify.SAMPLES:
        vals = {"t": tv, "u": Gauss(1) / tv}
        vals.update({"t~": tv.conj(), "u~": (Gauss(1) / tv).conj()})
        assert gen.holds_at(vals)
        off = dict(vals)
        off["u"] = Gauss(2) / tv
        off["u~"] = off["u"].conj()
        assert not gen.holds_at(off)
    # the one-pair shape is unconditional at every sample
    d5 = rs.build("D5")
    PD = fam.pair_family(ct.contact_datum(d5, d5.vector([1, 0, 0, 0, 0])))
    genD = cs.check_integrability(PD.family)
    assert genD.unconditional
    for tv in classify.SAMPLES:
        assert genD.holds_at({"t": tv, "t~": tv.conj()})


def test_disjointness():
    F = fam.special_su_families(rs.build("A3"))
    d = cs.check_disjointness(F.j_family)
    assert d.excluded_abs() == ["|t| != 1"]
    assert d.holds_at(full(F.j_family, {"t": T_HALF}))
    assert not d.holds_at(full(F.j_family, {"t": UNIT}))
    d0 = cs.check_disjointness(F.j0_family)
    assert set(d0.excluded_abs()) == {"|t| != 1"}
    assert not d0.holds_at(full(F.j0_family, {"t": UNIT}))
    # t = 0 always disjoint for the plain families
    assert d.holds_at(full(F.j_family, {"t": Gauss(0)}))
    # conjugate-pair families degenerate exactly on the unit circle
    b3 = rs.build("B3")
    P = fam.pair_family(ct.contact_datum(b3, b3.vector([1, 1, 1])))
    dd = cs.check_disjointness(P.family)
    assert dd.holds_at(full(P.family, vals_for(P.family, T_HALF)))
    unit_vals = {"t": UNIT, "u": Gauss(1) / UNIT}
    assert not dd.holds_at(full(P.family, unit_vals))


def test_subspace_dimension_guard():
    b3 = rs.build("B3")
    datum = ct.contact_datum(b3, b3.vector([1, 0, 0]))
    mods = {m.highest for m in __import__("crlie.modules", fromlist=["decompose"]).decompose(datum)}
    h = cs.HolomorphicSubspace(datum, plains=tuple(sorted(mods)))
    with pytest.raises(cs.StructError):
        h.basis()


def test_standard_normalizer_dichotomy_families():
    runs = []
    F = fam.special_su_families(rs.build("A3"))
    runs += [(F.j_family, False), (F.j_prime_family, False), (F.j0_family, False)]
    runs += [(s, True) for s in F.standard]
    for tag in ("B3", "C3", "F4"):
        R = fam.short_root_families(rs.build(tag))
        runs += [(R.family, False), (R.standard, True)]
    d5 = rs.build("D5")
    P = fam.pair_family(ct.contact_datum(d5, d5.vector([1, 0, 0, 0, 0])))
    runs += [(P.family, False), (P.standard, True)]
    for h, expect_std in runs:
        vals = {} if expect_std and not h.parameters() else vals_for(h, T_HALF)
        assert cs.is_standard(h, vals) is expect_std
        assert cs.normalizer_excess(h, vals) == (1 if expect_std else 0)


def _integrable_battery():
    F = fam.special_su_families(rs.build("A3"))
    out = [F.j_family, F.j_prime_family, F.j0_family, F.standard[0]]
    for tag in ("B3", "C3", "F4"):
        R = fam.short_root_families(rs.build(tag))
        out += [R.family, R.standard]
    d5 = rs.build("D5")
    P = fam.pair_family(ct.contact_datum(d5, d5.vector([1, 0, 0, 0, 0])))
    out += [P.family, P.standard]
    b3 = rs.build("B3")
    out.append(fam.pair_family(ct.contact_datum(b3, b3.vector([1, 1, 1]))).family)
    g = PaintedGraph.parse("D5:b,w,w,w,g")
    v = is_good(g)
    out.append(classify.composite_family(CRGraph(g, v.cr_type, v.theta)).family)
    return out


def test_bracket_closure_at_samples():
    # l^C + m10 really is a subalgebra at sampled twists, across the
    # whole classified battery
    from crlie.linalg import SpanSolver

    for h in _integrable_battery():
        vals = vals_for(h, T_HALF) if h.parameters() else {}
        sysm = h.datum.system
        basis = cs.evaluate_basis(h, vals)
        lbasis = cs._l_complex_basis(h.datum)
        rows = cs._coordinate_rows(sysm, basis + lbasis)
        solver = SpanSolver(rows)
        for a in basis:
            for b in basis:
                br = a.bracket(b)
                assert solver.contains(cs._coordinate_rows(sysm, [br])[0]), h.label


def test_m10_plus_conjugate_spans_at_samples():
    from crlie.linalg import SpanSolver

    for h in _integrable_battery():
        vals = vals_for(h, T_HALF) if h.parameters() else {}
        basis = cs.evaluate_basis(h, vals)
        conj = [v.conjugate() for v in basis]
        sysm = h.datum.system
        rows = cs._coordinate_rows(sysm, basis + conj)
        assert SpanSolver(rows).dim() == len(h.datum.Rprime), h.label


def test_fibration_witnesses_special():
    F1 = fam.special_su_families(rs.build("A1"))
    rep = cs.find_crf_parabolics(F1.j_family, {"t": T_HALF})
    assert not rep.primitive and rep.circular
    F = fam.special_su_families(rs.build("A4"))
    rep = cs.find_crf_parabolics(F.j_family, {"t": T_HALF})
    kinds = {(w.fiber_dim, w.fiber_type) for w in rep.witnesses}
    assert (3, "SO3 = S(S2)") in kinds  # Wolf-space reduction
    assert (1, "S1") in kinds  # twisted-circle reduction
    rep0 = cs.find_crf_parabolics(F.j0_family, {"t": T_HALF})
    assert rep0.primitive and not rep0.circular
    reps = cs.find_crf_parabolics(F.standard[0], {})
    assert reps.circular and not reps.primitive


def test_fibration_witnesses_short_root_and_pairs():
    for tag in ("B3", "C3", "F4"):
        R = fam.short_root_families(rs.build(tag))
        rep = cs.find_crf_parabolics(R.family, {"t": T_HALF})
        assert rep.primitive, tag
        rep = cs.find_crf_parabolics(R.standard, {})
        assert rep.circular
    d5 = rs.build("D5")
    P = fam.pair_family(ct.contact_datum(d5, d5.vector([1, 0, 0, 0, 0])))
    assert cs.find_crf_parabolics(P.family, {"t": T_HALF}).primitive
    b3 = rs.build("B3")
    P3 = fam.pair_family(ct.contact_datum(b3, b3.vector([1, 1, 1])))
    assert cs.find_crf_parabolics(P3.family, vals_for(P3.family, T_HALF)).primitive


COMPOSITE_GRAPHS = [
    ("A2:g,b", "I", "SO3 = S(S2)"),
    ("A1+A2:g|g,b", "II", "SO4/SO2 = S(S3)"),
    ("A4:w,g,w,b", "III", "SO6/SO4 = S(S5)"),
    ("D5:b,w,w,w,g", "IV", "SO8/SO6 = S(S7)"),
    ("E6:g,w,w,w,b,w", "V", "SO10/SO8 = S(S9)"),
]


@pytest.mark.parametrize("text,cr_type,fiber", COMPOSITE_GRAPHS)
def test_composite_rows_minimal_rank(text, cr_type, fiber):
    g = PaintedGraph.parse(text)
    v = is_good(g)
    assert v.good and v.cr_type == cr_type
    cr = CRGraph(g, v.cr_type, v.theta)
    if cr_type == "I":
        F = fam.special_su_families(g.system)
        h, hstd = F.j_family, F.standard[1]
    else:
        P = classify.composite_family(cr)
        h, hstd = P.family, P.standard
    cons = cs.check_integrability(h)
    vals = vals_for(h, T_HALF)
    assert cons.holds_at(full(h, vals))
    # non-standard exactly when the fiber part is twisted
    assert not cs.is_standard(h, vals)
    assert cs.normalizer_excess(h, vals) == 0
    assert cs.is_standard(hstd, {})
    assert cs.normalizer_excess(hstd, {}) == 1
    rep = cs.find_crf_parabolics(h, vals)
    assert not rep.primitive
    assert fiber in {w.fiber_type for w in rep.witnesses}
    rep0 = cs.find_crf_parabolics(hstd, {})
    assert rep0.circular


def test_non_a_special_standard():
    # the unique structure of a non-A special contact manifold
    for tag in ("B3", "C3", "G2", "F4", "D4"):
        h = fam.special_standard_subspace(rs.build(tag))
        assert cs.check_integrability(h).unconditional, tag
        assert cs.is_standard(h, {}), tag
        assert cs.normalizer_excess(h, {}) == 1, tag


def test_g2_short_standard():
    h = fam.g2_short_standard_subspace()
    assert cs.check_integrability(h).unconditional
    assert cs.is_standard(h, {})
    assert cs.normalizer_excess(h, {}) == 1
    # m10 = levels 1, 2, 3 of the seven-level gradation
    g = ct.grade_by_short_root_g2(rs.build("G2"))
    roles = h.roles()
    assert {i for i, r in roles.items() if r in ("rj", "su2_first")} == set(
        g.level(1) | g.level(2) | g.level(3)
    )


def _brute_normalizer_excess(h, values):
    """Reference computation: solve [X, W] in W over the full algebra."""
    from crlie.linalg import SpanSolver, nullspace_gauss
    from crlie.chevalley import LieElement

    sysm = h.datum.system
    m01 = [v.conjugate() for v in cs.evaluate_basis(h, values)]
    wbasis = cs._l_complex_basis(h.datum) + m01
    wspan = SpanSolver(cs._coordinate_rows(sysm, wbasis))
    gens = [LieElement.root_vector(sysm, r) for r in sysm.roots]
    gens += [LieElement.cartan(sysm, a) for a in sysm.simple_roots]
    constraints = []
    residuals = []
    for w in wbasis:
        per_w = []
        for x in gens:
            _, rem = wspan.remainder(cs._coordinate_rows(sysm, [x.bracket(w)])[0])
            per_w.append(rem)
        m = len(per_w[0])
        for k in range(m):
            if any(per_w[j][k] for j in range(len(gens))):
                constraints.append([cs._to_gauss(per_w[j][k]) for j in range(len(gens))])
    kernel = nullspace_gauss(constraints, len(gens), Gauss(0), Gauss(1))
    sols = []
    for coeffs in kernel:
        el = LieElement.zero(sysm)
        for c, x in zip(coeffs, gens):
            if c:
                el = el + x.scale(c)
        sols.append(el)
    nrows = cs._coordinate_rows(sysm, sols)
    crows = cs._coordinate_rows(sysm, [v.conjugate() for v in sols])
    dim_n = SpanSolver(nrows).dim()
    dim_c = SpanSolver(crows).dim()
    dim_sum = SpanSolver(nrows + crows).dim()
    dim_l = len(h.datum.Ro.members) + len(cs._theta_perp_cartan(h.datum))
    return dim_n + dim_c - dim_sum - dim_l


def test_normalizer_blocked_solver_matches_brute_force():
    F1 = fam.special_su_families(rs.build("A1"))
    F2 = fam.special_su_families(rs.build("A2"))
    R = fam.short_root_families(rs.build("B2"))
    cases = [
        (F1.j_family, {"t": T_HALF}),
        (F1.standard[0], {}),
        (F2.j_family, {"t": T_HALF}),
        (F2.j0_family, {"t": T_HALF}),
        (F2.standard[0], {}),
        (R.family, {"t": T_HALF}),
        (R.standard, {}),
    ]
    for h, vals in cases:
        assert cs.normalizer_excess(h, vals) == _brute_normalizer_excess(h, vals)


def test_structure_rows_dispatch():
    b4 = rs.build("B4")
    rows = classify.structure_rows_for_datum(ct.contact_datum(b4, b4.vector([1, 0, 0, 0])))
    fams = {r["family"]: r for r in rows}
    assert fams["disc family"]["standard"] == "no"
    assert fams["disc family"]["primitive"] == "yes"
    assert fams["standard"]["normalizer_excess"] == "1"
    g2 = rs.build("G2")
    rows = classify.structure_rows_for_datum(ct.contact_datum(g2, g2.vector([1, 0, 0])))
    assert len(rows) == 1 and rows[0]["standard"] == "yes"
    a3 = rs.build("A3")
    rows = classify.structure_rows_for_datum(ct.contact_datum(a3, a3.highest_root()))
    assert len(rows) == 6  # three standard + three families
    prim = [r for r in rows if r.get("primitive") == "yes"]
    assert len(prim) == 1 and "note" in prim[0]
