"""Candidate invariant CR structures as holomorphic subspaces.

A holomorphic subspace is assembled from twisted module pairs
(highest-weight vector E_a + c E_b for congruent a, b), whole modules,
a one-sided nilpotent block, and optionally a twisted rank-one line
C(E_mu + c E_{-mu}).  Integrability, disjointness, standardness, the
normalizer dimension and the parabolic fibration witnesses are all decided
by exact linear algebra over the Gaussian-rational polynomial ring
(symbolically where the condition is polynomial in the twists, at sampled
Gaussian-rational parameter values otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .chevalley import LieElement, constants
from .contact import ContactDatum
from .linalg import SpanSolver
from .modules import IrredModule, decompose, theta_congruent
from .rootsys import RootSystem, RootVector, Subsystem
from .scalars import Gauss, P_ZERO, Poly, conj_var

Q = Fraction


class StructError(ValueError):
    pass


@dataclass(frozen=True)
class TwistedPair:
    """Module m(hw) twisted into m(hw) + c * m(partner)."""

    hw: int
    partner: int
    coeff: Poly


@dataclass(frozen=True)
class SU2Line:
    """The line C(E_mu + c E_{-mu}) inside the root sl2."""

    root: int
    coeff: Poly


@dataclass(frozen=True)
class HolomorphicSubspace:
    datum: ContactDatum
    pairs: tuple[TwistedPair, ...] = ()
    plains: tuple[int, ...] = ()
    rj_plus: frozenset[int] = frozenset()
    su2: Optional[SU2Line] = None
    label: str = ""

    # -- assembly -----------------------------------------------------------------

    def module_weights(self, hw: int) -> frozenset[int]:
        mods = _modules_by_hw(self.datum)
        if hw not in mods:
            raise StructError("not a module highest weight")
        return mods[hw].weights

    def pair_vectors(self, pair: TwistedPair) -> list[LieElement]:
        """Propagated basis of the twisted module, with well-definedness check."""
        sys = self.datum.system
        kappa = _propagate(self.datum, pair.hw, pair.partner)
        out = []
        for w in sorted(kappa):
            wp, k = kappa[w]
            vec = LieElement.root_vector(sys, sys.roots[w]) + LieElement.root_vector(
                sys, sys.roots[wp], pair.coeff.scale(k)
            )
            out.append(vec)
        return out

    def basis(self) -> list[LieElement]:
        sys = self.datum.system
        out: list[LieElement] = []
        for pair in self.pairs:
            out.extend(self.pair_vectors(pair))
        for hw in self.plains:
            for w in sorted(self.module_weights(hw)):
                out.append(LieElement.root_vector(sys, sys.roots[w]))
        for r in sorted(self.rj_plus):
            out.append(LieElement.root_vector(sys, sys.roots[r]))
        if self.su2 is not None:
            mu = self.su2.root
            out.append(
                LieElement.root_vector(sys, sys.roots[mu])
                + LieElement.root_vector(sys, sys.roots[sys.neg_index[mu]], self.su2.coeff)
            )
        if 2 * len(out) != len(self.datum.Rprime):
            raise StructError(
                f"subspace dimension {len(out)} is not half of |R'| = {len(self.datum.Rprime)}"
            )
        return out

    def roles(self) -> dict[int, str]:
        """Role of every isotropy root in the reduction scheme."""
        roles: dict[int, str] = {}

        def put(i: int, role: str):
            if i in roles:
                raise StructError("a root carries two roles in the subspace")
            roles[i] = role

        for pair in self.pairs:
            kappa = _propagate(self.datum, pair.hw, pair.partner)
            for w, (wp, _) in kappa.items():
                put(w, "pair_first")
                put(wp, "pair_second")
        for hw in self.plains:
            for w in self.module_weights(hw):
                put(w, "plain")
        for r in self.rj_plus:
            put(r, "rj")
        if self.su2 is not None:
            put(self.su2.root, "su2_first")
            put(self.datum.system.neg_index[self.su2.root], "su2_second")
        return roles

    def parameters(self) -> set[str]:
        out = set()
        for p in self.pairs:
            out |= p.coeff.variables()
        if self.su2 is not None:
            out |= self.su2.coeff.variables()
        return out

    def subs(self, values: Mapping[str, Gauss]) -> "HolomorphicSubspace":
        pairs = tuple(
            TwistedPair(p.hw, p.partner, p.coeff.subs(values)) for p in self.pairs
        )
        su2 = None
        if self.su2 is not None:
            su2 = SU2Line(self.su2.root, self.su2.coeff.subs(values))
        return replace(self, pairs=pairs, su2=su2)


_MODULE_CACHE: dict[tuple, dict[int, IrredModule]] = {}


def _modules_by_hw(datum: ContactDatum) -> dict[int, IrredModule]:
    key = (id(datum.system), datum.theta.canon())
    if key not in _MODULE_CACHE:
        _MODULE_CACHE[key] = {m.highest: m for m in decompose(datum)}
    return _MODULE_CACHE[key]


_PROP_CACHE: dict[tuple, dict[int, tuple[int, Q]]] = {}


def _propagate(datum: ContactDatum, hw: int, partner: int) -> dict[int, tuple[int, Q]]:
    """Equivariant twist coefficients: weight w of m(hw) maps to
    (w', kappa_w) with the twisted vectors E_w + c*kappa_w E_w'.

    Verified to be path independent; raises when the two modules are not
    equivalent under the stabilizer.
    """
    key = (id(datum.system), datum.theta.canon(), hw, partner)
    if key in _PROP_CACHE:
        return _PROP_CACHE[key]
    sys = datum.system
    mods = _modules_by_hw(datum)
    if hw not in mods or partner not in mods:
        raise StructError("twisted pair components must be module highest weights")
    if theta_congruent(datum, sys.roots[hw], sys.roots[partner]) is None:
        raise StructError("twisted pair of non-congruent modules")
    shift = sys.roots[partner] - sys.roots[hw]
    tab = constants(sys)
    kappa: dict[int, tuple[int, Q]] = {}
    wp0 = sys.root_index(sys.roots[hw] + shift)
    kappa[hw] = (wp0, Q(1))
    frontier = [hw]
    weights = mods[hw].weights
    while frontier:
        w = frontier.pop()
        wp, kw = kappa[w]
        for d in datum.Ro.members:
            w2 = sys.sum_index(w, d)
            if w2 is None or w2 not in weights:
                continue
            wp2 = sys.sum_index(wp, d)
            n1 = tab.n(d, w)
            if wp2 is None:
                raise StructError("modules are not equivariantly matched")
            n2 = tab.n(d, wp)
            val = kw * Q(n2, n1)
            if w2 in kappa:
                if kappa[w2] != (wp2, val):
                    raise StructError("twist propagation is path dependent")
            else:
                kappa[w2] = (wp2, val)
                frontier.append(w2)
    if set(kappa) != set(weights):
        raise StructError("twist propagation did not reach the whole module")
    _PROP_CACHE[key] = kappa
    return kappa


# -- integrability -------------------------------------------------------------------


@dataclass(frozen=True)
class ConstraintSet:
    """Polynomial conditions on the twist parameters."""

    generators: tuple[Poly, ...]

    @property
    def unconditional(self) -> bool:
        return not self.generators

    def holds_at(self, values: Mapping[str, Gauss]) -> bool:
        return all(g.eval(values).is_zero() for g in self.generators)

    def __str__(self) -> str:
        if self.unconditional:
            return "unconditional"
        return " and ".join(render_constraint(g) for g in self.generators)


def render_constraint(g: Poly) -> str:
    """Binomial constraints render as "a = b", otherwise "... = 0"."""
    terms = sorted(g.terms.items(), key=lambda kv: (sum(e for _, e in kv[0]), kv[0]))
    if len(terms) == 2:
        (m1, c1), (m2, c2) = terms
        if (c1 + c2).is_zero():
            lhs = Poly({m1: Gauss(1)})
            rhs = Poly({m2: Gauss(1)})
            return f"{lhs} = {rhs}"
    return f"{g} = 0"


def check_integrability(h: HolomorphicSubspace) -> ConstraintSet:
    """Conditions on the twists for [m10, m10] to lie in m10 + l^C."""
    sys = h.datum.system
    basis = h.basis()
    roles = h.roles()
    reducers: dict[int, tuple[int, Poly]] = {}
    for pair in h.pairs:
        kappa = _propagate(h.datum, pair.hw, pair.partner)
        for w, (wp, k) in kappa.items():
            reducers[w] = (wp, pair.coeff.scale(k))
    if h.su2 is not None:
        reducers[h.su2.root] = (sys.neg_index[h.su2.root], h.su2.coeff)
    gens: dict[tuple, Poly] = {}

    def note(p: Poly):
        p = p.primitive()
        if not p.is_zero():
            gens.setdefault(p.key(), p)

    ro = frozenset(h.datum.Ro.members)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            br = basis[a].bracket(basis[b])
            res = dict(br.e)
            for w in list(res):
                role = roles.get(w)
                if role in ("pair_first", "su2_first"):
                    c = res.pop(w)
                    wp, twist = reducers[w]
                    res[wp] = res.get(wp, P_ZERO) - c * twist
                elif role in ("plain", "rj"):
                    res.pop(w)
            for w, c in res.items():
                if c.is_zero() or w in ro:
                    continue
                note(c)
            note(br.eval_functional(h.datum.theta))
    return ConstraintSet(tuple(_minimize(sorted(gens.values(), key=lambda p: p.key()))))


def _minimize(gens: list[Poly]) -> list[Poly]:
    """Drop generators that are monomial multiples of another generator."""
    keep: list[Poly] = []
    for g in sorted(gens, key=lambda p: (len(p.terms), min(sum(e for _, e in m) for m in p.terms))):
        if any(_is_monomial_multiple(g, h) for h in keep):
            continue
        keep.append(g)
    return keep


def _is_monomial_multiple(g: Poly, h: Poly) -> bool:
    """True when g = scalar * (monomial) * h."""
    if len(g.terms) != len(h.terms) or h.is_zero():
        return False
    mg0, cg0 = next(iter(sorted(g.terms.items())))
    for mh0, ch0 in h.terms.items():
        dg, dh = dict(mg0), dict(mh0)
        if any(dg.get(v, 0) < e for v, e in dh.items()):
            continue
        delta = {v: e - dh.get(v, 0) for v, e in dg.items() if e != dh.get(v, 0)}
        if any(e < 0 for e in delta.values()):
            continue
        shift = tuple(sorted(delta.items()))
        ratio = cg0 / ch0
        from .scalars import _mono_mul

        shifted = {_mono_mul(m, shift): c * ratio for m, c in h.terms.items()}
        if shifted == g.terms:
            return True
    return False


# -- disjointness ----------------------------------------------------------------------


@dataclass(frozen=True)
class DisjointnessResult:
    factors: tuple[Poly, ...]

    def excluded_abs(self) -> list[str]:
        """Human forms of the excluded parameter loci."""
        out = []
        for f in self.factors:
            desc = _abs_locus(f)
            out.append(desc if desc else f"{f} = 0")
        return out

    def holds_at(self, values: Mapping[str, Gauss]) -> bool:
        return all(not f.eval(values).is_zero() for f in self.factors)


def _abs_locus(f: Poly) -> Optional[str]:
    """Render factors that only involve x*conj(x) as modulus conditions."""
    by_r: dict[int, Gauss] = {}
    var = None
    for m, c in f.terms.items():
        d: dict[str, int] = {}
        for v, e in m:
            d[v] = e
        bases = {v.rstrip("~") for v in d}
        if len(bases) > 1:
            return None
        if not bases:
            by_r[0] = c
            continue
        (b,) = bases
        if var is None:
            var = b
        elif var != b:
            return None
        if d.get(b, 0) != d.get(b + "~", 0):
            return None
        by_r[d.get(b, 0)] = c
    if var is None or any(c.im != 0 for c in by_r.values()):
        return None
    # f as a rational polynomial in r = |var|^2; report positive roots
    exps = sorted(by_r)
    roots = []
    for num in range(1, 40):
        for den in range(1, 12):
            r = Q(num, den)
            if sum(by_r[e].re * r**e for e in exps) == 0:
                roots.append(r)
        if roots:
            break
    if not roots:
        return None
    conds = sorted({r for r in roots})
    return " and ".join(
        f"|{var}| != 1" if r == 1 else f"|{var}|^2 != {r}" for r in conds
    )


def check_disjointness(h: HolomorphicSubspace) -> DisjointnessResult:
    """Determinant factors whose nonvanishing gives m10 and conj(m10) disjoint."""
    sys = h.datum.system
    basis = h.basis()
    vectors = basis + [v.conjugate() for v in basis]
    blocks = _congruence_blocks(h.datum)
    per_block: dict[int, list] = {}
    for v in vectors:
        support = sorted(v.e)
        bid = blocks[support[0]]
        if any(blocks[w] != bid for w in support):
            raise StructError("vector support crosses congruence blocks")
        per_block.setdefault(bid, []).append(v)
    factors: dict[tuple, Poly] = {}
    block_members: dict[int, list[int]] = {}
    for w, bid in blocks.items():
        block_members.setdefault(bid, []).append(w)
    for bid, vs in per_block.items():
        cols = sorted(block_members[bid])
        if len(vs) != len(cols):
            raise StructError("congruence block is not square")
        mat = [[v.e.get(w, P_ZERO) for w in cols] for v in vs]
        det = _det_poly(mat)
        if det.is_zero():
            raise StructError("identically degenerate block")
        det = det.primitive()
        if not det.is_constant():
            factors.setdefault(det.key(), det)
    return DisjointnessResult(tuple(sorted(factors.values(), key=lambda p: p.key())))


def _congruence_blocks(datum: ContactDatum) -> dict[int, int]:
    sys = datum.system
    blocks: dict[int, int] = {}
    nxt = 0
    items = sorted(datum.Rprime)
    for i in items:
        if i in blocks:
            continue
        blocks[i] = nxt
        for j in items:
            if j != i and j not in blocks and theta_congruent(
                datum, sys.roots[i], sys.roots[j]
            ) is not None:
                blocks[j] = nxt
        nxt += 1
    return blocks


def _det_poly(mat: list[list[Poly]]) -> Poly:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = P_ZERO
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = mat[0][j] * _det_poly(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


# -- evaluation-based checks ---------------------------------------------------------


def _coordinate_rows(sys: RootSystem, elements: Iterable[LieElement]):
    """Gauss coordinate rows over (all roots, ambient Cartan coordinates)."""
    rows = []
    for el in elements:
        row = [Gauss(0)] * (len(sys.roots) + sys.dim)
        for i, c in el.e.items():
            row[i] = c.constant()
        canonh = [c.constant() for c in el.h]
        for k, c in enumerate(canonh):
            row[len(sys.roots) + k] = c
        rows.append(row)
    return rows


def _l_complex_basis(datum: ContactDatum) -> list[LieElement]:
    sys = datum.system
    out = [LieElement.root_vector(sys, sys.roots[i]) for i in sorted(datum.Ro.members)]
    out.extend(LieElement.cartan(sys, v) for v in _theta_perp_cartan(datum))
    return out


def _theta_perp_cartan(datum: ContactDatum) -> list[RootVector]:
    """Rational basis of the theta-orthogonal part of the Cartan (root span)."""
    sys = datum.system
    basis = []
    theta = datum.theta
    tt = sys.inner(theta, theta)
    for a in sys.simple_roots:
        proj = a - (sys.inner(a, theta) / tt) * theta
        if not proj.is_zero():
            basis.append(proj)
    solver = SpanSolver([])
    keep: list[RootVector] = []
    rows: list[list[Q]] = []
    for v in basis:
        rows2 = rows + [list(v.canon())]
        if SpanSolver(rows2).dim() > len(keep):
            keep.append(v)
            rows = rows2
    return keep


def evaluate_basis(h: HolomorphicSubspace, values: Mapping[str, Gauss]) -> list[LieElement]:
    vals = _with_conj(values)
    return [v.subs(vals) for v in h.basis()]


def _with_conj(values: Mapping[str, Gauss]) -> dict[str, Gauss]:
    out = dict(values)
    for k, v in list(values.items()):
        out.setdefault(conj_var(k), v.conj())
    return out


def is_standard(h: HolomorphicSubspace, values: Mapping[str, Gauss]) -> bool:
    """Ad_Z-invariance of the evaluated subspace."""
    sys = h.datum.system
    basis = evaluate_basis(h, values)
    hz = LieElement.cartan(sys, h.datum.theta)
    rows = _coordinate_rows(sys, basis)
    solver = SpanSolver(rows)
    for v in basis:
        img = hz.bracket(v)
        if not solver.contains(_coordinate_rows(sys, [img])[0]):
            return False
    return True


def normalizer_excess(h: HolomorphicSubspace, values: Mapping[str, Gauss]) -> int:
    """dim over R of N_g(l^C + m01) modulo l.

    Computed as dim_C of N intersect conj(N) minus dim_C l^C, where N is the
    complex normalizer; the intersection is the complexified real-point
    space since both N and its conjugate are spanned by the solutions.
    """
    sys = h.datum.system
    datum = h.datum
    m01 = [v.conjugate() for v in evaluate_basis(h, values)]
    wbasis = _l_complex_basis(datum) + m01
    wrows = _coordinate_rows(sys, wbasis)
    wspan = SpanSolver(wrows)

    # candidate normalizer directions, blocked by stabilizer weight
    blocks = _congruence_blocks(datum)
    groups: dict[int, list[int]] = {}
    for i, b in blocks.items():
        groups.setdefault(b, []).append(i)
    candidates: list[list[LieElement]] = [
        [LieElement.root_vector(sys, sys.roots[i]) for i in sorted(g)]
        for g in groups.values()
    ]
    zero_block = [LieElement.cartan(sys, a) for a in sys.simple_roots]
    zero_block += [LieElement.root_vector(sys, sys.roots[i]) for i in sorted(datum.Ro.members)]
    candidates.append(zero_block)

    sol_basis: list[LieElement] = []
    for block in candidates:
        sols = _normalizer_block(sys, block, wbasis, wspan)
        sol_basis.extend(sols)
    nrows = _coordinate_rows(sys, sol_basis)
    conj_rows = _coordinate_rows(sys, [v.conjugate() for v in sol_basis])
    dim_n = SpanSolver(nrows).dim()
    dim_conj = SpanSolver(conj_rows).dim()
    dim_sum = SpanSolver(nrows + conj_rows).dim()
    dim_int = dim_n + dim_conj - dim_sum
    dim_l = len(datum.Ro.members) + len(_theta_perp_cartan(datum))
    return dim_int - dim_l


def _normalizer_block(sys, block: list[LieElement], wbasis, wspan) -> list[LieElement]:
    """Solve [X, W] in W for X in the span of the block candidates."""
    from .linalg import nullspace_gauss

    if not block:
        return []
    ncols = len(block)
    constraints: list[list[Gauss]] = []
    for w in wbasis:
        residuals = []
        for x in block:
            br = x.bracket(w)
            _, rem = wspan.remainder(_coordinate_rows(sys, [br])[0])
            residuals.append(rem)
        m = len(residuals[0])
        for k in range(m):
            if any(residuals[j][k] for j in range(ncols)):
                constraints.append([_to_gauss(residuals[j][k]) for j in range(ncols)])
    if not constraints:
        kernel = [[Gauss(1) if i == j else Gauss(0) for j in range(ncols)] for i in range(ncols)]
    else:
        kernel = nullspace_gauss(constraints, ncols, Gauss(0), Gauss(1))
    out = []
    for coeffs in kernel:
        el = LieElement.zero(sys)
        for c, x in zip(coeffs, block):
            if c:
                el = el + x.scale(c)
        out.append(el)
    return out


def _to_gauss(x) -> Gauss:
    return x if isinstance(x, Gauss) else Gauss(x)


# -- parabolic fibration witnesses ------------------------------------------------------


@dataclass(frozen=True)
class ParabolicWitness:
    kind: str  # "root-subset" or "twisted-borel"
    sym_roots: frozenset[int]
    fiber_dim: int
    fiber_type: str


@dataclass(frozen=True)
class FibrationReport:
    witnesses: tuple[ParabolicWitness, ...]

    @property
    def primitive(self) -> bool:
        return not self.witnesses

    @property
    def circular(self) -> bool:
        return any(w.fiber_dim == 1 for w in self.witnesses)

    def fiber_dims(self) -> list[int]:
        return sorted({w.fiber_dim for w in self.witnesses})


def find_crf_parabolics(h: HolomorphicSubspace, values: Mapping[str, Gauss],
                        max_witnesses: int = 64) -> FibrationReport:
    """Proper parabolic subalgebras containing l^C + m10.

    Searches the parabolic subsets of R adapted to the standard Cartan, and
    for subspaces with a twisted rank-one part also the parabolic reductions
    adapted to the rotated Cartan through that line (S^1 fibers).
    """
    sys = h.datum.system
    datum = h.datum
    basis = evaluate_basis(h, values)
    support = set(datum.Ro.members)
    for v in basis:
        support.update(v.e.keys())
    witnesses: list[ParabolicWitness] = []
    for p in _parabolic_subsets(sys, frozenset(support), max_witnesses):
        sym = frozenset(i for i in p if sys.neg_index[i] in p)
        fiber_dim = len(sym) - len(datum.Ro.members) + 1
        witnesses.append(
            ParabolicWitness("root-subset", sym, fiber_dim, _fiber_type(datum, sym))
        )
    s1 = _rotated_s1_witness(h, values)
    if s1 is not None:
        witnesses.append(s1)
    witnesses.sort(key=lambda w: (w.fiber_dim, sorted(w.sym_roots)))
    return FibrationReport(tuple(witnesses))


def _additive_closure(sys: RootSystem, seed: frozenset[int]) -> Optional[frozenset[int]]:
    out = set(seed)
    frontier = list(seed)
    while frontier:
        i = frontier.pop()
        for j in list(out):
            k = sys.sum_index(i, j)
            if k is not None and k not in out:
                out.add(k)
                frontier.append(k)
    return frozenset(out)


def _parabolic_subsets(sys: RootSystem, support: frozenset[int], cap: int) -> list[frozenset[int]]:
    """Proper closed P with P u -P = R containing the support.

    Branches over the root pairs not yet represented in the additive
    closure; parabolics that merely symmetrize an already decided pair are
    reached only when closure forces them.
    """
    n = len(sys.roots)
    base = _additive_closure(sys, support)
    if len(base) == n:
        return []
    results: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()

    def undecided(p: frozenset[int]) -> Optional[int]:
        for i in range(n):
            if i not in p and sys.neg_index[i] not in p:
                return i
        return None

    def recurse(p: frozenset[int]):
        if len(results) >= cap or p in seen or len(p) == n:
            return
        seen.add(p)
        i = undecided(p)
        if i is None:
            results.add(p)
            return
        for choice in ({i}, {sys.neg_index[i]}, {i, sys.neg_index[i]}):
            recurse(_additive_closure(sys, p | choice))

    recurse(base)
    return sorted(results, key=sorted)


def _fiber_type(datum: ContactDatum, sym: frozenset[int]) -> str:
    """Effective fiber of the fibration with reductive root set sym."""
    sys = datum.system
    if sym == frozenset(datum.Ro.members):
        return "S1"
    comps = []
    sub = Subsystem(sys, sym)
    for comp in sub.orthogonal_components():
        if comp <= datum.Ro.members:
            continue
        comps.append(Subsystem(sys, comp)._classify_component(comp))
    return sphere_bundle_name(sorted(comps))


def sphere_bundle_name(comps: list[tuple[str, int]]) -> str:
    if comps == [("A", 1)]:
        return "SO3 = S(S2)"
    if comps == [("A", 1), ("A", 1)]:
        return "SO4/SO2 = S(S3)"
    if comps == [("A", 3)]:
        return "SO6/SO4 = S(S5)"
    if comps == [("B", 3)]:
        return "Spin7/SU3 = S(S7)"
    if len(comps) == 1 and comps[0][0] == "D":
        r = comps[0][1]
        return f"SO{2*r}/SO{2*r-2} = S(S{2*r-1})"
    return "+".join(f"{t}{r}" for t, r in comps)


def _rotated_s1_witness(h: HolomorphicSubspace, values: Mapping[str, Gauss]) -> Optional[ParabolicWitness]:
    """S^1-fiber reduction adapted to the twisted rank-one line, when one
    exists: requires a regular su2 part and no pair of mutually negative
    eigenlines inside the subspace."""
    if h.su2 is None:
        return None
    c = h.su2.coeff.eval(_with_conj(values))
    if c.is_zero():
        return None
    sys = h.datum.system
    datum = h.datum
    basis = evaluate_basis(h, values)
    x = next(
        v for v in basis if h.su2.root in v.e and sys.neg_index[h.su2.root] in v.e
    )
    zdirs = _central_directions(datum)
    constraints: list[tuple[Q, Q]] = []
    covered: set[tuple[frozenset[int], int]] = set()
    for v in basis:
        if v is x:
            continue
        support = frozenset(v.e)
        br = x.bracket(v)
        if set(br.e) - set(v.e):
            # whole module blocks: ad_X mixes the two halves; both eigen
            # lines of each block are covered
            block = support | set(br.e)
            for sgn in (1, -1):
                covered.add((frozenset(block), sgn))
                zeta = _zeta_value(sys, zdirs, min(support))
                constraints.append((zeta, Q(sgn)))
        else:
            lam = _eigen_sign(sys, x, v)
            covered.add((support, lam))
            zeta = _zeta_value(sys, zdirs, min(support))
            constraints.append((zeta, Q(lam)))
    # forced symmetric pair: a covered eigenline whose negative is covered
    for block, sgn in covered:
        negblock = frozenset(sys.neg_index[i] for i in block)
        if (negblock, -sgn) in covered:
            return None
    # strict feasibility of f = (u, v) with v entering through the su2 block
    if not _cone_feasible(constraints):
        return None
    return ParabolicWitness("twisted-borel", frozenset(datum.Ro.members), 1, "S1")


def _central_directions(datum: ContactDatum) -> list[RootVector]:
    """Basis of the stabilizer center inside the Cartan: orthogonal to R_o
    and to theta, within the root span."""
    from .linalg import nullspace

    sys = datum.system
    constraints: list[RootVector] = [datum.theta]
    constraints.extend(sys.roots[i] for i in datum.Ro.members)
    rows = [
        [sys.inner(c, a) for a in sys.simple_roots] for c in constraints
    ]
    out = []
    for coeffs in nullspace(rows, sys.rank):
        v = RootVector(sys, [0] * sys.dim)
        for c, a in zip(coeffs, sys.simple_roots):
            if c:
                v = v + c * a
        out.append(v)
    return out


def _zeta_value(sys: RootSystem, zdirs: list[RootVector], root_idx: int) -> Q:
    if not zdirs:
        return Q(0)
    return sys.inner(sys.roots[root_idx], zdirs[0])


def _eigen_sign(sys: RootSystem, x: LieElement, v: LieElement) -> int:
    br = x.bracket(v)
    if not br.e:
        return 0
    w = next(iter(v.e))
    num = br.e.get(w, P_ZERO).constant()
    den = v.e[w].constant()
    ratio = num / den
    # only the sign pattern matters for the cone analysis
    if ratio.is_zero():
        return 0
    key = ratio.re if ratio.re != 0 else ratio.im
    return 1 if key > 0 else -1


def _cone_feasible(constraints: list[tuple[Q, Q]]) -> bool:
    """Strict feasibility of a*u + b*v > 0 (plus v != 0) in two variables."""
    cands: set[tuple[Q, Q]] = {(Q(0), Q(1)), (Q(0), Q(-1)), (Q(1), Q(0)), (Q(-1), Q(0))}
    for a, b in constraints:
        cands.update([(a, b), (-b, a), (b, -a)])
    for _ in range(2):
        base = list(cands)
        for p in base:
            for q in base:
                cands.add((p[0] + q[0], p[1] + q[1]))
        if len(cands) > 4000:
            break
    for u, v in cands:
        if v == 0:
            continue
        if all(a * u + b * v > 0 for a, b in constraints):
            return True
    return False
