"""Isotropy-module decomposition and theta-congruence combinatorics.

The complexified tangent space decomposes into irreducible modules of the
centralizer; combinatorially these are the string-connected components of
R' under R_o.  Two modules are equivalent for the stabilizer exactly when
their highest weights differ by a multiple of theta, which drives the dual
pair machinery and the case eliminations for the candidate subsystem
generated by the paired roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .contact import ContactDatum, _string_components
from .rootsys import RootVector, Subsystem

Q = Fraction


class CongruenceError(ValueError):
    pass


@dataclass(frozen=True)
class IrredModule:
    """Irreducible centralizer module spanned by root vectors."""

    datum: ContactDatum
    highest: int
    weights: frozenset[int]

    def highest_weight(self) -> RootVector:
        return self.datum.system.roots[self.highest]

    def __len__(self):
        return len(self.weights)


def decompose(datum: ContactDatum) -> list[IrredModule]:
    """Partition R' into R_o-string components, tagged by highest weight."""
    sys = datum.system
    ro = frozenset(datum.Ro.members)
    out = []
    for comp in _string_components(sys, datum.Rprime, ro):
        tops = [
            i
            for i in comp
            if all(sys.sum_index(i, d) is None for d in datum.ro_positive)
        ]
        if len(tops) != 1:
            raise CongruenceError(
                f"module without a unique highest weight (candidates {len(tops)})"
            )
        out.append(IrredModule(datum, tops[0], comp))
    return sorted(out, key=lambda m: sys.roots[m.highest].canon())


def theta_congruent(datum: ContactDatum, gamma: RootVector, gamma2: RootVector) -> Optional[Q]:
    """The nonzero lambda with gamma2 = gamma + lambda*theta, if it exists."""
    sys = datum.system
    diff = gamma2 - gamma
    if diff.is_zero():
        return None
    dc, tc = diff.canon(), datum.theta.canon()
    lam = None
    for d, t in zip(dc, tc):
        if t != 0:
            lam = d / t
            break
    if lam is None or lam == 0:
        return None
    if all(d == lam * t for d, t in zip(dc, tc)):
        return lam
    return None


def congruence_groups(datum: ContactDatum, mods: list[IrredModule] | None = None) -> list[list[IrredModule]]:
    """Modules grouped into stabilizer-equivalence classes.

    Equivalence of irreducible modules is decided by theta-congruence of the
    highest weights (the restriction to the stabilizer Cartan).
    """
    if mods is None:
        mods = decompose(datum)
    sys = datum.system
    groups: list[list[IrredModule]] = []
    for m in mods:
        for g in groups:
            if theta_congruent(datum, sys.roots[g[0].highest], sys.roots[m.highest]) is not None:
                g.append(m)
                break
        else:
            groups.append([m])
    return groups


@dataclass(frozen=True)
class CongruenceDatum:
    """All theta-dual pairs of a contact datum."""

    datum: ContactDatum
    pairs: tuple[tuple[int, int], ...]  # unordered pairs, stored sorted

    @property
    def paired_roots(self) -> frozenset[int]:
        return frozenset(i for p in self.pairs for i in p)

    def partner(self, i: int) -> Optional[int]:
        for a, b in self.pairs:
            if i == a:
                return b
            if i == b:
                return a
        return None


def dual_pairs(datum: ContactDatum, allow_g2_short: bool = False) -> CongruenceDatum:
    """Match every isotropy root with its theta-congruent partner.

    Roots are bucketed by their component transverse to theta, so two roots
    share a bucket exactly when they differ by a multiple of theta.  Raises
    when some root has two or more partners, which happens exactly in the
    excluded case of a G2 contact form proportional to a short root.
    """
    sys = datum.system
    theta = datum.theta
    tt = sys.inner(theta, theta)
    buckets: dict[tuple, list[int]] = {}
    for i in sorted(datum.Rprime):
        r = sys.roots[i]
        transverse = r - (sys.inner(r, theta) / tt) * theta
        buckets.setdefault(transverse.canon(), []).append(i)
    pairs = set()
    for group in buckets.values():
        if len(group) > 2 and not allow_g2_short:
            raise CongruenceError(
                "a root has multiple theta-congruent partners "
                "(excluded short-root G2 configuration)"
            )
        for a, b in zip(group, group[1:]):
            pairs.add((a, b))
        if len(group) > 2:
            pairs.add((group[0], group[-1]))
    return CongruenceDatum(datum, tuple(sorted(pairs)))


def dual_pair_shape(datum: ContactDatum, pair: tuple[int, int]) -> str:
    """Type of the rank-2 subsystem spanned by a dual pair."""
    sys = datum.system
    a, b = pair
    sub = sys.closed_span([sys.roots[a], sys.roots[b]])
    return sub.type_str()


@dataclass(frozen=True)
class ReVerdict:
    """Outcome of matching a candidate paired-root set against the allowed
    D-type / B3 shapes and canonical contact forms."""

    accepted: bool
    reason: str
    re_type: str
    theta_form: str = ""


_D_FAMILY = {"A1+A1", "A3", "B3"}


def tilde_Re_type(datum: ContactDatum, re_roots: frozenset[int]) -> ReVerdict:
    """Classify [R_e] and match theta against the canonical forms.

    Accepts only D_l (including A1+A1 = D2 and A3 = D3) or B3 shapes with
    the matching contact form; everything else is reported as eliminated.
    """
    sys = datum.system
    if not re_roots:
        return ReVerdict(False, "no paired roots", "0")
    cd = dual_pairs(datum)
    if not re_roots <= cd.paired_roots:
        return ReVerdict(False, "candidate contains unpaired roots", "?")
    # every dual pair inside the candidate must span an orthogonal A1 pair
    for a, b in cd.pairs:
        if a in re_roots and b in re_roots:
            ra, rb = sys.roots[a], sys.roots[b]
            if sys.inner(ra, rb) != 0 or sys.is_root(ra + rb) or sys.is_root(ra - rb):
                return ReVerdict(False, "dual pair does not span A1+A1", "?")
    # closure under R_o strings
    for i in re_roots:
        for d in datum.Ro.members:
            k = sys.sum_index(i, d)
            if k is not None and k not in re_roots:
                return ReVerdict(False, "paired set is not closed under R_o strings", "?")
    closure = sys.closed_span([sys.roots[i] for i in re_roots])
    comps = closure.classify()
    tstr = closure.type_str()
    if len(comps) == 1:
        t, r = comps[0]
        ok = (t, r) in (("A", 3), ("B", 3)) or (t == "D" and r >= 4)
    else:
        ok = comps == [("A", 1), ("A", 1)]
    if not ok:
        return ReVerdict(False, f"type {tstr} is not D-series or B3", tstr)
    form = _theta_form(datum, closure, comps)
    if form is None:
        return ReVerdict(False, "contact form does not match the canonical shape", tstr)
    return ReVerdict(True, "ok", tstr, form)


def _theta_form(datum: ContactDatum, closure: Subsystem, comps) -> Optional[str]:
    """Canonical contact-form tag for an accepted candidate subsystem."""
    sys = datum.system
    theta = datum.theta
    tilde_ro = [i for i in closure.members if i in datum.Ro.members]
    inside = Subsystem(sys, frozenset(tilde_ro))
    if comps == [("A", 1), ("A", 1)]:
        # theta = alpha - alpha' across the two A1 factors
        return "difference-of-roots" if not tilde_ro else None
    (t, r) = comps[0]
    want = {("A", 3): [("A", 1), ("A", 1)], ("B", 3): [("A", 2)]}.get(
        (t, r), [("D", r - 1)] if r >= 5 else [("A", 3)]
    )
    if sorted(inside.classify()) != sorted(want):
        return None
    if (t, r) == ("B", 3):
        return "sum-of-three"
    return "double-weight"  # the 2*eps_1 shape, triality variants included


@dataclass(frozen=True)
class PartitionResult:
    RQ: frozenset[int]
    RP: frozenset[int]
    RJ_plus: frozenset[int]
    RJ_minus: frozenset[int]
    tilde_Ro: frozenset[int]
    Rprime_o: frozenset[int]
    rq_closed: bool
    rp_closed: bool
    rp_parabolic: bool
    orthogonal_split: bool


def partition_sets(datum: ContactDatum, re_roots: frozenset[int]) -> PartitionResult:
    """The R_Q / R_P partition of a candidate with its closure flags.

    R_J is split into positive and negative halves by the ambient ordering,
    which agrees with a nilradical-compatible ordering for all classified
    configurations.
    """
    sys = datum.system
    rj = frozenset(datum.Rprime) - re_roots
    rj_plus = frozenset(i for i in rj if sys.positive[i])
    rj_minus = rj - rj_plus
    ro = frozenset(datum.Ro.members)
    rq = ro | re_roots
    rp = rq | rj_plus
    closure = sys.closed_span([sys.roots[i] for i in re_roots]) if re_roots else Subsystem(sys, frozenset())
    tilde_ro = frozenset(closure.members) & ro
    rprime_o = ro - tilde_ro
    orth = all(
        sys.inner(sys.roots[i], sys.roots[j]) == 0
        for i in rprime_o
        for j in closure.members
    )
    return PartitionResult(
        RQ=rq,
        RP=rp,
        RJ_plus=rj_plus,
        RJ_minus=rj_minus,
        tilde_Ro=tilde_ro,
        Rprime_o=rprime_o,
        rq_closed=Subsystem(sys, rq).is_closed(),
        rp_closed=Subsystem(sys, rp).is_closed(),
        rp_parabolic=all(
            i in rp or sys.neg_index[i] in rp for i in range(len(sys.roots))
        ),
        orthogonal_split=orth,
    )


def s_set(datum: ContactDatum, pair: tuple[int, int], rj_plus: frozenset[int]) -> frozenset[int]:
    """R_o together with the R_o-strings through alpha and -alpha' and R_J+."""
    sys = datum.system
    a, b = pair
    ro = frozenset(datum.Ro.members)
    out = set(ro) | set(rj_plus)
    for seed in (a, sys.neg_index[b]):
        out.add(seed)
        for d in ro:
            k = sys.sum_index(seed, d)
            if k is not None:
                out.add(k)
    return frozenset(out)
