"""Contact elements, centralizer decompositions and ad-eigenspace gradations.

A contact element is encoded by its dual form on the Cartan subalgebra: a
nonzero vector theta in the rational span of the roots.  The centralizer
root system is R_o = R intersect theta-perp and the isotropy roots are
R' = R \\ R_o.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .rootsys import RootSystem, RootVector, Subsystem

Q = Fraction


class ContactError(ValueError):
    pass


@dataclass(frozen=True)
class ContactDatum:
    """A homogeneous contact manifold, as root data."""

    system: RootSystem
    theta: RootVector
    Ro: Subsystem
    Rprime: frozenset[int]

    @property
    def ro_positive(self) -> list[int]:
        return [i for i in self.Ro.members if self.system.positive[i]]

    def theta_pairing(self, i: int) -> Q:
        return self.system.inner(self.system.roots[i], self.theta)


def contact_datum(system: RootSystem, theta: RootVector) -> ContactDatum:
    if theta.is_zero():
        raise ContactError("contact form must be nonzero")
    if not system.in_root_span(theta):
        raise ContactError("contact form must lie in the span of the roots")
    ortho = frozenset(
        i for i, r in enumerate(system.roots) if system.inner(r, theta) == 0
    )
    rprime = frozenset(range(len(system.roots))) - ortho
    return ContactDatum(system, theta, Subsystem(system, ortho), rprime)


class Gradation:
    """Integer eigenspace decomposition of the root set by a grading vector."""

    def __init__(self, system: RootSystem, center: RootVector):
        self.system = system
        self.center = center
        self.levels: dict[int, frozenset[int]] = {}
        buckets: dict[int, set[int]] = {}
        for i, r in enumerate(system.roots):
            v = system.pairing(r, center) if system.is_root(center) else None
            if v is None:
                raise ContactError("grading center must be a root")
            if v.denominator != 1:
                raise ContactError("non-integral grading level")
            buckets.setdefault(int(v), set()).add(i)
        self.levels = {k: frozenset(v) for k, v in buckets.items()}

    def level_of(self, i: int) -> int:
        for k, s in self.levels.items():
            if i in s:
                return k
        raise KeyError(i)

    def level(self, k: int) -> frozenset[int]:
        return self.levels.get(k, frozenset())

    def summands(self, k: int) -> list[frozenset[int]]:
        """Irreducible pieces of level k under the level-0 root strings."""
        ro = self.level(0)
        return _string_components(self.system, self.level(k), ro)

    def max_level(self) -> int:
        return max(self.levels)

    def check_bracket_compatibility(self) -> bool:
        sys = self.system
        lv = {}
        for k, s in self.levels.items():
            for i in s:
                lv[i] = k
        for i in lv:
            for j in lv:
                k = sys.sum_index(i, j)
                if k is not None and lv[k] != lv[i] + lv[j]:
                    return False
        return True


def _string_components(system: RootSystem, roots: frozenset[int], ro: frozenset[int]) -> list[frozenset[int]]:
    remaining = set(roots)
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for d in ro:
                j = system.sum_index(i, d)
                if j is not None and j in remaining:
                    remaining.discard(j)
                    comp.add(j)
                    frontier.append(j)
        comps.append(frozenset(comp))
    return sorted(comps, key=lambda c: sorted(system.roots[i].canon() for i in c))


def grade_by_highest_root(system: RootSystem) -> Gradation:
    """The five-level gradation by the highest root."""
    if not system.is_simple:
        raise ContactError("highest-root gradation needs a simple system")
    g = Gradation(system, system.highest_root())
    if g.max_level() != 2:
        raise ContactError("unexpected gradation depth")
    return g


def grade_by_short_root_g2(system: RootSystem) -> Gradation:
    """The seven-level gradation of G2 by the dominant short root."""
    if system.components != (("G", 2),):
        raise ContactError("short-root gradation is specific to G2")
    short = min(
        (i for i in range(len(system.roots))),
        key=lambda i: (system.norm2(i),),
    )
    nu = system.dominant(system.roots[short])
    g = Gradation(system, nu)
    if g.max_level() != 3:
        raise ContactError("unexpected G2 gradation depth")
    return g


def special_roots(system: RootSystem) -> list[RootVector]:
    """Weyl-orbit representatives of roots whose orthogonal complement
    contains no root beta with alpha +- beta again a root."""
    if not system.is_simple:
        raise ContactError("special roots are classified for simple systems")
    reps: dict[Q, RootVector] = {}
    ok: dict[Q, bool] = {}
    for i, alpha in enumerate(system.roots):
        n = system.norm2(i)
        if n in ok:
            continue
        good = True
        for j, beta in enumerate(system.roots):
            if system.inner(alpha, beta) == 0:
                if system.is_root(alpha + beta) or system.is_root(alpha - beta):
                    good = False
                    break
        ok[n] = good
        if good:
            reps[n] = system.dominant(alpha)
    return [reps[n] for n in sorted(reps, reverse=True)]


def root_subalgebra_centralizer(system: RootSystem, alpha: RootVector) -> Subsystem:
    """Roots of the centralizer of the three-dimensional subalgebra of alpha:
    beta orthogonal to alpha with alpha +- beta not a root."""
    if not system.is_root(alpha):
        raise ContactError("centralizer of a non-root")
    members = set()
    for i, beta in enumerate(system.roots):
        if system.inner(alpha, beta) == 0 and not (
            system.is_root(alpha + beta) or system.is_root(alpha - beta)
        ):
            members.add(i)
    return Subsystem(system, frozenset(members))


@dataclass(frozen=True)
class SpecialContactRow:
    """One special contact manifold G/L with its defining root."""

    system: RootSystem
    alpha: RootVector
    length: str  # "long" or "short"
    stabilizer: Subsystem

    def stabilizer_type(self) -> str:
        return self.stabilizer.type_str()


def classify_special(system: RootSystem) -> list[SpecialContactRow]:
    rows = []
    norms = sorted({system.norm2(i) for i in range(len(system.roots))})
    for alpha in special_roots(system):
        n = system.inner(alpha, alpha)
        length = "long" if n == norms[-1] else "short"
        rows.append(
            SpecialContactRow(system, alpha, length, root_subalgebra_centralizer(system, alpha))
        )
    return rows
