"""Root systems in the coordinate conventions of the classification tables.

B/C/D/F4 live in an orthonormal basis e1..el.  A, E7, E8 and G2 use the
relation basis: l+1 vectors summing to zero with Gram matrix
(ei, ej) = l/(l+1) for i = j and -1/(l+1) otherwise.  E6 uses six relation
vectors (l = 5) plus one auxiliary vector e with (e, e) = 1/2.  Coordinates
in a relation block are only defined up to adding a multiple of
(1, ..., 1); equality and hashing go through a sum-zero gauge.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .linalg import SpanSolver

Q = Fraction

VALID_TYPES = ("A", "B", "C", "D", "E", "F", "G")

# (type, rank) -> number of roots, for the build-time sanity check
ROOT_COUNTS = {
    "A": lambda l: l * (l + 1),
    "B": lambda l: 2 * l * l,
    "C": lambda l: 2 * l * l,
    "D": lambda l: 2 * l * (l - 1),
    "E": {6: 72, 7: 126, 8: 240},
    "F": {4: 48},
    "G": {2: 12},
}


class RootSystemError(ValueError):
    """Invalid type/rank combination or ill-formed query."""


@dataclass(frozen=True)
class Block:
    """One coordinate block of the ambient space."""

    kind: str  # "ortho", "rel" or "aux"
    start: int
    size: int


class RootVector:
    """Exact coordinate vector in the ambient basis of its system."""

    __slots__ = ("system", "coords", "_canon")

    def __init__(self, system: "RootSystem", coords: Sequence):
        self.system = system
        self.coords = tuple(Q(c) for c in coords)
        if len(self.coords) != system.dim:
            raise RootSystemError("coordinate length does not match ambient space")
        self._canon = None

    def canon(self) -> tuple:
        """Sum-zero gauge representative, the hashable normal form."""
        if self._canon is None:
            c = list(self.coords)
            for b in self.system.blocks:
                if b.kind == "rel":
                    m = sum(c[b.start : b.start + b.size]) / b.size
                    for i in range(b.start, b.start + b.size):
                        c[i] -= m
            self._canon = tuple(c)
        return self._canon

    def __add__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(self.system, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(self.system, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "RootVector":
        return RootVector(self.system, [-a for a in self.coords])

    def __rmul__(self, s) -> "RootVector":
        return RootVector(self.system, [Q(s) * a for a in self.coords])

    def _check(self, other: "RootVector"):
        if other.system is not self.system:
            raise RootSystemError("vectors belong to different ambient spaces")

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.canon())

    def __eq__(self, other) -> bool:
        if not isinstance(other, RootVector):
            return NotImplemented
        return self.system is other.system and self.canon() == other.canon()

    def __hash__(self):
        return hash((id(self.system), self.canon()))

    def __repr__(self):
        return f"RootVector({format_vector(self)})"


class RootSystem:
    """A (possibly reducible) root system with its simple basis and tables."""

    def __init__(self, components: Sequence[tuple[str, int]]):
        self.components = tuple((t, int(r)) for t, r in components)
        for t, r in self.components:
            _validate(t, r)
        self.blocks: list[Block] = []
        self.comp_blocks: list[list[Block]] = []
        dim = 0
        for t, r in self.components:
            blocks = []
            for kind, size in _block_layout(t, r):
                blocks.append(Block(kind, dim, size))
                dim += size
            self.comp_blocks.append(blocks)
            self.blocks.extend(blocks)
        self.dim = dim

        roots: list[RootVector] = []
        simples: list[RootVector] = []
        for ci, (t, r) in enumerate(self.components):
            off = self.comp_blocks[ci][0].start
            for c in _component_roots(t, r):
                roots.append(self._embed(c, off))
            for c in _component_simples(t, r):
                simples.append(self._embed(c, off))
        self.roots = roots
        self.simple_roots = simples
        self.rank = len(simples)
        self._index = {v.canon(): i for i, v in enumerate(roots)}
        if len(self._index) != len(roots):
            raise RootSystemError("duplicate roots generated")
        expected = sum(_root_count(t, r) for t, r in self.components)
        if len(roots) != expected:
            raise RootSystemError(f"expected {expected} roots, generated {len(roots)}")

        self._simple_span = SpanSolver([v.canon() for v in simples])
        self.expansions = []
        for v in roots:
            coeffs = self._simple_span.reduce(v.canon())
            if coeffs is None:
                raise RootSystemError("root outside the span of the simple basis")
            self.expansions.append(tuple(coeffs))
        for e in self.expansions:
            if any(x.denominator != 1 for x in e):
                raise RootSystemError("non-integral simple-root expansion")
            if not (all(x >= 0 for x in e) or all(x <= 0 for x in e)):
                raise RootSystemError("mixed-sign simple-root expansion")
        self.positive = [all(x >= 0 for x in e) for e in self.expansions]
        self.neg_index = [self._index[(-v).canon()] for v in roots]
        self._sum_table: dict[tuple[int, int], Optional[int]] = {}
        self._norms = [self.inner(v, v) for v in roots]

    # -- construction helpers -------------------------------------------------

    def _embed(self, comp_coords: Sequence, offset: int) -> RootVector:
        c = [Q(0)] * self.dim
        for i, x in enumerate(comp_coords):
            c[offset + i] = Q(x)
        return RootVector(self, c)

    def vector(self, coords: Sequence) -> RootVector:
        return RootVector(self, coords)

    # -- basic queries ---------------------------------------------------------

    @property
    def is_simple(self) -> bool:
        return len(self.components) == 1

    def type_str(self) -> str:
        return "+".join(f"{t}{r}" for t, r in self.components)

    def inner(self, u: RootVector, v: RootVector) -> Q:
        if u.system is not self or v.system is not self:
            raise RootSystemError("vectors belong to a different system")
        total = Q(0)
        for b in self.blocks:
            uu = u.coords[b.start : b.start + b.size]
            vv = v.coords[b.start : b.start + b.size]
            dot = sum(a * c for a, c in zip(uu, vv))
            if b.kind == "ortho":
                total += dot
            elif b.kind == "rel":
                total += dot - sum(uu) * sum(vv) / b.size
            else:  # aux
                total += dot / 2
        return total

    def pairing(self, u: RootVector, beta: RootVector) -> Q:
        """2 (u, beta) / (beta, beta); beta must be a root."""
        bi = self.root_index(beta)
        if bi is None:
            raise RootSystemError("pairing against a non-root")
        return 2 * self.inner(u, beta) / self._norms[bi]

    def root_index(self, v: RootVector) -> Optional[int]:
        return self._index.get(v.canon())

    def is_root(self, v: RootVector) -> bool:
        return v.canon() in self._index

    def norm2(self, i: int) -> Q:
        return self._norms[i]

    def height(self, i: int) -> Q:
        return sum(self.expansions[i])

    def sum_index(self, i: int, j: int) -> Optional[int]:
        key = (i, j)
        if key not in self._sum_table:
            self._sum_table[key] = self.root_index(self.roots[i] + self.roots[j])
        return self._sum_table[key]

    # -- reflections and Weyl machinery ----------------------------------------

    def reflect(self, alpha: RootVector, v: RootVector) -> RootVector:
        if not self.is_root(alpha):
            raise RootSystemError("reflection axis must be a root")
        return v - self.pairing(v, alpha) * alpha

    def weyl_orbit(self, v: RootVector) -> list[RootVector]:
        seen = {v.canon(): v}
        frontier = [v]
        while frontier:
            nxt = []
            for w in frontier:
                for a in self.simple_roots:
                    r = self.reflect(a, w)
                    if r.canon() not in seen:
                        seen[r.canon()] = r
                        nxt.append(r)
            frontier = nxt
        return list(seen.values())

    def dominant(self, v: RootVector) -> RootVector:
        """The dominant Weyl-chamber representative of the orbit of v."""
        w = v
        while True:
            for a in self.simple_roots:
                if self.inner(w, a) < 0:
                    w = self.reflect(a, w)
                    break
            else:
                return w

    def highest_root(self) -> RootVector:
        if not self.is_simple:
            raise RootSystemError("highest root is defined for simple systems only")
        best = max(range(len(self.roots)), key=lambda i: (self.height(i), self._norms[i]))
        mu = self.roots[best]
        for a in self.simple_roots:
            if self.is_root(mu + a):
                raise RootSystemError("height-maximal root is not highest")
        return mu

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """C[i][j] = <alpha_i | alpha_j> = 2 (a_i, a_j) / (a_j, a_j)."""
        if not hasattr(self, "_cartan"):
            self._cartan = tuple(
                tuple(int(self.pairing(ai, aj)) for aj in self.simple_roots)
                for ai in self.simple_roots
            )
        return self._cartan

    def in_root_span(self, v: RootVector) -> bool:
        return self._simple_span.contains(v.canon())

    # -- subsystems -------------------------------------------------------------

    def closed_span(self, seed: Iterable[RootVector]) -> "Subsystem":
        seed = list(seed)
        for s in seed:
            if not self.is_root(s):
                raise RootSystemError("closed_span seed must consist of roots")
        span = SpanSolver([s.canon() for s in seed])
        members = frozenset(
            i for i, v in enumerate(self.roots) if span.contains(v.canon())
        )
        return Subsystem(self, members)

    def subsystem(self, roots: Iterable[RootVector]) -> "Subsystem":
        idx = set()
        for v in roots:
            i = self.root_index(v)
            if i is None:
                raise RootSystemError("subsystem member is not a root")
            idx.add(i)
        return Subsystem(self, frozenset(idx))

    # -- diagram automorphisms ---------------------------------------------------

    def diagram_automorphisms(self) -> list[tuple[int, ...]]:
        """Node permutations generating the Dynkin-graph symmetry group."""
        gens: list[tuple[int, ...]] = []
        offsets = []
        pos = 0
        for t, r in self.components:
            offsets.append(pos)
            pos += r
        n = self.rank
        for ci, (t, r) in enumerate(self.components):
            o = offsets[ci]
            perm = list(range(n))
            if t == "A" and r >= 2:
                for i in range(r):
                    perm[o + i] = o + (r - 1 - i)
                gens.append(tuple(perm))
            elif t == "D" and r >= 3:
                perm[o + r - 2], perm[o + r - 1] = perm[o + r - 1], perm[o + r - 2]
                gens.append(tuple(perm))
                if r == 4:
                    tri = list(range(n))
                    tri[o + 0], tri[o + 2], tri[o + 3] = o + 2, o + 3, o + 0
                    gens.append(tuple(tri))
            elif t == "E" and r == 6:
                perm[o + 0], perm[o + 4] = o + 4, o + 0
                perm[o + 1], perm[o + 3] = o + 3, o + 1
                gens.append(tuple(perm))
        for ci in range(len(self.components)):
            for cj in range(ci + 1, len(self.components)):
                if self.components[ci] == self.components[cj]:
                    r = self.components[ci][1]
                    perm = list(range(n))
                    for k in range(r):
                        perm[offsets[ci] + k] = offsets[cj] + k
                        perm[offsets[cj] + k] = offsets[ci] + k
                    gens.append(tuple(perm))
        return _close_group(gens, n)

    def apply_node_map(self, perm: tuple[int, ...], v: RootVector) -> RootVector:
        """Linear extension of alpha_i -> alpha_{perm[i]} applied to v."""
        coeffs = self._simple_span.reduce(v.canon())
        if coeffs is None:
            raise RootSystemError("vector outside the root span")
        out = RootVector(self, [0] * self.dim)
        for i, c in enumerate(coeffs):
            if c:
                out = out + c * self.simple_roots[perm[i]]
        return out

    def canonical_form(self, v: RootVector) -> RootVector:
        """Canonical representative of v up to Weyl group, diagram symmetry,
        sign, and positive scaling (primitive integer coordinates)."""
        best = None
        for w in (v, -v):
            d = self.dominant(w)
            for perm in self.diagram_automorphisms():
                cand = scale_primitive(self.dominant(self.apply_node_map(perm, d)))
                key = cand.canon()
                if best is None or key > best[0]:
                    best = (key, cand)
        return best[1]


class Subsystem:
    """A subset of the parent's roots, typically closed under addition."""

    def __init__(self, parent: RootSystem, members: frozenset[int]):
        self.parent = parent
        self.members = frozenset(members)

    def root_vectors(self) -> list[RootVector]:
        return [self.parent.roots[i] for i in sorted(self.members)]

    def __len__(self):
        return len(self.members)

    def __contains__(self, v) -> bool:
        if isinstance(v, int):
            return v in self.members
        i = self.parent.root_index(v)
        return i is not None and i in self.members

    def __eq__(self, other):
        return (
            isinstance(other, Subsystem)
            and self.parent is other.parent
            and self.members == other.members
        )

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def is_closed(self) -> bool:
        for i in self.members:
            for j in self.members:
                k = self.parent.sum_index(i, j)
                if k is not None and k not in self.members:
                    return False
        return True

    def is_symmetric(self) -> bool:
        return all(self.parent.neg_index[i] in self.members for i in self.members)

    def orthogonal_components(self) -> list[frozenset[int]]:
        """Partition into mutually orthogonal indecomposable pieces."""
        idx = sorted(self.members)
        parent = self.parent
        remaining = set(idx)
        comps = []
        while remaining:
            seed = remaining.pop()
            comp = {seed}
            frontier = [seed]
            while frontier:
                i = frontier.pop()
                for j in list(remaining):
                    if parent.inner(parent.roots[i], parent.roots[j]) != 0:
                        remaining.discard(j)
                        comp.add(j)
                        frontier.append(j)
            comps.append(frozenset(comp))
        return comps

    def classify(self) -> list[tuple[str, int]]:
        """Type of each indecomposable component, canonically sorted.

        B2 is used for the rank-2 BC system and A3 for D3.
        """
        out = []
        for comp in self.orthogonal_components():
            out.append(self._classify_component(comp))
        return sorted(out)

    def type_str(self) -> str:
        return "+".join(f"{t}{r}" for t, r in self.classify()) if self.members else "0"

    def _classify_component(self, comp: frozenset[int]) -> tuple[str, int]:
        parent = self.parent
        vecs = [parent.roots[i].canon() for i in comp]
        r = SpanSolver(vecs).dim()
        n = len(comp)
        norms = sorted({parent.norm2(i) for i in comp})
        if len(norms) > 2:
            raise RootSystemError("component with more than two root lengths")
        nshort = (
            0
            if len(norms) == 1
            else sum(1 for i in comp if parent.norm2(i) == norms[0])
        )
        sig = (r, n, nshort)
        if sig == (r, r * (r + 1), 0):
            return ("A", r)
        if r >= 2 and sig == (r, 2 * r * r, 2 * r):
            return ("B", r)
        if r >= 3 and sig == (r, 2 * r * r, 2 * r * (r - 1)):
            return ("C", r)
        if r >= 4 and sig == (r, 2 * r * (r - 1), 0):
            return ("D", r)
        if sig == (6, 72, 0):
            return ("E", 6)
        if sig == (7, 126, 0):
            return ("E", 7)
        if sig == (8, 240, 0):
            return ("E", 8)
        if sig == (4, 48, 24):
            return ("F", 4)
        if sig == (2, 12, 6):
            return ("G", 2)
        raise RootSystemError(f"unrecognized subsystem signature {sig}")


# -- component data -------------------------------------------------------------


def _validate(t: str, r: int):
    if t == "A" and r >= 1:
        return
    if t == "B" and r >= 1:
        return
    if t == "C" and r >= 2:
        return
    if t == "D" and r >= 3:
        return
    if t == "E" and r in (6, 7, 8):
        return
    if t == "F" and r == 4:
        return
    if t == "G" and r == 2:
        return
    raise RootSystemError(f"invalid type/rank combination {t}{r}")


def _root_count(t: str, r: int) -> int:
    c = ROOT_COUNTS[t]
    return c[r] if isinstance(c, dict) else c(r)


def _block_layout(t: str, r: int) -> list[tuple[str, int]]:
    if t in ("B", "C", "D", "F"):
        return [("ortho", r)]
    if t == "A":
        return [("rel", r + 1)]
    if t == "G":
        return [("rel", 3)]
    if t == "E" and r == 6:
        return [("rel", 6), ("aux", 1)]
    if t == "E" and r == 7:
        return [("rel", 8)]
    if t == "E" and r == 8:
        return [("rel", 9)]
    raise RootSystemError(f"invalid type {t}{r}")


def _unit(n: int, *pairs) -> list[Q]:
    v = [Q(0)] * n
    for i, val in pairs:
        v[i] = Q(val)
    return v


def _component_roots(t: str, r: int) -> list[list[Q]]:
    out: list[list[Q]] = []
    if t == "A":
        n = r + 1
        for i, j in itertools.permutations(range(n), 2):
            out.append(_unit(n, (i, 1), (j, -1)))
    elif t in ("B", "C", "D"):
        for i, j in itertools.combinations(range(r), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    out.append(_unit(r, (i, si), (j, sj)))
        if t == "B":
            for i in range(r):
                for s in (1, -1):
                    out.append(_unit(r, (i, s)))
        elif t == "C":
            for i in range(r):
                for s in (2, -2):
                    out.append(_unit(r, (i, s)))
    elif t == "G":
        for i, j in itertools.permutations(range(3), 2):
            out.append(_unit(3, (i, 1), (j, -1)))
        for i in range(3):
            for s in (1, -1):
                out.append(_unit(3, (i, s)))
    elif t == "F":
        for i, j in itertools.combinations(range(4), 2):
            for si in (1, -1):
                for sj in (1, -1):
                    out.append(_unit(4, (i, si), (j, sj)))
        for i in range(4):
            for s in (1, -1):
                out.append(_unit(4, (i, s)))
        for signs in itertools.product((Q(1, 2), Q(-1, 2)), repeat=4):
            out.append(list(signs))
    elif t == "E" and r == 6:
        for i, j in itertools.permutations(range(6), 2):
            out.append(_unit(7, (i, 1), (j, -1)))
        out.append(_unit(7, (6, 2)))
        out.append(_unit(7, (6, -2)))
        for i, j, k in itertools.combinations(range(6), 3):
            for s in (1, -1):
                out.append(_unit(7, (i, 1), (j, 1), (k, 1), (6, s)))
    elif t == "E" and r == 7:
        for i, j in itertools.permutations(range(8), 2):
            out.append(_unit(8, (i, 1), (j, -1)))
        seen = set()
        for quad in itertools.combinations(range(8), 4):
            comp = tuple(sorted(set(range(8)) - set(quad)))
            if comp in seen:
                continue
            seen.add(quad)
            out.append(_unit(8, *[(i, 1) for i in quad]))
            out.append(_unit(8, *[(i, 1) for i in comp]))
    elif t == "E" and r == 8:
        for i, j in itertools.permutations(range(9), 2):
            out.append(_unit(9, (i, 1), (j, -1)))
        for tri in itertools.combinations(range(9), 3):
            out.append(_unit(9, *[(i, 1) for i in tri]))
            out.append(_unit(9, *[(i, -1) for i in tri]))
    else:
        raise RootSystemError(f"invalid type {t}{r}")
    return out


def _component_simples(t: str, r: int) -> list[list[Q]]:
    """Simple roots in the node order of the reference tables."""
    if t == "A":
        n = r + 1
        return [_unit(n, (i, 1), (i + 1, -1)) for i in range(r)]
    if t == "B":
        out = [_unit(r, (i, 1), (i + 1, -1)) for i in range(r - 1)]
        out.append(_unit(r, (r - 1, 1)))
        return out
    if t == "C":
        out = [_unit(r, (i, 1), (i + 1, -1)) for i in range(r - 1)]
        out.append(_unit(r, (r - 1, 2)))
        return out
    if t == "D":
        out = [_unit(r, (i, 1), (i + 1, -1)) for i in range(r - 1)]
        out.append(_unit(r, (r - 2, 1), (r - 1, 1)))
        return out
    if t == "G":
        return [_unit(3, (1, -1)), _unit(3, (1, 1), (2, -1))]
    if t == "F":
        return [
            [Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)],
            _unit(4, (3, 1)),
            _unit(4, (2, 1), (3, -1)),
            _unit(4, (1, 1), (2, -1)),
        ]
    if t == "E" and r == 6:
        out = [_unit(7, (i, 1), (i + 1, -1)) for i in range(5)]
        out.append(_unit(7, (3, 1), (4, 1), (5, 1), (6, 1)))
        return out
    if t == "E" and r == 7:
        out = [_unit(8, (i, 1), (i + 1, -1)) for i in range(6)]
        out.append(_unit(8, (4, 1), (5, 1), (6, 1), (7, 1)))
        return out
    if t == "E" and r == 8:
        out = [_unit(9, (i, 1), (i + 1, -1)) for i in range(7)]
        out.append(_unit(9, (5, 1), (6, 1), (7, 1)))
        return out
    raise RootSystemError(f"invalid type {t}{r}")


# -- build API --------------------------------------------------------------------

_CACHE: dict[tuple, RootSystem] = {}


def build(type_tag: str, rank: int | None = None) -> RootSystem:
    """Build a simple root system, e.g. build("G", 2) or build("G2")."""
    if rank is None:
        type_tag, rank = type_tag[0], int(type_tag[1:])
    key = ((type_tag, rank),)
    if key not in _CACHE:
        _CACHE[key] = RootSystem([(type_tag, rank)])
    return _CACHE[key]


def build_product(components: Sequence[tuple[str, int]]) -> RootSystem:
    key = tuple((t, int(r)) for t, r in components)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(key)
    return _CACHE[key]


def parse_type(s: str) -> RootSystem:
    """Parse "B3" or "A2+A3" into a (cached) root system."""
    comps = []
    for part in s.split("+"):
        part = part.strip()
        if not part or part[0] not in VALID_TYPES or not part[1:].isdigit():
            raise RootSystemError(f"cannot parse type string {s!r}")
        comps.append((part[0], int(part[1:])))
    return build_product(comps)


def _close_group(gens: list[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    identity = tuple(range(n))
    group = {identity}
    frontier = [identity]
    while frontier:
        g = frontier.pop()
        for h in gens:
            comp = tuple(h[g[i]] for i in range(n))
            if comp not in group:
                group.add(comp)
                frontier.append(comp)
    return sorted(group)


# -- display ----------------------------------------------------------------------


def scale_primitive(v: RootVector) -> RootVector:
    """Positive rescale to primitive integer gauge coordinates."""
    c = v.canon()
    nz = [x for x in c if x != 0]
    if not nz:
        return v
    from math import gcd

    den = 1
    for x in nz:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [x * den for x in nz]
    g = 0
    for x in ints:
        g = gcd(g, int(x))
    return Q(den, g) * v


def _block_strings(system: RootSystem, v: RootVector) -> list[str]:
    """Per-component coordinate rendering, nicest integer lift per block."""
    parts = []
    for ci, blocks in enumerate(system.comp_blocks):
        sym = "e" + "'" * ci
        terms: list[tuple[Q, str]] = []
        for b in blocks:
            coords = list(v.coords[b.start : b.start + b.size])
            if b.kind == "rel":
                coords = _best_lift(coords)
            if b.kind == "aux":
                names = [sym]
            else:
                names = [f"{sym}{i + 1}" for i in range(b.size)]
            for x, name in zip(coords, names):
                if x != 0:
                    terms.append((x, name))
        parts.append(terms)
    rendered = []
    for terms in parts:
        if not terms:
            continue
        dens = {t[0].denominator for t in terms}
        if dens == {2} or dens == {1, 2}:
            txt = _render_terms([(2 * x, n) for x, n in terms])
            rendered.append(f"({txt})/2")
        else:
            rendered.append(_render_terms(terms))
    return rendered


def _render_terms(terms: list[tuple[Q, str]]) -> str:
    out = ""
    for x, name in terms:
        mag = abs(x)
        piece = name if mag == 1 else f"{mag}{name}"
        if not out:
            out = piece if x > 0 else f"-{piece}"
        else:
            out += ("+" if x > 0 else "-") + piece
    return out


def _best_lift(coords: list[Q]) -> list[Q]:
    """Integer lift of a relation-block vector minimizing the L1 norm."""
    n = len(coords)
    m = sum(coords) / n
    base = [x - m for x in coords]
    candidates = []
    for k in range(-n, n + 1):
        shift = k - base[0]
        lifted = [x + shift for x in base]
        if all(x.denominator == 1 for x in lifted):
            candidates.append(lifted)
    if not candidates:
        return coords
    candidates.sort(
        key=lambda ls: (sum(abs(x) for x in ls), max(abs(x) for x in ls), [-x for x in ls])
    )
    return candidates[0]


def format_vector(v: RootVector) -> str:
    parts = _block_strings(v.system, v)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += "+" + p if not p.startswith("-") else p
    return out
