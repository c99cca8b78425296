"""Chevalley basis: integer structure constants, root strings, exact brackets.

Structure-constant signs are fixed by the extraspecial-pair construction
over the simple-root ordering of the ambient system; the magnitudes
|N(a,b)| = p+1 are convention-independent.  Lie algebra elements are formal
combinations of root vectors E_a and Cartan elements with coefficients in
the Gaussian-rational polynomial ring, so every bracket is exact.

The compact real form is span_R{ i*H, E_a - E_{-a}, i(E_a + E_{-a}) } and
conjugation is taken relative to it: conj(E_a) = -E_{-a}, conj(H) = -H
antilinearly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .rootsys import RootSystem, RootVector
from .scalars import Gauss, P_ZERO, Poly, as_poly

Q = Fraction


class ChevalleyError(ValueError):
    pass


def root_string(system: RootSystem, alpha: RootVector, beta: RootVector) -> tuple[int, int]:
    """(p_down, p_up): maximal k with beta -/+ k*alpha still a root."""
    ia, ib = system.root_index(alpha), system.root_index(beta)
    if ia is None or ib is None:
        raise ChevalleyError("root_string arguments must be roots")
    if ib == ia or ib == system.neg_index[ia]:
        raise ChevalleyError("root string through +/-alpha is undefined")
    down = 0
    v = beta - alpha
    while system.is_root(v):
        down += 1
        v = v - alpha
    up = 0
    v = beta + alpha
    while system.is_root(v):
        up += 1
        v = v + alpha
    return down, up


class ConstantTable:
    """All Chevalley constants N(a, b) for one root system."""

    def __init__(self, system: RootSystem):
        self.system = system
        n = len(system.roots)
        self._n: dict[tuple[int, int], int] = {}
        self._pos_order = sorted(
            (i for i in range(n) if system.positive[i]),
            key=lambda i: (system.height(i), system.roots[i].canon()),
        )
        self._pos_rank = {i: k for k, i in enumerate(self._pos_order)}
        self._build_positive()

    # -- public API ------------------------------------------------------------

    def n(self, i: int, j: int) -> int:
        """N(root_i, root_j); zero when the sum is not a root."""
        sys = self.system
        if sys.sum_index(i, j) is None:
            return 0
        return self._general(i, j)

    # -- construction ------------------------------------------------------------

    def _build_positive(self):
        sys = self.system
        for k in self._pos_order:
            if sys.height(k) < 2:
                continue
            pairs = self._special_pairs(k)
            a, b = pairs[0]
            p, _ = root_string(sys, sys.roots[a], sys.roots[b])
            self._n[(a, b)] = p + 1
            self._n[(b, a)] = -(p + 1)
            for x, y in pairs[1:]:
                val = self._derive(a, b, k, x, y)
                self._n[(x, y)] = val
                self._n[(y, x)] = -val

    def _special_pairs(self, k: int) -> list[tuple[int, int]]:
        """Positive pairs summing to root k, the extraspecial one first."""
        sys = self.system
        pairs = []
        for a in self._pos_order:
            b = sys.root_index(sys.roots[k] - sys.roots[a])
            if b is not None and sys.positive[b] and self._pos_rank[a] < self._pos_rank[b]:
                pairs.append((a, b))
        pairs.sort(key=lambda ab: self._pos_rank[ab[0]])
        return pairs

    def _derive(self, a: int, b: int, k: int, x: int, y: int) -> int:
        """Constant for the special pair (x, y) from the extraspecial (a, b).

        Jacobi identity for (E_{-a}, E_x, E_y), using x + y = a + b = root_k.
        """
        sys = self.system
        na = sys.neg_index[a]
        lhs_c = self._mixed(na, k)
        assert lhs_c != 0
        total = 0
        xa = sys.sum_index(na, x)
        if xa is not None:
            total += self._mixed(na, x) * self._lookup_pos(xa, y)
        ya = sys.sum_index(na, y)
        if ya is not None:
            total += self._mixed(na, y) * self._lookup_pos(x, ya)
        val, rem = divmod(total, lhs_c)
        assert rem == 0, "non-integral derived structure constant"
        return val

    def _lookup_pos(self, i: int, j: int) -> int:
        """Constant for two positive roots with a root sum (already computed)."""
        if self.system.sum_index(i, j) is None:
            return 0
        return self._n[(i, j)]

    def _mixed(self, ni: int, j: int) -> int:
        """N(-a, x) for positive a, x via the cyclic identity.

        With d = x - a a root: N(-a, x) = |d|^2/|x|^2 * N(a, d) when d > 0,
        and |d|^2/|a|^2 * N(x, -d) when d < 0.
        """
        sys = self.system
        a = sys.neg_index[ni]
        d = sys.sum_index(ni, j)
        if d is None:
            return 0
        ratio_num = sys.norm2(d)
        if sys.positive[d]:
            val = Q(ratio_num, sys.norm2(j)) * self._lookup_pos(a, d)
        else:
            e = sys.neg_index[d]
            val = Q(ratio_num, sys.norm2(a)) * self._lookup_pos(j, e)
        assert val.denominator == 1
        return int(val)

    def _general(self, i: int, j: int) -> int:
        """Reduce arbitrary signs to positive pairs via the cyclic identity
        N(x, y)/|z|^2 = N(y, z)/|x|^2 = N(z, x)/|y|^2 for x + y + z = 0."""
        sys = self.system
        pi, pj = sys.positive[i], sys.positive[j]
        if pi and pj:
            return self._lookup_pos(i, j)
        if not pi and not pj:
            return -self._general(sys.neg_index[i], sys.neg_index[j])
        if not pi:
            return -self._general(j, i)
        # i positive, j negative, k = i + j a root
        k = sys.sum_index(i, j)
        nj, nk = sys.neg_index[j], sys.neg_index[k]
        if sys.positive[k]:
            val = -Q(sys.norm2(k), sys.norm2(i)) * self._lookup_pos(nj, k)
        else:
            val = -Q(sys.norm2(k), sys.norm2(j)) * self._lookup_pos(i, nk)
        assert val.denominator == 1
        return int(val)


_TABLES: dict[int, ConstantTable] = {}


def constants(system: RootSystem) -> ConstantTable:
    key = id(system)
    if key not in _TABLES:
        _TABLES[key] = ConstantTable(system)
    return _TABLES[key]


def structure_const(system: RootSystem, alpha: RootVector, beta: RootVector) -> int:
    ia, ib = system.root_index(alpha), system.root_index(beta)
    if ia is None or ib is None:
        raise ChevalleyError("structure_const arguments must be roots")
    if system.sum_index(ia, ib) is None:
        raise ChevalleyError("alpha + beta is not a root")
    return constants(system).n(ia, ib)


class LieElement:
    """Formal combination sum c_a E_a + H(v) with polynomial coefficients.

    The Cartan part is stored as an ambient coordinate vector v; the element
    H(v) acts on a root vector E_b by (b, v) E_b, so the coroot H_a
    corresponds to v = 2a/(a, a).
    """

    __slots__ = ("system", "e", "h")

    def __init__(self, system: RootSystem, e: Mapping[int, Poly] | None = None,
                 h: Iterable[Poly] | None = None):
        self.system = system
        self.e = {i: c for i, c in (e or {}).items() if not c.is_zero()}
        if h is None:
            self.h = tuple([P_ZERO] * system.dim)
        else:
            self.h = _gauge_h(system, tuple(h))

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def zero(system: RootSystem) -> "LieElement":
        return LieElement(system)

    @staticmethod
    def root_vector(system: RootSystem, alpha: RootVector, coeff=1) -> "LieElement":
        i = system.root_index(alpha)
        if i is None:
            raise ChevalleyError("not a root")
        return LieElement(system, {i: as_poly(coeff)})

    @staticmethod
    def cartan(system: RootSystem, v: RootVector, coeff=1) -> "LieElement":
        c = as_poly(coeff)
        return LieElement(system, {}, [c * Poly.const(Gauss(x)) for x in v.coords])

    @staticmethod
    def coroot(system: RootSystem, alpha: RootVector) -> "LieElement":
        i = system.root_index(alpha)
        if i is None:
            raise ChevalleyError("coroot of a non-root")
        scale = Q(2) / system.norm2(i)
        vec = RootVector(system, [scale * x for x in alpha.coords])
        return LieElement.cartan(system, vec)

    # -- ring operations ----------------------------------------------------------

    def __add__(self, other: "LieElement") -> "LieElement":
        self._check(other)
        e = dict(self.e)
        for i, c in other.e.items():
            e[i] = e.get(i, P_ZERO) + c
        h = tuple(a + b for a, b in zip(self.h, other.h))
        return LieElement(self.system, e, h)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scale(-1)

    def __neg__(self) -> "LieElement":
        return self.scale(-1)

    def scale(self, c) -> "LieElement":
        c = as_poly(c)
        return LieElement(
            self.system,
            {i: c * x for i, x in self.e.items()},
            tuple(c * x for x in self.h),
        )

    def _check(self, other: "LieElement"):
        if other.system is not self.system:
            raise ChevalleyError("elements over different root systems")

    def is_zero(self) -> bool:
        return not self.e and all(x.is_zero() for x in self.h)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("LieElement is unhashable")

    # -- structure ---------------------------------------------------------------

    def bracket(self, other: "LieElement") -> "LieElement":
        self._check(other)
        sys = self.system
        tab = constants(sys)
        e: dict[int, Poly] = {}
        h = [P_ZERO] * sys.dim

        def add_e(i: int, c: Poly):
            e[i] = e.get(i, P_ZERO) + c

        for i, ci in self.e.items():
            for j, cj in other.e.items():
                if j == sys.neg_index[i]:
                    scale = Q(2) / sys.norm2(i)
                    prod = ci * cj
                    for k, x in enumerate(sys.roots[i].coords):
                        if x:
                            h[k] = h[k] + prod * Poly.const(Gauss(scale * x))
                else:
                    k = sys.sum_index(i, j)
                    if k is not None:
                        add_e(k, Poly.const(Gauss(tab.n(i, j))) * ci * cj)
        if any(not x.is_zero() for x in self.h):
            for j, cj in other.e.items():
                val = _pair_vec(sys, j, self.h)
                if not val.is_zero():
                    add_e(j, val * cj)
        if any(not x.is_zero() for x in other.h):
            for i, ci in self.e.items():
                val = _pair_vec(sys, i, other.h)
                if not val.is_zero():
                    add_e(i, -(val * ci))
        return LieElement(sys, e, h)

    def conjugate(self) -> "LieElement":
        """Antilinear conjugation fixing the compact real form."""
        sys = self.system
        e = {sys.neg_index[i]: -c.conj() for i, c in self.e.items()}
        h = tuple(-c.conj() for c in self.h)
        return LieElement(sys, e, h)

    def subs(self, values: Mapping[str, Gauss]) -> "LieElement":
        return LieElement(
            self.system,
            {i: c.subs(values) for i, c in self.e.items()},
            tuple(c.subs(values) for c in self.h),
        )

    def eval_functional(self, v: RootVector) -> Poly:
        """(v, H-part) via the ambient bilinear form."""
        return _inner_vec(self.system, v, self.h)

    def coords_vector(self, root_order: list[int], cartan_basis: list[RootVector]) -> list[Poly]:
        """Coordinates of the element in E_roots + chosen Cartan directions.

        The Cartan part must lie in the span of cartan_basis; raises otherwise.
        """
        out = [self.e.get(i, P_ZERO) for i in root_order]
        out.extend(_cartan_coords(self.system, self.h, cartan_basis))
        return out

    def __repr__(self):
        from .rootsys import format_vector

        parts = []
        for i in sorted(self.e):
            parts.append(f"({self.e[i]})E[{format_vector(self.system.roots[i])}]")
        if any(not x.is_zero() for x in self.h):
            parts.append("H(" + ",".join(str(x) for x in self.h) + ")")
        return " + ".join(parts) if parts else "0"


def _gauge_h(system: RootSystem, h: tuple[Poly, ...]) -> tuple[Poly, ...]:
    """Project out the relation-block kernels (all-ones directions)."""
    out = list(h)
    for b in system.blocks:
        if b.kind != "rel":
            continue
        total = P_ZERO
        for k in range(b.start, b.start + b.size):
            total = total + out[k]
        if total.is_zero():
            continue
        mean = total.scale(Q(1, b.size))
        for k in range(b.start, b.start + b.size):
            out[k] = out[k] - mean
    return tuple(out)


def _pair_vec(system: RootSystem, root_idx: int, h: tuple[Poly, ...]) -> Poly:
    """(root, v) where v has polynomial coordinates."""
    grow = _gram_row(system, root_idx)
    total = P_ZERO
    for g, c in zip(grow, h):
        if g and not c.is_zero():
            total = total + c * Poly.const(Gauss(g))
    return total


def _inner_vec(system: RootSystem, v: RootVector, h: tuple[Poly, ...]) -> Poly:
    grow = _gram_apply(system, v.coords)
    total = P_ZERO
    for g, c in zip(grow, h):
        if g and not c.is_zero():
            total = total + c * Poly.const(Gauss(g))
    return total


def _gram_apply(system: RootSystem, coords) -> tuple[Q, ...]:
    """Covector G*coords, so (u, v) = sum (G u)_k v_k."""
    out = [Q(0)] * system.dim
    for b in system.blocks:
        seg = coords[b.start : b.start + b.size]
        if b.kind == "ortho":
            for i, x in enumerate(seg):
                out[b.start + i] = x
        elif b.kind == "rel":
            m = sum(seg) / b.size
            for i, x in enumerate(seg):
                out[b.start + i] = x - m
        else:
            out[b.start] = seg[0] / 2
    return tuple(out)


_GRAM_ROWS: dict[tuple[int, int], tuple[Q, ...]] = {}


def _gram_row(system: RootSystem, i: int) -> tuple[Q, ...]:
    key = (id(system), i)
    if key not in _GRAM_ROWS:
        _GRAM_ROWS[key] = _gram_apply(system, system.roots[i].coords)
    return _GRAM_ROWS[key]


def _cartan_coords(system: RootSystem, h: tuple[Poly, ...], basis: list[RootVector]) -> list[Poly]:
    """Express a polynomial Cartan vector in a rational basis (gauge-aware)."""
    from .linalg import SpanSolver

    if not basis:
        if any(not c.is_zero() for c in h):
            raise ChevalleyError("Cartan part outside the allowed span")
        return []
    solver = SpanSolver([b.canon() for b in basis])
    # decompose each monomial's rational coordinate vector independently
    mono_vecs: dict[tuple, list[Q]] = {}
    for k, c in enumerate(h):
        for m, g in c.terms.items():
            if g.im != 0:
                mono_vecs.setdefault((m, "im"), [Q(0)] * system.dim)[k] = g.im
            if g.re != 0:
                mono_vecs.setdefault((m, "re"), [Q(0)] * system.dim)[k] = g.re
    out = [P_ZERO] * len(basis)
    for (m, part), vec in mono_vecs.items():
        gauge = RootVector(system, vec).canon()
        coeffs = solver.reduce(list(gauge))
        if coeffs is None:
            raise ChevalleyError("Cartan part outside the allowed span")
        unit = Gauss(1) if part == "re" else Gauss(0, 1)
        for j, q in enumerate(coeffs):
            if q:
                out[j] = out[j] + Poly({m: unit * Gauss(q)})
    return out
