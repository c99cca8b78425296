"""Three-color painted Dynkin graphs and the CR-graph enumeration.

A painting colors each node white, black or grey.  Admissible graphs carry
a distinguished subgraph of the grey/white nodes: either a simply-laced
D-shape with the grey node at the chain end (connected case), a pair of
grey nodes in the two components of a product (split case), or a single
grey end node whose only neighbor is black (special case).  The induced
contact form theta(Gamma) is the fixed combination of the subgraph's
simple roots; a graph is good when the white nodes span exactly the roots
orthogonal to theta(Gamma).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .rootsys import RootSystem, RootVector, Subsystem, parse_type

WHITE, BLACK, GREY = "w", "b", "g"


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class PaintedGraph:
    system: RootSystem
    colors: tuple[str, ...]

    def __post_init__(self):
        if len(self.colors) != self.system.rank:
            raise GraphError("one color per node is required")
        if any(c not in (WHITE, BLACK, GREY) for c in self.colors):
            raise GraphError("colors must be w, b or g")

    # -- serialization ---------------------------------------------------------

    def serialize(self) -> str:
        parts = []
        pos = 0
        for t, r in self.system.components:
            parts.append(",".join(self.colors[pos : pos + r]))
            pos += r
        return f"{self.system.type_str()}:" + "|".join(parts)

    @staticmethod
    def parse(text: str) -> "PaintedGraph":
        try:
            head, body = text.split(":")
        except ValueError:
            raise GraphError(f"expected TYPE:colors, got {text!r}")
        system = parse_type(head)
        colors = []
        for part in body.split("|"):
            colors.extend(c.strip() for c in part.split(","))
        return PaintedGraph(system, tuple(colors))

    # -- graph structure ---------------------------------------------------------

    def nodes(self, color: str) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == color]

    def adjacency(self) -> list[set[int]]:
        return _adjacency(self.system)

    def recolor(self, mapping: dict[str, str]) -> "PaintedGraph":
        return PaintedGraph(self.system, tuple(mapping.get(c, c) for c in self.colors))


_ADJ_CACHE: dict[int, list[set[int]]] = {}
_COMP_CACHE: dict[int, list[set[int]]] = {}


def _adjacency(system: RootSystem) -> list[set[int]]:
    key = id(system)
    if key not in _ADJ_CACHE:
        C = system.cartan_matrix()
        n = system.rank
        _ADJ_CACHE[key] = [
            set(j for j in range(n) if j != i and C[i][j] != 0) for i in range(n)
        ]
    return _ADJ_CACHE[key]


def _single_laced(system: RootSystem, nodes: frozenset[int]) -> bool:
    C = system.cartan_matrix()
    norms = {system.inner(system.simple_roots[i], system.simple_roots[i]) for i in nodes}
    if len(norms) != 1:
        return False
    for i in nodes:
        for j in nodes:
            if i != j and C[i][j] * C[j][i] not in (0, 1):
                return False
    return True


def _d_shape_chain(system: RootSystem, nodes: frozenset[int], grey: int) -> Optional[list[int]]:
    """Check the D-shape with grey at the chain end; return the chain from
    the grey node to the fork node, or None."""
    if grey not in nodes or len(nodes) < 3 or not _single_laced(system, nodes):
        return None
    adj = {i: set(j for j in _adjacency(system)[i] if j in nodes) for i in nodes}
    if not _connected(nodes, adj):
        return None
    degs = {i: len(adj[i]) for i in nodes}
    if len(nodes) == 3:
        # D3 = A3 rendered as a path with the grey node in the middle
        if sorted(degs.values()) != [1, 1, 2] or degs[grey] != 2:
            return None
        return [grey]
    deg3 = [i for i in nodes if degs[i] == 3]
    if len(deg3) != 1 or sorted(degs.values()).count(1) != 3:
        return None
    fork = deg3[0]
    if degs[grey] != 1:
        return None
    chain = [grey]
    prev = None
    cur = grey
    while cur != fork:
        nxt = [j for j in adj[cur] if j != prev]
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        chain.append(cur)
    if len(chain) != len(nodes) - 2:
        return None
    return chain


def _connected(nodes: frozenset[int], adj: dict[int, set[int]]) -> bool:
    nodes = set(nodes)
    if not nodes:
        return True
    seen = {next(iter(nodes))}
    frontier = list(seen)
    while frontier:
        i = frontier.pop()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    return seen == nodes


@dataclass(frozen=True)
class GraphVerdict:
    admissible: bool
    reason: str
    shape: str = ""  # "d-shape", "split", "special"
    gamma_e: frozenset[int] = frozenset()
    theta: Optional[RootVector] = None
    good: Optional[bool] = None
    witness: Optional[RootVector] = None
    violations: tuple[RootVector, ...] = ()
    cr_type: Optional[str] = None


def _gamma_e_candidates(g: PaintedGraph) -> list[tuple[str, frozenset[int], Optional[list[int]]]]:
    greys = g.nodes(GREY)
    comps = _graph_components(g.system)
    if len(greys) == 2 and len(comps) == 2:
        c1 = next(c for c in comps if greys[0] in c)
        c2 = next(c for c in comps if greys[1] in c)
        if c1 is not c2:
            return [("split", frozenset(greys), None)]
        return []
    if len(greys) != 1 or len(comps) != 1:
        return []
    grey = greys[0]
    adj = _adjacency(g.system)
    region = {grey}
    frontier = [grey]
    while frontier:
        i = frontier.pop()
        for j in adj[i]:
            if j not in region and g.colors[j] == WHITE:
                region.add(j)
                frontier.append(j)
    found = []
    others = sorted(region - {grey})
    for size in range(2, len(region) + 1):
        for extra in itertools.combinations(others, size):
            nodes = frozenset({grey, *extra})
            chain = _d_shape_chain(g.system, nodes, grey)
            if chain is not None:
                found.append(("d-shape", nodes, chain))
    return found


def _graph_components(system: RootSystem) -> list[set[int]]:
    key = id(system)
    if key in _COMP_CACHE:
        return _COMP_CACHE[key]
    adj = _adjacency(system)
    remaining = set(range(system.rank))
    comps = []
    while remaining:
        seed = remaining.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in adj[i]:
                if j in remaining:
                    remaining.discard(j)
                    comp.add(j)
                    frontier.append(j)
        comps.append(comp)
    _COMP_CACHE[key] = comps
    return comps


def theta_of_graph(g: PaintedGraph) -> RootVector:
    v = is_admissible(g)
    if not v.admissible:
        raise GraphError(f"not admissible: {v.reason}")
    return v.theta


def _theta_for(g: PaintedGraph, shape: str, gamma_e: frozenset[int], chain) -> RootVector:
    sys = g.system
    simple = sys.simple_roots
    if shape == "split":
        g1, g2 = sorted(gamma_e)
        return simple[g1] - simple[g2]
    if shape == "special":
        (grey,) = gamma_e
        return simple[grey]
    total = RootVector(sys, [0] * sys.dim)
    chain_set = set(chain)
    for i in gamma_e:
        coeff = 2 if i in chain_set else 1
        total = total + coeff * simple[i]
    return total


def is_admissible(g: PaintedGraph) -> GraphVerdict:
    blacks = set(g.nodes(BLACK))
    adj = _adjacency(g.system)

    def neighbor_check(gamma_e: frozenset[int]) -> bool:
        linked = set()
        for i in gamma_e:
            linked |= adj[i] - gamma_e
        return blacks == linked

    cands = _gamma_e_candidates(g)
    if len(cands) > 1:
        return GraphVerdict(False, "multiple candidate subgraphs of the required shape")
    if len(cands) == 1:
        shape, gamma_e, chain = cands[0]
        if shape == "split":
            comps = _graph_components(g.system)
            if any(sum(1 for i in comp if g.colors[i] == GREY) != 1 for comp in comps):
                return GraphVerdict(False, "each factor needs exactly one grey node")
        if not neighbor_check(gamma_e):
            return GraphVerdict(False, "black nodes are not exactly the neighbors of the subgraph")
        theta = _theta_for(g, shape, gamma_e, chain)
        return GraphVerdict(True, "ok", shape, gamma_e, theta)
    # special shape: single grey node standing alone as the subgraph
    greys = g.nodes(GREY)
    if len(greys) == 1 and len(_graph_components(g.system)) == 1:
        gamma_e = frozenset(greys)
        if neighbor_check(gamma_e):
            theta = _theta_for(g, "special", gamma_e, None)
            return GraphVerdict(True, "ok", "special", gamma_e, theta)
        return GraphVerdict(False, "black nodes are not exactly the neighbors of the grey node")
    if not greys:
        return GraphVerdict(False, "no grey node")
    return GraphVerdict(False, "no subgraph of the required shape")


def white_span(g: PaintedGraph) -> Subsystem:
    whites = [g.system.simple_roots[i] for i in g.nodes(WHITE)]
    if not whites:
        return Subsystem(g.system, frozenset())
    return g.system.closed_span(whites)


def is_good(g: PaintedGraph) -> GraphVerdict:
    v = is_admissible(g)
    if not v.admissible:
        return v
    sys = g.system
    span = white_span(g)
    ortho = frozenset(
        i for i, r in enumerate(sys.roots) if sys.inner(r, v.theta) == 0
    )
    if span.members == ortho:
        return GraphVerdict(True, "ok", v.shape, v.gamma_e, v.theta, good=True,
                            cr_type=_cr_type(g, v))
    missing = sorted(
        ortho - span.members,
        key=lambda i: (not sys.positive[i], sys.height(i), sys.roots[i].canon()),
    )
    violations = tuple(sys.roots[i] for i in missing)
    witness = violations[0] if violations else None
    return GraphVerdict(True, "white span differs from the orthogonal roots",
                        v.shape, v.gamma_e, v.theta, good=False,
                        witness=witness, violations=violations)


def _cr_type(g: PaintedGraph, v: GraphVerdict) -> str:
    sys = g.system
    if v.shape == "special":
        return "I"
    if v.shape == "split":
        return "II"
    t = sys.components[0][0]
    return {"A": "III", "D": "IV", "E": "V"}.get(t, "?")


def is_proper(g: PaintedGraph) -> bool:
    """The flag manifold G/Q is nontrivial: white+grey nodes span less than R."""
    sys = g.system
    gens = [sys.simple_roots[i] for i in g.nodes(WHITE) + g.nodes(GREY)]
    if not gens:
        return True
    return len(sys.closed_span(gens)) < len(sys.roots)


def canonicalize(g: PaintedGraph) -> PaintedGraph:
    """Diagram-automorphism orbit representative.

    Prefers the variant whose contact form concentrates on low coordinate
    indices (largest absolute gauge profile, then largest signed one), which
    reproduces the reference presentation of each family.
    """
    best = None
    for perm in g.system.diagram_automorphisms():
        colors = [None] * len(g.colors)
        for i, c in enumerate(g.colors):
            colors[perm[i]] = c
        cand = PaintedGraph(g.system, tuple(colors))
        verdict = is_admissible(cand)
        if verdict.admissible:
            tc = verdict.theta.canon()
            theta_key = (tuple(abs(x) for x in tc), tc)
        else:
            theta_key = ((), ())
        key = (theta_key, cand.colors)
        if best is None or key > best[0]:
            best = (key, cand)
    return best[1]


@dataclass(frozen=True)
class CRGraph:
    graph: PaintedGraph
    cr_type: str
    theta: RootVector


def enumerate_cr_graphs(system: RootSystem | str, rank: int | None = None) -> list[CRGraph]:
    """All good, proper painted graphs up to diagram symmetry.

    Accepts a root system, a type string like "D5" or "A2+A3", or a
    (type_tag, rank) pair.
    """
    if isinstance(system, str):
        from .rootsys import build

        system = build(system, rank) if rank is not None else parse_type(system)
    out: dict[str, CRGraph] = {}
    for colors in itertools.product((WHITE, BLACK, GREY), repeat=system.rank):
        if GREY not in colors:
            continue
        g = PaintedGraph(system, colors)
        v = is_good(g)
        if not (v.admissible and v.good):
            continue
        if not is_proper(g):
            continue
        rep = canonicalize(g)
        vr = is_good(rep)
        out[rep.serialize()] = CRGraph(rep, vr.cr_type, vr.theta)
    return sorted(out.values(), key=lambda c: c.graph.serialize())


def flag_pair(g: PaintedGraph) -> tuple[Subsystem, Subsystem]:
    """Root systems of K (whites only) and Q (whites and greys); K <= Q."""
    sys = g.system
    k = white_span(g)
    q_gens = [sys.simple_roots[i] for i in g.nodes(WHITE) + g.nodes(GREY)]
    q = sys.closed_span(q_gens) if q_gens else Subsystem(sys, frozenset())
    if not k.members <= q.members:
        raise GraphError("white subsystem is not contained in the grey-white one")
    return k, q
