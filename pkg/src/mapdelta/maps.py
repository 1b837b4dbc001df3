"""Flag graphs with three perfect matchings (red/green/black) and their orbits.

A map is stored as three fixed-point-free involutions on the flag set
{0, ..., n-1}.  Red/black orbits are the vertices of the encoded graph,
red/green orbits its edges (quadrilaterals), green/black orbits its faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    BadQuadrilateral,
    Disconnected,
    FixedPoint,
    NotInvolution,
    RedGreenParallel,
)

RED = "R"
GREEN = "G"
BLACK = "B"


def involution_from_pairs(n, pairs, color):
    """Turn a list of unordered flag pairs into a partner array.

    Raises NotInvolution if a flag occurs twice or is missing, FixedPoint on
    a pair (x, x).
    """
    partner = [-1] * n
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise NotInvolution("%s: flag out of range in pair (%d, %d)" % (color, a, b))
        if a == b:
            raise FixedPoint("%s: flag %d paired with itself" % (color, a))
        if partner[a] != -1 or partner[b] != -1:
            raise NotInvolution("%s: flag %d or %d matched twice" % (color, a, b))
        partner[a] = b
        partner[b] = a
    for x, p in enumerate(partner):
        if p == -1:
            raise NotInvolution("%s: flag %d is unmatched" % (color, x))
    return tuple(partner)


def check_involution(n, partner, color):
    if len(partner) != n:
        raise NotInvolution("%s: expected %d entries, got %d" % (color, n, len(partner)))
    for x, p in enumerate(partner):
        if not 0 <= p < n:
            raise NotInvolution("%s: partner of %d out of range" % (color, x))
        if p == x:
            raise FixedPoint("%s: flag %d is a fixed point" % (color, x))
        if partner[p] != x:
            raise NotInvolution("%s: partner map is not symmetric at %d" % (color, x))


@dataclass(frozen=True)
class LabeledGraph:
    """Multigraph with loops; every edge carries a distinct integer label."""

    name: str
    vertices: tuple
    edges: tuple  # of (edge_id, u, v)

    def __post_init__(self):
        vs = set(self.vertices)
        seen = set()
        for eid, u, v in self.edges:
            if eid in seen:
                raise ValueError("edge id %r appears twice" % (eid,))
            seen.add(eid)
            if u not in vs or v not in vs:
                raise ValueError("edge %r has undeclared endpoint" % (eid,))

    @property
    def edge_ids(self):
        return frozenset(eid for eid, _, _ in self.edges)

    def endpoints(self, eid):
        for e, u, v in self.edges:
            if e == eid:
                return (u, v)
        raise KeyError(eid)

    def degree(self, v):
        d = 0
        for _, u, w in self.edges:
            if u == v:
                d += 1
            if w == v:
                d += 1
        return d

    def is_connected(self):
        if not self.vertices:
            return True
        adj = {v: [] for v in self.vertices}
        for _, u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


def _orbits_of_two_matchings(n, inv_a, inv_b):
    """Cycles of the union of two perfect matchings, as flag lists.

    Each cycle alternates inv_a / inv_b edges and is rooted at its smallest
    flag, starting with the inv_a step; cycles sorted by root.
    """
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cycle = []
        x = start
        use_a = True
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = inv_a[x] if use_a else inv_b[x]
            use_a = not use_a
        cycles.append(tuple(cycle))
    return cycles


@dataclass(frozen=True)
class CombinatorialMap:
    """A validated 3-edge-colored flag graph.

    Immutable; construct through :func:`validate_map` (direct construction
    skips the axioms and is for internal use only).
    """

    name: str
    n_flags: int
    rho_r: tuple
    rho_g: tuple
    rho_b: tuple

    @property
    def n_edges(self):
        return self.n_flags // 4

    @cached_property
    def quadrilaterals(self):
        """Red/green orbits as 4-tuples, sorted by minimum flag.

        Quadrilateral i (0-based here) is the edge with id i + 1.
        """
        quads = _orbits_of_two_matchings(self.n_flags, self.rho_r, self.rho_g)
        return tuple(quads)

    @cached_property
    def edge_of_flag(self):
        """edge_of_flag[x] = 1-based edge id of the quadrilateral holding x."""
        owner = [0] * self.n_flags
        for i, quad in enumerate(self.quadrilaterals):
            for x in quad:
                owner[x] = i + 1
        return tuple(owner)

    def rho(self, color):
        return {RED: self.rho_r, GREEN: self.rho_g, BLACK: self.rho_b}[color]

    def orbit_cycles(self, colors):
        """Cycles of the union of two color classes; colors like "RB"."""
        a, b = colors
        return _orbits_of_two_matchings(self.n_flags, self.rho(a), self.rho(b))

    @cached_property
    def vertex_cycles(self):
        return tuple(self.orbit_cycles("RB"))

    @cached_property
    def face_cycles(self):
        return tuple(self.orbit_cycles("GB"))

    def _incidence_graph(self, cycles, matching, suffix):
        # endpoint of edge e on the side of `matching`: the cycle containing
        # each matching-edge of quadrilateral e
        owner = {}
        for ci, cyc in enumerate(cycles):
            for x in cyc:
                owner[x] = ci
        edges = []
        for i, quad in enumerate(self.quadrilaterals):
            ends = set()
            for x in quad:
                ends.add(owner[x])
            ends = sorted(ends)
            if len(ends) == 1:
                edges.append((i + 1, ends[0], ends[0]))
            elif len(ends) == 2:
                edges.append((i + 1, ends[0], ends[1]))
            else:  # impossible for a valid map: a quad meets at most 2 cycles
                raise AssertionError("quadrilateral %d meets %d cycles" % (i + 1, len(ends)))
        return LabeledGraph(
            name=self.name + suffix,
            vertices=tuple(range(len(cycles))),
            edges=tuple(edges),
        )

    def underlying_graph(self):
        """The encoded graph: red/black cycles as vertices, quads as edges."""
        return self._incidence_graph(self.vertex_cycles, self.rho_r, ".graph")

    def dual_graph(self):
        """The geometric dual: green/black cycles as vertices, same edges."""
        return self._incidence_graph(self.face_cycles, self.rho_g, ".dual")

    def euler_characteristic(self):
        return len(self.vertex_cycles) - self.n_edges + len(self.face_cycles)

    def is_orientable(self):
        """True iff the flag graph is bipartite (2-colorable)."""
        color = [-1] * self.n_flags
        color[0] = 0
        stack = [0]
        while stack:
            x = stack.pop()
            for rho in (self.rho_r, self.rho_g, self.rho_b):
                y = rho[x]
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
        return True

    def flag_edges(self):
        """All edges of the flag graph as (x, y, color) with x < y."""
        out = []
        for color, rho in ((RED, self.rho_r), (GREEN, self.rho_g), (BLACK, self.rho_b)):
            for x, y in enumerate(rho):
                if x < y:
                    out.append((x, y, color))
        return out


def _flag_graph_connected(n, rhos, skip=None):
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        x = stack.pop()
        for rho in rhos:
            y = rho[x]
            if skip is not None and (x, y) in skip:
                continue
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count == n


def validate_map(name, rho_r, rho_g, rho_b):
    """Check the three map axioms and return a CombinatorialMap.

    Arguments are partner arrays (or anything indexable of equal length).
    Raises the first violated axiom: NotInvolution / FixedPoint,
    RedGreenParallel, BadQuadrilateral, Disconnected.
    """
    n = len(rho_r)
    if n == 0 or n % 4 != 0:
        raise BadQuadrilateral("flag count %d is not a positive multiple of 4" % n)
    rho_r, rho_g, rho_b = tuple(rho_r), tuple(rho_g), tuple(rho_b)
    check_involution(n, rho_r, RED)
    check_involution(n, rho_g, GREEN)
    check_involution(n, rho_b, BLACK)
    for x in range(n):
        if rho_r[x] == rho_g[x]:
            raise RedGreenParallel("flags %d and %d are joined by both red and green" % (x, rho_r[x]))
    for quad in _orbits_of_two_matchings(n, rho_r, rho_g):
        if len(quad) != 4:
            raise BadQuadrilateral(
                "red/green orbit of flag %d has %d flags, expected 4" % (quad[0], len(quad))
            )
    if not _flag_graph_connected(n, (rho_r, rho_g, rho_b)):
        raise Disconnected("flag graph is not connected")
    m = CombinatorialMap(name=name, n_flags=n, rho_r=rho_r, rho_g=rho_g, rho_b=rho_b)
    # derived facts: 3-regularity is structural; edge 2-connectivity is not,
    # so confirm no flag edge is a bridge
    for x, y, _color in m.flag_edges():
        assert _flag_graph_connected(n, (rho_r, rho_g, rho_b), skip={(x, y), (y, x)}), (
            "flag edge (%d, %d) is a bridge; valid maps are edge 2-connected" % (x, y)
        )
    return m


def from_rotation_system(name, graph, rotations, signs=None):
    """Build a map from a rotation system on a LabeledGraph.

    rotations: {vertex: cyclic tuple of darts}, where a dart is (edge_id, end)
    with end 0/1 distinguishing the two ends of an edge (a loop contributes
    both darts at its vertex).  signs: {edge_id: +1 | -1}; -1 glues the edge
    with a twist (flip of face sides).  Every dart must occur exactly once.
    """
    signs = signs or {}
    darts = []
    for eid, _u, _v in graph.edges:
        darts.append((eid, 0))
        darts.append((eid, 1))
    position = {}
    for v, rot in rotations.items():
        for i, d in enumerate(rot):
            if d in position:
                raise ValueError("dart %r occurs twice in the rotation system" % (d,))
            position[d] = (v, i)
    missing = [d for d in darts if d not in position]
    if missing or len(position) != len(darts):
        raise ValueError("rotation system does not cover the darts exactly once")

    # flags: 2 per dart; flag(d, 0) is the side before d in the rotation,
    # flag(d, 1) the side after
    index = {d: 2 * i for i, d in enumerate(darts)}

    def flag(d, side):
        return index[d] + side

    n = 2 * len(darts)
    rho_r = [0] * n
    rho_g = [0] * n
    rho_b = [0] * n
    for d in darts:
        a, b = flag(d, 0), flag(d, 1)
        rho_r[a], rho_r[b] = b, a
    for v, rot in rotations.items():
        k = len(rot)
        for i in range(k):
            a = flag(rot[i], 1)
            b = flag(rot[(i + 1) % k], 0)
            rho_b[a], rho_b[b] = b, a
    for eid, _u, _v in graph.edges:
        d0, d1 = (eid, 0), (eid, 1)
        if signs.get(eid, 1) >= 0:
            pairs = ((flag(d0, 0), flag(d1, 1)), (flag(d0, 1), flag(d1, 0)))
        else:
            pairs = ((flag(d0, 0), flag(d1, 0)), (flag(d0, 1), flag(d1, 1)))
        for a, b in pairs:
            rho_g[a], rho_g[b] = b, a
    return validate_map(name, rho_r, rho_g, rho_b)
