"""Fully black 2-regular subgraphs of a map via per-edge pair selections.

Every such subgraph keeps all black edges and, on each quadrilateral, either
its two green or its two red edges.  A selection is encoded by the set of
green-selected edge ids; iterating selections as m-bit masks (bit i =
green on edge i + 1) keeps every enumeration reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernel
from .errors import GroundSetTooLarge
from .families import SetFamily

MAX_ENUM_EDGES = 24

GREEN_PAIR = "green"
RED_PAIR = "red"


@dataclass(frozen=True)
class Selection:
    """Per-edge choice of the green or the red pair."""

    ground: frozenset  # all edge ids of the map
    greens: frozenset  # edge ids on which the green pair is kept

    def __post_init__(self):
        if not self.greens <= self.ground:
            raise ValueError("green-selected edges outside the ground set")

    @classmethod
    def from_mask(cls, ground, mask):
        return cls(frozenset(ground), frozenset(e for e in ground if (mask >> (e - 1)) & 1))

    @property
    def mask(self):
        mask = 0
        for e in self.greens:
            mask |= 1 << (e - 1)
        return mask

    def choice(self, edge_id):
        return GREEN_PAIR if edge_id in self.greens else RED_PAIR

    def swap(self, edge_id):
        if edge_id not in self.ground:
            raise KeyError(edge_id)
        return Selection(self.ground, self.greens ^ {edge_id})


def all_green(cmap):
    ground = frozenset(range(1, cmap.n_edges + 1))
    return Selection(ground, ground)


def _chosen_partner(cmap, sel, x):
    if cmap.edge_of_flag[x] in sel.greens:
        return cmap.rho_g[x]
    return cmap.rho_r[x]


def selection_subgraph(cmap, sel):
    """Edge list (pairs of flags) of the induced 2-regular subgraph."""
    edges = [(x, y) for x, y in enumerate(cmap.rho_b) if x < y]
    for x in range(cmap.n_flags):
        y = _chosen_partner(cmap, sel, x)
        if x < y:
            edges.append((x, y))
    edges.sort()
    return edges


def subgraph_components(cmap, sel):
    """Flag cycles of the selection subgraph, smallest-root order."""
    seen = [False] * cmap.n_flags
    cycles = []
    for start in range(cmap.n_flags):
        if seen[start]:
            continue
        cycle = []
        x = start
        via_black = False
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = cmap.rho_b[x] if via_black else _chosen_partner(cmap, sel, x)
            via_black = not via_black
        cycles.append(tuple(cycle))
    return cycles


def is_fully_black_hamiltonian(cmap, sel):
    """True iff the selection subgraph is one cycle through all flags."""
    return len(subgraph_components(cmap, sel)) == 1


def _scan(cmap, max_edges):
    m = cmap.n_edges
    if m > max_edges:
        raise GroundSetTooLarge("map has %d edges; refusing to scan 2^%d selections (limit %d)" % (m, m, max_edges))
    return kernel.survey_selections(
        cmap.n_flags, m, cmap.rho_r, cmap.rho_g, cmap.rho_b, cmap.edge_of_flag
    )


def _mask_family(cmap, masks, color):
    ground = frozenset(range(1, cmap.n_edges + 1))
    fam = SetFamily.of(ground, (Selection.from_mask(ground, mask).greens for mask in masks))
    if color == RED_PAIR:
        return fam.complement()
    if color != GREEN_PAIR:
        raise ValueError("color must be %r or %r" % (GREEN_PAIR, RED_PAIR))
    return fam


def enumerate_feasible_gamma(cmap, color=GREEN_PAIR, max_edges=MAX_ENUM_EDGES):
    """Feasible sets of the Hamiltonian-cycle delta-matroid.

    One member per fully black Hamiltonian cycle: the edges whose chosen
    pair is the given color (green by default; red gives the complemented
    family).
    """
    ham_masks, _ = _scan(cmap, max_edges)
    return _mask_family(cmap, ham_masks, color)


def enumerate_feasible_k(cmap, color=GREEN_PAIR, max_edges=MAX_ENUM_EDGES):
    """Feasible sets of the 2-valent delta-matroid.

    Members come from selections whose subgraph K has both K + red and
    K + green connected.
    """
    _, link_masks = _scan(cmap, max_edges)
    return _mask_family(cmap, link_masks, color)


def find_hamiltonian(cmap, with_stats=False):
    """Deterministic swap search for a fully black Hamiltonian cycle.

    Starts from the all-green selection; while the subgraph is disconnected,
    swaps the lowest-id quadrilateral whose two chosen edges lie in
    different components.  Each such swap merges the two components, so the
    search ends after at most (initial components - 1) swaps.
    """
    sel = all_green(cmap)
    cycles = subgraph_components(cmap, sel)
    initial = len(cycles)
    swaps = 0
    while len(cycles) > 1:
        comp_of = {}
        for ci, cyc in enumerate(cycles):
            for x in cyc:
                comp_of[x] = ci
        for i, quad in enumerate(cmap.quadrilaterals):
            eid = i + 1
            # the chosen pair covers all 4 flags of the quad, two per edge;
            # its edges lie in different components iff the quad's flags do
            if len({comp_of[x] for x in quad}) == 2:
                sel = sel.swap(eid)
                swaps += 1
                break
        else:  # connected flag graph guarantees a cross-component quad
            raise AssertionError("disconnected subgraph with no cross-component quadrilateral")
        cycles = subgraph_components(cmap, sel)
    assert swaps <= max(initial - 1, 0)
    if with_stats:
        return sel, swaps, initial
    return sel
