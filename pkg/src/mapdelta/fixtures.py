"""Shipped example maps.

The four-flag maps are written out as explicit matchings; the larger ones
are built from rotation systems.  Edge ids in rotations refer to the edge
lists of the LabeledGraphs below.
"""

from __future__ import annotations

from .maps import CombinatorialMap, LabeledGraph, from_rotation_system, involution_from_pairs, validate_map


def _explicit(name, n, r_pairs, g_pairs, b_pairs):
    return validate_map(
        name,
        involution_from_pairs(n, r_pairs, "R"),
        involution_from_pairs(n, g_pairs, "G"),
        involution_from_pairs(n, b_pairs, "B"),
    )


def loop_map():
    """One vertex with a loop on the sphere: |V|=1, m=1, |V*|=2."""
    return _explicit("loop", 4, [(0, 1), (2, 3)], [(1, 2), (3, 0)], [(1, 2), (3, 0)])


def bridge_map():
    """Two vertices joined by one edge on the sphere: |V|=2, m=1, |V*|=1."""
    return _explicit("bridge", 4, [(0, 1), (2, 3)], [(1, 2), (3, 0)], [(0, 1), (2, 3)])


def crosscap_map():
    """One vertex with a loop on the projective plane: chi = 1."""
    return _explicit("crosscap", 4, [(0, 1), (2, 3)], [(1, 2), (3, 0)], [(0, 2), (1, 3)])


def theta_map():
    """Theta graph (two vertices, three parallel edges) on the sphere."""
    g = LabeledGraph("theta", (0, 1), ((1, 0, 1), (2, 0, 1), (3, 0, 1)))
    rotations = {
        0: ((1, 0), (2, 0), (3, 0)),
        1: ((3, 1), (2, 1), (1, 1)),
    }
    return from_rotation_system("theta", g, rotations)


def torus_one_vertex_map():
    """Two interleaved loops at one vertex: the torus, chi = 0."""
    g = LabeledGraph("torus1v", (0,), ((1, 0, 0), (2, 0, 0)))
    rotations = {0: ((1, 0), (2, 0), (1, 1), (2, 1))}
    return from_rotation_system("torus1v", g, rotations)


def k4_sphere_map():
    """K4 embedded in the sphere (planar rotation system)."""
    g = LabeledGraph(
        "k4",
        (0, 1, 2, 3),
        ((1, 0, 1), (2, 0, 2), (3, 0, 3), (4, 1, 2), (5, 1, 3), (6, 2, 3)),
    )
    rotations = {
        0: ((1, 0), (3, 0), (2, 0)),
        1: ((1, 1), (4, 0), (5, 0)),
        2: ((2, 1), (6, 0), (4, 1)),
        3: ((3, 1), (5, 1), (6, 1)),
    }
    return from_rotation_system("k4sphere", g, rotations)


def k5_torus_map():
    """Self-dual embedding of K5 in the torus: chi = 0, dual also K5."""
    vertices = (0, 1, 2, 3, 4)
    edges = []
    eid = 0
    dart_at = {}  # (vertex, other) -> dart
    for u in range(5):
        for v in range(u + 1, 5):
            eid += 1
            edges.append((eid, u, v))
            dart_at[(u, v)] = (eid, 0)
            dart_at[(v, u)] = (eid, 1)
    g = LabeledGraph("k5", vertices, tuple(edges))
    # rotation at v lists the neighbors v+1, v+2, v+4, v+3 (mod 5); this
    # shift pattern closes up into five quadrilateral faces
    rotations = {
        v: tuple(dart_at[(v, (v + s) % 5)] for s in (1, 2, 4, 3)) for v in vertices
    }
    return from_rotation_system("k5torus", g, rotations)


FIXTURE_BUILDERS = {
    "loop": loop_map,
    "bridge": bridge_map,
    "crosscap": crosscap_map,
    "theta": theta_map,
    "torus1v": torus_one_vertex_map,
    "k4sphere": k4_sphere_map,
    "k5torus": k5_torus_map,
}


def fixture_names():
    return sorted(FIXTURE_BUILDERS)


def get_fixture(name) -> CombinatorialMap:
    try:
        return FIXTURE_BUILDERS[name]()
    except KeyError:
        raise KeyError("unknown fixture %r; known: %s" % (name, ", ".join(fixture_names()))) from None


def all_fixtures():
    return [get_fixture(name) for name in fixture_names()]
