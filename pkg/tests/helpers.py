"""Shared brute-force oracles for the test suite.

These are intentionally naive (quartic scans, exhaustive enumerations) and
serve as independent references for the production implementations.
"""
from __future__ import annotations

import random
from itertools import combinations

from totalcolor.embedding import from_face_cycles
from totalcolor.graphs import SimpleGraph, build_graph


def brute_k4s(g: SimpleGraph) -> list[tuple]:
    return sorted(
        quad
        for quad in combinations(g.vertices, 4)
        if all(g.has_edge(a, b) for a, b in combinations(quad, 2))
    )


def brute_diamonds(g: SimpleGraph) -> list[tuple]:
    """Each induced diamond as (hub_pair, wing_pair), both sorted."""
    out = []
    for quad in combinations(g.vertices, 4):
        missing = [p for p in combinations(quad, 2) if not g.has_edge(*p)]
        if len(missing) != 1:
            continue
        (wings,) = missing
        hubs = tuple(sorted(set(quad) - set(wings)))
        out.append((hubs, tuple(sorted(wings))))
    return sorted(out)


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return build_graph(edges, vertices=range(n))


def cycle_graph(n: int) -> SimpleGraph:
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return build_graph(list(combinations(range(n), 2)))


def path_graph(n: int) -> SimpleGraph:
    return build_graph([(i, i + 1) for i in range(n - 1)], vertices=range(n))


# -- embedded test instances -------------------------------------------------

def c6_plane():
    g = cycle_graph(6)
    e = from_face_cycles([(0, 1, 2, 3, 4, 5), (5, 4, 3, 2, 1, 0)], "plane", g=g)
    return e, g


def torus_grid(m: int, n: int):
    """Cm x Cn quadrangulation of the torus (m, n >= 3)."""

    def v(i, j):
        return (i % m) * n + (j % n)

    g = build_graph(
        sorted(
            {tuple(sorted((v(i, j), v(i + 1, j)))) for i in range(m) for j in range(n)}
            | {tuple(sorted((v(i, j), v(i, j + 1)))) for i in range(m) for j in range(n)}
        )
    )
    faces = [
        (v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1))
        for i in range(m)
        for j in range(n)
    ]
    return from_face_cycles(faces, "torus", g=g), g


def wheel_plane(n: int = 5):
    """Wheel with hub 0 and rim 1..n, planar embedding."""
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    g = build_graph([(0, i) for i in range(1, n + 1)] + rim)
    faces = [(0, i, i % n + 1) for i in range(1, n + 1)]
    faces.append(tuple(range(n, 0, -1)))
    return from_face_cycles(faces, "plane", g=g), g


def quad_with_crossing():
    """A square with crossing diagonals; crossing vertex 4."""
    faces = [(0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4), (3, 2, 1, 0)]
    g = build_graph([(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)])
    return from_face_cycles(faces, "plane", crossing_vertices={4}, g=g), g


def hexagon_two_crossings():
    """Hexagon with chords (0,2)x(1,5) and (2,4)x(3,5); its central face is a
    4-face alternating true/crossing/true/crossing."""
    faces = [
        (0, 1, 6),
        (1, 2, 6),
        (2, 3, 7),
        (3, 4, 7),
        (4, 5, 7),
        (5, 0, 6),
        (2, 7, 5, 6),
        (0, 5, 4, 3, 2, 1),
    ]
    g = build_graph(
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5),
         (0, 2), (1, 5), (2, 4), (3, 5)]
    )
    e = from_face_cycles(faces, "plane", crossing_vertices={6, 7}, g=g)
    return e, g


def graph_from_faces(faces):
    """Underlying simple graph of a closed drawing with no crossings."""
    edges = sorted(
        {
            tuple(sorted((f[i], f[(i + 1) % len(f)])))
            for f in faces
            for i in range(len(f))
        }
    )
    return build_graph(edges)


def wrap_drawing(faces, surface="plane", crossings=(), g=None):
    """Embed a closed drawing as-is (no augmentation pass)."""
    from totalcolor.augment import AugmentedGraph

    if g is None:
        g = graph_from_faces(faces)
    e = from_face_cycles(faces, surface, crossing_vertices=frozenset(crossings), g=g)
    return AugmentedGraph(g=g, base=e, star=e, insertions=[])


def dart_towards(star, v, w):
    """The dart at v whose segment leads to w."""
    for d in star.rotation[v]:
        if star.other_end(d) == w:
            return d
    raise KeyError((v, w))


def petal_fan(v, chain):
    """Triangle petals (a, v, b) walking `chain`; pumps v's degree by
    one new neighbour per step."""
    return [(x, v, y) for x, y in zip(chain, chain[1:])]


def grid_faces(m, n):
    """The face list of torus_grid(m, n), for cut-and-patch fixtures."""

    def v(i, j):
        return (i % m) * n + (j % n)

    return [
        (v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1))
        for i in range(m)
        for j in range(n)
    ]


# -- total-coloring oracle -----------------------------------------------------

def total_elements(g: SimpleGraph) -> list:
    """Vertices then edges, as tagged tuples."""
    return [("v", v) for v in sorted(g.vertices)] + [
        ("e",) + e for e in g.edges()
    ]


def elements_conflict(g: SimpleGraph, x, y) -> bool:
    """Naive adjacency/incidence test between two elements."""
    if x == y:
        return False
    if x[0] == "v" and y[0] == "v":
        return g.has_edge(x[1], y[1])
    if x[0] == "e" and y[0] == "e":
        return bool({x[1], x[2]} & {y[1], y[2]})
    v = x if x[0] == "v" else y
    e = y if x[0] == "v" else x
    return v[1] in (e[1], e[2])


def brute_conflicts(g: SimpleGraph, colors: dict) -> list:
    """All conflicting element pairs under a full element -> color map."""
    els = total_elements(g)
    bad = []
    for i, x in enumerate(els):
        for y in els[i + 1:]:
            if elements_conflict(g, x, y) and colors[x] == colors[y]:
                bad.append((x, y))
    return bad


def brute_chi_tt(g: SimpleGraph, cap: int = 8) -> int:
    """Smallest palette admitting a total coloring, by plain backtracking
    in fixed element order with no pruning heuristics."""
    els = total_elements(g)
    if not els:
        return 0
    pairs = [
        [j for j in range(i) if elements_conflict(g, els[i], els[j])]
        for i in range(len(els))
    ]

    def fill(i, kappa, assigned):
        if i == len(els):
            return True
        taken = {assigned[j] for j in pairs[i]}
        for c in range(1, kappa + 1):
            if c not in taken:
                assigned.append(c)
                if fill(i + 1, kappa, assigned):
                    return True
                assigned.pop()
        return False

    for kappa in range(1, cap + 1):
        if fill(0, kappa, []):
            return kappa
    raise AssertionError(f"no total coloring within {cap} colors")
