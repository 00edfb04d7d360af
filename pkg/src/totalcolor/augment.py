"""Augmentation: insert new edges into big faces until no face of size >= 4
carries two non-consecutive true boundary vertices of small original degree.

Each insertion is a chord across one face: two fresh darts are spliced into
the endpoint rotations so that the host face splits into exactly two faces.
The resulting embedded graph may contain parallel segments, but only between
pairs already joined once; all such extra segments are new edges (origin
None), since the input graphs are simple.

Termination: every insertion adds 2 darts and 1 face, so the quantity
(total darts) - 3*(faces) drops by 1 each step, and it is bounded below by
0 because every face has size >= 3.
"""
from __future__ import annotations

from dataclasses import dataclass

from .embedding import CROSSING, TRUE, EmbeddedGraph, EmbedError
from .graphs import SimpleGraph


@dataclass(frozen=True)
class InsertionRecord:
    step: int
    face: tuple  # boundary vertex occurrences at insertion time
    pair: tuple  # sorted endpoints of the inserted new edge


@dataclass(frozen=True)
class VertexClass:
    d1: int | None  # degree in G; None for crossing vertices
    d2: int  # degree in G*
    kind: str  # "true" | "crossing"
    size_class: str  # "big" | "small"
    new_incident: bool


class AugmentedGraph:
    """G* together with its provenance: base G†, the underlying simple
    graph, the insertion log, and the per-vertex classification."""

    def __init__(self, g, base, star, insertions):
        self.g: SimpleGraph = g
        self.base: EmbeddedGraph = base
        self.star: EmbeddedGraph = star
        self.insertions: list[InsertionRecord] = insertions
        self.classification: dict = classify_vertices(self)

    def faces(self):
        return self.star.faces()

    def new_segments(self) -> list[tuple]:
        return [k for k in self.star.segments() if self.star.segment_origin[k] is None]

    def new_edge_count(self) -> int:
        return len(self.new_segments())

    def face_census(self) -> dict:
        census: dict = {}
        for f in self.faces():
            census[f.size] = census.get(f.size, 0) + 1
        return census

    def is_big(self, v) -> bool:
        return self.classification[v].size_class == "big"


def _eligible_pair(boundary, owner, kinds, g, join_adjacent):
    """Smallest eligible (i, j, u, v) in one face, or None.

    Positions are boundary-occurrence indices; eligibility requires two
    distinct true vertices of G-degree <= 5 at non-consecutive positions
    (cyclically).  Preference order: vertex pair, then positions.
    """
    occ = [owner[d] for d in boundary]
    k = len(occ)
    best = None
    for i in range(k):
        u = occ[i]
        if kinds[u] != TRUE or g.degree(u) > 5:
            continue
        for j in range(i + 1, k):
            v = occ[j]
            if kinds[v] != TRUE or g.degree(v) > 5 or u == v:
                continue
            if j - i < 2 or k - (j - i) < 2:
                continue
            if not join_adjacent and g.has_edge(u, v):
                continue
            key = ((u, v) if u < v else (v, u), i, j)
            if best is None or key < best[0]:
                best = (key, (i, j, u, v))
    return None if best is None else best[1]


def build_g_star(gd: EmbeddedGraph, g: SimpleGraph, join_adjacent: bool = True) -> AugmentedGraph:
    """Run the insertion loop to its fixpoint and classify the result.

    Deterministic order: among eligible faces pick the one whose boundary
    holds the smallest dart id, then the smallest vertex pair within it.
    join_adjacent controls whether a pair already adjacent in G may still
    receive a (parallel) new edge through another face region.
    """
    rotation = {v: list(rot) for v, rot in gd.rotation.items()}
    twin = dict(gd.twin)
    origins = dict(gd.segment_origin)
    owner = dict(gd.owner)
    kinds = gd.vertex_kind
    faces = [list(f.boundary) for f in gd.faces()]
    next_dart = max(twin, default=-1) + 1
    log: list[InsertionRecord] = []
    while True:
        best = None
        for fi, fb in enumerate(faces):
            if len(fb) < 4:
                continue
            pick = _eligible_pair(fb, owner, kinds, g, join_adjacent)
            if pick is not None:
                key = min(fb)
                if best is None or key < best[0]:
                    best = (key, fi, pick)
        if best is None:
            break
        _, fi, (i, j, u, v) = best
        fb = faces[fi]
        a, b = next_dart, next_dart + 1
        next_dart += 2
        ru = rotation[u]
        ru.insert(ru.index(fb[i]), a)
        rv = rotation[v]
        rv.insert(rv.index(fb[j]), b)
        twin[a] = b
        twin[b] = a
        owner[a] = u
        owner[b] = v
        origins[(a, b)] = None
        log.append(
            InsertionRecord(
                step=len(log),
                face=tuple(owner[d] for d in fb),
                pair=(u, v) if u < v else (v, u),
            )
        )
        faces[fi] = [a] + fb[j:] + fb[:i]
        faces.append([b] + fb[i:j])
    star = EmbeddedGraph(
        {v: tuple(rot) for v, rot in rotation.items()},
        twin,
        kinds,
        gd.surface,
        origins,
    )
    return AugmentedGraph(g, gd, star, log)


def classify_vertices(a: AugmentedGraph) -> dict:
    """(d1, d2) plus big/small for every vertex of G*.

    Big means (3,5) or d2 >= 6; crossing vertices are always small (their
    degree is pinned at 4).
    """
    table = {}
    star = a.star
    for v in star.vertices():
        kind = star.vertex_kind[v]
        d2 = star.degree(v)
        d1 = a.g.degree(v) if kind == TRUE else None
        big = kind == TRUE and ((d1 == 3 and d2 == 5) or d2 >= 6)
        new_inc = any(
            star.segment_origin[_seg(d, star.twin)] is None for d in star.rotation[v]
        )
        table[v] = VertexClass(
            d1=d1,
            d2=d2,
            kind=kind,
            size_class="big" if big else "small",
            new_incident=new_inc,
        )
    return table


def _seg(d, twin):
    e = twin[d]
    return (d, e) if d < e else (e, d)


def is_new_edge(a: AugmentedGraph, segment: tuple) -> bool:
    key = tuple(sorted(segment))
    if key not in a.star.segment_origin:
        raise EmbedError(f"unknown segment {segment}")
    return a.star.segment_origin[key] is None


def check_fixpoint(a: AugmentedGraph, join_adjacent: bool = True) -> bool:
    """True iff no face of G* still holds an eligible insertion pair."""
    star = a.star
    for f in star.faces():
        if f.size < 4:
            continue
        if _eligible_pair(f.boundary, star.owner, star.vertex_kind, a.g, join_adjacent):
            return False
    return True


def augment_report(a: AugmentedGraph) -> dict:
    """JSON-ready summary: insertion log, face census, classification."""
    return {
        "new_edges": a.new_edge_count(),
        "insertions": [
            {"step": r.step, "face": list(r.face), "pair": list(r.pair)}
            for r in a.insertions
        ],
        "face_census": {str(size): n for size, n in sorted(a.face_census().items())},
        "classification": {
            str(v): {
                "d1": c.d1,
                "d2": c.d2,
                "kind": c.kind,
                "size_class": c.size_class,
                "new_incident": c.new_incident,
            }
            for v, c in sorted(a.classification.items())
        },
    }
