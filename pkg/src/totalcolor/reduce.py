"""Could this graph be a minimal obstruction to the Delta+2 bound?

The audit here packages the structural consequences of deletion-minimality
(reducible edges, connectivity, triangle and neighborhood constraints, and
the no-K4 claim) as refutation checks: any failed check certifies the
graph is *not* a minimal counterexample.  The module also carries the
desk-scale validation drivers: a native isomorphism-reduced enumeration of
small graphs and a harness that hammers the extension procedures over
them.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

from .coloring import (
    P3Certificate,
    TotalColoring,
    extend_p1,
    extend_p3,
    total_elements,
    verify,
)
from .graphs import SimpleGraph, build_graph, check_property_P, delete_edge, find_k4s


class ReduceError(ValueError):
    """Bad input to a minimality or enumeration operation."""


# ---------------------------------------------------------------------------
# Edge finders


def find_reducible_edge(g: SimpleGraph, kappa: int):
    """The first edge (lexicographically) whose low end has degree at most
    floor((kappa-1)/2) and whose degree sum stays within kappa, or None."""
    half = (kappa - 1) // 2
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        if min(du, dv) <= half and du + dv <= kappa:
            return (u, v)
    return None


def find_p3_edge(g: SimpleGraph, kappa: int):
    """The first triangle edge in the tight case: low end at most
    floor((kappa-1)/2), degree sum exactly kappa+1, some common neighbor.
    Returns ((u, v), w) with w the smallest apex, or None."""
    half = (kappa - 1) // 2
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        if min(du, dv) <= half and du + dv == kappa + 1:
            common = g.common_neighbors(u, v)
            if common:
                return (u, v), min(common)
    return None


# ---------------------------------------------------------------------------
# The minimality audit


@dataclass(frozen=True)
class CheckResult:
    name: str
    applicable: bool
    passed: bool
    witnesses: tuple = ()


@dataclass
class MinimalityAudit:
    kappa: int
    results: dict

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values() if r.applicable)

    @property
    def failures(self) -> list:
        return [r for r in self.results.values() if r.applicable and not r.passed]


def _is_connected(g: SimpleGraph) -> bool:
    if not g.vertices:
        return True
    start = min(g.vertices)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.vertices)


def _without_vertex(g: SimpleGraph, v) -> SimpleGraph:
    return build_graph(
        [e for e in g.edges() if v not in e],
        vertices=[w for w in g.vertices if w != v],
    )


def cut_vertices(g: SimpleGraph) -> list:
    """Vertices whose removal disconnects the graph (plain quadratic scan;
    the audit only ever runs at desk scale)."""
    if len(g.vertices) < 3 or not _is_connected(g):
        return []
    return [v for v in sorted(g.vertices) if not _is_connected(_without_vertex(g, v))]


def audit_minimality(g: SimpleGraph, kappa: int) -> MinimalityAudit:
    """Run every refutation check at palette size kappa.  Requires
    kappa >= max degree + 2; each failed check names witnesses showing the
    graph cannot be a deletion-minimal counterexample."""
    floor_kappa = g.max_degree() + 2
    if kappa < floor_kappa:
        raise ReduceError(
            f"audit needs kappa >= max degree + 2 = {floor_kappa}, got {kappa}"
        )
    half = (kappa - 1) // 2
    results = {}

    p1_bad = tuple(
        (u, v)
        for u, v in g.edges()
        if min(g.degree(u), g.degree(v)) <= half and g.degree(u) + g.degree(v) <= kappa
    )
    results["P1"] = CheckResult("P1", True, not p1_bad, p1_bad)

    p2_wit = []
    for v in sorted(g.vertices):
        if g.degree(v) < 3:
            p2_wit.append(("min-degree", v, g.degree(v)))
    if not g.vertices or len(g.vertices) < 3:
        p2_wit.append(("too-small", len(g.vertices)))
    elif not _is_connected(g):
        p2_wit.append(("disconnected",))
    else:
        for v in cut_vertices(g):
            p2_wit.append(("cut-vertex", v))
    results["P2"] = CheckResult("P2", True, not p2_wit, tuple(p2_wit))

    p3_bad = []
    for u, v in g.edges():
        du, dv = g.degree(u), g.degree(v)
        if min(du, dv) <= half and du + dv == kappa + 1:
            for w in sorted(g.common_neighbors(u, v)):
                p3_bad.append(((u, v), w))
    results["P3"] = CheckResult("P3", True, not p3_bad, tuple(p3_bad))

    p4_app = kappa >= 7
    p4_bad = []
    if p4_app:
        for v in sorted(g.vertices):
            if g.degree(v) != 3:
                continue
            nbrs = sorted(g.neighbors(v))
            for i, a in enumerate(nbrs):
                for b in nbrs[i + 1:]:
                    if g.has_edge(a, b):
                        p4_bad.append((v, (a, b)))
    results["P4"] = CheckResult("P4", p4_app, not p4_bad, tuple(p4_bad))

    p5_app = kappa >= 9
    p5_bad = []
    if p5_app:
        for v in sorted(g.vertices):
            if g.degree(v) != 4:
                continue
            for w in sorted(g.neighbors(v)):
                shared = g.common_neighbors(v, w)
                if len(shared) >= 2:
                    p5_bad.append(((v, w), tuple(sorted(shared))))
    results["P5"] = CheckResult("P5", p5_app, not p5_bad, tuple(p5_bad))

    has_p = check_property_P(g).holds
    k4s = tuple(find_k4s(g)) if has_p else ()
    results["Claim1"] = CheckResult("Claim1", has_p, not k4s, k4s)

    return MinimalityAudit(kappa=kappa, results=results)


# ---------------------------------------------------------------------------
# Native enumeration of small graphs up to isomorphism
#
# Graphs on 0..n-1 are packed as edge bitmasks with the pair (i, j), i < j,
# at bit j*(j-1)//2 + i.  Growing a graph by one vertex then appends fresh
# bits, so a parent mask embeds in every child unchanged.


def _pair_bit(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _adjacency(n: int, mask: int) -> list:
    adj = [0] * n
    for j in range(n):
        for i in range(j):
            if mask >> _pair_bit(i, j) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _refined_classes(n: int, adj: list) -> list:
    """Partition vertices by iterated degree refinement; the class order is
    an isomorphism invariant, so canonical labelings only permute within
    classes."""
    colors = [bin(a).count("1") for a in adj]
    while True:
        sigs = []
        for v in range(n):
            around = sorted(colors[w] for w in range(n) if adj[v] >> w & 1)
            sigs.append((colors[v], tuple(around)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            break
        colors = new
    classes = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_mask(n: int, mask: int) -> int:
    """The least edge mask over all relabelings; two graphs are isomorphic
    iff their canonical masks agree."""
    adj = _adjacency(n, mask)
    groups = _refined_classes(n, adj)
    best = None
    pairs = [(i, j) for j in range(n) for i in range(j)]

    def walk(gi: int, placed: tuple) -> None:
        nonlocal best
        if gi == len(groups):
            m = 0
            for i, j in pairs:
                if adj[placed[i]] >> placed[j] & 1:
                    m |= 1 << _pair_bit(i, j)
            if best is None or m < best:
                best = m
            return
        for perm in permutations(groups[gi]):
            walk(gi + 1, placed + perm)

    walk(0, ())
    return best


@lru_cache(maxsize=None)
def enum_graph_masks(n: int) -> tuple:
    """Canonical edge masks of every graph on n vertices, one per
    isomorphism class, sorted.  Orderly generation: attach vertex n-1 to
    each parent by every neighborhood subset, then deduplicate."""
    if n < 1 or n > 8:
        raise ReduceError(f"enumeration supports 1..8 vertices, got {n}")
    if n == 1:
        return (0,)
    shift = (n - 1) * (n - 2) // 2
    out = set()
    for parent in enum_graph_masks(n - 1):
        for sub in range(1 << (n - 1)):
            out.add(canonical_mask(n, parent | (sub << shift)))
    return tuple(sorted(out))


def _mask_connected(n: int, mask: int) -> bool:
    adj = _adjacency(n, mask)
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(n):
            if adj[v] >> w & 1 and not seen >> w & 1:
                seen |= 1 << w
                stack.append(w)
    return seen == (1 << n) - 1


def graph_from_mask(n: int, mask: int) -> SimpleGraph:
    edges = [(i, j) for j in range(n) for i in range(j) if mask >> _pair_bit(i, j) & 1]
    return build_graph(edges, vertices=range(n))


def enum_graphs(n: int, connected: bool = False) -> list:
    """All graphs on n vertices up to isomorphism, as SimpleGraphs on
    vertex set 0..n-1; optionally connected ones only."""
    masks = enum_graph_masks(n)
    if connected:
        masks = [m for m in masks if _mask_connected(n, m)]
    return [graph_from_mask(n, m) for m in masks]


def parse_graph6(line: str) -> SimpleGraph:
    """Decode one line of the standard compact graph catalog format
    (printable-ASCII upper-triangle bit packing); an optional cross-check
    path for the native enumeration.  Supports up to 62 vertices."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise ReduceError("empty catalog line")
    vals = [ord(ch) - 63 for ch in s]
    if any(v < 0 or v > 63 for v in vals):
        raise ReduceError(f"bad catalog byte in {line!r}")
    n = vals[0]
    if n == 63:
        raise ReduceError("catalog graphs with 63+ vertices are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    bits = vals[1:]
    if len(bits) != need:
        raise ReduceError(f"catalog line has {len(bits)} data bytes, expected {need}")
    mask = 0
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k // 6] >> (5 - k % 6) & 1:
                mask |= 1 << _pair_bit(i, j)
            k += 1
    return graph_from_mask(n, mask)


def load_graph6(text: str) -> list:
    return [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]


# ---------------------------------------------------------------------------
# Extension validation harness


@dataclass
class ExtensionReport:
    n_max: int
    instances: int = 0
    checks: int = 0
    failures: int = 0
    certificates: list = field(default_factory=list)
    truncated: int = 0
    p1_checks: int = 0
    p3_checks: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "instances": self.instances,
                "checks": self.checks,
                "failures": self.failures,
                "certificates": self.certificates,
            },
            indent=2,
        )


def _proper_colorings(g: SimpleGraph, kappa: int, cap: int, rng) -> tuple:
    """Up to cap distinct proper colorings, found by backtracking with a
    shuffled color order at each node (so a truncated run is not just a
    lexicographic prefix).  Second result: True when more colorings exist
    beyond the cap."""
    limit = cap + 1
    els = total_elements(g)
    from .coloring import _conflicting  # shared adjacency walk

    index = {el: i for i, el in enumerate(els)}
    earlier = [
        sorted(index[x] for x in set(_conflicting(g, el)) if index[x] < i)
        for i, el in enumerate(els)
    ]
    found = []
    assigned = [0] * len(els)

    def walk(i: int) -> None:
        if len(found) >= limit:
            return
        if i == len(els):
            c = TotalColoring(kappa)
            for k, el in enumerate(els):
                c.set_color(el, assigned[k])
            found.append(c)
            return
        taken = {assigned[j] for j in earlier[i]}
        colors = list(range(1, kappa + 1))
        rng.shuffle(colors)
        for col in colors:
            if col not in taken:
                assigned[i] = col
                walk(i + 1)
                if len(found) >= limit:
                    return
        assigned[i] = 0

    walk(0)
    return found[:cap], len(found) > cap


def brute_validate_extensions(
    n_max: int, coloring_cap: int = 1000, seed: int = 20240819
) -> ExtensionReport:
    """Run both extension procedures over every connected graph with at
    most n_max vertices, both palette sizes Delta+2 and Delta+3, and every
    eligible edge, feeding each up to coloring_cap proper colorings of the
    reduced graph.  Any exception, failed verification, or cascade
    certificate is recorded as a failure."""
    if n_max > 7:
        raise ReduceError("extension validation is capped at 7 vertices")
    report = ExtensionReport(n_max=n_max)
    instance_no = 0
    for n in range(2, n_max + 1):
        for g in enum_graphs(n, connected=True):
            for kappa in (g.max_degree() + 2, g.max_degree() + 3):
                half = (kappa - 1) // 2
                for u, v in g.edges():
                    du, dv = g.degree(u), g.degree(v)
                    if min(du, dv) > half:
                        continue
                    p1_ok = du + dv <= kappa
                    p3_apexes = (
                        sorted(g.common_neighbors(u, v))
                        if du + dv == kappa + 1
                        else []
                    )
                    if not p1_ok and not p3_apexes:
                        continue
                    instance_no += 1
                    report.instances += 1
                    rng = random.Random(seed + 1_000_003 * instance_no)
                    reduced = delete_edge(g, (u, v))
                    colorings, truncated = _proper_colorings(
                        reduced, kappa, coloring_cap, rng
                    )
                    if truncated:
                        report.truncated += 1
                    for c in colorings:
                        if p1_ok:
                            report.checks += 1
                            report.p1_checks += 1
                            _run_extension(report, g, (u, v), None, c, kappa)
                        for w in p3_apexes:
                            report.checks += 1
                            report.p3_checks += 1
                            _run_extension(report, g, (u, v), w, c, kappa)
    return report


def _run_extension(report, g, uv, apex, c, kappa) -> None:
    desc = {
        "edges": [list(e) for e in g.edges()],
        "edge": list(uv),
        "apex": apex,
        "kappa": kappa,
    }
    try:
        if apex is None:
            out = extend_p1(g, uv, c, kappa)
        else:
            out = extend_p3(g, uv, apex, c, kappa)
    except Exception as exc:  # any rejection here is a harness failure
        report.failures += 1
        desc["kind"] = f"exception: {exc}"
        report.certificates.append(desc)
        return
    if isinstance(out, P3Certificate):
        report.failures += 1
        desc["kind"] = "cascade exhausted"
        desc["u_used"] = sorted(out.u_used)
        desc["w_used"] = sorted(out.w_used)
        report.certificates.append(desc)
        return
    bad = verify(g, out)
    if bad or out.colors_used() > kappa:
        report.failures += 1
        desc["kind"] = f"bad extension: {bad[:3]}"
        report.certificates.append(desc)
