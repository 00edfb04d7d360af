"""Scratch: verify every fixture fact before freezing it into tests."""
from fractions import Fraction

from totalcolor.augment import AugmentedGraph
from totalcolor.configs import assemble, get_config
from totalcolor.discharge import (
    DischargeError, POOL, SemiFan, TransferRecord, apply_r1, apply_r2, apply_r3,
    apply_rule_table, check_claims, discharge, make_ledger, final_report, semi_fans,
)
from totalcolor.embedding import from_face_cycles
from totalcolor.graphs import build_graph
from totalcolor.ruletable import (
    MatchContext, RuleTable, default_rules, guarded_crossing,
)


def graph_from_faces(faces, skip=()):
    skipset = {tuple(sorted(p)) for p in skip}
    edges = sorted(
        {
            tuple(sorted((f[i], f[(i + 1) % len(f)])))
            for f in faces
            for i in range(len(f))
        }
        - skipset
    )
    return build_graph(edges)


def wrap(faces, surface="plane", crossings=(), g=None):
    if g is None:
        g = graph_from_faces(faces)
    e = from_face_cycles(faces, surface, crossing_vertices=frozenset(crossings), g=g)
    return AugmentedGraph(g=g, base=e, star=e, insertions=[])


def grid_faces(m, n):
    def v(i, j):
        return (i % m) * n + (j % n)
    return [
        (v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1))
        for i in range(m)
        for j in range(n)
    ]


# --- R1 example A: one (3,3) vertex, two delta-neighbors -> pool 0 ---------
faces = [f for f in grid_faces(4, 4) if f not in ((0, 4, 5, 1), (3, 7, 4, 0), (4, 8, 9, 5))]
faces += [(0, 4, 16), (4, 5, 16), (5, 1, 0, 16), (7, 4, 0), (0, 3, 7), (4, 8, 9), (4, 9, 5)]
a = wrap(faces, "torus")
led = make_ledger(a)
print("A: delta", led.delta, "cls16", a.classification[16], )
apply_r1(a, led)
print("A pool", led.pool, "flagged", led.pool_flagged)
print("A transfers", [(t.rule, t.source, t.target, t.amount) for t in led.transfers])

# --- R1 example B: one (3,4) vertex (one new edge), one qualifying delta ---
faces = [f for f in grid_faces(4, 4) if f not in ((0, 4, 5, 1), (3, 7, 4, 0))]
faces += [(0, 4, 16), (4, 5, 16), (5, 1, 16), (1, 0, 16), (7, 4, 0), (0, 3, 7)]
b = assemble([list(f) for f in faces], new_pairs=((1, 16),), surface="torus")
led = make_ledger(b)
c16 = b.classification[16]
print("B: delta", led.delta, "cls16 d1/d2", c16.d1, c16.d2, "new_inc", c16.new_incident)
apply_r1(b, led)
print("B pool", led.pool, "flagged", led.pool_flagged)
print("B transfers", [(t.rule, t.source, t.target, t.amount) for t in led.transfers])

# --- R3 starred wheel: two crossed spokes -----------------------------------
sw_faces = [
    (0, 1, 6), (0, 6, 3), (0, 3, 7), (0, 7, 5), (0, 5, 1),
    (1, 2, 6), (6, 2, 3), (3, 4, 7), (7, 4, 5),
    (1, 5, 4, 3, 2),
]
sw_g = build_graph(
    [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
     (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (1, 3), (3, 5)]
)
sw = wrap(sw_faces, "plane", crossings=(6, 7), g=sw_g)
led = make_ledger(sw)
print("SW cls0", sw.classification[0], "cls3", sw.classification[3])
apply_r3(sw, led)
print("SW r3 transfers", [(t.rule, t.source, t.target, t.amount) for t in led.transfers])
print("SW recv0", led.received_by(0))

# --- R3 all-true wheel: five true neighbours --------------------------------
import sys
sys.path.insert(0, "/root/pkg/tests")
from helpers import wheel_plane
e, g = wheel_plane(5)
w = AugmentedGraph(g=g, base=e, star=e, insertions=[])
led = make_ledger(w)
apply_r3(w, led)
print("W5 r3 recv0", led.received_by(0), "n transfers", len(led.transfers))

# --- R2 census fixtures ------------------------------------------------------
def petals(v, chain):
    """Petal faces giving vertex v the extra neighbours in `chain` order,
    starting after existing out-neighbour chain[0] ... (a, v, b) idiom."""
    out = []
    for x, y in zip(chain, chain[1:]):
        out.append((x, v, y))
    return out

# central quad, one big corner
fq = [(0, 1, 2, 3)] + petals(0, [1, 30, 31, 32, 33])
aq = assemble([list(f) for f in fq])
ledq = make_ledger(aq)
apply_r2(aq, ledq)
cls = aq.classification
print("Q1 big?", cls[0].size_class, cls[1].size_class, "d2(0)", cls[0].d2)
quad_fi = [i for i, f in enumerate(aq.star.faces())
           if f.size == 4 and {aq.star.owner[d] for d in f.boundary} == {0, 1, 2, 3}]
print("Q1 quad fi", quad_fi)
for t in ledq.transfers:
    if t.source == ("face", quad_fi[0]):
        print("  Q1", t.target, t.amount)

# central quad, two big corners
fq2 = [(0, 1, 2, 3)] + petals(0, [1, 30, 31, 32, 33]) + petals(1, [2, 34, 35, 36, 37])
aq2 = assemble([list(f) for f in fq2])
ledq2 = make_ledger(aq2)
apply_r2(aq2, ledq2)
quad_fi2 = [i for i, f in enumerate(aq2.star.faces())
            if f.size == 4 and {aq2.star.owner[d] for d in f.boundary} == {0, 1, 2, 3}]
for t in ledq2.transfers:
    if t.source == ("face", quad_fi2[0]):
        print("  Q2", t.target, t.amount)

# central 5-face, two big corners
fp = [(0, 1, 2, 3, 4)] + petals(0, [1, 30, 31, 32, 33]) + petals(1, [2, 34, 35, 36, 37])
ap = assemble([list(f) for f in fp])
ledp = make_ledger(ap)
apply_r2(ap, ledp)
pent_fi = [i for i, f in enumerate(ap.star.faces())
           if f.size == 5 and {ap.star.owner[d] for d in f.boundary} == {0, 1, 2, 3, 4}]
for t in ledp.transfers:
    if t.source == ("face", pent_fi[0]):
        print("  P2", t.target, t.amount)

# all-big quad for min_share=None
fb = [(0, 1, 2, 3)]
fb += petals(0, [1, 30, 31, 32, 33])
fb += petals(1, [2, 34, 35, 36, 37])
fb += petals(2, [3, 38, 39, 40, 41])
fb += petals(3, [0, 42, 43, 44, 45])
ab = assemble([list(f) for f in fb])
ctxb = MatchContext(ab)
fis = [i for i in range(len(ctxb.faces))
       if ctxb.face_size[i] == 4 and ctxb.face_smalls[i] == 0]
print("all-big quad fi", fis, "share", [ctxb.face_share(i) for i in fis])

# butterfly: R2 multiplicity
bf_faces = [(0, 1, 2), (1, 3, 4), (0, 2, 1, 4, 3, 1)]
bf_g = build_graph([(0, 1), (1, 2), (0, 2), (1, 3), (1, 4), (3, 4)])
bf = wrap(bf_faces, "plane", g=bf_g)
ledbf = make_ledger(bf)
apply_r2(bf, ledbf)
print("BF outer transfers", [(t.target, t.amount) for t in ledbf.transfers])
print("BF recv1", ledbf.received_by(1))

# --- guard-stop: per-sender guard flags -------------------------------------
gs = get_config("guard-stop")
ags = gs.build()
ledgs = discharge(ags)
ctx = MatchContext(ags)
star = ags.star
flags = {}
for d in star.rotation[0]:
    s = star.other_end(d)
    flags[s] = guarded_crossing(ctx, s, 0, d)
print("guard flags at crossing 0:", flags)
print("skipped:", [(t.rule, t.source, t.target) for t in ledgs.skipped])
print("side senders:", [(t.rule, t.source, t.amount) for t in ledgs.transfers
                        if t.target == 0 and t.rule.startswith("rx")])

# claims with guard disabled
bare = RuleTable(rules=default_rules().rules, exclusions=())
led_bare = discharge(ags, table=bare)
rep = check_claims(ags, led_bare)
print("quiet(no guard):", rep.crossing_quiet)
rep2 = check_claims(ags, ledgs)
print("quiet(guarded):", rep2.crossing_quiet)

# --- semi-fan rejection / degenerate / constructed logs ---------------------
fr = get_config("fan-run").build()
ledfr = discharge(fr)
print("fan center 1:", semi_fans(fr, ledfr, center=1))
try:
    semi_fans(fr, ledfr, center=2)
except DischargeError as exc:
    print("center 2 rejected:", exc)
print("fan center 2 forced:", semi_fans(fr, ledfr, center=2, min_degree=0))
print("quiet center 5 forced:", semi_fans(fr, ledfr, center=5, min_degree=0))
print("cls deg:", {v: fr.classification[v].d2 for v in (1, 2, 5, 50)})

# constructed log: three 1/3 ribs on a torus-grid vertex
from helpers import torus_grid
e, g = torus_grid(3, 3)
tg = AugmentedGraph(g=g, base=e, star=e, insertions=[])
ledtg = make_ledger(tg)
rot = tg.star.rotation[0]
for d in rot[:3]:
    ledtg.transfers.append(
        TransferRecord("x", 0, tg.star.other_end(d), Fraction(1, 3), dart=d)
    )
print("constructed:", semi_fans(tg, ledtg, center=0))
# full wheel
ledtg2 = make_ledger(tg)
for d in rot:
    ledtg2.transfers.append(
        TransferRecord("x", 0, tg.star.other_end(d), Fraction(1, 6), dart=d)
    )
print("full wheel:", semi_fans(tg, ledtg2, center=0))

# --- claim fixtures ----------------------------------------------------------
from helpers import quad_with_crossing
e, g = quad_with_crossing()
qc = AugmentedGraph(g=g, base=e, star=e, insertions=[])
rep = check_claims(qc)
print("qc claims:", rep.counts(), "holds", rep.holds())
e, g = torus_grid(3, 3)
rep = check_claims(tg)
print("grid claims:", rep.counts())

# --- final_report shape -------------------------------------------------------
led0 = make_ledger(tg)
r = final_report(led0)
print("torus report total", r["initial_total"], r["final_total"], r["conserved"])
led1 = make_ledger(qc)
r1 = final_report(led1)
print("plane report total", r1["initial_total"], "neg first:",
      list(r1["charges"].items())[:3])
