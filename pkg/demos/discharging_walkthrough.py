"""
Reading a discharge ledger
==========================

Initial charges (deg - 6 on vertices, 2*size - 6 on faces) sum to zero on
the torus.  The discharging rules only move charge around, so the ledger
must conserve that total to the last 1/6 -- everything is a
fractions.Fraction, nothing is ever rounded.
"""
from fractions import Fraction

from totalcolor.augment import build_g_star
from totalcolor.configs import get_config, verify_config
from totalcolor.discharge import check_claims, discharge, final_report
from totalcolor.gen import gen_crossed, gen_toroidal_grid, true_graph_of

print("=" * 64)
print("part 1: a crossed grid, start to finish")
print("=" * 64)

g, base = gen_toroidal_grid(3, 5)
emb = gen_crossed(base, 2, seed=5)
a = build_g_star(emb, true_graph_of(emb))
ledger = discharge(a)

rep = final_report(ledger)
print("rules applied:  ", ", ".join(rep["applied"]))
print("initial total:  ", rep["initial_total"])
print("final total:    ", rep["final_total"])
print("conserved:      ", rep["conserved"])
print("transfers:      ", len(rep["transfers"]))
print("negative after: ", rep["negative_count"])

# show a couple of individual movements
for t in rep["transfers"][:4]:
    print("   ", t["rule"], t["from"], "->", t["to"], t["amount"])

# the structural claims: wherever a small true vertex sits on a big face
# over original sides, the face's share must meet the stated floor
claims = check_claims(a, ledger)
print("big-face floor violations:", len(claims.big_face))

print()
print("=" * 64)
print("part 2: a worked neighbourhood from the catalog")
print("=" * 64)

# each golden configuration wraps one negatively charged vertex in exactly
# the pattern the rules must rescue; its receipts are pinned down
cfg = get_config("triangle-run")
print(cfg.name, "--", cfg.description)
out = verify_config(cfg)
print("focal receipts:")
for rule, amount in out["receipts"]:
    print("   ", rule, "pays", amount)
print("focal final charge:", out["final"], "(zero:", out["zero"], ")")
assert out["final"] == Fraction(0)
