"""
From crossings to the associated drawing
========================================

A 1-embedded graph may carry one crossing per edge.  The associated
drawing replaces every crossing point by a degree-4 vertex, and the
augmentation then inserts new edges into big faces until no face of size
four or more keeps two non-adjacent true vertices on its boundary.  This
walkthrough plants three crossings in a torus grid and inspects what the
augmentation does to the face census.
"""
from totalcolor.augment import augment_report, build_g_star, check_fixpoint
from totalcolor.embedding import CROSSING
from totalcolor.gen import gen_crossed, gen_toroidal_grid

g, base = gen_toroidal_grid(4, 4)

# plant three interleaved chord pairs; each one turns a quad face into four
# triangle-ish subfaces around a fresh crossing vertex
crossed = gen_crossed(base, 3, seed=11)
xs = [v for v, k in crossed.vertex_kind.items() if k == CROSSING]
print("crossing vertices:", sorted(xs))
print("each has degree 4:", all(crossed.degree(x) == 4 for x in xs))

# the true graph is unchanged: crossings are drawing artifacts
true_vertices = [v for v in crossed.vertices() if v not in xs]
print("true vertices:", len(true_vertices), "(grid had", len(g.vertices), ")")

# 1. Augment.  build_g_star inserts new edges into big faces until the
#    insertion rule finds nothing left to join.
a = build_g_star(crossed, g)
print("\nnew edges inserted:", a.new_edge_count())
for r in a.insertions:
    print("  step", r.step, "joined", r.pair, "inside a face of size", len(r.face))

# 2. The census moves mass from big faces toward triangles.
rep = augment_report(a)
print("face census after augmenting:", rep["face_census"])
print("augmentation is a fixpoint:", check_fixpoint(a))

# 3. Classification: every vertex gets its (d1, d2) type, where d1 counts
#    original neighbors and d2 counts segments in the associated drawing.
big = [v for v, c in a.classification.items() if c.size_class == "big"]
print("big vertices:", sorted(big))
new_inc = [v for v, c in a.classification.items() if c.new_incident]
print("vertices touching a new edge:", sorted(new_inc))
