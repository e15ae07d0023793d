import io
import sys
import time
sys.path.insert(0, "src")
from k3forge import k3dual, triangulate as tri
from k3forge.demo import demo_weight_vector
from k3forge.lattice import LatticePolytope, SIMPLEX_POINTS, INTERIOR_POINT

octa = [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]
P = LatticePolytope(octa)
T = list(tri.central_triangulations(P))[0]
combo = k3dual.dual_combinatorics(T)
print("octa dual f-vector:", combo.f_vector)
assert combo.f_vector == k3dual.dual_f_vector(P.volume) == (8, 12, 6)
key = k3dual.incidence_key(T)
print("octa key:", key)

# cube graph invariance: relabel simplices and points, same key
import random
rng = random.Random(7)
for _ in range(20):
    pi = list(range(len(T)))
    rng.shuffle(pi)
    fl = [tuple(sorted(pi[s] for s in row)) for row in combo.facet_lists]
    rng.shuffle(fl)
    assert k3dual.graph_canonical_key(fl, 8) == k3dual.graph_canonical_key(combo.facet_lists, 8)
print("key invariance ok")

# demo weights on the full simplex
t0 = time.time()
heights = demo_weight_vector()
cells = tri.regular_subdivision(SIMPLEX_POINTS, heights)
print("demo cells:", len(cells), "in %.2fs" % (time.time() - t0))
assert len(cells) == 64
assert all(len(c) == 4 for c in cells)
assert tri.is_unimodular(SIMPLEX_POINTS, cells)
assert tri.covered_volume(SIMPLEX_POINTS, cells) == 64

combo2 = k3dual.dual_combinatorics(cells)
print("demo dual f-vector:", combo2.f_vector)
assert combo2.f_vector == (64, 96, 34)

t0 = time.time()
region = k3dual.bounded_region(SIMPLEX_POINTS, heights)
print("region f-vector:", region.f_vector, "in %.2fs" % (time.time() - t0))
assert region.f_vector == (64, 96, 34)

t0 = time.time()
k1 = k3dual.graph_canonical_key(combo2.facet_lists, 64, limit=80)
k2 = k3dual.region_face_key(region)
print("keys match:", k1 == k2, "in %.2fs" % (time.time() - t0))
assert k1 == k2

buf = io.StringIO()
k3dual.export_off(region, buf)
text = buf.getvalue()
head = text.splitlines()
print("off header:", head[0], head[1])
assert head[0] == "OFF" and head[1] == "64 34 96"
assert len(head) == 2 + 64 + 34

# certificate for the demo triangulation must exist and round-trip
t0 = time.time()
hh = tri.is_regular(SIMPLEX_POINTS, cells)
print("demo certificate in %.2fs" % (time.time() - t0))
assert hh is not None
assert tri.regular_subdivision(SIMPLEX_POINTS, hh) == cells
print("demo certificate round-trips")
print("ok")
