import sys
sys.path.insert(0, "src")
from k3forge import ratlp, triangulate as tri
from k3forge.lattice import LatticePolytope, INTERIOR_POINT

# 2D fine triangulations: unit square -> the two diagonals
sq = [(0, 0), (1, 0), (0, 1), (1, 1)]
ts = tri.fine_triangulations_2d(sq)
print("square:", len(ts), ts)
assert len(ts) == 2

# twice the standard triangle: 6 points
t2 = [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)]
ts2 = tri.fine_triangulations_2d(t2)
print("2*triangle fine count:", len(ts2))
for T in ts2:
    assert len(T) == 4  # fine => 4 unimodular triangles
    s = 0
    for (a, b, c) in T:
        s += abs(tri._turn(t2[a], t2[b], t2[c]))
    assert s == 4, (T, s)

# octahedron: unique central triangulation, unimodular, regular
octa = [(0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]
P = LatticePolytope(octa)
print("octa volume:", P.volume, "facets:", len(P.facets))
cts = list(tri.central_triangulations(P))
print("octa central triangulations:", len(cts))
assert len(cts) == 1
T = cts[0]
print("simplices:", len(T))
assert len(T) == 8
assert tri.is_unimodular(P.points, T)
assert tri.covered_volume(P.points, T) == P.volume
ci = P.points.index(INTERIOR_POINT)
assert tri.cone_over_boundary(tri.boundary_restriction(T, ci), ci) == T

heights = tri.is_regular(P.points, T)
print("octa heights:", heights)
assert heights is not None
cells = tri.regular_subdivision(P.points, heights)
print("cells:", len(cells))
assert set(cells) == set(T), (cells, T)

# equal heights -> trivial subdivision
cells0 = tri.regular_subdivision(P.points, [5] * len(P.points))
assert cells0 == (tuple(range(len(P.points))),), cells0

# non-regular control: twisted triangulation of the two-triangle config
moae = [(4, 0), (0, 4), (0, 0), (2, 1), (1, 2), (1, 1)]
twisted = tuple(sorted([(0, 1, 3), (1, 3, 4), (1, 2, 4), (2, 4, 5),
                        (0, 2, 5), (0, 3, 5), (3, 4, 5)]))
all_fine = tri.fine_triangulations_2d(moae)
print("moae fine count:", len(all_fine))
assert twisted in all_fine, "twisted triangulation not enumerated"
assert tri.is_regular(moae, twisted) is None
n_reg = sum(1 for T in all_fine if tri.is_regular(moae, T) is not None)
print("moae regular:", n_reg, "of", len(all_fine))

# a regular one must round-trip
for T in all_fine:
    hh = tri.is_regular(moae, T)
    if hh is not None:
        assert tri.regular_subdivision(moae, hh) == T, T
print("moae round-trips ok")

# ratlp basics
rows = [((1, 0), 0, True), ((0, 1), 0, True), ((-1, -1), -3, False)]
r = ratlp.solve(rows, 2)
print("lp:", r.status, r.witness)
assert r.status == "feasible"
r2 = ratlp.solve([((1,), 0, True), ((-1,), 0, True)], 1)
assert r2.status == "infeasible"
r3 = ratlp.solve_lazy(rows, 2, initial=1)
assert r3.status == "feasible"
print("ok")
