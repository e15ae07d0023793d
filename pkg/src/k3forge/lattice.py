"""Lattice polytopes inside the quartic exponent simplex.

Points are exponent triples (i, j, k) of monomials x^i y^j z^k w^l of
total degree 4 in four variables, so l = 4 - i - j - k and the ambient
universe is the 35-point simplex 4*Delta_3.  The symmetric group on the
four variables acts by permuting homogeneous exponent 4-vectors; keys
computed by the kernels identify point sets up to that action.

The distinguished interior point (1, 1, 1) is the exponent of xyzw.
"""

from itertools import permutations

from . import kernels
from .kernels import DEGREE, hull_3d, s4_key

INTERIOR_POINT = (1, 1, 1)


def homogenize(point):
    """Exponent triple -> homogeneous degree-4 exponent 4-vector."""
    i, j, k = point
    l = DEGREE - i - j - k
    if i < 0 or j < 0 or k < 0 or l < 0:
        raise ValueError("exponent point outside the quartic simplex")
    return (i, j, k, l)


def dehomogenize(vec):
    """Homogeneous exponent 4-vector -> exponent triple."""
    i, j, k, l = vec
    if i < 0 or j < 0 or k < 0 or l < 0 or i + j + k + l != DEGREE:
        raise ValueError("not a degree-4 exponent vector")
    return (i, j, k)


def simplex_points():
    """All 35 exponent triples of the quartic simplex, lex sorted."""
    pts = []
    for i in range(DEGREE + 1):
        for j in range(DEGREE + 1 - i):
            for k in range(DEGREE + 1 - i - j):
                pts.append((i, j, k))
    return tuple(sorted(pts))


SIMPLEX_POINTS = simplex_points()
POINT_INDEX = {p: i for i, p in enumerate(SIMPLEX_POINTS)}


def point_mask(points):
    """Bitmask over the 35-point universe; fast subset tests."""
    m = 0
    for p in points:
        m |= 1 << POINT_INDEX[p]
    return m


def canonical_key(points):
    """Canonical byte key of a point set under the S4 action."""
    return s4_key(sorted(points))


def key_string(blob):
    """Human-readable form of a canonical key: 'ijkl' groups joined by '|'."""
    return "|".join("".join(str(d) for d in vec) for vec in kernels.unpack_key(blob))


def key_from_string(text):
    """Inverse of key_string."""
    vecs = []
    for group in text.split("|"):
        if len(group) != 4:
            raise ValueError("malformed key group")
        vecs.append(tuple(int(ch) for ch in group))
    return s4_key([dehomogenize(v) for v in vecs])


def points_of_key(blob):
    """Exponent triples of the canonical representative, lex sorted."""
    return tuple(sorted(dehomogenize(v) for v in kernels.unpack_key(blob)))


def s4_point_images(points):
    """The distinct images of a point set under all 24 permutations.

    Returns a sorted list of distinct frozensets of exponent triples.
    """
    homs = [homogenize(p) for p in points]
    seen = set()
    for g in permutations(range(4)):
        a, b, c, d = g
        img = frozenset(dehomogenize((h[a], h[b], h[c], h[d])) for h in homs)
        seen.add(img)
    return sorted(seen, key=sorted)


def facet_distance(facet, point):
    a, b, c, d = facet
    return a * point[0] + b * point[1] + c * point[2] - d


def is_reflexive_facets(facets):
    """Reflexivity test from the facet list: the interior point is at
    lattice distance exactly 1 from every facet."""
    px, py, pz = INTERIOR_POINT
    for (a, b, c, d) in facets:
        if a * px + b * py + c * pz - d != 1:
            return False
    return True


def interior_contains(facets, point):
    """Strict interior test against a facet list."""
    x, y, z = point
    for (a, b, c, d) in facets:
        if a * x + b * y + c * z - d <= 0:
            return False
    return True


class LatticePolytope:
    """A full-dimensional lattice polytope given by a point set in Z^3.

    The constructor computes the exact hull once; everything else is
    derived from the facet list.  ``points`` may be any generating set,
    not necessarily the full set of lattice points.
    """

    def __init__(self, points):
        self.points = tuple(sorted(set(tuple(q) for q in points)))
        self.facets, vert_idx, self.volume = hull_3d(self.points)
        self.vertices = tuple(self.points[i] for i in vert_idx)

    def contains(self, point):
        """Closed containment test."""
        return all(facet_distance(f, point) >= 0 for f in self.facets)

    def contains_interior(self, point):
        """Strict interior containment test."""
        return interior_contains(self.facets, point)

    def lattice_points(self):
        """All integer points of the polytope, lex sorted.

        Scans the bounding box and filters by the facet inequalities.
        """
        xs = [p[0] for p in self.points]
        ys = [p[1] for p in self.points]
        zs = [p[2] for p in self.points]
        out = []
        for x in range(min(xs), max(xs) + 1):
            for y in range(min(ys), max(ys) + 1):
                for z in range(min(zs), max(zs) + 1):
                    if self.contains((x, y, z)):
                        out.append((x, y, z))
        return tuple(out)

    def interior_lattice_points(self):
        return tuple(q for q in self.lattice_points() if self.contains_interior(q))

    def is_canonical(self):
        """Exactly one interior lattice point."""
        return len(self.interior_lattice_points()) == 1

    def is_reflexive(self):
        """All facets at lattice distance 1 from the interior point.

        Only meaningful for polytopes whose unique interior lattice
        point is INTERIOR_POINT; raises otherwise.
        """
        interior = self.interior_lattice_points()
        if interior != (INTERIOR_POINT,):
            raise ValueError("polytope is not canonical with interior point (1,1,1)")
        return is_reflexive_facets(self.facets)

    def facet_points(self, facet):
        """The stored points lying on a given facet, lex sorted."""
        return tuple(q for q in self.points if facet_distance(facet, q) == 0)

    def boundary_points(self):
        """Stored points that lie on at least one facet."""
        out = []
        for q in self.points:
            if any(facet_distance(f, q) == 0 for f in self.facets):
                out.append(q)
        return tuple(out)

    def facet_chart(self, facet):
        """2D lattice coordinates of the facet's stored points.

        Returns (indices, coords) where indices select the facet points
        inside self.points and coords are their coordinates in a basis
        of the facet plane lattice anchored at the first facet point.
        The chart is unimodular, so normalized areas agree.
        """
        idx = [i for i, q in enumerate(self.points) if facet_distance(facet, q) == 0]
        pts = [self.points[i] for i in idx]
        u, v = kernels.plane_lattice_basis(facet[:3])
        flat = kernels.project_to_plane(pts[0], u, v, pts)
        return idx, flat

    def key(self):
        return canonical_key(self.points)


def quartic_simplex():
    """The full 35-point polytope 4*Delta_3."""
    return LatticePolytope(SIMPLEX_POINTS)
