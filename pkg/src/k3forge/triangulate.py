"""Fine central triangulations, regularity certificates, and the exact
regular subdivision induced by a height function.

A fine central triangulation of a canonical polytope uses every stored
lattice point: the distinguished interior point is joined to a fine
triangulation of each boundary facet.  Facets are triangulated
independently; because a fine 2D triangulation uses every lattice point
of the facet, the induced subdivisions of shared edges always agree, so
the central triangulations are exactly the products of per-facet
choices.

Regularity is certified by exhibiting integer heights whose induced
subdivision is the given triangulation, or refuted by the infeasibility
of the strict preference system on a subset of its rows.
"""

from fractions import Fraction
from itertools import product as cartesian_product
from math import gcd

from . import ratlp
from .kernels import hull_2d, hull_3d
from .lattice import INTERIOR_POINT


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _within_box(a, b, q):
    return (min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]))


def _segments_conflict(p1, p2, q1, q2):
    """True if the closed segments meet in more than a shared endpoint."""
    d1 = _turn(q1, q2, p1)
    d2 = _turn(q1, q2, p2)
    d3 = _turn(p1, p2, q1)
    d4 = _turn(p1, p2, q2)
    if d1 == 0 and d2 == 0:
        # collinear: positive-length overlap is a conflict, one shared
        # point can only be a common endpoint of nondegenerate segments
        lox = max(min(p1[0], p2[0]), min(q1[0], q2[0]))
        hix = min(max(p1[0], p2[0]), max(q1[0], q2[0]))
        loy = max(min(p1[1], p2[1]), min(q1[1], q2[1]))
        hiy = min(max(p1[1], p2[1]), max(q1[1], q2[1]))
        return lox < hix or loy < hiy
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    for d, pt, s1, s2 in ((d1, p1, q1, q2), (d2, p2, q1, q2),
                          (d3, q1, p1, p2), (d4, q2, p1, p2)):
        if d == 0 and pt != s1 and pt != s2 and _within_box(s1, s2, pt):
            return True
    return False


def fine_triangulations_2d(points):
    """All fine triangulations of a 2D lattice point configuration.

    Parameters
    ----------
    points : sequence of (x, y) int pairs
        Distinct points spanning the plane; every point is used.

    Returns
    -------
    tuple of triangulations, sorted; each triangulation is a sorted
    tuple of triangles, each triangle a sorted index triple.

    The region is filled by an advancing front of directed edges that
    keep the untriangulated part on their left.  Each step closes the
    smallest front edge with an empty triangle whose new edges do not
    cross anything already placed, so every complete front collapse is a
    fine triangulation and all of them are met exactly once.
    """
    pts = [tuple(q) for q in points]
    n = len(pts)
    if len(set(pts)) != n:
        raise ValueError("duplicate configuration points")
    corners = hull_2d(pts)
    if len(corners) < 3:
        raise ValueError("configuration does not span the plane")

    # counterclockwise boundary cycle including edge lattice points
    cycle = []
    for t in range(len(corners)):
        a = corners[t]
        b = corners[(t + 1) % len(corners)]
        pa, pb = pts[a], pts[b]
        on_edge = []
        for i in range(n):
            if i == a or i == b:
                continue
            if _turn(pa, pb, pts[i]) == 0 and _within_box(pa, pb, pts[i]):
                on_edge.append(i)
        on_edge.sort(key=lambda i: (pts[i][0] - pa[0]) * (pb[0] - pa[0])
                     + (pts[i][1] - pa[1]) * (pb[1] - pa[1]))
        cycle.append(a)
        cycle.extend(on_edge)
    m = len(cycle)

    oriented = {}

    def empty_triangle(a, b, c):
        key = tuple(sorted((a, b, c)))
        got = oriented.get(key)
        if got is None:
            pa, pb, pc = pts[key[0]], pts[key[1]], pts[key[2]]
            if _turn(pa, pb, pc) < 0:
                pb, pc = pc, pb
            got = True
            for i in range(n):
                if i in key:
                    continue
                q = pts[i]
                if (_turn(pa, pb, q) >= 0 and _turn(pb, pc, q) >= 0
                        and _turn(pc, pa, q) >= 0):
                    got = False
                    break
            oriented[key] = got
        return got

    results = []
    triangles = []
    front0 = frozenset((cycle[i], cycle[(i + 1) % m]) for i in range(m))
    used0 = frozenset(tuple(sorted(e)) for e in front0)

    def advance(front, used):
        if not front:
            results.append(tuple(sorted(triangles)))
            return
        a, b = min(front)
        pa, pb = pts[a], pts[b]
        for c in range(n):
            if c == a or c == b:
                continue
            if _turn(pa, pb, pts[c]) <= 0:
                continue
            if not empty_triangle(a, b, c):
                continue
            e1 = (a, c) if a < c else (c, a)
            e2 = (b, c) if b < c else (c, b)
            conflict = False
            for e in (e1, e2):
                if e in used:
                    continue
                pe1, pe2 = pts[e[0]], pts[e[1]]
                for u, v in used:
                    if _segments_conflict(pe1, pe2, pts[u], pts[v]):
                        conflict = True
                        break
                if conflict:
                    break
            if conflict:
                continue
            nxt = set(front)
            nxt.remove((a, b))
            for edge in ((c, b), (a, c)):
                rev = (edge[1], edge[0])
                if rev in nxt:
                    nxt.remove(rev)
                else:
                    nxt.add(edge)
            triangles.append(tuple(sorted((a, b, c))))
            advance(frozenset(nxt), used | {e1, e2})
            triangles.pop()

    advance(front0, used0)
    return tuple(sorted(results))


def central_triangulations(poly):
    """Yield every fine central triangulation of a canonical polytope.

    poly.points must be all lattice points of the polytope and contain
    the distinguished interior point.  Each triangulation is a sorted
    tuple of simplices, each simplex a sorted 4-tuple of indices into
    poly.points (the interior point plus a boundary triangle).
    """
    points = poly.points
    try:
        center = points.index(INTERIOR_POINT)
    except ValueError:
        raise ValueError("configuration lacks the distinguished interior point")
    per_facet = []
    for facet in poly.facets:
        idx, flat = poly.facet_chart(facet)
        mapped = []
        for tri_set in fine_triangulations_2d(flat):
            mapped.append(tuple(tuple(sorted(idx[i] for i in tri))
                                for tri in tri_set))
        per_facet.append(mapped)
    for combo in cartesian_product(*per_facet):
        simplices = []
        for tris in combo:
            for tri in tris:
                simplices.append(tuple(sorted((center,) + tri)))
        yield tuple(sorted(simplices))


def boundary_restriction(simplices, center):
    """Strip the shared interior vertex, leaving the boundary triangles."""
    out = []
    for s in simplices:
        if center not in s:
            raise ValueError("simplex misses the interior vertex")
        out.append(tuple(i for i in s if i != center))
    return tuple(sorted(out))


def cone_over_boundary(triangles, center):
    """Rebuild central simplices from boundary triangles."""
    return tuple(sorted(tuple(sorted(t + (center,))) for t in triangles))


def _det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def simplex_determinant(points, simplex):
    """Normalized volume (signed) of a 3D lattice simplex."""
    a, b, c, d = (points[i] for i in simplex)
    return _det3((b[0] - a[0], b[1] - a[1], b[2] - a[2]),
                 (c[0] - a[0], c[1] - a[1], c[2] - a[2]),
                 (d[0] - a[0], d[1] - a[1], d[2] - a[2]))


def is_unimodular(points, simplices):
    return all(abs(simplex_determinant(points, s)) == 1 for s in simplices)


def covered_volume(points, simplices):
    return sum(abs(simplex_determinant(points, s)) for s in simplices)


def _barycentric(simplex_pts, target):
    """Barycentric coordinates of target in an affine basis, exact."""
    d = len(target)
    p = simplex_pts[0]
    diffs = [tuple(q[i] - p[i] for i in range(d)) for q in simplex_pts[1:]]
    rhs = tuple(target[i] - p[i] for i in range(d))
    if d == 3:
        det = _det3(*diffs)
        if det == 0:
            raise ValueError("degenerate simplex")
        l1 = Fraction(_det3(rhs, diffs[1], diffs[2]), det)
        l2 = Fraction(_det3(diffs[0], rhs, diffs[2]), det)
        l3 = Fraction(_det3(diffs[0], diffs[1], rhs), det)
        return (1 - l1 - l2 - l3, l1, l2, l3)
    if d == 2:
        det = diffs[0][0] * diffs[1][1] - diffs[0][1] * diffs[1][0]
        if det == 0:
            raise ValueError("degenerate simplex")
        l1 = Fraction(rhs[0] * diffs[1][1] - rhs[1] * diffs[1][0], det)
        l2 = Fraction(diffs[0][0] * rhs[1] - diffs[0][1] * rhs[0], det)
        return (1 - l1 - l2, l1, l2)
    raise ValueError("unsupported dimension")


class RegularityTester:
    """Certifies regularity of triangulations of one configuration.

    Preference rows depend only on (simplex, outside point), so they are
    cached and shared across the many triangulations of a configuration
    that differ in a few simplices.
    """

    def __init__(self, points):
        self.points = [tuple(q) for q in points]
        self.n = len(self.points)
        self._cleared = {}

    def _row(self, simplex, a):
        """Cleared integer coefficients of the strict row: the height at
        a exceeds the affine interpolation of the simplex heights."""
        key = (simplex, a)
        got = self._cleared.get(key)
        if got is None:
            lam = _barycentric([self.points[i] for i in simplex],
                               self.points[a])
            coeffs = [0] * self.n
            coeffs[a] = 1
            for i, l in zip(simplex, lam):
                coeffs[i] = -l
            got, _ = ratlp.clear_row(coeffs, 0)
            self._cleared[key] = got
        return got

    def preference_rows(self, simplices):
        """All strict rows for a triangulation, wall rows first.

        A wall row pins one simplex against the apex of the simplex
        across a shared facet; these few rows decide feasibility almost
        always, so they lead the ordering.  Returns (rows, n_wall).
        """
        shared = {}
        for si, simplex in enumerate(simplices):
            for drop in simplex:
                facet = tuple(i for i in simplex if i != drop)
                shared.setdefault(facet, []).append((si, drop))
        wall_keys = set()
        for facet, members in shared.items():
            if len(members) == 2:
                (s1, a1), (s2, a2) = members
                wall_keys.add((s1, a2))
                wall_keys.add((s2, a1))
            elif len(members) > 2:
                raise ValueError("facet shared by more than two simplices")
        rows = []
        seen = set()
        for si, a in sorted(wall_keys):
            r = self._row(simplices[si], a)
            if r not in seen:
                seen.add(r)
                rows.append(r)
        n_wall = len(rows)
        for simplex in simplices:
            inside = set(simplex)
            for a in range(self.n):
                if a in inside:
                    continue
                r = self._row(simplex, a)
                if r not in seen:
                    seen.add(r)
                    rows.append(r)
        return rows, n_wall

    def certify(self, simplices):
        """Integer height certificate for a regular triangulation.

        Heights are gauged to zero on the first simplex; the remaining
        heights are then forced positive by the rows against that
        simplex, so the solver may restrict to nonnegative variables.
        Returns a tuple of ints, or None if the triangulation is not
        regular.  The returned heights are re-verified against every
        preference row.
        """
        rows, n_wall = self.preference_rows(simplices)
        gauge = set(simplices[0])
        cols = [i for i in range(self.n) if i not in gauge]
        projected = [tuple(r[i] for i in cols) for r in rows]
        res = ratlp.solve_strict_rays(projected, len(cols), nonneg=True,
                                      initial=max(n_wall, 1))
        if res.status == "infeasible":
            return None
        heights = [Fraction(0)] * self.n
        for value, i in zip(res.witness, cols):
            heights[i] = value
        ints = ratlp.rescale_primitive(heights)
        for r in rows:
            if sum(c * h for c, h in zip(r, ints) if c) <= 0:
                raise ArithmeticError("height certificate fails a row")
        return ints


def is_regular(points, simplices):
    """One-shot regularity check; see RegularityTester.certify."""
    return RegularityTester(points).certify(simplices)


def _reduce_functional(c0, cvec, den):
    g = abs(den)
    for v in cvec:
        g = gcd(g, v)
    g = gcd(g, c0)
    if g > 1:
        return c0 // g, tuple(v // g for v in cvec), den // g
    return c0, tuple(cvec), den


def _grow_direction(tight_pts, outside):
    """Integer affine functional vanishing on the tight span, positive
    at the outside point."""
    d = len(outside)
    q0 = tight_pts[0]
    basis = []
    for q in tight_pts[1:]:
        v = tuple(q[i] - q0[i] for i in range(d))
        if len(basis) == 0:
            if any(v):
                basis.append(v)
        elif len(basis) == 1:
            if d == 2:
                if basis[0][0] * v[1] - basis[0][1] * v[0] != 0:
                    basis.append(v)
            else:
                w = basis[0]
                cx = w[1] * v[2] - w[2] * v[1]
                cy = w[2] * v[0] - w[0] * v[2]
                cz = w[0] * v[1] - w[1] * v[0]
                if cx or cy or cz:
                    basis.append(v)
        elif len(basis) == 2 and d == 3:
            if _det3(basis[0], basis[1], v) != 0:
                basis.append(v)
    u = tuple(outside[i] - q0[i] for i in range(d))
    if len(basis) == 0:
        nvec = u
    elif d == 2:
        w = basis[0]
        nvec = (-w[1], w[0])
    elif len(basis) == 1:
        w = basis[0]
        ww = sum(x * x for x in w)
        wu = sum(a * b for a, b in zip(w, u))
        nvec = tuple(u[i] * ww - w[i] * wu for i in range(3))
    else:
        w1, w2 = basis[0], basis[1]
        nvec = (w1[1] * w2[2] - w1[2] * w2[1],
                w1[2] * w2[0] - w1[0] * w2[2],
                w1[0] * w2[1] - w1[1] * w2[0])
    s = sum(a * b for a, b in zip(nvec, u))
    if s < 0:
        nvec = tuple(-x for x in nvec)
        s = -s
    if s == 0:
        raise ValueError("direction does not separate the outside point")
    lconst = -sum(a * b for a, b in zip(nvec, q0))
    return lconst, nvec


def regular_subdivision(points, heights):
    """Cells of the regular subdivision induced by lifting heights.

    Each cell is the global tight set of a supporting affine functional
    of the lifted point configuration.  One full-dimensional cell is
    grown from the constant functional at the minimum height; the rest
    are reached by walking across interior walls.  All arithmetic is
    exact; rational heights are scaled to integers first, which leaves
    the subdivision unchanged.

    Returns a sorted tuple of cells, each a sorted tuple of indices into
    points.  Cells need not be simplices.
    """
    pts = [tuple(q) for q in points]
    d = len(pts[0])
    hf = [Fraction(h) for h in heights]
    scale = 1
    for f in hf:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    h = [int(f * scale) for f in hf]

    def tight_set(c0, cvec, den):
        out = []
        for i, q in enumerate(pts):
            if h[i] * den == c0 + sum(a * b for a, b in zip(cvec, q)):
                out.append(i)
        return tuple(out)

    def rotate(c0, cvec, den, lconst, lvec):
        """Rotate the functional onto the direction until it touches."""
        best = None
        for i, q in enumerate(pts):
            la = lconst + sum(a * b for a, b in zip(lvec, q))
            if la <= 0:
                continue
            num = h[i] * den - (c0 + sum(a * b for a, b in zip(cvec, q)))
            if best is None or num * best[1] < best[0] * la:
                best = (num, la)
        if best is None:
            return None
        num, la = best
        c0n = la * c0 + num * lconst
        cn = tuple(la * cvec[i] + num * lvec[i] for i in range(d))
        return _reduce_functional(c0n, cn, den * la)

    # grow a full-dimensional starting cell from the constant support
    c0, cvec, den = min(h), (0,) * d, 1
    tight = tight_set(c0, cvec, den)
    while _affine_rank([pts[i] for i in tight]) < d:
        tp = [pts[i] for i in tight]
        in_tight = set(tight)
        direction = None
        for i, q in enumerate(pts):
            if i in in_tight:
                continue
            try:
                direction = _grow_direction(tp, q)
            except ValueError:
                continue
            break
        if direction is None:
            raise ValueError("configuration is not full-dimensional")
        c0, cvec, den = rotate(c0, cvec, den, *direction)
        tight = tight_set(c0, cvec, den)

    cells = []
    seen = {frozenset(tight)}
    queue = [(tight, (c0, cvec, den))]
    while queue:
        cell, (c0, cvec, den) = queue.pop(0)
        cells.append(tuple(sorted(cell)))
        cpts = [pts[i] for i in cell]
        for lconst, lvec in _cell_walls(cpts, d):
            nxt = rotate(c0, cvec, den, lconst, lvec)
            if nxt is None:
                continue
            ntight = tight_set(*nxt)
            fs = frozenset(ntight)
            if fs not in seen:
                seen.add(fs)
                queue.append((ntight, nxt))
    return tuple(sorted(cells))


def _affine_rank(pts):
    d = len(pts[0])
    q0 = pts[0]
    basis = []
    for q in pts[1:]:
        v = tuple(q[i] - q0[i] for i in range(d))
        if len(basis) == 0:
            if any(v):
                basis.append(v)
        elif len(basis) == 1:
            if d == 2:
                if basis[0][0] * v[1] - basis[0][1] * v[0] != 0:
                    basis.append(v)
            else:
                w = basis[0]
                if (w[1] * v[2] - w[2] * v[1] or w[2] * v[0] - w[0] * v[2]
                        or w[0] * v[1] - w[1] * v[0]):
                    basis.append(v)
        elif len(basis) == 2 and d == 3:
            if _det3(basis[0], basis[1], v) != 0:
                basis.append(v)
        if len(basis) == d:
            break
    return len(basis)


def _cell_walls(cpts, d):
    """Outward affine functionals of a cell's facets: zero on the wall,
    negative inside the cell."""
    walls = []
    if d == 3:
        facets, _, _ = hull_3d(cpts)
        for a, b, c, dd in facets:
            walls.append((dd, (-a, -b, -c)))
    else:
        cyc = hull_2d(cpts)
        m = len(cyc)
        for i in range(m):
            pa = cpts[cyc[i]]
            pb = cpts[cyc[(i + 1) % m]]
            nvec = (-(pb[1] - pa[1]), pb[0] - pa[0])
            lconst = nvec[0] * pa[0] + nvec[1] * pa[1]
            walls.append((lconst, (-nvec[0], -nvec[1])))
    return walls
