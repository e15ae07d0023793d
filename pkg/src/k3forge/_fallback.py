"""Pure-Python reference kernels.

Three hot primitives live here: exact convex hulls of integer point sets
in Z^3, canonical keys for point sets under the symmetric group acting on
homogeneous quartic exponent vectors, and a fraction-free integer simplex
for rational feasibility questions.  The compiled extension module
``k3forge._speedups`` reimplements the same three entry points with the
same algorithms and byte-identical outputs; everything else in the
package calls them through ``k3forge.kernels`` and never needs to know
which backend answered.

All arithmetic is exact.  Hull facets are primitive inward normals with
offsets, volumes are normalized (a unimodular simplex has volume 1), and
simplex pivots divide exactly or raise.
"""

from fractions import Fraction
from itertools import permutations

DEGREE = 4

# all 24 coordinate permutations of the homogeneous exponent 4-vector,
# in itertools order so both backends enumerate identically
PERMS4 = tuple(permutations(range(4)))


def _xgcd(a, b):
    """Extended gcd.

    Returns (g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g.
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _gcd3(a, b, c):
    a = abs(a)
    b = abs(b)
    c = abs(c)
    while b:
        a, b = b, a % b
    while c:
        a, c = c, a % c
    return a


def _cross(ax, ay, az, bx, by, bz):
    return (ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx)


def _unit_solution(n):
    """Integer w with <n, w> = 1 for a primitive integer vector n."""
    n1, n2, n3 = n
    g1, s, t = _xgcd(n1, n2)
    g2, u, v = _xgcd(g1, n3)
    if g2 != 1:
        raise ValueError("normal vector is not primitive")
    return (s * u, t * u, v)


def plane_lattice_basis(n):
    """Basis of the rank-2 lattice {x in Z^3 : <n, x> = 0}.

    Parameters
    ----------
    n : tuple of int
        Primitive normal vector.

    Returns
    -------
    (u, v) : pair of integer 3-vectors spanning the kernel lattice.
    """
    w = _unit_solution(n)
    gens = []
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        ni = n[i]
        g = (e[0] - ni * w[0], e[1] - ni * w[1], e[2] - ni * w[2])
        if g != (0, 0, 0):
            gens.append(g)
    # unimodular row reduction; the generators have rank exactly 2
    rows = [list(g) for g in gens]
    basis = []
    for col in range(3):
        idx = [i for i, r in enumerate(rows) if r[col] != 0]
        if not idx:
            continue
        i0 = idx[0]
        for i in idx[1:]:
            a, b = rows[i0][col], rows[i][col]
            g, s, t = _xgcd(a, b)
            ra = rows[i0]
            rb = rows[i]
            rows[i0] = [s * ra[k] + t * rb[k] for k in range(3)]
            rows[i] = [(a // g) * rb[k] - (b // g) * ra[k] for k in range(3)]
        basis.append(tuple(rows[i0]))
        rows = [r for j, r in enumerate(rows) if j != i0 and any(r)]
        if len(basis) == 2:
            return basis[0], basis[1]
    raise ValueError("kernel lattice does not have rank 2")


def project_to_plane(origin, u, v, points):
    """Coordinates of plane points in the basis (u, v) anchored at origin.

    Every input point must lie in origin + (lattice spanned by u, v);
    the integral 2x2 solve asserts exact division.
    """
    # pick a coordinate pair where the basis projects invertibly
    pair = None
    for r in range(3):
        for s in range(r + 1, 3):
            det = u[r] * v[s] - u[s] * v[r]
            if det != 0:
                pair = (r, s, det)
                break
        if pair:
            break
    if pair is None:
        raise ValueError("plane basis is degenerate")
    r, s, det = pair
    out = []
    for q in points:
        dr = q[r] - origin[r]
        ds = q[s] - origin[s]
        na = dr * v[s] - ds * v[r]
        nb = u[r] * ds - u[s] * dr
        qa, ra = divmod(na, det)
        qb, rb = divmod(nb, det)
        if ra or rb:
            raise ValueError("point is not in the plane lattice")
        out.append((qa, qb))
    return out


def hull_2d(points):
    """Convex hull of 2D integer points, counterclockwise, no collinear.

    Returns indices into ``points``.  Duplicates are tolerated.
    """
    order = sorted(range(len(points)), key=lambda i: points[i])
    dedup = []
    for i in order:
        if not dedup or points[i] != points[dedup[-1]]:
            dedup.append(i)
    if len(dedup) == 1:
        return [dedup[0]]
    if len(dedup) == 2:
        return dedup

    def turn(o, a, b):
        po, pa, pb = points[o], points[a], points[b]
        return (pa[0] - po[0]) * (pb[1] - po[1]) - (pa[1] - po[1]) * (pb[0] - po[0])

    lower = []
    for i in dedup:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(dedup):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def polygon_area2(points, cycle):
    """Twice the Euclidean area of a counterclockwise polygon.

    With respect to 2D lattice coordinates this is the normalized area.
    """
    acc = 0
    m = len(cycle)
    for i in range(m):
        ax, ay = points[cycle[i]]
        bx, by = points[cycle[(i + 1) % m]]
        acc += ax * by - ay * bx
    return acc


def _facet_area(pts_on_facet, normal):
    if len(pts_on_facet) < 3:
        raise ValueError("facet with fewer than 3 points")
    u, v = plane_lattice_basis(normal)
    flat = project_to_plane(pts_on_facet[0], u, v, pts_on_facet)
    cyc = hull_2d(flat)
    if len(cyc) < 3:
        raise ValueError("facet degenerates to a segment")
    area = polygon_area2(flat, cyc)
    return area if area > 0 else -area


def hull_3d(points):
    """Exact convex hull of a full-dimensional integer point set in Z^3.

    Parameters
    ----------
    points : sequence of (int, int, int)

    Returns
    -------
    facets : tuple of (a, b, c, d)
        Primitive inward facet normals with offsets: x inside the hull
        satisfies a*x0 + b*x1 + c*x2 >= d, with equality on the facet.
        Sorted lexicographically.
    vertices : tuple of int
        Indices into ``points`` of the hull vertices, ascending.
    volume : int
        Normalized volume (3! times the Euclidean volume).

    Raises
    ------
    ValueError
        If the point set is not full-dimensional.
    """
    pts = [tuple(q) for q in points]
    n = len(pts)
    if n < 4:
        raise ValueError("point set is not full-dimensional")

    # a point with a lattice midpoint partner pair cannot be extreme,
    # and no hull vertex is ever discarded by this filter
    index_of = {}
    for i, q in enumerate(pts):
        index_of.setdefault(q, i)
    keep = [True] * n
    for a in range(n):
        qa = pts[a]
        for b in range(a + 1, n):
            qb = pts[b]
            sx = qa[0] + qb[0]
            sy = qa[1] + qb[1]
            sz = qa[2] + qb[2]
            if (sx & 1) or (sy & 1) or (sz & 1):
                continue
            j = index_of.get((sx >> 1, sy >> 1, sz >> 1))
            if j is not None and j != a and j != b:
                keep[j] = False
    cand = [i for i in range(n) if keep[i]]

    facet_set = set()
    nc = len(cand)
    for ii in range(nc):
        pi = pts[cand[ii]]
        for jj in range(ii + 1, nc):
            pj = pts[cand[jj]]
            ex, ey, ez = pj[0] - pi[0], pj[1] - pi[1], pj[2] - pi[2]
            for kk in range(jj + 1, nc):
                pk = pts[cand[kk]]
                dx, dy, dz = _cross(ex, ey, ez, pk[0] - pi[0], pk[1] - pi[1], pk[2] - pi[2])
                if dx == 0 and dy == 0 and dz == 0:
                    continue
                c0 = dx * pi[0] + dy * pi[1] + dz * pi[2]
                pos = False
                neg = False
                for q in pts:
                    s = dx * q[0] + dy * q[1] + dz * q[2] - c0
                    if s > 0:
                        pos = True
                        if neg:
                            break
                    elif s < 0:
                        neg = True
                        if pos:
                            break
                if pos and neg:
                    continue
                if neg:
                    dx, dy, dz, c0 = -dx, -dy, -dz, -c0
                g = _gcd3(dx, dy, dz)
                facet_set.add((dx // g, dy // g, dz // g, c0 // g))

    facets = sorted(facet_set)
    if len(facets) < 4:
        raise ValueError("point set is not full-dimensional")

    facets_at = [[] for _ in range(n)]
    on_facet = []
    for fi, (a, b, c, d) in enumerate(facets):
        on = []
        for qi, q in enumerate(pts):
            if a * q[0] + b * q[1] + c * q[2] == d:
                on.append(qi)
                facets_at[qi].append(fi)
        on_facet.append(on)

    vertices = []
    for qi in range(n):
        fl = facets_at[qi]
        if len(fl) < 3:
            continue
        # rank of the incident normals, early exit at 3
        n1 = None
        for fi in fl:
            v = facets[fi][:3]
            if v != (0, 0, 0):
                n1 = v
                break
        if n1 is None:
            continue
        caxis = None
        for fi in fl:
            v = facets[fi][:3]
            c = _cross(n1[0], n1[1], n1[2], v[0], v[1], v[2])
            if c != (0, 0, 0):
                caxis = c
                break
        if caxis is None:
            continue
        for fi in fl:
            v = facets[fi][:3]
            if caxis[0] * v[0] + caxis[1] * v[1] + caxis[2] * v[2] != 0:
                vertices.append(qi)
                break

    anchor = pts[vertices[0]]
    volume = 0
    for fi, (a, b, c, d) in enumerate(facets):
        dist = a * anchor[0] + b * anchor[1] + c * anchor[2] - d
        if dist == 0:
            continue
        volume += dist * _facet_area([pts[q] for q in on_facet[fi]], (a, b, c))
    return tuple(facets), tuple(vertices), volume


def _pack_form(form):
    out = bytearray()
    for (a, b, c, d) in form:
        v = ((a * 5 + b) * 5 + c) * 5 + d
        out.append(v >> 8)
        out.append(v & 0xFF)
    return bytes(out)


def s4_key(points):
    """Canonical key of a set of quartic exponent points under S4.

    Each point (i, j, k) with i + j + k <= 4 is homogenized to
    (i, j, k, 4 - i - j - k); the group permutes the four coordinates.
    The key is the lexicographically least sorted tuple of permuted
    4-vectors, packed 2 bytes per point (base-5 digits, big-endian), so
    byte order equals lexicographic order on forms.

    Returns
    -------
    bytes of length 2 * len(points)
    """
    homs = []
    for (i, j, k) in points:
        l = DEGREE - i - j - k
        if i < 0 or j < 0 or k < 0 or l < 0:
            raise ValueError("exponent point outside the quartic simplex")
        homs.append((i, j, k, l))
    best = None
    for g in PERMS4:
        a, b, c, d = g
        img = sorted((h[a], h[b], h[c], h[d]) for h in homs)
        if best is None or img < best:
            best = img
    return _pack_form(best)


def unpack_key(blob):
    """Inverse of the packing used by s4_key: bytes -> homogeneous 4-tuples."""
    if len(blob) % 2:
        raise ValueError("key length must be even")
    out = []
    for i in range(0, len(blob), 2):
        v = (blob[i] << 8) | blob[i + 1]
        d = v % 5
        v //= 5
        c = v % 5
        v //= 5
        b = v % 5
        a = v // 5
        if a + b + c + d != DEGREE:
            raise ValueError("corrupt key byte pair")
        out.append((a, b, c, d))
    return tuple(out)


def lp_core(rows, nvars, nonneg):
    """Feasibility of an integer system of linear inequalities.

    Parameters
    ----------
    rows : sequence of (coeffs, rhs)
        Each row states sum(coeffs[j] * x[j]) >= rhs with integer data.
    nvars : int
        Number of variables.
    nonneg : bool
        If true the variables are constrained to x >= 0, otherwise free.

    Returns
    -------
    None if the system is infeasible, else a tuple of Fractions
    satisfying every row (the basic solution found by phase 1).

    Notes
    -----
    Two-phase fraction-free simplex with Bland's rule: entering column is
    the lowest-index candidate, ties in the ratio test break by lowest
    basis label, so the pivot sequence (and hence the returned witness)
    is deterministic.  Tableau entries stay integers; every pivot divides
    exactly by the previous pivot or the routine raises.
    """
    m = len(rows)
    if m == 0:
        return (Fraction(0),) * nvars
    d = nvars if nonneg else 2 * nvars

    # orient rows so the right side is nonnegative; rows that started
    # with rhs <= 0 take their slack as the initial basic variable, the
    # rest get an artificial variable
    oriented = []
    needs_art = []
    for coeffs, b in rows:
        if len(coeffs) != nvars:
            raise ValueError("row length does not match nvars")
        if b > 0:
            oriented.append((coeffs, -1, b))
            needs_art.append(True)
        else:
            oriented.append(([-a for a in coeffs], 1, -b))
            needs_art.append(False)
    n_art = sum(needs_art)
    ncols = d + m + n_art + 1

    T = []
    art_col = d + m
    art_cols = []
    for i, (coeffs, slack_sign, b) in enumerate(oriented):
        row = [0] * ncols
        if nonneg:
            for j, a in enumerate(coeffs):
                row[j] = a
        else:
            for j, a in enumerate(coeffs):
                row[j] = a
                row[nvars + j] = -a
        row[d + i] = slack_sign
        row[-1] = b
        if needs_art[i]:
            row[art_col] = 1
            art_cols.append(art_col)
            art_col += 1
        else:
            art_cols.append(-1)
        T.append(row)

    basis = []
    for i in range(m):
        basis.append(art_cols[i] if needs_art[i] else d + i)
    is_basic = [False] * ncols
    for b in basis:
        is_basic[b] = True

    # phase-1 objective: minimize the artificial sum; expressed through
    # the nonbasic columns it starts as the sum of the artificial rows
    O = [0] * ncols
    for i in range(m):
        if not needs_art[i]:
            continue
        Ti = T[i]
        for j in range(d + m):
            O[j] += Ti[j]
        O[-1] += Ti[-1]

    det = 1
    nonart = d + m
    while True:
        e = -1
        for j in range(nonart):
            if not is_basic[j] and O[j] > 0:
                e = j
                break
        if e < 0:
            break
        r = -1
        rn = 0
        rd = 1
        for i in range(m):
            piv = T[i][e]
            if piv <= 0:
                continue
            num = T[i][-1]
            if r < 0:
                r, rn, rd = i, num, piv
                continue
            lhs = num * rd
            rhs = rn * piv
            if lhs < rhs or (lhs == rhs and basis[i] < basis[r]):
                r, rn, rd = i, num, piv
        if r < 0:
            raise ArithmeticError("phase-1 objective is unbounded")
        piv = T[r][e]
        Tr = T[r]
        for i in range(m):
            if i == r:
                continue
            Ti = T[i]
            f = Ti[e]
            for j in range(ncols):
                q, rem = divmod(Ti[j] * piv - f * Tr[j], det)
                if rem:
                    raise ArithmeticError("inexact fraction-free pivot")
                Ti[j] = q
        f = O[e]
        for j in range(ncols):
            q, rem = divmod(O[j] * piv - f * Tr[j], det)
            if rem:
                raise ArithmeticError("inexact fraction-free pivot")
            O[j] = q
        is_basic[basis[r]] = False
        is_basic[e] = True
        basis[r] = e
        det = piv

    if O[-1] != 0:
        return None
    vals = [Fraction(0)] * nvars
    for i in range(m):
        b = basis[i]
        if b < nvars:
            vals[b] += Fraction(T[i][-1], det)
        elif not nonneg and b < 2 * nvars:
            vals[b - nvars] -= Fraction(T[i][-1], det)
    return tuple(vals)
