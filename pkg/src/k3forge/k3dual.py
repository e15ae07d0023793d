"""Combinatorics of the boundary surface dual to a central triangulation.

A fine central triangulation of a canonical polytope cones every
boundary triangle to the interior point; dually, each simplex becomes a
vertex of a closed trivalent surface, each interior triangle an edge,
and each boundary lattice point a face.  This module computes those
incidences directly, reduces them to a canonical key of the bipartite
vertex-face graph, and realizes the dual geometrically as the bounded
region where the interior point's lifted affine piece is minimal.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Tuple

from .kernels import hull_2d, plane_lattice_basis
from .lattice import INTERIOR_POINT


class OddVolume(ValueError):
    """Normalized volume must be even to admit the closed dual surface."""


class TooLarge(ValueError):
    """Instance exceeds the configured canonical-key size bound."""


class Unbounded(ValueError):
    """The weight region contains a ray."""


def dual_f_vector(volume):
    """Predicted (vertices, edges, faces) of the dual surface.

    Every simplex of a fine central triangulation contributes one
    vertex, so f0 equals the normalized volume; the surface is closed
    and trivalent, which forces f1 = 3*f0/2, and Euler characteristic 2
    gives f2 = f0/2 + 2.
    """
    if volume % 2:
        raise OddVolume("normalized volume %d is odd" % volume)
    return (volume, 3 * volume // 2, volume // 2 + 2)


class DualCombinatorics(NamedTuple):
    f_vector: Tuple[int, int, int]
    center: int
    boundary: Tuple[int, ...]
    facet_lists: Tuple[Tuple[int, ...], ...]


def dual_combinatorics(simplices):
    """Direct incidence counts of the dual surface of a triangulation.

    simplices: sorted simplices sharing exactly one common index, the
    interior point.  Faces of the dual correspond to boundary points;
    facet_lists[i] lists the simplices containing boundary[i].

    Raises ValueError if the simplices do not close up into a surface
    (an interior triangle not shared by exactly two simplices).
    """
    if not simplices:
        raise ValueError("empty triangulation")
    common = set(simplices[0])
    for s in simplices[1:]:
        common &= set(s)
    if len(common) != 1:
        raise ValueError("simplices do not share a unique interior point")
    center = common.pop()

    pair_count = {}
    incident = {}
    for si, s in enumerate(simplices):
        rest = [i for i in s if i != center]
        if len(rest) != 3 or len(s) != 4:
            raise ValueError("cell is not a simplex over the interior point")
        a, b, c = rest
        for pair in ((a, b), (a, c), (b, c)):
            pair_count[pair] = pair_count.get(pair, 0) + 1
        for q in rest:
            incident.setdefault(q, []).append(si)
    for pair, cnt in pair_count.items():
        if cnt != 2:
            raise ValueError("interior triangle %r lies in %d simplices"
                             % (pair, cnt))
    f0 = len(simplices)
    f1 = len(pair_count)
    boundary = tuple(sorted(incident))
    f2 = len(boundary)
    if f0 - f1 + f2 != 2:
        raise ValueError("dual surface has wrong Euler characteristic")
    if 3 * f0 != 2 * f1:
        raise ValueError("dual surface is not trivalent")
    facet_lists = tuple(tuple(sorted(incident[q])) for q in boundary)
    return DualCombinatorics((f0, f1, f2), center, boundary, facet_lists)


def _refine(colors, adj):
    """Color refinement to a fixed point; returns canonical int colors."""
    n = len(colors)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v])))
                for v in range(n)]
        index = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [index[s] for s in sigs]
        if nxt == colors:
            return colors
        colors = nxt


def graph_canonical_key(facet_lists, n_vertices, limit=40):
    """Canonical string key of a bipartite vertex-facet incidence graph.

    Vertices 0..n_vertices-1 and facets (one per entry of facet_lists)
    form the two sides.  The key is invariant under independent
    relabelings of either side: color refinement seeded by side and
    degree, then individualization of the first non-singleton class,
    minimizing the induced incidence encoding over all branches.
    """
    if n_vertices > limit:
        raise TooLarge("graph with %d vertices exceeds bound %d"
                       % (n_vertices, limit))
    nf = len(facet_lists)
    n = n_vertices + nf
    adj = [[] for _ in range(n)]
    for fi, members in enumerate(facet_lists):
        for v in members:
            if not 0 <= v < n_vertices:
                raise ValueError("facet references unknown vertex")
            adj[n_vertices + fi].append(v)
            adj[v].append(n_vertices + fi)

    init = [len(adj[v]) * 2 for v in range(n_vertices)]
    init += [len(adj[n_vertices + f]) * 2 + 1 for f in range(nf)]

    def encode(colors):
        # colors discrete: map nodes to canonical positions per side
        vorder = sorted(range(n_vertices), key=lambda v: colors[v])
        vpos = {v: i for i, v in enumerate(vorder)}
        forder = sorted(range(nf), key=lambda f: colors[n_vertices + f])
        rows = tuple(tuple(sorted(vpos[v] for v in facet_lists[f]))
                     for f in forder)
        return rows

    best = [None]

    def search(colors):
        colors = _refine(colors, adj)
        classes = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            enc = encode(colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        fresh = max(colors) + 1
        for v in target:
            branched = list(colors)
            branched[v] = fresh
            search(branched)

    search(_refine(init, adj))
    rows = best[0]
    body = "|".join(",".join(str(v) for v in row) for row in rows)
    return "%d;%d;%s" % (n_vertices, nf, body)


def incidence_key(simplices, limit=40):
    """Canonical key of the dual vertex-face incidences of a
    triangulation; convenience wrapper."""
    combo = dual_combinatorics(simplices)
    return graph_canonical_key(combo.facet_lists, combo.f_vector[0],
                               limit=limit)


class RationalRegion(NamedTuple):
    vertices: Tuple[Tuple[Fraction, Fraction, Fraction], ...]
    normals: Tuple[Tuple[int, int, int], ...]     # outward, one per facet
    offsets: Tuple[Fraction, ...]                 # normal . x <= offset
    facet_points: Tuple[int, ...]                 # config index behind facet
    facet_lists: Tuple[Tuple[int, ...], ...]      # vertex ids per facet
    f_vector: Tuple[int, int, int]


def _primitive(v):
    g = 0
    for a in v:
        g = gcd(g, a)
    if g > 1:
        return tuple(a // g for a in v)
    return tuple(v)


def bounded_region(points, heights):
    """The region of space where the interior point's weight wins.

    For configuration points q with weights h, the region is
    { x : (q - p) . x <= h_q - h_p for all q != p }, p the distinguished
    interior point.  Raises Unbounded if it contains a ray, ValueError
    if it is not full-dimensional.  All arithmetic is exact.
    """
    pts = [tuple(q) for q in points]
    try:
        pi = pts.index(INTERIOR_POINT)
    except ValueError:
        raise ValueError("configuration lacks the distinguished interior point")
    hf = [Fraction(h) for h in heights]
    if len(hf) != len(pts):
        raise ValueError("one weight per configuration point required")
    scale = 1
    for f in hf:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    h = [int(f * scale) for f in hf]

    rows = []      # (a, b, config_index): a . x <= b
    for i, q in enumerate(pts):
        if i == pi:
            continue
        a = (q[0] - pts[pi][0], q[1] - pts[pi][1], q[2] - pts[pi][2])
        rows.append((a, h[i] - h[pi], i))

    # boundedness: a one-sided direction n (a . n <= 0 for every row)
    # is a recession ray; if one exists it lies on an extreme ray of
    # the recession cone, hence is a cross product of two row normals,
    # unless the normals do not span 3-space at all.
    normals = [r[0] for r in rows]
    if _span_rank(normals) < 3:
        raise Unbounded("row normals do not span 3-space")
    for i in range(len(normals)):
        for j in range(i + 1, len(normals)):
            u, v = normals[i], normals[j]
            c = (u[1] * v[2] - u[2] * v[1],
                 u[2] * v[0] - u[0] * v[2],
                 u[0] * v[1] - u[1] * v[0])
            if c == (0, 0, 0):
                continue
            for n in (c, (-c[0], -c[1], -c[2])):
                if all(sum(a * b for a, b in zip(r[0], n)) <= 0
                       for r in rows):
                    raise Unbounded("recession direction %r" % (n,))

    # vertices: feasible intersections of three independent rows
    m = len(rows)
    verts = []
    seen = set()
    for i in range(m):
        ai, bi, _ = rows[i]
        for j in range(i + 1, m):
            aj, bj, _ = rows[j]
            for k in range(j + 1, m):
                ak, bk, _ = rows[k]
                det = _det3(ai, aj, ak)
                if det == 0:
                    continue
                xs = _cramer3(ai, aj, ak, bi, bj, bk)
                ok = True
                for a, b, _ in rows:
                    lhs = a[0] * xs[0] + a[1] * xs[1] + a[2] * xs[2]
                    if (lhs - b * det > 0) if det > 0 else (lhs - b * det < 0):
                        ok = False
                        break
                if not ok:
                    continue
                vert = (Fraction(xs[0], det * scale),
                        Fraction(xs[1], det * scale),
                        Fraction(xs[2], det * scale))
                if vert not in seen:
                    seen.add(vert)
                    verts.append(vert)
    if len(verts) < 4:
        raise ValueError("region is not full-dimensional")
    verts.sort()

    # essential facets: rows whose tight vertex set spans a 2-face
    facet_normals = []
    facet_offsets = []
    facet_points = []
    facet_lists = []
    for a, b, qi in rows:
        tight = tuple(vi for vi, x in enumerate(verts)
                      if a[0] * x[0] + a[1] * x[1] + a[2] * x[2]
                      == Fraction(b, scale))
        if len(tight) < 3:
            continue
        if _affine_rank_frac([verts[vi] for vi in tight]) == 2:
            facet_normals.append(a)
            facet_offsets.append(Fraction(b, scale))
            facet_points.append(qi)
            facet_lists.append(tight)

    nf = len(facet_normals)
    edges = 0
    for i in range(nf):
        si = set(facet_lists[i])
        for j in range(i + 1, nf):
            common = si & set(facet_lists[j])
            if len(common) > 2:
                raise ValueError("region is not simple")
            if len(common) == 2:
                edges += 1
    return RationalRegion(tuple(verts), tuple(facet_normals),
                          tuple(facet_offsets), tuple(facet_points),
                          tuple(facet_lists),
                          (len(verts), edges, nf))


def _det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def _cramer3(a1, a2, a3, b1, b2, b3):
    """Integer numerators of the solution of a1.x=b1 ... scaled by det."""
    cols = list(zip(a1, a2, a3))
    b = (b1, b2, b3)
    out = []
    for r in range(3):
        rep = cols[:]
        rep[r] = b
        out.append(_det3(*zip(*rep)))
    return tuple(out)


def _span_rank(vectors):
    basis = []
    for v in vectors:
        if len(basis) == 0:
            if any(v):
                basis.append(v)
        elif len(basis) == 1:
            w = basis[0]
            if (w[1] * v[2] - w[2] * v[1] or w[2] * v[0] - w[0] * v[2]
                    or w[0] * v[1] - w[1] * v[0]):
                basis.append(v)
        else:
            if _det3(basis[0], basis[1], v) != 0:
                basis.append(v)
                break
    return len(basis)


def _affine_rank_frac(pts):
    q0 = pts[0]
    diffs = [tuple(x - y for x, y in zip(q, q0)) for q in pts[1:]]
    return _span_rank(diffs)


def region_face_key(region, limit=80):
    """Canonical key of the region's vertex-facet incidence graph."""
    return graph_canonical_key(region.facet_lists, len(region.vertices),
                               limit=limit)


def _facet_cycle(region, fi):
    """Vertex ids of a facet in outward counterclockwise order."""
    a = _primitive(region.normals[fi])
    u, v = plane_lattice_basis(a)
    ids = region.facet_lists[fi]
    flat = []
    for vi in ids:
        x = region.vertices[vi]
        su = x[0] * u[0] + x[1] * u[1] + x[2] * u[2]
        sv = x[0] * v[0] + x[1] * v[1] + x[2] * v[2]
        flat.append((su, sv))
    # (u, v) is a basis of the facet plane's direction space, so the
    # pairing with (u, v) is injective on the facet and preserves
    # convex position
    cyc = hull_2d(flat)
    if len(cyc) != len(ids):
        raise ValueError("facet vertices are not in convex position")
    cross_uv = (u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0])
    outward = sum(x * y for x, y in zip(cross_uv, a))
    cycle = [ids[i] for i in cyc]
    if outward < 0:
        cycle.reverse()
    return cycle


def export_off(region, stream):
    """Write the region as an OFF mesh.

    Coordinates are exact until this point; they are rendered as
    decimal floats only here.  Faces are emitted as outward-oriented
    counterclockwise cycles.
    """
    nv, ne, nf = region.f_vector
    lines = ["OFF", "%d %d %d" % (nv, nf, ne)]
    for x in region.vertices:
        lines.append(" ".join("%.12g" % float(c) for c in x))
    for fi in range(nf):
        cyc = _facet_cycle(region, fi)
        lines.append(" ".join([str(len(cyc))] + [str(i) for i in cyc]))
    text = "\n".join(lines) + "\n"
    if hasattr(stream, "write"):
        stream.write(text)
    else:
        with open(stream, "w") as fh:
            fh.write(text)
    return text
