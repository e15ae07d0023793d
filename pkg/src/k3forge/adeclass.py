"""ADE classification of the singular points of generic quartics with a
prescribed monomial support.

For a canonical support, every coordinate point at which all monomials
vanish to order at least two is a singular point of every member of the
family.  Generic members have no other singularities; this module
verifies that claim exactly for each sampled member (the base locus has
no plane components for canonical supports, its line components carry
no common zeros of the restricted partials besides coordinate points,
and no coordinate subspace of positive dimension is doubly vanishing).
Away from the base locus generic smoothness is Bertini's theorem, so
the sampled classification below describes the generic member.

Germs are truncated Taylor expansions (jets) at order 6 with exact
rational coefficients.  The quadratic part is diagonalized by congruent
substitutions, the splitting lemma reduces to the residual corank, and
the residual singularity is identified by the root structure of its
cubic part followed by shear and Tschirnhaus steps.  Every substitution
is recorded; the composed transformation is inverted as a formal series
and the round trip is verified exactly before a type is reported.
"""

import hashlib
import random
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

from .lattice import DEGREE, homogenize

JET_ORDER = 6

ADE_TYPES = ("A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "D7",
             "E6", "E7", "E8")

DETERMINACY = {"A1": 2, "A2": 3, "A3": 4, "A4": 5, "A5": 6,
               "D4": 3, "D5": 4, "D6": 5, "D7": 6,
               "E6": 4, "E7": 4, "E8": 5}


class RankZero(ArithmeticError):
    """The quadratic part of a singular germ vanished entirely."""


class NonTermination(RuntimeError):
    """A reduction loop failed to reach its fixed point."""


class GenericityFailure(ArithmeticError):
    """Sampled coefficients behaved degenerately across all retries."""


# ---------------------------------------------------------------------------
# jets: dict[(e0, e1, e2)] -> Fraction, truncated at total degree JET_ORDER


def jet_trunc(jet):
    return {e: c for e, c in jet.items() if c and sum(e) <= JET_ORDER}


def jet_add(a, b):
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        elif e in out:
            del out[e]
    return out


def jet_scale(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def jet_mul(a, b):
    out = {}
    for ea, ca in a.items():
        sa = sum(ea)
        for eb, cb in b.items():
            if sa + sum(eb) > JET_ORDER:
                continue
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2])
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def jet_order(jet):
    degs = [sum(e) for e, c in jet.items() if c]
    return min(degs) if degs else None


def jet_part(jet, deg):
    return {e: c for e, c in jet.items() if sum(e) == deg and c}


def jet_upto(jet, deg):
    return {e: c for e, c in jet.items() if sum(e) <= deg and c}


def jet_subst(jet, subs):
    """Substitute subs[v] (a jet) for each variable v; truncating."""
    pows = {}

    def power(v, k):
        got = pows.get((v, k))
        if got is None:
            if k == 0:
                got = {(0, 0, 0): Fraction(1)}
            else:
                got = jet_mul(power(v, k - 1), subs[v])
            pows[(v, k)] = got
        return got

    out = {}
    for e, c in jet.items():
        term = {(0, 0, 0): c}
        for v in range(3):
            if e[v]:
                term = jet_mul(term, power(v, e[v]))
        out = jet_add(out, term)
    return jet_trunc(out)


VAR_JETS = ({(1, 0, 0): Fraction(1)}, {(0, 1, 0): Fraction(1)},
            {(0, 0, 1): Fraction(1)})


def identity_subs():
    return {v: dict(VAR_JETS[v]) for v in range(3)}


def linear_subs(matrix):
    """Substitution for old_v = sum_w matrix[v][w] * new_w."""
    subs = {}
    for v in range(3):
        row = {}
        for w in range(3):
            c = Fraction(matrix[v][w])
            if c:
                e = [0, 0, 0]
                e[w] = 1
                row[tuple(e)] = c
        subs[v] = row
    return subs


def compose_subs(outer, inner):
    """Substitution equivalent to applying outer, then inner."""
    return {v: jet_subst(outer[v], inner) for v in range(3)}


def _linear_part(subs):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    for v in range(3):
        for e, c in subs[v].items():
            s = sum(e)
            if s == 0 and c:
                raise ValueError("substitution does not fix the origin")
            if s == 1:
                m[v][e.index(1)] = c
    return m


def _mat_inv(m):
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    if det == 0:
        raise ValueError("singular linear part")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [[m[r][c] for c in range(3) if c != j]
                   for r in range(3) if r != i]
            s = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
            cof[j][i] = (-1) ** (i + j) * s
    return [[Fraction(cof[i][j], 1) / det for j in range(3)]
            for i in range(3)]


def invert_subs(subs):
    """Formal inverse: compose_subs(subs, inverse) is the identity."""
    lin = _linear_part(subs)
    linv = _mat_inv(lin)
    linv_subs = linear_subs(linv)
    # unipotent part u: subs = linear o u, so u = linv applied to subs
    uni = {}
    for v in range(3):
        acc = {}
        for w in range(3):
            if linv[v][w]:
                acc = jet_add(acc, jet_scale(subs[w], linv[v][w]))
        uni[v] = jet_trunc(acc)
    shifts = {v: jet_add(uni[v], jet_scale(VAR_JETS[v], -1)) for v in range(3)}
    inv = identity_subs()
    for _ in range(JET_ORDER + 2):
        nxt = {v: jet_trunc(jet_add(VAR_JETS[v],
                                    jet_scale(jet_subst(shifts[v], inv), -1)))
               for v in range(3)}
        if nxt == inv:
            break
        inv = nxt
    else:
        raise NonTermination("series inversion did not converge")
    out = compose_subs(inv, linv_subs)
    check = compose_subs(subs, out)
    if check != identity_subs():
        raise NonTermination("substitution inverse fails to round-trip")
    return out


# ---------------------------------------------------------------------------
# support analysis


def support_vectors(points):
    """Homogeneous exponent 4-vectors of a dehomogenized support."""
    return tuple(homogenize(q) for q in points)


def singular_coordinate_points(points):
    """Coordinate points where the generic member is singular.

    Returns ((axis, multiplicity), ...) for the axes whose coordinate
    point has generic multiplicity >= 2; the multiplicity is the least
    total degree of any monomial after setting that variable to 1,
    which no coefficient choice can lower.
    """
    homs = support_vectors(points)
    out = []
    for t in range(4):
        mult = DEGREE - max(m[t] for m in homs)
        if mult >= 2:
            out.append((t, mult))
    return tuple(out)


def one_sided_direction(points, center):
    """A nonzero integer n with n.(q - center) <= 0 for all q, or None.

    The candidates are complete: if the difference vectors span less
    than 3-space any plane normal works, and otherwise a one-sided n
    can be moved onto an extreme ray of {n : n.(q - center) <= 0},
    which is cut out by two tight difference vectors.
    """
    diffs = [tuple(q[i] - center[i] for i in range(3)) for q in points]
    diffs = [v for v in diffs if v != (0, 0, 0)]
    basis = []
    for v in diffs:
        if len(basis) == 0:
            basis.append(v)
        elif len(basis) == 1:
            w = basis[0]
            if (w[1] * v[2] - w[2] * v[1] or w[2] * v[0] - w[0] * v[2]
                    or w[0] * v[1] - w[1] * v[0]):
                basis.append(v)
        elif len(basis) == 2:
            w1, w2 = basis
            det = (w1[0] * (w2[1] * v[2] - w2[2] * v[1])
                   - w1[1] * (w2[0] * v[2] - w2[2] * v[0])
                   + w1[2] * (w2[0] * v[1] - w2[1] * v[0]))
            if det != 0:
                basis.append(v)
                break
    if len(basis) < 3:
        if len(basis) == 0:
            return (1, 0, 0)
        if len(basis) == 1:
            w = basis[0]
            n = (-w[1], w[0], 0) if (w[0] or w[1]) else (0, -w[2], w[1])
            return n
        w1, w2 = basis
        return (w1[1] * w2[2] - w1[2] * w2[1],
                w1[2] * w2[0] - w1[0] * w2[2],
                w1[0] * w2[1] - w1[1] * w2[0])
    m = len(diffs)
    for i in range(m):
        for j in range(i + 1, m):
            u, v = diffs[i], diffs[j]
            c = (u[1] * v[2] - u[2] * v[1],
                 u[2] * v[0] - u[0] * v[2],
                 u[0] * v[1] - u[1] * v[0])
            if c == (0, 0, 0):
                continue
            for n in (c, (-c[0], -c[1], -c[2])):
                if all(sum(a * b for a, b in zip(w, n)) <= 0 for w in diffs):
                    return n
    return None


def halfspace_balanced(points, center=(1, 1, 1)):
    """True iff every plane through center has support points strictly
    on both sides; equivalent to center lying in the interior of the
    convex hull of the support."""
    return one_sided_direction(points, center) is None


def sample_generic_coefficients(points, seed):
    """Deterministic nonzero rational coefficients for a support.

    The stream is seeded from a digest of the support and the seed, so
    distinct seeds give distinct members and the same call always gives
    the same member.
    """
    homs = support_vectors(points)
    tag = ";".join("".join(str(d) for d in m) for m in sorted(homs))
    digest = hashlib.sha256(("%s#%d" % (tag, seed)).encode()).digest()
    rng = random.Random(int.from_bytes(digest[:8], "big"))
    coeffs = {}
    for m in sorted(homs):
        num = rng.randint(1, 10 ** 6)
        den = rng.randint(1, 10 ** 6)
        sign = 1 if rng.random() < 0.5 else -1
        coeffs[m] = Fraction(sign * num, den)
    return coeffs


# ---------------------------------------------------------------------------
# isolatedness certificate for a sampled member


def _complement_degree(m, axes):
    return sum(m[t] for t in range(4) if t not in axes)


def base_locus_components(homs):
    """Maximal coordinate subsets on which every monomial vanishes."""
    comps = []
    for size in (3, 2, 1):
        for axes in combinations(range(4), size):
            s = frozenset(axes)
            if any(s <= c for c in comps):
                continue
            if all(_complement_degree(m, s) >= 1 for m in homs):
                comps.append(s)
    return comps


def doubly_vanishing_subsets(homs):
    """Maximal coordinate subsets along which every member is singular."""
    comps = []
    for size in (3, 2, 1):
        for axes in combinations(range(4), size):
            s = frozenset(axes)
            if any(s <= c for c in comps):
                continue
            if all(_complement_degree(m, s) >= 2 for m in homs):
                comps.append(s)
    return comps


def _poly_gcd(p, q):
    """Monic gcd of univariate coefficient lists (ascending)."""

    def norm(a):
        while a and a[-1] == 0:
            a = a[:-1]
        return a

    def rem(a, b):
        a = a[:]
        while len(a) >= len(b) and norm(a):
            f = a[-1] / b[-1]
            off = len(a) - len(b)
            for i in range(len(b)):
                a[off + i] -= f * b[i]
            a = norm(a)
            if not a:
                break
        return a

    a, b = norm(list(p)), norm(list(q))
    while b:
        a, b = b, rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def isolated_certificate(points, coeffs):
    """Exact check that the sampled member's singular locus meets the
    base locus only in coordinate points.

    Raises GenericityFailure if the sample leaves singular points on a
    base-locus line, ValueError if the support itself forces a
    positive-dimensional singular locus (impossible for canonical
    supports).
    """
    homs = support_vectors(points)
    for s in doubly_vanishing_subsets(homs):
        if len(s) >= 2:
            raise ValueError("support is singular along a coordinate "
                             "subspace of positive dimension")
    for comp in base_locus_components(homs):
        if len(comp) >= 3:
            raise ValueError("support has a plane base component")
        if len(comp) != 2:
            continue
        s1, s2 = sorted(comp)
        outside = [t for t in range(4) if t not in comp]
        forms = []
        for t in outside:
            form = [Fraction(0)] * 4  # coefficient of y^i z^(3-i)
            for m, c in coeffs.items():
                if _complement_degree(m, comp) == 1 and m[t] == 1:
                    form[m[s1]] += c
            forms.append(form)
        stripped = []
        for form in forms:
            nz = [i for i, c in enumerate(form) if c]
            if not nz:
                stripped.append(None)
                continue
            lo = nz[0]
            stripped.append(form[lo:nz[-1] + 1])
        if stripped[0] is None and stripped[1] is None:
            raise GenericityFailure("restricted partials vanish on a "
                                    "base-locus line")
        if stripped[0] is None or stripped[1] is None:
            g = [c for c in (stripped[0] or stripped[1])]
        else:
            g = _poly_gcd(stripped[0], stripped[1])
        if len(g) > 1:
            raise GenericityFailure("sampled member is singular outside "
                                    "the coordinate points")
    return True


# ---------------------------------------------------------------------------
# germ construction and reduction


def germ_at(coeffs, axis):
    """Taylor jet of the dehomogenized member at a coordinate point.

    The chart sets the axis variable to 1; the remaining three
    variables, in ascending axis order, become the germ variables.
    """
    others = [t for t in range(4) if t != axis]
    jet = {}
    for m, c in coeffs.items():
        e = (m[others[0]], m[others[1]], m[others[2]])
        jet[e] = jet.get(e, 0) + c
    return jet_trunc(jet), tuple(others)


def _quadratic_matrix(jet):
    q = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in jet_part(jet, 2).items():
        idx = [i for i in range(3) for _ in range(e[i])]
        i, j = idx
        if i == j:
            q[i][i] = c
        else:
            q[i][j] = q[j][i] = c / 2
    return q


class Step(NamedTuple):
    kind: str
    subs: dict
    note: str


def _apply(jet, steps, kind, subs, note):
    steps.append(Step(kind, subs, note))
    return jet_subst(jet, subs)


def diagonalize_quadratic(jet, steps):
    """Congruent substitutions making the quadratic part diagonal with
    the nonzero squares first; returns (jet, rank)."""
    rank = 0
    for pos in range(3):
        for _guard in range(6):
            q = _quadratic_matrix(jet)
            piv = None
            for i in range(pos, 3):
                if q[i][i]:
                    piv = i
                    break
            if piv is not None:
                break
            pair = None
            for i in range(pos, 3):
                for j in range(i + 1, 3):
                    if q[i][j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                return jet, rank
            m = [[Fraction(int(r == c)) for c in range(3)] for r in range(3)]
            m[pair[0]][pair[1]] = Fraction(1)
            jet = _apply(jet, steps, "linear", linear_subs(m),
                         "create a diagonal quadratic entry")
        else:
            raise NonTermination("diagonal pivot creation looped")
        if piv != pos:
            m = [[Fraction(int(r == c)) for c in range(3)] for r in range(3)]
            m[pos][pos] = m[piv][piv] = Fraction(0)
            m[pos][piv] = m[piv][pos] = Fraction(1)
            jet = _apply(jet, steps, "linear", linear_subs(m),
                         "swap variables %d and %d" % (pos, piv))
            q = _quadratic_matrix(jet)
        d = q[pos][pos]
        ratios = [q[pos][j] / d for j in range(pos + 1, 3)]
        if any(ratios):
            m = [[Fraction(int(r == c)) for c in range(3)] for r in range(3)]
            for j, r in zip(range(pos + 1, 3), ratios):
                m[pos][j] = -r
            jet = _apply(jet, steps, "linear", linear_subs(m),
                         "clear cross terms of variable %d" % pos)
        rank += 1
    return jet, rank


def split_reduce(jet, rank, steps):
    """Remove all terms linear in the split variables; afterwards the
    residual germ is the jet with the split variables set to zero."""
    diag = [jet_part(jet, 2).get(tuple(2 if v == i else 0
                                       for v in range(3)), Fraction(0))
            for i in range(rank)]
    if any(d == 0 for d in diag):
        raise ArithmeticError("split variable lost its square")
    for _guard in range(24):
        dirty = False
        for i in range(rank):
            c1 = {}
            for e, c in jet.items():
                if e[i] == 1 and sum(e) >= 3:
                    e2 = list(e)
                    e2[i] = 0
                    c1[tuple(e2)] = c
            if not c1:
                continue
            subs = identity_subs()
            subs[i] = jet_add(dict(VAR_JETS[i]),
                              jet_scale(c1, Fraction(-1, 2) / diag[i]))
            jet = _apply(jet, steps, "shift", subs,
                         "absorb terms linear in split variable %d" % i)
            dirty = True
        if not dirty:
            break
    else:
        raise NonTermination("splitting reduction looped")
    residual = {e: c for e, c in jet.items()
                if all(e[i] == 0 for i in range(rank))}
    return jet, residual


# ---------------------------------------------------------------------------
# corank dispatch


def _residual_view(jet, rank):
    return {e: c for e, c in jet.items()
            if all(e[i] == 0 for i in range(rank))}


def classify_corank1(jet, rank, steps, notes):
    """Residual in one variable: type A_(r-1) from the residual order."""
    res = _residual_view(jet, rank)
    order = jet_order(res)
    if order is None or order > JET_ORDER:
        notes.append(("branch", "residual-order", "beyond jet bound"))
        return jet, "unclassified"
    notes.append(("branch", "residual-order", str(order)))
    for e in res:
        if e[2] != sum(e):
            raise ArithmeticError("corank-1 residual is not univariate")
    return jet, "A%d" % (order - 1)


def _read(jet, e):
    return jet.get(e, Fraction(0))


def _cubic_root_structure(res):
    """Root pattern of the binary cubic part in (y, z) = vars (1, 2).

    Returns ("simple", None), ("double", (double, simple)), or
    ("triple", direction); directions are coprime integer pairs (a, b)
    for the root (a : b).
    """
    c30 = _read(res, (0, 3, 0))
    c21 = _read(res, (0, 2, 1))
    c12 = _read(res, (0, 1, 2))
    c03 = _read(res, (0, 0, 3))
    p = [c03, c12, c21, c30]  # ascending in t, P(t) = f3(t, 1)
    while p and p[-1] == 0:
        p.pop()
    if not p:
        return ("zero", None)
    degp = len(p) - 1
    m_inf = 3 - degp
    g = _poly_gcd(p, [i * p[i] for i in range(1, len(p))])
    degg = len(g) - 1 if g else 0
    if m_inf == 3:
        return ("triple", (1, 0))
    if degp == 3 and degg == 2:
        # G = (t - r)^2, monic: r from the linear coefficient
        r = -g[1] / 2
        return ("triple", _frac_dir(r))
    if m_inf == 2:
        # double at infinity, simple finite root of the linear P
        return ("double", ((1, 0), _frac_dir(-p[0] / p[1])))
    if degg == 1:
        r = -g[0]
        if degp == 2:
            # simple root at infinity
            return ("double", (_frac_dir(r), (1, 0)))
        # deflate P by (t - r) twice to find the simple root
        q = _deflate(_deflate(p, r), r)
        s = -q[0] / q[1]
        return ("double", (_frac_dir(r), _frac_dir(s)))
    return ("simple", None)


def _frac_dir(r):
    """Coprime integer direction (a, b) of the projective root (r : 1)."""
    f = Fraction(r)
    return (f.numerator, f.denominator)


def _deflate(p, r):
    """Divide the ascending coefficient list by (t - r); remainder must
    vanish."""
    n = len(p) - 1
    out = [Fraction(0)] * n
    carry = p[n]
    for i in range(n - 1, -1, -1):
        out[i] = carry
        carry = p[i] + carry * r
    if carry != 0:
        raise ArithmeticError("deflation left a remainder")
    return out


def _cubic_discriminant(res):
    a = _read(res, (0, 3, 0))
    b = _read(res, (0, 2, 1))
    c = _read(res, (0, 1, 2))
    d = _read(res, (0, 0, 3))
    return (18 * a * b * c * d - 4 * b ** 3 * d + b ** 2 * c ** 2
            - 4 * a * c ** 3 - 27 * a ** 2 * d ** 2)


def _root_normalization(pattern, roots):
    """Linear substitution on (y, z) sending the cubic to y^2 z (double
    plus simple roots) or y^3 (triple root)."""
    if pattern == "double":
        (a1, b1), (a2, b2) = roots  # double, simple
        cols = ((a2, b2), (a1, b1))  # new y along the simple root's line
    else:
        a1, b1 = roots
        other = (1, 0) if b1 != 0 else (0, 1)
        cols = (other, (a1, b1))
    m = [[Fraction(1), Fraction(0), Fraction(0)],
         [Fraction(0), Fraction(cols[0][0]), Fraction(cols[1][0])],
         [Fraction(0), Fraction(cols[0][1]), Fraction(cols[1][1])]]
    det = m[1][1] * m[2][2] - m[1][2] * m[2][1]
    if det == 0:
        raise ArithmeticError("degenerate root normalization")
    return m


def _absorb_square_junk(jet, steps, target, c_key, shift_var, factor):
    """Remove residual terms divisible by y^2 (resp. y^3 pattern) other
    than the normal-form monomial c_key, by shifting shift_var."""
    for _guard in range(24):
        junk = {}
        for e, c in _residual_view(jet, 1).items():
            if e[1] >= 2 and e != c_key:
                junk[(0, e[1] - 2, e[2])] = c
        if not junk:
            return jet
        c = _read(jet, c_key)
        if c == 0:
            raise GenericityFailure("normal-form coefficient vanished")
        subs = identity_subs()
        subs[shift_var] = jet_add(dict(VAR_JETS[shift_var]),
                                  jet_scale(junk, Fraction(-1) / (factor * c)))
        jet = _apply(jet, steps, "shift", subs,
                     "absorb square-divisible residual terms")
    raise NonTermination("junk absorption looped")


def classify_corank2(jet, rank, steps, notes):
    """Residual in two variables: D and E types from the cubic part."""
    res = _residual_view(jet, rank)
    cubic = jet_part(res, 3)
    if not cubic:
        notes.append(("branch", "cubic-part", "zero"))
        return jet, "unclassified"
    pattern, roots = _cubic_root_structure(res)
    notes.append(("branch", "cubic-roots", pattern))
    if pattern == "simple":
        disc = _cubic_discriminant(res)
        if disc == 0:
            raise ArithmeticError("simple root pattern with zero "
                                  "discriminant")
        notes.append(("branch", "cubic-discriminant", str(disc)))
        return jet, "D4"
    if pattern == "double":
        m = _root_normalization(pattern, roots)
        jet = _apply(jet, steps, "linear", linear_subs(m),
                     "send the cubic to its double-root normal form")
        jet = _absorb_square_junk(jet, steps, (0, 2, 1), (0, 2, 1), 2, 2)
        c = _read(jet, (0, 2, 1))
        # shear away the mixed terms y z^k in increasing order; each
        # shift only adds pure powers of z above the one it removes
        for k in (3, 4, 5):
            b = _read(jet, (0, 1, k))
            if b:
                subs = identity_subs()
                shift = {(0, 0, k - 1): -b / (2 * c)}
                subs[1] = jet_add(dict(VAR_JETS[1]), shift)
                jet = _apply(jet, steps, "shift", subs,
                             "remove the y z^%d term" % k)
        a4 = _read(jet, (0, 0, 4))
        a5 = _read(jet, (0, 0, 5))
        a6 = _read(jet, (0, 0, 6))
        notes.append(("branch", "z4", str(a4)))
        if a4:
            return jet, "D5"
        notes.append(("branch", "z5", str(a5)))
        if a5:
            return jet, "D6"
        notes.append(("branch", "z6", str(a6)))
        if a6:
            return jet, "D7"
        return jet, "unclassified"
    # triple root
    m = _root_normalization(pattern, roots)
    jet = _apply(jet, steps, "linear", linear_subs(m),
                 "send the cubic to its triple-root normal form")
    jet = _absorb_square_junk(jet, steps, (0, 3, 0), (0, 3, 0), 1, 3)
    a4 = _read(jet, (0, 0, 4))
    b = _read(jet, (0, 1, 3))
    g5 = _read(jet, (0, 0, 5))
    notes.append(("branch", "z4", str(a4)))
    if a4:
        return jet, "E6"
    notes.append(("branch", "yz3", str(b)))
    if b:
        return jet, "E7"
    notes.append(("branch", "z5", str(g5)))
    if g5:
        return jet, "E8"
    return jet, "unclassified"


def _check_final_jet(jet, rank, kind):
    """Determinacy-order support check of the classified germ."""
    k = DETERMINACY[kind]
    quad = jet_part(jet, 2)
    expect = {}
    for i in range(rank):
        e = tuple(2 if v == i else 0 for v in range(3))
        c = quad.get(e)
        if not c:
            return "split square missing"
        expect[e] = c
    if quad != expect:
        return "quadratic part is not diagonal"
    res = jet_upto(_residual_view(jet, rank), k)
    if kind[0] == "A":
        if rank == 3:
            return None if not res else "rank-3 residual not empty"
        allowed = {(0, 0, k)}
        needed = {(0, 0, k)}
        weights = None
    elif kind == "D4":
        return None if _cubic_discriminant(res) != 0 else "degenerate cubic"
    elif kind in ("D5", "D6", "D7"):
        allowed = {(0, 2, 1), (0, 0, k)}
        needed = allowed
        weights = None
    elif kind == "E6":
        allowed = None
        needed = {(0, 3, 0), (0, 0, 4)}
        weights = ((4, 3), 12)
    elif kind == "E7":
        allowed = {(0, 3, 0), (0, 1, 3)}
        needed = allowed
        weights = None
    else:  # E8
        allowed = None
        needed = {(0, 3, 0), (0, 0, 5)}
        weights = ((5, 3), 15)
    for e in needed:
        if not res.get(e):
            return "normal-form monomial %r missing" % (e,)
    for e in res:
        if allowed is not None and e not in allowed:
            return "unexpected monomial %r" % (e,)
        if weights is not None:
            (wy, wz), bound = weights
            w = wy * e[1] + wz * e[2]
            if w < bound or (w == bound and e not in needed):
                return "monomial %r below the quasihomogeneous bound" % (e,)
    return None


# ---------------------------------------------------------------------------
# the classification driver


class GermReport(NamedTuple):
    axis: int
    multiplicity: int
    kind: str
    seed: int
    trace: List[dict]


def _steps_to_trace(steps):
    out = []
    for kind, subs, note in steps:
        entry = {"op": kind, "note": note,
                 "subs": {str(v): sorted((",".join(str(x) for x in e), str(c))
                                         for e, c in subs[v].items())
                          for v in range(3) if subs[v] != dict(VAR_JETS[v])}}
        out.append(entry)
    return out


def classify_once(points, axis, multiplicity, seed):
    """Classify the germ of one sampled member at one coordinate point.

    Returns (kind, trace).  Raises GenericityFailure when the sample
    degenerates (wrong multiplicity, vanishing normal-form pivot, or a
    failed isolation certificate).
    """
    coeffs = sample_generic_coefficients(points, seed)
    isolated_certificate(points, coeffs)
    germ, axes = germ_at(coeffs, axis)
    if jet_order(germ) != multiplicity:
        raise GenericityFailure("sampled germ has unexpected order")
    steps: List[Step] = []
    notes: List[tuple] = []
    jet, rank = diagonalize_quadratic(dict(germ), steps)
    notes.append(("branch", "quadratic-rank", str(rank)))
    if rank == 0:
        raise RankZero("quadratic part of the germ vanished")
    jet, _residual = split_reduce(jet, rank, steps)
    if rank == 3:
        kind = "A1"
    elif rank == 2:
        jet, kind = classify_corank1(jet, rank, steps, notes)
    else:
        jet, kind = classify_corank2(jet, rank, steps, notes)
    if kind != "unclassified":
        problem = _check_final_jet(jet, rank, kind)
        if problem:
            raise ArithmeticError("final jet check failed: %s" % problem)
    # exact round trip through the composed substitution
    total = identity_subs()
    for step in steps:
        total = compose_subs(total, step.subs)
    forward = jet_subst(germ, total)
    if forward != jet:
        raise ArithmeticError("step composition mismatch")
    back = jet_subst(jet, invert_subs(total))
    if back != jet_trunc(germ):
        raise ArithmeticError("inverse substitution fails to recover "
                              "the germ")
    trace = [{"op": "sample", "seed": seed, "axes": list(axes)}]
    trace.extend(_steps_to_trace(steps))
    for name, label, value in notes:
        trace.append({"op": name, "name": label, "value": value})
    trace.append({"op": "roundtrip", "ok": True})
    return kind, trace


def verify_trace(points, axis, trace):
    """Re-run the substitutions recorded in a trace and confirm the
    round trip; used to audit serialized reports."""
    seed = None
    for entry in trace:
        if entry.get("op") == "sample":
            seed = entry["seed"]
            break
    if seed is None:
        return False
    coeffs = sample_generic_coefficients(points, seed)
    germ, _axes = germ_at(coeffs, axis)
    total = identity_subs()
    for entry in trace:
        if entry.get("op") not in ("linear", "shift"):
            continue
        subs = identity_subs()
        for v_str, rows in entry["subs"].items():
            v = int(v_str)
            jet = {}
            for e_str, c_str in rows:
                e = tuple(int(x) for x in e_str.split(","))
                jet[e] = Fraction(c_str)
            subs[v] = jet
        total = compose_subs(total, subs)
    forward = jet_subst(germ, total)
    back = jet_subst(forward, invert_subs(total))
    return back == jet_trunc(germ)


def classify_point(points, axis, multiplicity, seeds=3, base_seed=0,
                   retries=3):
    """Multi-seed classification of one singular coordinate point.

    All seeds must agree; on disagreement more seeds are drawn, and a
    persistent split is reported as unclassified rather than resolved
    by majority.  Returns a GermReport whose trace is the first
    agreeing seed's trace.
    """
    outcomes = []
    seed_list = [base_seed + i for i in range(seeds)]
    extra = 0
    while True:
        for seed in seed_list[len(outcomes):]:
            kind = None
            trace = None
            last = None
            for attempt in range(retries):
                try:
                    kind, trace = classify_once(points, axis, multiplicity,
                                                seed + 7919 * attempt)
                    break
                except GenericityFailure as exc:
                    last = exc
            if kind is None:
                raise GenericityFailure(
                    "sampling kept degenerating at axis %d: %s"
                    % (axis, last))
            outcomes.append((kind, trace))
        kinds = {k for k, _ in outcomes}
        if len(kinds) == 1:
            kind, trace = outcomes[0]
            return GermReport(axis, multiplicity, kind,
                              trace[0]["seed"], trace)
        if extra >= 2 * seeds:
            disagree = [{"op": "disagreement",
                         "kinds": sorted(kinds)}]
            return GermReport(axis, multiplicity, "unclassified",
                              base_seed, disagree)
        extra += 1
        seed_list.append(base_seed + seeds + extra - 1)


class PolytopeSingularities(NamedTuple):
    reports: Tuple[GermReport, ...]
    all_ade: bool


def classify_polytope(points, seeds=3, base_seed=0):
    """Classify every singular coordinate point of a canonical support."""
    reports = []
    for axis, mult in singular_coordinate_points(points):
        if mult == 2:
            reports.append(classify_point(points, axis, mult, seeds,
                                          base_seed))
        else:
            # beyond the rational double point range; report honestly
            reports.append(GermReport(axis, mult, "unclassified", base_seed,
                                      [{"op": "multiplicity",
                                        "value": mult}]))
    all_ade = all(r.kind in ADE_TYPES for r in reports)
    return PolytopeSingularities(tuple(reports), all_ade)
