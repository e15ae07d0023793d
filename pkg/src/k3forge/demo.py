"""Bundled demonstration weight vector on the full 35-point simplex.

The heights below lift the quartic monomial exponents to a strictly
convex position whose induced subdivision is a fine central
triangulation with 64 simplices; its dual surface has f-vector
(64, 96, 34).  Exponents are dehomogenized: (i, j, k) stands for the
monomial of total degree 4 with a fourth exponent 4 - i - j - k.
"""

from .lattice import SIMPLEX_POINTS

DEMO_HEIGHTS = {
    (4, 0, 0): 5, (0, 4, 0): 5, (0, 0, 4): 5,
    (3, 1, 0): 3, (3, 0, 1): 3, (1, 3, 0): 3,
    (0, 3, 1): 3, (1, 0, 3): 3, (0, 1, 3): 3,
    (2, 2, 0): 2, (2, 0, 2): 2, (0, 2, 2): 2,
    (2, 1, 1): 0, (1, 2, 1): 0, (1, 1, 2): 0,
    (3, 0, 0): 3, (0, 3, 0): 3, (0, 0, 3): 3,
    (2, 1, 0): 0, (2, 0, 1): 0, (1, 2, 0): 0,
    (0, 2, 1): 0, (1, 0, 2): 0, (0, 1, 2): 0,
    (2, 0, 0): 2, (0, 2, 0): 2, (0, 0, 2): 2,
    (1, 1, 0): 0, (1, 0, 1): 0, (0, 1, 1): 0,
    (1, 0, 0): 3, (0, 1, 0): 3, (0, 0, 1): 3,
    (1, 1, 1): -9,
    (0, 0, 0): 5,
}


def demo_weight_vector():
    """Heights aligned with the lex order of SIMPLEX_POINTS."""
    return tuple(DEMO_HEIGHTS[q] for q in SIMPLEX_POINTS)


def weights_payload():
    """JSON-ready form: points with their rational weight strings."""
    return {
        "points": [list(q) for q in SIMPLEX_POINTS],
        "weights": [str(DEMO_HEIGHTS[q]) for q in SIMPLEX_POINTS],
    }
