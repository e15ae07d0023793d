"""Backend selection for the hot kernels.

Imports the compiled extension when it is present and not disabled,
otherwise falls back to the pure-Python reference implementation.  Both
backends implement hull_3d, s4_key and lp_core with identical semantics
and identical outputs; set K3FORGE_PURE=1 to force the fallback.
"""

import os

from . import _fallback
from ._fallback import (
    DEGREE,
    PERMS4,
    hull_2d,
    plane_lattice_basis,
    polygon_area2,
    project_to_plane,
    unpack_key,
)

BACKEND = "python"
hull_3d = _fallback.hull_3d
s4_key = _fallback.s4_key
lp_core = _fallback.lp_core

if os.environ.get("K3FORGE_PURE") != "1":
    try:
        from . import _speedups

        hull_3d = _speedups.hull_3d
        s4_key = _speedups.s4_key
        lp_core = _speedups.lp_core
        BACKEND = "compiled"
    except ImportError:
        pass

__all__ = [
    "BACKEND",
    "DEGREE",
    "PERMS4",
    "hull_2d",
    "hull_3d",
    "lp_core",
    "plane_lattice_basis",
    "polygon_area2",
    "project_to_plane",
    "s4_key",
    "unpack_key",
]
