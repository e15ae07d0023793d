"""Exact rational feasibility for systems of strict and weak inequalities.

A system is a list of rows (coeffs, rhs, strict) meaning coeffs.x > rhs
(strict) or coeffs.x >= rhs.  Coefficients may be ints or Fractions.
Rows are cleared to integers, strict rows become >= rhs + 1, and the
fraction-free simplex kernel decides feasibility.  The strict-to-weak
slack of 1 is exact for the systems solved here: the feasible sets are
open polyhedral cones (secondary cones), which contain points of
arbitrarily large slack whenever they are nonempty.

Every returned witness is verified against the original rows with exact
arithmetic before being handed back.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Sequence, Tuple

from .kernels import lp_core


class FeasibilityResult(NamedTuple):
    status: str  # "feasible" | "infeasible"
    witness: Optional[Tuple[Fraction, ...]]


def clear_row(coeffs, rhs):
    """Scale a rational row to coprime integers, preserving solutions."""
    fracs = [Fraction(c) for c in coeffs]
    frhs = Fraction(rhs)
    scale = frhs.denominator
    for f in fracs:
        scale = scale * f.denominator // gcd(scale, f.denominator)
    ints = [int(f * scale) for f in fracs]
    irhs = int(frhs * scale)
    g = abs(irhs)
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
        irhs //= g
    return tuple(ints), irhs


def _weak_form(rows):
    """Cleared integer rows with strict rows tightened to rhs + 1."""
    out = []
    for coeffs, rhs, strict in rows:
        ic, ir = clear_row(coeffs, rhs)
        out.append((ic, ir + 1 if strict else ir))
    return out


def check_witness(rows, witness):
    """Indices of rows violated by a candidate witness, exact arithmetic."""
    bad = []
    for idx, (coeffs, rhs, strict) in enumerate(rows):
        acc = Fraction(0)
        for c, x in zip(coeffs, witness):
            if c:
                acc += Fraction(c) * x
        ok = acc > rhs if strict else acc >= rhs
        if not ok:
            bad.append(idx)
    return bad


def solve(rows, nvars, nonneg=False):
    """Decide feasibility of a strict/weak system.

    Parameters
    ----------
    rows : sequence of (coeffs, rhs, strict)
    nvars : int
    nonneg : bool
        Restrict to x >= 0 (used when a gauge forces nonnegativity).

    Returns
    -------
    FeasibilityResult
    """
    witness = lp_core(_weak_form(rows), nvars, nonneg)
    if witness is None:
        return FeasibilityResult("infeasible", None)
    bad = check_witness(rows, witness)
    if bad:
        raise ArithmeticError("simplex witness fails row %d" % bad[0])
    return FeasibilityResult("feasible", witness)


def solve_lazy(rows, nvars, nonneg=False, initial=0, batch=16):
    """Feasibility via a growing active subset of the rows.

    Solves with the first ``initial`` rows, verifies the witness against
    all rows, adds up to ``batch`` violated rows, and repeats.  An
    infeasible subset proves the whole system infeasible; a witness is
    only returned once it satisfies every row.
    """
    n = len(rows)
    weak = _weak_form(rows)
    active = list(range(min(n, initial))) if initial else list(range(n))
    in_active = set(active)
    while True:
        witness = lp_core([weak[i] for i in active], nvars, nonneg)
        if witness is None:
            return FeasibilityResult("infeasible", None)
        bad = check_witness(rows, witness)
        if not bad:
            return FeasibilityResult("feasible", witness)
        added = 0
        for idx in bad:
            if idx not in in_active:
                in_active.add(idx)
                active.append(idx)
                added += 1
                if added >= batch:
                    break
        if added == 0:
            # all violated rows already active: the weak surrogate was
            # satisfied but a strict original row is tight, which the
            # slack-1 conversion rules out
            raise ArithmeticError("lazy solve cannot make progress")


def solve_strict_rays(rows, nvars, nonneg=False, initial=0, batch=16):
    """Feasibility of a homogeneous strict system with integer rows.

    Rows are coefficient tuples meaning coeffs.x > 0; they must already
    be integral.  Uses the same growing-active-subset strategy as
    solve_lazy but skips the per-call denominator clearing, which
    matters when many similar systems are tested in a loop.
    """
    n = len(rows)
    active = list(range(min(n, initial))) if initial else list(range(n))
    in_active = set(active)
    while True:
        witness = lp_core([(rows[i], 1) for i in active], nvars, nonneg)
        if witness is None:
            return FeasibilityResult("infeasible", None)
        bad = []
        for idx, coeffs in enumerate(rows):
            acc = Fraction(0)
            for c, x in zip(coeffs, witness):
                if c:
                    acc += c * x
            if acc <= 0:
                bad.append(idx)
        if not bad:
            return FeasibilityResult("feasible", witness)
        added = 0
        for idx in bad:
            if idx not in in_active:
                in_active.add(idx)
                active.append(idx)
                added += 1
                if added >= batch:
                    break
        if added == 0:
            raise ArithmeticError("lazy solve cannot make progress")


def rescale_primitive(witness):
    """Scale a rational vector to coprime integers (positive multiple)."""
    scale = 1
    for f in witness:
        f = Fraction(f)
        scale = scale * f.denominator // gcd(scale, f.denominator)
    ints = [int(Fraction(f) * scale) for f in witness]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints)
