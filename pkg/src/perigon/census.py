"""Top-level counts of inequivalent integer polygons and m-gons.

Two evaluation routes are kept side by side on purpose.  The closed forms
are hand-simplified and fast; the assembly route averages the per-class
fixed-set sizes over the whole symmetry group (weighting each class by its
size) and exists as the reference the closed forms are regression-tested
against — a transcription slip in any mod-4 branch shows up as a mismatch.

Equivalence means rotation and/or reversal of the side ordering; the
"cyclic" variants drop reversal and quotient by rotations only.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd

from .fixcount import fix_mgons, fix_polygons
from .model import ElementClass
from .numtheory import binomial, divisors, nearest_integer, totient

__all__ = [
    "InternalError",
    "asymptotic_mgon_coefficient",
    "asymptotic_mgons",
    "asymptotic_polygons",
    "count_mgons",
    "count_mgons_cyclic",
    "count_mgons_via_burnside",
    "count_polygons",
    "count_polygons_cyclic",
    "count_polygons_via_burnside",
    "quadrilaterals_nearest",
    "quadrilaterals_piecewise",
    "triangles_nearest",
]


class InternalError(RuntimeError):
    """An exactness self-check failed: a defect in the formulas, never bad input."""


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InternalError(f"{what} = {num} is not divisible by {den}")
    return q


# ---------------------------------------------------------------------------
# closed forms


def count_mgons(n: int, m: int) -> int:
    """Inequivalent integer m-gons with perimeter n.

    Returns 0 whenever no such polygon exists (m < 3 or m > n), so callers
    may sweep rectangular (m, n) grids without guards.
    """
    if m < 3 or m > n:
        return 0
    rotations = sum(totient(d) * binomial(n // d, m // d) for d in divisors(gcd(m, n)))
    half_m = m // 2
    reflections = (
        binomial(half_m + (n - m) // 2, half_m)
        - binomial(n // 2, m - 1)
        - binomial(n // 4, half_m)
        - (binomial((n + 2) // 4, half_m) if m % 2 == 0 else 0)
    )
    return _exact_div(rotations + n * reflections, 2 * n, f"m-gon census numerator ({m},{n})")


def count_polygons(n: int) -> int:
    """Inequivalent integer polygons (any number of sides) with perimeter n."""
    if n < 3:
        raise ValueError(f"perimeter must be at least 3, got {n}")
    rotations = _exact_div(
        sum(totient(d) * 2**(n // d - 1) for d in divisors(n)), n,
        f"polygon rotation sum (n={n})")
    if n % 4 in (0, 1):
        tail = 3 * 2**((n - 4) // 4)
    else:
        tail = 2**((n + 2) // 4)
    return rotations + 2**((n - 3) // 2) - tail


# ---------------------------------------------------------------------------
# group-average assembly (reference route)


def _dihedral_fix_sum(n: int, fix) -> int:
    """Sum of per-class fixed-set sizes weighted by class size over all 2n
    symmetries: one identity, phi(d) rotations of each order d > 1, and n
    reflections (split n/2 + n/2 on even circles)."""
    total = fix(ElementClass.identity())
    for d in divisors(n):
        if d > 1:
            total += totient(d) * fix(ElementClass.rotation(d))
    if n % 2 == 1:
        total += n * fix(ElementClass.reflection_odd())
    else:
        total += (n // 2) * fix(ElementClass.reflection_even_no_fixed_point())
        total += (n // 2) * fix(ElementClass.reflection_even_two_fixed_points())
    return total


def count_polygons_via_burnside(n: int) -> int:
    """Polygon count assembled from per-class fixed-set sizes.

    Must equal count_polygons(n); the divisibility of the group sum by 2n
    is asserted as a built-in self-check.
    """
    if n < 3:
        raise ValueError(f"perimeter must be at least 3, got {n}")
    total = _dihedral_fix_sum(n, lambda cls: fix_polygons(n, cls))
    return _exact_div(total, 2 * n, f"dihedral fix sum (n={n})")


def count_mgons_via_burnside(n: int, m: int) -> int:
    """m-gon count assembled from per-class fixed-set sizes."""
    if n < 3:
        raise ValueError(f"perimeter must be at least 3, got {n}")
    if not 3 <= m <= n:
        raise ValueError(f"side count must satisfy 3 <= m <= n, got m={m}, n={n}")
    total = _dihedral_fix_sum(n, lambda cls: fix_mgons(n, m, cls))
    return _exact_div(total, 2 * n, f"dihedral fix sum ({m},{n})")


# ---------------------------------------------------------------------------
# cyclic variants (rotation-only equivalence)


def count_mgons_cyclic(n: int, m: int) -> int:
    """Integer m-gons with perimeter n, inequivalent up to rotation only.

    Returns 0 outside 3 <= m <= n, like count_mgons.
    """
    if m < 3 or m > n:
        return 0
    rotations = sum(totient(d) * binomial(n // d, m // d) for d in divisors(gcd(m, n)))
    return _exact_div(rotations, n, f"cyclic fix sum ({m},{n})") - binomial(n // 2, m - 1)


def count_polygons_cyclic(n: int) -> int:
    """Integer polygons with perimeter n, inequivalent up to rotation only."""
    if n < 3:
        raise ValueError(f"perimeter must be at least 3, got {n}")
    rotations = _exact_div(
        sum(totient(d) * 2**(n // d) for d in divisors(n)), n,
        f"cyclic rotation sum (n={n})")
    return rotations - 1 - 2**(n // 2)


# ---------------------------------------------------------------------------
# nearest-integer specialisations


def triangles_nearest(n: int) -> int:
    """Triangle count by the quadratic nearest-integer rule.

    Evaluates [n^2/48] for even n and [(n+3)^2/48] for odd n with exact
    rational arithmetic; the rounded value never sits on a half-integer.
    Agrees with count_mgons(n, 3) for n >= 3 (and is formula-only below).
    """
    if n < 1:
        raise ValueError(f"perimeter must be positive, got {n}")
    square = n * n if n % 2 == 0 else (n + 3) ** 2
    return nearest_integer(Fraction(square, 48))


def quadrilaterals_nearest(n: int) -> int:
    """Quadrilateral count by the cubic nearest-integer rule.

    [(n^3 - 3n^2 + 20n)/96] for even n, [(n^3 - 7n)/96] for odd n; agrees
    with count_mgons(n, 4) for n >= 4.
    """
    if n < 1:
        raise ValueError(f"perimeter must be positive, got {n}")
    if n % 2 == 0:
        cubic = n**3 - 3 * n**2 + 20 * n
    else:
        cubic = n**3 - 7 * n
    return nearest_integer(Fraction(cubic, 96))


def quadrilaterals_piecewise(n: int) -> int:
    """Exact quadrilateral count: one cubic polynomial per residue of n mod 4."""
    if n < 1:
        raise ValueError(f"perimeter must be positive, got {n}")
    r = n % 4
    if r == 0:
        cubic = n**3 - 3 * n**2 + 20 * n
    elif r == 1:
        cubic = n**3 - 7 * n + 6
    elif r == 2:
        cubic = n**3 - 3 * n**2 + 20 * n - 36
    else:
        cubic = n**3 - 7 * n - 6
    return _exact_div(cubic, 96, f"piecewise quadrilateral value (n={n})")


# ---------------------------------------------------------------------------
# leading-order growth


def asymptotic_polygons(n: int) -> Fraction:
    """Leading-order estimate 2^(n-1)/n of the polygon count, as an exact
    rational (diagnostic use; ratios against it may be floated)."""
    if n < 3:
        raise ValueError(f"perimeter must be at least 3, got {n}")
    return Fraction(2 ** (n - 1), n)


def asymptotic_mgon_coefficient(m: int) -> Fraction:
    """Coefficient c(m) with the m-gon count growing like c(m) * n^(m-1)."""
    if m < 3:
        raise ValueError(f"side count must be at least 3, got {m}")
    return Fraction(2 ** (m - 1) - m, 2**m * factorial(m))


def asymptotic_mgons(m: int, n: int) -> Fraction:
    """Leading-order estimate c(m) * n^(m-1) of the m-gon count at perimeter n."""
    if n < 3:
        raise ValueError(f"perimeter must be at least 3, got {n}")
    return asymptotic_mgon_coefficient(m) * n ** (m - 1)
