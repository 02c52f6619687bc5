"""Exact integer root helpers.

Bound formulas elsewhere in the package must not go through floats:
a ceiling applied to 53-bit noise misfires exactly at perfect powers,
which the tests probe on purpose.  Floats are used only to seed the
integer refinement loops below.
"""

from __future__ import annotations

from math import isqrt


def ceil_sqrt(x: int) -> int:
    """Smallest integer r with r*r >= x (x >= 0)."""
    if x < 0:
        raise ValueError(f"ceil_sqrt of negative {x}")
    r = isqrt(x)
    return r if r * r == x else r + 1


def floor_cbrt(x: int) -> int:
    """Largest integer c with c**3 <= x (x >= 0)."""
    if x < 0:
        raise ValueError(f"floor_cbrt of negative {x}")
    c = round(x ** (1 / 3)) if x > 0 else 0
    while c > 0 and c * c * c > x:
        c -= 1
    while (c + 1) ** 3 <= x:
        c += 1
    return c


def ceil_cbrt(x: int) -> int:
    """Smallest integer c with c**3 >= x (x >= 0)."""
    c = floor_cbrt(x)
    return c if c * c * c == x else c + 1


def ceil_pow23(x: int) -> int:
    """Smallest integer c with c**3 >= x**2, i.e. the ceiling of x^(2/3)."""
    if x < 0:
        raise ValueError(f"ceil_pow23 of negative {x}")
    return ceil_cbrt(x * x)
