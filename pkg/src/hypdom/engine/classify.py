"""Acceptable / valuable classification of candidate vertices for a pair (x, y).

All quantities are in doubled units: ``low2 = 2 * delta_L``. For a candidate
``z`` with effective radius ``r_z`` and a pair ``(x, y)`` with radii
``r_x, r_y``, ``z`` is acceptable when

1. ``d(z,x) + r_z + r_x > delta_L`` and ``d(z,y) + r_z + r_y > delta_L``;
2. ``2 ecc(z) + d(x,y) - d(z,x) - d(z,y) + 4 r_z + 2 r_x + 2 r_y > 4 delta_L + 1``;
3. ``max(d(z,x) - r_x, d(z,y) - r_y) <= ecc(z) + d(x,y) - 3 delta_L - 3/2 + 2 r_z + r_x + r_y``;

and valuable when additionally

    d(x,y) - d(x,z) - d(y,z) + 2 d(z,c) + 4 r_z + 2 r_x + 2 r_y > 2 delta_L

for the fixed central vertex ``c``. Any quadruple dominated by ``(u, v, x, y)``
whose tau exceeds ``delta_L`` needs both u and v acceptable and at least one
of them valuable.

``strict=True`` switches conditions 2 and 3 to the tighter thresholds
``> 4 delta_L + 2`` and ``< ...`` (strict). Those can reject vertices that
still lead to an improving quadruple and are kept only for comparison.
"""

from __future__ import annotations

import numpy as np


def is_acceptable(dzx: int, dzy: int, ecc_z: int, r_z: int, dxy: int, r_x: int, r_y: int,
                  low2: int, strict: bool = False) -> bool:
    if 2 * (dzx + r_z + r_x) <= low2 or 2 * (dzy + r_z + r_y) <= low2:
        return False
    k8 = 4 * r_z + 2 * r_x + 2 * r_y
    if 2 * ecc_z + dxy - dzx - dzy + k8 <= 2 * low2 + (2 if strict else 1):
        return False
    m = dzx - r_x if dzx - r_x > dzy - r_y else dzy - r_y
    bound = 2 * ecc_z + 2 * dxy - 3 * low2 + k8 - 3
    return 2 * m < bound if strict else 2 * m <= bound


def is_valuable(dzx: int, dzy: int, dzc: int, r_z: int, dxy: int, r_x: int, r_y: int,
                low2: int) -> bool:
    return dxy - dzx - dzy + 2 * dzc + 4 * r_z + 2 * r_x + 2 * r_y > low2


def classify(dzx, dzy, ecc_z, r_z, dzc, dxy: int, r_x: int, r_y: int, low2: int,
             strict: bool = False) -> tuple[list[int], list[int]]:
    """Scalar sweep over parallel candidate sequences.

    Returns ``(acceptable, valuable)`` as lists of candidate positions.
    """
    acc: list[int] = []
    val: list[int] = []
    base_v = dxy + 2 * r_x + 2 * r_y - low2
    c2 = 2 * low2 + (2 if strict else 1) - dxy - 2 * r_x - 2 * r_y
    c3 = 2 * dxy - 3 * low2 + 2 * r_x + 2 * r_y - 3
    for i in range(len(dzx)):
        a = dzx[i]
        b = dzy[i]
        r = r_z[i]
        if 2 * (a + r + r_x) <= low2 or 2 * (b + r + r_y) <= low2:
            continue
        e = ecc_z[i]
        if 2 * e - a - b + 4 * r <= c2:
            continue
        m = a - r_x if a - r_x > b - r_y else b - r_y
        lim = 2 * e + 4 * r + c3
        if (2 * m >= lim) if strict else (2 * m > lim):
            continue
        acc.append(i)
        if base_v - a - b + 2 * dzc[i] + 4 * r > 0:
            val.append(i)
    return acc, val


def compute_acc_val(dzx: np.ndarray, dzy: np.ndarray, ecc_z: np.ndarray, r_z: np.ndarray,
                    dzc: np.ndarray, dxy: int, r_x: int, r_y: int, low2: int,
                    strict: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised classification; returns boolean masks (acceptable, valuable)."""
    acc = (2 * (dzx + r_z + r_x) > low2) & (2 * (dzy + r_z + r_y) > low2)
    k8 = 4 * r_z + 2 * r_x + 2 * r_y
    lhs2 = 2 * ecc_z + dxy - dzx - dzy + k8
    acc &= lhs2 > 2 * low2 + (2 if strict else 1)
    m2 = 2 * np.maximum(dzx - r_x, dzy - r_y)
    bound = 2 * ecc_z + 2 * dxy - 3 * low2 + k8 - 3
    acc &= (m2 < bound) if strict else (m2 <= bound)
    val = acc & (dxy - dzx - dzy + 2 * dzc + 4 * r_z + 2 * r_x + 2 * r_y > low2)
    return acc, val
