"""Four-point quantities in doubled integer units.

Every delta and tau value is half-integral, so the engine stores twice the
value as an int and never touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass


def delta4(d_uv: int, d_xy: int, d_ux: int, d_vy: int, d_uy: int, d_vx: int) -> int:
    """Twice delta(u, v, x, y): largest minus second largest pair sum."""
    lo, mid, hi = sorted((d_uv + d_xy, d_ux + d_vy, d_uy + d_vx))
    return hi - mid


def tau4(d_uv: int, d_xy: int, d_ux: int, d_vy: int, d_uy: int, d_vx: int) -> int:
    """Twice tau(u, v, x, y); negative unless d(u,v) + d(x,y) is the largest sum."""
    a = d_ux + d_vy
    b = d_uy + d_vx
    return d_uv + d_xy - (a if a > b else b)


def quad_delta(dist, u: int, v: int, x: int, y: int) -> int:
    """Twice delta of a quadruple given a distance callable or matrix."""
    d = dist if callable(dist) else (lambda a, b: dist[a][b])
    return delta4(d(u, v), d(x, y), d(u, x), d(v, y), d(u, y), d(v, x))


def quad_tau(dist, u: int, v: int, x: int, y: int) -> int:
    d = dist if callable(dist) else (lambda a, b: dist[a][b])
    return tau4(d(u, v), d(x, y), d(u, x), d(v, y), d(u, y), d(v, x))


def format_doubled(twice: int) -> str:
    """Render a doubled value as a decimal with one fractional digit, e.g. 13 -> '6.5'."""
    sign = "-" if twice < 0 else ""
    q, r = divmod(abs(twice), 2)
    return f"{sign}{q}.{5 if r else 0}"


@dataclass(frozen=True)
class QuadrupleResult:
    twice: int
    witness: tuple[int, int, int, int]

    @property
    def value(self) -> float:
        return self.twice / 2

    def __str__(self) -> str:
        return format_doubled(self.twice)
