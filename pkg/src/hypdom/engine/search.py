"""Exact hyperbolicity by pruned search over a hierarchy of dominating sets.

The top level scans pairs of top dominators in order of non-increasing
distance, combining each pair ``(x, y)`` with earlier pairs ``(u, v)``
("mates"). A top quadruple whose tau plus the four effective radii still
beats the current lower bound is refined by :meth:`_Search.explore`, which
repeats the scan on the children of the four cells one level down.

Two sweeps are made over the top pairs. The first never refines; it raises
the lower bound and records, per pair, the best ``tau + radii`` seen. The
second refines, and skips pairs whose recorded bound can no longer beat the
lower bound.

Two details matter for exactness and for the visit counts:

* the pair being processed counts as its own mate, so quadruples made of
  one pair twice (``u, v, x, y`` with ``{u, v} = {x, y}``) are searched;
* symmetric repeats (``(u, v)`` vs ``(v, u)``, ``(x', y')`` vs ``(y', x')``
  inside one cell) are considered once.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

import numpy as np

from ..distance_cache import MatrixCache
from ..domination import DominationHierarchy
from .classify import classify, compute_acc_val

log = logging.getLogger(__name__)

NO_BOUND = np.iinfo(np.int64).min // 4


class MemoryBudgetError(RuntimeError):
    pass


@dataclass
class LevelStats:
    level: int
    k: int
    dominators: int = 0
    considered: int = 0
    explored: int = 0
    pairs_scanned: int = 0
    pairs_skipped: int = 0
    acc_calls: int = 0

    def merge(self, other: "LevelStats") -> None:
        self.dominators += other.dominators
        self.considered += other.considered
        self.explored += other.explored
        self.pairs_scanned += other.pairs_scanned
        self.pairs_skipped += other.pairs_skipped
        self.acc_calls += other.acc_calls

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class PassStats:
    index: int
    start2: int
    end2: int = 0
    pairs_total: int = 0
    pairs_processed: int = 0
    skipped_shape: int = 0
    skipped_bound: int = 0
    stopped_at: int | None = None
    considered: int = 0

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["delta_low_start"] = d.pop("start2") / 2
        d["delta_low_end"] = d.pop("end2") / 2
        return d


@dataclass
class SearchState:
    """Mutable state shared by every level of one search."""

    low2: int
    witness: tuple[int, int, int, int]
    levels: dict[int, LevelStats] = field(default_factory=dict)
    trajectory: list[int] = field(default_factory=list)

    def improve(self, t2: int, quad) -> None:
        if t2 > self.low2:
            self.low2 = t2
            self.witness = quad
            self.trajectory.append(t2)


class _Search:
    def __init__(self, graph, hier: DominationHierarchy, ecc, center_dist, cache: MatrixCache,
                 state: SearchState, strict: bool = False, trace=None):
        self.g = graph
        self.h = hier
        self.ecc = ecc
        self.dc = center_dist
        self.cache = cache
        self.st = state
        self.strict = strict
        self.trace = trace
        for j, lv in enumerate(hier.levels):
            state.levels.setdefault(j, LevelStats(j, lv.k, len(lv.dominators)))

    # -- top level ---------------------------------------------------------

    def prepare_top(self, dist_rows, memory_budget: int) -> None:
        top = self.h.top
        D = top.dominators
        N = len(D)
        if N * N > memory_budget:
            raise MemoryBudgetError(
                f"top-level distance matrix needs {N}x{N} entries, above the budget of "
                f"{memory_budget}; use a larger max domination distance")
        self.D = D
        self.dm = np.array([[row[v] for v in D] for row in dist_rows], dtype=np.int64)
        self.rad = np.array([top.radius[v] for v in D], dtype=np.int64)
        self.eccD = np.array([self.ecc[v] for v in D], dtype=np.int64)
        self.dcD = np.array([self.dc[v] for v in D], dtype=np.int64)
        iu, ju = np.triu_indices(N, 1)
        if top.k > 0:
            diag = np.arange(N)
            iu = np.concatenate([iu, diag])
            ju = np.concatenate([ju, diag])
        dist = self.dm[iu, ju]
        order = np.lexsort((ju, iu, -dist))
        self.pi = iu[order]
        self.pj = ju[order]
        self.pd = dist[order]

    def sweep(self, index: int, refine: bool, bounds: np.ndarray | None,
              record: np.ndarray | None) -> PassStats:
        st = self.st
        top_j = len(self.h.levels) - 1
        lvs = st.levels[top_j]
        k2 = 2 * self.h.top.k
        N = len(self.D)
        D = self.D
        dm, rad, eccD, dcD = self.dm, self.rad, self.eccD, self.dcD
        mates = np.zeros((N, N), dtype=bool)
        idx = np.arange(N)
        ps = PassStats(index, st.low2, pairs_total=len(self.pd))
        pi, pj, pd = self.pi, self.pj, self.pd
        for p in range(len(pd)):
            d = int(pd[p])
            if d + k2 <= st.low2:
                ps.stopped_at = p
                break
            a = int(pi[p])
            b = int(pj[p])
            ra = int(rad[a])
            rb = int(rad[b])
            mates[a, b] = mates[b, a] = True
            if d + ra + rb <= st.low2:
                ps.skipped_shape += 1
                continue
            if bounds is not None and bounds[p] <= st.low2:
                ps.skipped_bound += 1
                continue
            ps.pairs_processed += 1
            lvs.pairs_scanned += 1
            lvs.acc_calls += 1
            da = dm[a]
            db = dm[b]
            acc, val = compute_acc_val(da, db, eccD, rad, dcD, d, ra, rb, st.low2, self.strict)
            for u in np.flatnonzero(val):
                u = int(u)
                # v valuable with v < u was already paired with u as the valuable side
                cand = mates[u] & acc & ~(val & (idx < u))
                vs = np.flatnonzero(cand)
                if vs.size == 0:
                    continue
                t2 = dm[u, vs] + d - np.maximum(da[u] + db[vs], da[vs] + db[u])
                ub = t2 + 2 * (rad[u] + rad[vs] + ra + rb)
                ps.considered += vs.size
                lvs.considered += vs.size
                if self.trace is not None:
                    for v in vs:
                        self.trace(top_j, index, D[u], D[int(v)], D[a], D[b])
                if not refine:
                    best = int(np.argmax(t2))
                    st.improve(int(t2[best]), (D[u], D[int(vs[best])], D[a], D[b]))
                    if record is not None:
                        m = int(ub.max())
                        if m > record[p]:
                            record[p] = m
                    continue
                hot = np.flatnonzero((t2 > st.low2) | (ub > st.low2))
                for q in hot:
                    v = int(vs[q])
                    st.improve(int(t2[q]), (D[u], D[v], D[a], D[b]))
                    if ub[q] > st.low2:
                        lvs.explored += 1
                        self.explore(D[u], D[v], D[a], D[b], top_j - 1)
        ps.end2 = st.low2
        return ps

    # -- refinement --------------------------------------------------------

    def explore(self, u: int, v: int, x: int, y: int, j: int) -> None:
        """Scan quadruples of level-j dominators inside the cells of u, v, x, y."""
        st = self.st
        up = self.h.levels[j + 1]
        lv = self.h.levels[j]
        lvs = st.levels[j]
        ch = up.children
        X, Y, U, V = ch[x], ch[y], ch[u], ch[v]
        get = self.cache.get
        key = j + 1
        mxy = get((key, x, y), X, Y)
        mux = get((key, u, x), U, X)
        muy = get((key, u, y), U, Y)
        mvx = get((key, v, x), V, X)
        mvy = get((key, v, y), V, Y)
        muv = get((key, u, v), U, V)
        mvu = get((key, v, u), V, U)
        rad = lv.radius
        ecc = self.ecc
        dc = self.dc
        rU = [rad[w] for w in U]
        rV = [rad[w] for w in V]
        eU = [ecc[w] for w in U]
        eV = [ecc[w] for w in V]
        cU = [dc[w] for w in U]
        cV = [dc[w] for w in V]
        muxT = _columns(mux, len(U), len(X))
        muyT = _columns(muy, len(U), len(Y))
        mvxT = _columns(mvx, len(V), len(X))
        mvyT = _columns(mvy, len(V), len(Y))
        same_uv = u == v
        same_xy = x == y
        strict = self.strict
        trace = self.trace
        descend = j > 0
        for ix, xp in enumerate(X):
            rx = rad[xp]
            row_xy = mxy[ix]
            for iy in range(ix if same_xy else 0, len(Y)):
                yp = Y[iy]
                ry = rad[yp]
                dxy = row_xy[iy]
                if dxy + rx + ry <= st.low2:
                    lvs.pairs_skipped += 1
                    continue
                lvs.pairs_scanned += 1
                lvs.acc_calls += 1
                ux, uy = muxT[ix], muyT[iy]
                accU, valU = classify(ux, uy, eU, rU, cU, dxy, rx, ry, st.low2, strict)
                if same_uv:
                    vx, vy, accV, valV = ux, uy, accU, valU
                else:
                    lvs.acc_calls += 1
                    vx, vy = mvxT[ix], mvyT[iy]
                    accV, valV = classify(vx, vy, eV, rV, cV, dxy, rx, ry, st.low2, strict)
                if not valU and not valV:
                    continue
                if same_uv:
                    roles = ((U, valU, ux, uy, rU, U, accU, ux, uy, rU, muv, set(valU), True),)
                else:
                    roles = ((U, valU, ux, uy, rU, V, accV, vx, vy, rV, muv, None, False),
                             (V, valV, vx, vy, rV, U, accU, ux, uy, rU, mvu, set(valU), False))
                for (A, valA, ax, ay, rA, B, accB, bx, by, rB, mab, skip, same) in roles:
                    for ia in valA:
                        ap = A[ia]
                        row = mab[ia]
                        dax = ax[ia]
                        day = ay[ia]
                        k_a = rA[ia] + rx + ry
                        for ib in accB:
                            if skip is not None and ib in skip and (not same or ib < ia):
                                continue
                            bp = B[ib]
                            s2 = dax + by[ib]
                            s3 = day + bx[ib]
                            t2 = row[ib] + dxy - (s2 if s2 > s3 else s3)
                            lvs.considered += 1
                            if trace is not None:
                                trace(j, 2, ap, bp, xp, yp)
                            if t2 > st.low2:
                                st.improve(t2, (ap, bp, xp, yp))
                            if descend and t2 + 2 * (k_a + rB[ib]) > st.low2:
                                lvs.explored += 1
                                self.explore(ap, bp, xp, yp, j - 1)


def _columns(mat, rows: int, cols: int) -> list[list[int]]:
    """Transpose into per-column lists so a classification sweep reads contiguous data."""
    return [[mat[i][c] for i in range(rows)] for c in range(cols)]
