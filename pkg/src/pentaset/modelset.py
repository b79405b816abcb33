"""Enumeration and nearest-neighbor analysis of the cut-and-project set.

The point set is S = {z in Z[zeta_5] : |sigma(z)|^2 <= w} intersected with a
physical disc |z|^2 <= R^2; both constraints are tested exactly.  The key
bound is Q(a) = |z|^2 + |sigma(z)|^2, a positive definite integer quadratic
form, which confines the search to finitely many coordinate vectors.
"""

from __future__ import annotations

import math
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cmp_to_key

from .cyclotomic import (
    CycInt,
    GoldenInt,
    abs_sq,
    abs_sq_coords,
    embed_approx,
    golden_cmp,
    golden_cmp_golden,
    quad_form,
    sqrt5_sign,
    LONG_DIST_SQ,
    SHORT_DIST_SQ,
)

DIST_SHORT = "short"
DIST_LONG = "long"
DIST_OTHER = "other"
DIST_UNKNOWN = "unknown"


@dataclass(frozen=True)
class Window:
    """Closed disc |u|^2 <= w in the internal embedding; w a positive rational."""

    w: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "w", Fraction(self.w))
        if self.w <= 0:
            raise ValueError(f"window squared radius must be positive, got {self.w}")

    @property
    def diam_sq(self) -> Fraction:
        return 4 * self.w


@dataclass
class PointRecord:
    z: CycInt
    abs_sq_physical: GoldenInt
    abs_sq_internal: GoldenInt
    x: float
    y: float
    min_dist_sq: GoldenInt | None = None
    dist_class: str = DIST_UNKNOWN


@dataclass
class Snapshot:
    window: Window
    radius_sq: Fraction
    points: list[PointRecord] = field(default_factory=list)
    class_counts: dict[str, int] | None = None

    def coord_set(self) -> set[tuple[int, int, int, int]]:
        return {p.z.coords() for p in self.points}


def contains(z: CycInt, window: Window) -> bool:
    """Exact membership test; the window boundary is included."""
    return golden_cmp(abs_sq(z, "internal"), window.w) <= 0


def _golden_le_frac(p: int, q: int, r: Fraction) -> bool:
    # p + q*phi <= num/den, all exact
    num, den = r.numerator, r.denominator
    return sqrt5_sign(2 * den * p + den * q - 2 * num, den * q) <= 0


def _make_record(coords: tuple[int, int, int, int],
                 phys: tuple[int, int], intr: tuple[int, int]) -> PointRecord:
    z = CycInt(*coords)
    e = embed_approx(z, "physical")
    return PointRecord(z, GoldenInt(*phys), GoldenInt(*intr), e.real, e.imag)


def _form_bounded_vectors(cb: int):
    """Yield all integer vectors a with Q(a) <= cb.

    Layered search: for fixed (a1, a2, a3), Q is a quadratic in a0 whose
    real root interval is computed with integer square roots (padded by one
    and re-checked exactly).
    """
    if cb < 0:
        return
    m = math.isqrt(2 * cb)  # smallest eigenvalue of the Gram matrix is 1/2
    for a1 in range(-m, m + 1):
        for a2 in range(-m, m + 1):
            for a3 in range(-m, m + 1):
                t = a1 + a2 + a3
                big_t = a1 * a1 + a2 * a2 + a3 * a3
                # Q <= cb  <=>  4*a0^2 - 2*t*a0 + (5T - t^2 - 2cb) <= 0
                disc = 5 * t * t - 20 * big_t + 8 * cb
                if disc < 0:
                    continue
                s = math.isqrt(disc)
                lo = -((s - t) // 4) - 1
                hi = (t + s) // 4 + 1
                for a0 in range(lo, hi + 1):
                    if quad_form(a0, a1, a2, a3) <= cb:
                        yield (a0, a1, a2, a3)


def _sorted_snapshot(window: Window, radius_sq: Fraction,
                     records: list[PointRecord]) -> Snapshot:
    records.sort(key=lambda p: (quad_form(*p.z.coords()), p.z.coords()))
    return Snapshot(window, radius_sq, records)


def enumerate_points(radius_sq: Fraction | int, window: Window | None = None,
                     method: str = "fast") -> Snapshot:
    """All z with |z|^2 <= radius_sq and |sigma(z)|^2 <= w, exactly.

    method "fast" prunes with the quadratic form Q layer by layer; "box" is
    the naive baseline scanning the full coordinate box with ||a||^2 bounded
    by 2*(R^2 + w).  Both filter every candidate exactly and must agree.
    """
    window = window or Window()
    radius_sq = Fraction(radius_sq)
    if radius_sq < 0:
        raise ValueError(f"radius_sq must be nonnegative, got {radius_sq}")
    bound = radius_sq + window.w
    cb = math.floor(bound)

    records = []
    if method == "fast":
        candidates = _form_bounded_vectors(cb)
    elif method == "box":
        candidates = _box_vectors(math.floor(2 * bound))
    else:
        raise ValueError(f"unknown enumeration method {method!r}")

    for coords in candidates:
        phys, intr = abs_sq_coords(*coords)
        if _golden_le_frac(phys[0], phys[1], radius_sq) and \
           _golden_le_frac(intr[0], intr[1], window.w):
            records.append(_make_record(coords, phys, intr))
    return _sorted_snapshot(window, radius_sq, records)


def _box_vectors(norm_bound: int):
    if norm_bound < 0:
        return
    m = math.isqrt(norm_bound)
    for a0 in range(-m, m + 1):
        n0 = a0 * a0
        for a1 in range(-m, m + 1):
            n1 = n0 + a1 * a1
            if n1 > norm_bound:
                continue
            for a2 in range(-m, m + 1):
                n2 = n1 + a2 * a2
                if n2 > norm_bound:
                    continue
                for a3 in range(-m, m + 1):
                    if n2 + a3 * a3 <= norm_bound:
                        yield (a0, a1, a2, a3)


_DISPLACEMENT_CACHE: dict[Fraction, list[tuple[CycInt, GoldenInt]]] = {}


def displacement_candidates(window: Window) -> list[tuple[CycInt, GoldenInt]]:
    """All nonzero d that can separate two window members at distance <= 1.

    Both endpoints in the window force |sigma(d)|^2 <= 4w, and the nearest
    neighbor is at distance <= 1, so Q(d) <= 1 + 4w confines the search.
    Sorted by exact squared length, then lexicographic coordinates, so a
    scan hits the minimal candidate first.
    """
    cached = _DISPLACEMENT_CACHE.get(window.w)
    if cached is not None:
        return cached
    out = []
    for coords in _form_bounded_vectors(math.floor(1 + 4 * window.w)):
        if coords == (0, 0, 0, 0):
            continue
        phys, intr = abs_sq_coords(*coords)
        if _golden_le_frac(phys[0], phys[1], Fraction(1)) and \
           _golden_le_frac(intr[0], intr[1], 4 * window.w):
            out.append((CycInt(*coords), GoldenInt(*phys)))

    def cmp(a, b):
        c = golden_cmp_golden(a[1], b[1])
        if c:
            return c
        return -1 if a[0].coords() < b[0].coords() else 1

    out.sort(key=cmp_to_key(cmp))
    _DISPLACEMENT_CACHE[window.w] = out
    return out


def min_distance(z: CycInt, window: Window) -> tuple[GoldenInt, CycInt]:
    """Exact squared distance from z to its nearest neighbor in the full
    (infinite) set, with the lexicographically smallest witness on ties."""
    if not contains(z, window):
        raise ValueError(f"{z.coords()} is not in the set for this window")
    for d, dsq in displacement_candidates(window):
        if contains(z + d, window):
            return dsq, z + d
    raise RuntimeError(
        "no neighbor within distance 1; window too small for the step bound")


def classify_distance(d_sq: GoldenInt) -> str:
    if d_sq.sign() <= 0:
        raise ValueError(f"squared distance must be positive, got ({d_sq.p},{d_sq.q})")
    if d_sq == SHORT_DIST_SQ:
        return DIST_SHORT
    if d_sq == LONG_DIST_SQ:
        return DIST_LONG
    return DIST_OTHER


def is_inner(abs_sq_physical: GoldenInt, radius_sq: Fraction) -> bool:
    """Exact test |z| <= R - 1, i.e. the unit neighborhood of z fits in the disc.

    Squared twice to stay rational: |z| + 1 <= R iff R^2 - 1 - |z|^2 >= 0
    and 4|z|^2 <= (R^2 - 1 - |z|^2)^2.
    """
    g = abs_sq_physical
    hp = Fraction(radius_sq) - 1 - g.p
    hq = Fraction(-g.q)
    if sqrt5_sign(2 * hp + hq, hq) < 0:
        return False
    # h^2 in (p, q) form, minus 4g
    sp = hp * hp + hq * hq - 4 * g.p
    sq = 2 * hp * hq + hq * hq - 4 * g.q
    return sqrt5_sign(2 * sp + sq, sq) >= 0


def _min_over_candidates(i: int, pts_coords, xs, ys, neighbor_idx) -> GoldenInt | None:
    best = None
    xi, yi = xs[i], ys[i]
    ci = pts_coords[i]
    for j in neighbor_idx:
        if j == i:
            continue
        dx = xs[j] - xi
        dy = ys[j] - yi
        if dx * dx + dy * dy > 1.0 + 1e-6:
            continue  # true minimum is <= 1; float slack keeps this safe
        cj = pts_coords[j]
        p, q = abs_sq_coords(ci[0] - cj[0], ci[1] - cj[1],
                             ci[2] - cj[2], ci[3] - cj[3])[0]
        d = GoldenInt(p, q)
        if best is None or golden_cmp_golden(d, best) < 0:
            best = d
    return best


def _classify_range(args):
    lo, hi, pts_coords, xs, ys, radius_sq, w = args
    grid = defaultdict(list)
    for j, (x, y) in enumerate(zip(xs, ys)):
        grid[(math.floor(x), math.floor(y))].append(j)
    window = Window(w)
    out = []
    for i in range(lo, hi):
        phys = GoldenInt(*abs_sq_coords(*pts_coords[i])[0])
        if not is_inner(phys, radius_sq):
            out.append((i, None, DIST_UNKNOWN))
            continue
        cx, cy = math.floor(xs[i]), math.floor(ys[i])
        neigh = []
        for gx in (cx - 1, cx, cx + 1):
            for gy in (cy - 1, cy, cy + 1):
                neigh.extend(grid.get((gx, gy), ()))
        best = _min_over_candidates(i, pts_coords, xs, ys, neigh)
        if best is None:
            # grid came up empty; fall back to the exact displacement scan
            best, _ = min_distance(CycInt(*pts_coords[i]), window)
        out.append((i, (best.p, best.q), classify_distance(best)))
    return out


def analyze(snapshot: Snapshot, threads: int = 1) -> Snapshot:
    """Fill min_dist_sq and dist_class for every inner point.

    Inner means |z| <= R - 1 (exact); other points stay "unknown".  A unit
    spatial grid over the float coordinates prefilters neighbor candidates;
    the minimum itself is chosen by exact comparison only.
    """
    pts_coords = [p.z.coords() for p in snapshot.points]
    xs = [p.x for p in snapshot.points]
    ys = [p.y for p in snapshot.points]
    n = len(pts_coords)

    if threads <= 1 or n < 64:
        results = _classify_range((0, n, pts_coords, xs, ys,
                                   snapshot.radius_sq, snapshot.window.w))
    else:
        step = -(-n // threads)
        chunks = [(lo, min(lo + step, n), pts_coords, xs, ys,
                   snapshot.radius_sq, snapshot.window.w)
                  for lo in range(0, n, step)]
        results = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_classify_range, chunks):
                results.extend(part)
        results.sort(key=lambda r: r[0])

    new_points = []
    counts = {DIST_SHORT: 0, DIST_LONG: 0, DIST_OTHER: 0, DIST_UNKNOWN: 0}
    for (i, pq, cls), rec in zip(results, snapshot.points):
        mds = GoldenInt(*pq) if pq is not None else None
        new_points.append(replace(rec, min_dist_sq=mds, dist_class=cls))
        counts[cls] += 1
    return Snapshot(snapshot.window, snapshot.radius_sq, new_points, counts)


def stats(snapshot: Snapshot) -> dict:
    """Summary counts, empirical density, and short:long ratio."""
    counts = snapshot.class_counts
    if counts is None:
        counts = {DIST_SHORT: 0, DIST_LONG: 0, DIST_OTHER: 0, DIST_UNKNOWN: 0}
        for p in snapshot.points:
            counts[p.dist_class] += 1
    n = len(snapshot.points)
    r_sq = float(snapshot.radius_sq)
    density = n / (math.pi * r_sq) if r_sq > 0 else None
    ratio = counts[DIST_SHORT] / counts[DIST_LONG] if counts[DIST_LONG] else None
    return {
        "count": n,
        "classes": dict(counts),
        "density": density,
        "short_long_ratio": ratio,
    }
