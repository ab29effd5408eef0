"""The four classical radii of an arc polygon, with certificates.

Width and diameter are computed exactly: the breadth in direction u(theta)
is piecewise of the form <A, u(theta)> + const between normal-angle
breakpoints, so the extrema are attained either at breakpoints or at
stationary angles of those sinusoids.  No direction sampling happens here.

The circumradius is the minimum enclosing ball and the inradius the
Chebyshev (largest inscribed) ball.  Both are found by a derivative-free
convex descent seeded analytically and then polished to ~1e-12 by solving
the active contact equations, and both return a certificate: the touching
points (or touching outward normals) whose convex hull must contain the
ball center (or the origin, for normals).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .geometry import (
    TWO_PI,
    Arc,
    ArcPolygon,
    GeometryError,
    Segment,
    add,
    angle_of,
    dist,
    dot,
    norm,
    pieces,
    sub,
    support,
    unit,
    wrap,
)


@dataclass(frozen=True)
class Certificate:
    """Optimality certificate for an extremal ball.

    ``points`` are touching boundary points; ``normals`` the outward unit
    normal angles at the touches; ``hull_margin`` is the signed distance by
    which the relevant convex-combination condition holds (positive: the
    required point is strictly inside the hull of the witnesses).
    """

    points: tuple
    normals: tuple
    hull_margin: float


@dataclass(frozen=True)
class RadiiResult:
    """Inradius, width, diameter, circumradius and their attainments."""

    inradius: float
    width: float
    diameter: float
    circumradius: float
    incenter: tuple
    circumcenter: tuple
    width_direction: float
    diameter_pair: tuple
    in_certificate: Certificate | None
    circum_certificate: Certificate | None

    def as_tuple(self):
        return (self.inradius, self.width, self.diameter, self.circumradius)


def _support_pieces(body):
    """Pieces (t0, t1, point, rho) plus the sorted breakpoint angles."""
    pc = pieces(body)
    return pc


def _piece_lookup(pc, theta):
    for t0, t1, p, rho in pc:
        if (theta - t0) % TWO_PI <= (t1 - t0) + 1e-9:
            return p, rho
    return pc[0][2], pc[0][3]


def _breadth_extrema(body):
    """Exact (min, argmin, max, argmax) of the breadth function."""
    pc = pieces(body)
    bps = sorted({wrap(t) for t0, t1, _, _ in pc for t in (t0, t1)}
                 | {wrap(t + math.pi) for t0, t1, _, _ in pc
                    for t in (t0, t1)})
    merged = [bps[0]]
    for a in bps[1:]:
        if a - merged[-1] > 1e-12:
            merged.append(a)
    if len(merged) > 1 and (merged[0] + TWO_PI) - merged[-1] <= 1e-12:
        merged.pop()
    m = len(merged)

    def breadth_at(theta):
        h1, _ = support(body, theta)
        h2, _ = support(body, theta + math.pi)
        return h1 + h2

    best_min = (math.inf, 0.0)
    best_max = (-math.inf, 0.0)
    for k in range(m):
        t0 = merged[k]
        span = (merged[(k + 1) % m] - t0) % TWO_PI if m > 1 else TWO_PI
        cands = [t0, t0 + span]
        if span > 1e-12:
            mid = t0 + span / 2.0
            p1, _ = _piece_lookup(pc, mid)
            p2, _ = _piece_lookup(pc, mid + math.pi)
            A = sub(p1, p2)
            if norm(A) > 1e-15:
                phi = angle_of(A)
                for cand in (phi, phi + math.pi):
                    off = (cand - t0) % TWO_PI
                    if 1e-12 < off < span - 1e-12:
                        cands.append(t0 + off)
        for t in cands:
            b = breadth_at(t)
            if b < best_min[0]:
                best_min = (b, wrap(t))
            if b > best_max[0]:
                best_max = (b, wrap(t))
    return best_min[0], best_min[1], best_max[0], best_max[1]


def width_and_diameter(body):
    """(width, width_direction, diameter, attaining point pair)."""
    bmin, tmin, bmax, tmax = _breadth_extrema(body)
    _, p1 = support(body, tmax)
    _, p2 = support(body, tmax + math.pi)
    return max(bmin, 0.0), tmin, bmax, (p1, p2)


# ---------------------------------------------------------------------------
# Clearance function (distance from an interior point to the boundary)
# ---------------------------------------------------------------------------

def min_clearance(body, x):
    """min over normals theta of h(theta) - <x, u(theta)>.

    This is the radius of the largest ball centered at x inside the body
    (negative if x is outside).  Returns (value, contacts) where contacts
    is a list of local minimizer candidates (theta, value, kind, data):
    kind 'fixed' for piece-endpoint normals, 'arc' for interior tangency
    to an arc of center data[0] and radius data[1].
    """
    pc = pieces(body)
    best = math.inf
    contacts = []
    for t0, t1, p, rho in pc:
        dx, dy = p[0] - x[0], p[1] - x[1]
        # endpoint candidates
        for t in (t0, t1):
            v = dx * math.cos(t) + dy * math.sin(t) + rho
            contacts.append((wrap(t), v, "fixed", None))
            if v < best:
                best = v
        if rho > 0.0:
            d = math.hypot(dx, dy)
            if d > 1e-15:
                tstar = math.atan2(-dy, -dx)
                off = (tstar - t0) % TWO_PI
                if 1e-12 < off < (t1 - t0) - 1e-12:
                    v = rho - d
                    contacts.append((wrap(t0 + off), v, "arc", (p, rho)))
                    if v < best:
                        best = v
            else:
                v = rho - d
                contacts.append((wrap(t0), v, "arc", (p, rho)))
                if v < best:
                    best = v
    return best, contacts


def _support_offset(body, theta):
    h, _ = support(body, theta)
    return h


def _nelder_mead(f, x0, step, xatol=1e-11, fatol=1e-13, maxiter=600):
    """Minimal Nelder-Mead in 2D (avoids scipy call overhead)."""
    pts = [list(x0), [x0[0] + step, x0[1]], [x0[0], x0[1] + step]]
    vals = [f(p) for p in pts]
    for _ in range(maxiter):
        order = sorted(range(3), key=vals.__getitem__)
        pts = [pts[i] for i in order]
        vals = [vals[i] for i in order]
        if (abs(vals[2] - vals[0]) <= fatol
                and max(abs(pts[2][0] - pts[0][0]), abs(pts[2][1] - pts[0][1]),
                        abs(pts[1][0] - pts[0][0]), abs(pts[1][1] - pts[0][1]))
                <= xatol):
            break
        cx = (pts[0][0] + pts[1][0]) / 2.0
        cy = (pts[0][1] + pts[1][1]) / 2.0
        xr = [2 * cx - pts[2][0], 2 * cy - pts[2][1]]
        fr = f(xr)
        if fr < vals[0]:
            xe = [3 * cx - 2 * pts[2][0], 3 * cy - 2 * pts[2][1]]
            fe = f(xe)
            if fe < fr:
                pts[2], vals[2] = xe, fe
            else:
                pts[2], vals[2] = xr, fr
        elif fr < vals[1]:
            pts[2], vals[2] = xr, fr
        else:
            xc = [(cx + pts[2][0]) / 2.0, (cy + pts[2][1]) / 2.0]
            fc = f(xc)
            if fc < vals[2]:
                pts[2], vals[2] = xc, fc
            else:
                for i in (1, 2):
                    pts[i] = [(pts[i][0] + pts[0][0]) / 2.0,
                              (pts[i][1] + pts[0][1]) / 2.0]
                    vals[i] = f(pts[i])
    order = sorted(range(3), key=vals.__getitem__)
    return pts[order[0]], vals[order[0]]


def _origin_hull_margin(dirs):
    """Signed margin of the origin inside the convex hull of unit vectors.

    Positive when the origin is strictly inside; for two vectors the margin
    is positive only for an exactly antipodal pair (then the negative of
    half the gap).  Returns -inf for fewer than two directions.
    """
    k = len(dirs)
    if k < 2:
        return -math.inf
    if k == 2:
        s = (dirs[0][0] + dirs[1][0], dirs[0][1] + dirs[1][1])
        return -norm(s) / 2.0
    # distance from origin to hull boundary; positive if inside
    idx = sorted(range(k), key=lambda i: math.atan2(dirs[i][1], dirs[i][0]))
    inside = True
    min_edge = math.inf
    for a in range(k):
        p = dirs[idx[a]]
        q = dirs[idx[(a + 1) % k]]
        ex, ey = q[0] - p[0], q[1] - p[1]
        cr = ex * (-p[1]) - ey * (-p[0])
        le = math.hypot(ex, ey)
        if le < 1e-15:
            continue
        d = cr / le
        if d < 0:
            inside = False
        min_edge = min(min_edge, d)
    if not math.isfinite(min_edge):
        return -math.inf
    return min_edge


# ---------------------------------------------------------------------------
# Inball
# ---------------------------------------------------------------------------

def _centroid_seed(body):
    xs, ys, n = 0.0, 0.0, 0
    for e in body.elements:
        for p in (e.start, e.end):
            xs += p[0]
            ys += p[1]
            n += 1
        if isinstance(e, Arc):
            mid = e.point_at(e.normal_start + e.sweep / 2.0)
            xs += mid[0]
            ys += mid[1]
            n += 1
    return (xs / n, ys / n)


def _inball_polish(body, x0, r0):
    """Solve the active contact system exactly; return (x, r) or None."""
    _, contacts = min_clearance(body, x0)
    active = [c for c in contacts if c[1] <= r0 + 1e-5]
    # dedupe by normal angle
    uniq = []
    for c in sorted(active, key=lambda c: c[1]):
        if all(min((c[0] - u[0]) % TWO_PI, (u[0] - c[0]) % TWO_PI) > 1e-7
               for u in uniq):
            uniq.append(c)
    fixed = [c for c in uniq if c[2] == "fixed"]
    arcs = [c for c in uniq if c[2] == "arc"]

    def residuals(x, r):
        out = []
        for th, _, _, _ in fixed:
            out.append(_support_offset(body, th)
                       - (x[0] * math.cos(th) + x[1] * math.sin(th)) - r)
        for _, _, _, (c, rho) in arcs:
            out.append((rho - dist(x, c)) - r)
        return out

    n_con = len(fixed) + len(arcs)
    if n_con >= 3:
        # Newton on the three best-spanning contacts
        cons = (fixed + arcs)[:]

        def con_normal(c, x):
            if c[2] == "fixed":
                return unit(c[0])
            ctr = c[3][0]
            d = sub(x, ctr)
            nd = norm(d)
            return (d[0] / nd, d[1] / nd) if nd > 0 else (1.0, 0.0)

        best_triple, best_m = None, -math.inf
        import itertools
        for tri in itertools.combinations(cons, 3):
            m = _origin_hull_margin([con_normal(c, x0) for c in tri])
            if m > best_m:
                best_m, best_triple = m, tri
        if best_m > 1e-9:
            x = [x0[0], x0[1]]
            r = r0
            for _ in range(60):
                F = []
                J = []
                for c in best_triple:
                    if c[2] == "fixed":
                        th = c[0]
                        F.append(_support_offset(body, th)
                                 - (x[0] * math.cos(th)
                                    + x[1] * math.sin(th)) - r)
                        J.append((-math.cos(th), -math.sin(th), -1.0))
                    else:
                        ctr, rho = c[3]
                        d = (x[0] - ctr[0], x[1] - ctr[1])
                        nd = norm(d)
                        F.append((rho - nd) - r)
                        J.append((-d[0] / nd, -d[1] / nd, -1.0))
                try:
                    dx = _solve3(J, [-f for f in F])
                except ZeroDivisionError:
                    return None
                x[0] += dx[0]
                x[1] += dx[1]
                r += dx[2]
                if max(abs(v) for v in dx) < 1e-14:
                    break
            return (x[0], x[1]), r
    if n_con == 2:
        return _inball_two_contacts(body, fixed, arcs, x0)
    return None


def _solve3(J, b):
    """Solve a 3x3 linear system by Gaussian elimination."""
    a = [list(J[0]) + [b[0]], list(J[1]) + [b[1]], list(J[2]) + [b[2]]]
    for i in range(3):
        piv = max(range(i, 3), key=lambda r: abs(a[r][i]))
        if abs(a[piv][i]) < 1e-15:
            raise ZeroDivisionError
        a[i], a[piv] = a[piv], a[i]
        for r in range(3):
            if r != i:
                f = a[r][i] / a[i][i]
                for cidx in range(4):
                    a[r][cidx] -= f * a[i][cidx]
    return [a[i][3] / a[i][i] for i in range(3)]


def _inball_two_contacts(body, fixed, arcs, x0):
    """Closed forms for an inball held by two antipodal contacts."""
    if len(fixed) == 2:
        th1, th2 = fixed[0][0], fixed[1][0]
        if abs(((th1 - th2) % TWO_PI) - math.pi) > 1e-6:
            return None
        h1 = _support_offset(body, th1)
        h2 = _support_offset(body, th2)
        r = (h1 + h2) / 2.0
        # center: slide along the slab to the most central feasible point
        u1 = unit(th1)
        base = (u1[0] * (h1 - r), u1[1] * (h1 - r))
        v = (-u1[1], u1[0])

        def g1(t):
            x = (base[0] + t * v[0], base[1] + t * v[1])
            val, _ = min_clearance(body, x)
            return -val

        t0 = dot(sub(x0, base), v)
        t_best = _golden(g1, t0 - 0.5, t0 + 0.5)
        x = (base[0] + t_best * v[0], base[1] + t_best * v[1])
        return x, r
    if len(fixed) == 1 and len(arcs) == 1:
        th = fixed[0][0]
        u = unit(th)
        h = _support_offset(body, th)
        c, rho = arcs[0][3]
        r = (h + rho - dot(u, c)) / 2.0
        x = (c[0] - (rho - r) * u[0], c[1] - (rho - r) * u[1])
        return x, r
    if len(arcs) == 2:
        (c1, r1), (c2, r2) = arcs[0][3], arcs[1][3]
        d = dist(c1, c2)
        if d < 1e-15:
            return None
        r = (r1 + r2 - d) / 2.0
        t = (r1 - r) / d
        x = (c1[0] + t * (c2[0] - c1[0]), c1[1] + t * (c2[1] - c1[1]))
        return x, r
    return None


def _golden(f, a, b, iters=80):
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - phi * (b - a)
    d = a + phi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = f(d)
    return (a + b) / 2.0


def inball(body):
    """(incenter, inradius, certificate).  Degenerate bodies have radius 0."""
    if body.degenerate:
        ends = [body.elements[0].a, body.elements[0].b]
        mid = ((ends[0][0] + ends[1][0]) / 2.0,
               (ends[0][1] + ends[1][1]) / 2.0)
        return mid, 0.0, None
    if len(body.elements) == 1 and isinstance(body.elements[0], Arc):
        e = body.elements[0]
        cert = Certificate(
            points=(e.point_at(0.0), e.point_at(math.pi)),
            normals=(0.0, math.pi), hull_margin=0.0)
        return e.center, e.radius, cert

    def negg(x):
        v, _ = min_clearance(body, x)
        return -v

    x0 = _centroid_seed(body)
    size = max(dist(e.start, x0) for e in body.elements)
    x1, f1 = _nelder_mead(negg, x0, 0.2 * size)
    r1 = -f1
    best_x, best_r = tuple(x1), r1
    polished = _inball_polish(body, best_x, best_r)
    if polished is not None:
        x2, r2 = polished
        v2, _ = min_clearance(body, x2)
        if abs(v2 - r2) <= 1e-8 * max(1.0, size) and v2 >= best_r - 1e-8:
            best_x, best_r = x2, v2
    cert = _in_certificate(body, best_x, best_r)
    return best_x, best_r, cert


def _in_certificate(body, x, r):
    _, contacts = min_clearance(body, x)
    tol = max(1e-7, 1e-7 * abs(r))
    touch = []
    for th, v, kind, data in sorted(contacts, key=lambda c: c[1]):
        if v > r + tol:
            break
        if all(min((th - t) % TWO_PI, (t - th) % TWO_PI) > 1e-6
               for t, _ in touch):
            touch.append((th, v))
    normals = tuple(t for t, _ in touch)
    points = tuple((x[0] + r * math.cos(t), x[1] + r * math.sin(t))
                   for t in normals)
    margin = _origin_hull_margin([unit(t) for t in normals])
    if len(normals) == 2:
        # antipodal pair: margin should be ~0 from the gap formula
        margin = -abs(margin) if margin < 0 else margin
    return Certificate(points=points, normals=normals, hull_margin=margin)


# ---------------------------------------------------------------------------
# Circumball
# ---------------------------------------------------------------------------

def _far_generators(body):
    """Generators (point p, additive s) for the farthest-distance function."""
    gens = []
    seen = set()
    for e in body.elements:
        for p in (e.start, e.end):
            key = (round(p[0], 12), round(p[1], 12))
            if key not in seen:
                seen.add(key)
                gens.append((p, 0.0, None))
        if isinstance(e, Arc):
            gens.append((e.center, e.radius, e))
    return gens


def _far_value(gens, x):
    best = -math.inf
    for p, s, arc in gens:
        if arc is None:
            v = dist(x, p)
        else:
            d = dist(x, p)
            if d <= 1e-15:
                v = s
            else:
                th = angle_of(sub(p, x))
                if arc.contains_normal(th, tol=1e-12):
                    v = d + s
                else:
                    continue  # endpoints cover this arc
        if v > best:
            best = v
    return best


def _welzl(points, rng):
    """Minimum enclosing ball of points (move-to-front Welzl)."""
    pts = points[:]
    rng.shuffle(pts)

    def ball2(a, b):
        c = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
        return c, dist(a, b) / 2.0

    def ball3(a, b, c):
        ax, ay = a
        bx, by = b
        cx, cy = c
        d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
        if abs(d) < 1e-18:
            return None
        ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by)
              * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
        uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by)
              * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
        ctr = (ux, uy)
        return ctr, dist(ctr, a)

    def mb(ps, boundary):
        if len(boundary) == 3:
            return ball3(*boundary) or ((0.0, 0.0), math.inf)
        if not ps:
            if len(boundary) == 0:
                return ((0.0, 0.0), 0.0)
            if len(boundary) == 1:
                return (boundary[0], 0.0)
            return ball2(*boundary)
        c = None
        if len(boundary) == 2:
            c = ball2(*boundary)
        elif len(boundary) == 1 and ps:
            c = (boundary[0], 0.0)
        elif not boundary and ps:
            c = (ps[0], 0.0)
        for i, p in enumerate(ps):
            if c is None or dist(p, c[0]) > c[1] + 1e-12:
                c = mb(ps[:i], boundary + [p])
        return c

    import sys
    old = sys.getrecursionlimit()
    sys.setrecursionlimit(10000)
    try:
        return mb(pts, [])
    finally:
        sys.setrecursionlimit(old)


def circumball(body):
    """(circumcenter, circumradius, certificate)."""
    gens = _far_generators(body)
    # seed: minimum enclosing ball of endpoints and coarse arc samples
    seed_pts = [p for p, s, a in gens if a is None]
    for p, s, a in gens:
        if a is not None:
            k = max(2, int(a.sweep / 0.5))
            for i in range(k + 1):
                seed_pts.append(a.point_at(a.normal_start
                                           + a.sweep * i / k))
    rng = random.Random(20240817)
    x0, _ = _welzl(seed_pts, rng)

    def F(x):
        return _far_value(gens, x)

    size = max(1e-9, F(x0))
    x1, f1 = _nelder_mead(F, x0, 0.1 * size)
    best_x, best_r = tuple(x1), f1
    polished = _circumball_polish(gens, best_x, best_r)
    if polished is not None:
        x2, r2 = polished
        v2 = F(x2)
        if v2 <= best_r + 1e-9 and abs(v2 - r2) <= 1e-7 * max(1.0, size):
            best_x, best_r = x2, v2
    cert = _circum_certificate(body, gens, best_x, best_r)
    return best_x, best_r, cert


def _circumball_polish(gens, x0, r0):
    # active generators: (anchor a, additive s)
    active = []
    for p, s, arc in gens:
        if arc is None:
            v = dist(x0, p)
        else:
            th = angle_of(sub(p, x0)) if dist(p, x0) > 1e-15 else None
            if th is None or not arc.contains_normal(th, tol=1e-9):
                continue
            v = dist(x0, p) + s
        if v >= r0 - 1e-5:
            active.append((p, s))
    # dedupe anchors
    uniq = []
    for a, s in active:
        if all(dist(a, b) > 1e-9 or abs(s - t) > 1e-12 for b, t in uniq):
            uniq.append((a, s))
    active = uniq
    if len(active) == 1:
        a, s = active[0]
        if s > 0.0:
            return a, s
        return None

    def touch_dir(a, s, x):
        # direction from center to the touching boundary point
        if s == 0.0:
            d = sub(a, x)
        else:
            d = sub(a, x)  # farthest arc point lies beyond the center ray
        nd = norm(d)
        return (d[0] / nd, d[1] / nd) if nd > 1e-15 else (1.0, 0.0)

    if len(active) >= 3:
        import itertools
        best_triple, best_m = None, -math.inf
        for tri in itertools.combinations(active, 3):
            m = _origin_hull_margin([touch_dir(a, s, x0) for a, s in tri])
            if m > best_m:
                best_m, best_triple = m, tri
        if best_m > 1e-9:
            x = [x0[0], x0[1]]
            r = r0
            for _ in range(60):
                F, J = [], []
                for a, s in best_triple:
                    d = (x[0] - a[0], x[1] - a[1])
                    nd = norm(d)
                    if nd < 1e-15:
                        return None
                    F.append(nd + s - r)
                    J.append((d[0] / nd, d[1] / nd, -1.0))
                try:
                    dxv = _solve3(J, [-f for f in F])
                except ZeroDivisionError:
                    return None
                x[0] += dxv[0]
                x[1] += dxv[1]
                r += dxv[2]
                if max(abs(v) for v in dxv) < 1e-14:
                    break
            return (x[0], x[1]), r
    if len(active) >= 2:
        # best antipodal-ish pair
        import itertools
        best_pair, best_m = None, -math.inf
        for pair in itertools.combinations(active, 2):
            m = _origin_hull_margin([touch_dir(a, s, x0) for a, s in pair])
            if m > best_m:
                best_m, best_pair = m, pair
        (a1, s1), (a2, s2) = best_pair
        d = dist(a1, a2)
        if d < 1e-15:
            return None
        r = (d + s1 + s2) / 2.0
        t = (r - s1) / d
        x = (a1[0] + t * (a2[0] - a1[0]), a1[1] + t * (a2[1] - a1[1]))
        return x, r
    return None


def _circum_certificate(body, gens, x, r):
    tol = max(1e-7, 1e-7 * r)
    touch = []
    for p, s, arc in gens:
        if arc is None:
            v = dist(x, p)
            pt = p
        else:
            d = dist(x, p)
            if d <= tol:
                # center of the enclosing ball at the arc center: the arc
                # touches along its whole sweep; take representative points
                if abs(s - r) <= tol:
                    for th in (arc.normal_start,
                               arc.normal_start + arc.sweep / 2.0,
                               arc.normal_start + arc.sweep):
                        pt = arc.point_at(th)
                        if all(dist(pt, q) > 1e-9 for q in touch):
                            touch.append(pt)
                continue
            th = angle_of(sub(p, x))
            if not arc.contains_normal(th, tol=1e-9):
                continue
            v = d + s
            u = unit(th)
            pt = (p[0] + s * u[0], p[1] + s * u[1])
        if v >= r - tol:
            if all(dist(pt, q) > 1e-9 for q in touch):
                touch.append(pt)
    dirs = []
    for p in touch:
        d = sub(p, x)
        nd = norm(d)
        if nd > 1e-15:
            dirs.append((d[0] / nd, d[1] / nd))
    margin = _origin_hull_margin(dirs)
    normals = tuple(angle_of(sub(p, x)) for p in touch)
    return Certificate(points=tuple(touch), normals=normals,
                       hull_margin=margin)


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def compute_radii(body, certificates=True):
    """All four radii with attainment data and certificates.

    The returned values satisfy the universal inequality chain
    2r <= w <= min(2R, r + R) and max(w, sqrt(3) R, r + R) <= D <= 2R up to
    1e-9 relative tolerance; a violation indicates a malformed body and
    raises GeometryError.
    """
    w, wdir, D, pair = width_and_diameter(body)
    ix, ir, icert = inball(body)
    cx, cr, ccert = circumball(body)
    res = RadiiResult(
        inradius=ir, width=w, diameter=D, circumradius=cr,
        incenter=ix, circumcenter=cx, width_direction=wdir,
        diameter_pair=pair, in_certificate=icert, circum_certificate=ccert)
    _check_invariants(res)
    return res


def _check_invariants(res):
    r, w, D, R = res.as_tuple()
    s = max(R, 1e-12)
    tol = 1e-8 * s
    bad = []
    if not (2 * r <= w + tol):
        bad.append("2r <= w")
    if not (w <= 2 * R + tol):
        bad.append("w <= 2R")
    if not (w <= r + R + tol):
        bad.append("w <= r+R")
    if not (w <= D + tol):
        bad.append("w <= D")
    if not (D <= 2 * R + tol):
        bad.append("D <= 2R")
    if not (r + R <= D + tol):
        bad.append("r+R <= D")
    if not (math.sqrt(3.0) * R <= D + tol):
        bad.append("sqrt(3)R <= D")
    if bad:
        raise GeometryError("radii invariants violated: " + ", ".join(bad))


def verify_certificates(body, result, tol=1e-7):
    """Independent certificate check via the support function.

    Returns a dict with boolean ``valid`` plus per-ball diagnostics.  The
    inball certificate requires every touching normal's supporting line at
    distance exactly r from the incenter and the origin inside the hull of
    the normals; the circumball certificate requires touching points at
    distance exactly R with the center inside their hull.
    """
    report = {"valid": True, "inball": {}, "circumball": {}}
    scale_ref = max(1.0, result.circumradius)
    icert = result.in_certificate
    if icert is not None:
        errs = []
        for th in icert.normals:
            h, _ = support(body, th)
            errs.append(abs(h - (dot(result.incenter, unit(th))
                                 + result.inradius)))
        ok = (max(errs, default=0.0) <= tol * scale_ref
              and icert.hull_margin >= -tol
              and len(icert.normals) >= 2)
        report["inball"] = {"touch_errors": errs,
                            "hull_margin": icert.hull_margin, "ok": ok}
        report["valid"] = report["valid"] and ok
    elif not body.degenerate:
        report["valid"] = False
        report["inball"] = {"ok": False, "reason": "missing certificate"}
    ccert = result.circum_certificate
    if ccert is not None:
        errs = []
        for p in ccert.points:
            errs.append(abs(dist(p, result.circumcenter)
                            - result.circumradius))
            # the touching point must lie on the boundary: its support
            # plane value matches
            th = angle_of(sub(p, result.circumcenter))
            h, _ = support(body, th)
            errs.append(abs(h - dot(p, unit(th))))
        ok = (max(errs, default=0.0) <= tol * scale_ref
              and ccert.hull_margin >= -tol
              and len(ccert.points) >= 2)
        report["circumball"] = {"touch_errors": errs,
                                "hull_margin": ccert.hull_margin, "ok": ok}
        report["valid"] = report["valid"] and ok
    else:
        report["valid"] = False
        report["circumball"] = {"ok": False, "reason": "missing certificate"}
    return report
