"""Planar convex bodies with piecewise segment/arc boundaries.

A body is a closed convex region whose boundary is a counterclockwise chain
of straight segments and outward-bulging circular arcs.  Arcs are stored by
their center, radius and the interval of outward normal angles they cover,
so the boundary point of an arc at normal direction u is center + radius*u.
Convexity is equivalent to the outward normal angle being non-decreasing
along the chain with total turn 2*pi.

All coordinates are plain float tuples; the kernel is exact up to floating
point rounding and never falls back to angle sampling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi

# Geometric tolerance for validation and clipping decisions.
TOL_GEOM = 1e-9
# Angular tolerance used when merging normal-angle breakpoints.
TOL_ANGLE = 1e-12


class GeometryError(ValueError):
    """Raised for malformed bodies or unusable constructions."""


def unit(theta):
    """Unit vector at angle theta."""
    return (math.cos(theta), math.sin(theta))


def wrap(theta):
    """Wrap an angle into [0, 2*pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:
        t = 0.0
    return t


def angle_of(v):
    """Angle of a nonzero vector, in [0, 2*pi)."""
    return wrap(math.atan2(v[1], v[0]))


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def norm(v):
    return math.hypot(v[0], v[1])


def dist(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])


@dataclass(frozen=True)
class Segment:
    """Straight boundary piece from a to b (counterclockwise order)."""

    a: tuple
    b: tuple

    @property
    def normal_angle(self):
        """Angle of the outward normal (rotate direction by -90 degrees)."""
        t = sub(self.b, self.a)
        return angle_of((t[1], -t[0]))

    @property
    def start(self):
        return self.a

    @property
    def end(self):
        return self.b


@dataclass(frozen=True)
class Arc:
    """Outward circular boundary piece covering normals
    [normal_start, normal_start + sweep] counterclockwise.

    The positive sweep is (normal_end - normal_start) mod 2*pi; a full
    circle is a single arc with sweep exactly 2*pi (normal_end equal to
    normal_start + 2*pi, seam at the start angle).
    """

    center: tuple
    radius: float
    normal_start: float
    normal_end: float

    @property
    def sweep(self):
        s = (self.normal_end - self.normal_start) % TWO_PI
        if s < TOL_ANGLE:
            s = TWO_PI
        return s

    def point_at(self, theta):
        u = unit(theta)
        return (self.center[0] + self.radius * u[0],
                self.center[1] + self.radius * u[1])

    @property
    def start(self):
        return self.point_at(self.normal_start)

    @property
    def end(self):
        return self.point_at(self.normal_end)

    def contains_normal(self, theta, tol=TOL_ANGLE):
        return (theta - self.normal_start) % TWO_PI <= self.sweep + tol


@dataclass(frozen=True)
class ArcPolygon:
    """Convex body bounded by a counterclockwise chain of elements.

    ``degenerate`` flags one-dimensional bodies (a straight segment traced
    forward and back), which have empty interior and inradius 0.
    """

    elements: tuple
    degenerate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))


def body_from_points(points, degenerate_ok=True):
    """Polygonal body from counterclockwise-listed vertices (convex input).

    Two points yield the degenerate segment body when allowed.
    """
    pts = [tuple(map(float, p)) for p in points]
    if len(pts) == 2:
        if not degenerate_ok:
            raise GeometryError("two points only span a degenerate body")
        return ArcPolygon(
            (Segment(pts[0], pts[1]), Segment(pts[1], pts[0])),
            degenerate=True,
        )
    if len(pts) < 3:
        raise GeometryError("need at least two points")
    elems = []
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        if dist(a, b) <= TOL_GEOM:
            continue
        elems.append(Segment(a, b))
    if len(elems) < 3:
        raise GeometryError("points are not in general position")
    return ArcPolygon(tuple(elems))


def disk(center, radius):
    """Full disk as a single 2*pi arc with seam at angle 0."""
    if radius <= TOL_GEOM:
        raise GeometryError("disk radius must be positive")
    return ArcPolygon((Arc(tuple(center), float(radius), 0.0, TWO_PI),))


def segment_body(a, b):
    """Degenerate body consisting of the segment [a, b]."""
    return body_from_points([a, b])


def _element_normal_span(elem):
    """(start_normal, end_normal_unwrapped_forward) of an element."""
    if isinstance(elem, Segment):
        t = elem.normal_angle
        return t, t
    s = wrap(elem.normal_start)
    return s, s + elem.sweep


def validate(body, tol=TOL_GEOM):
    """Check chain closure, normal monotonicity and total turn 2*pi.

    Raises GeometryError with a specific reason on the first violation.
    """
    elems = body.elements
    if not elems:
        raise GeometryError("empty element chain")
    for e in elems:
        if isinstance(e, Segment):
            for p in (e.a, e.b):
                if not (math.isfinite(p[0]) and math.isfinite(p[1])):
                    raise GeometryError("non-finite coordinate")
            if dist(e.a, e.b) <= tol:
                raise GeometryError("zero-length segment")
        elif isinstance(e, Arc):
            if not (math.isfinite(e.center[0]) and math.isfinite(e.center[1])
                    and math.isfinite(e.radius)):
                raise GeometryError("non-finite coordinate")
            if e.radius <= tol:
                raise GeometryError("non-positive arc radius")
        else:
            raise GeometryError("unknown element type %r" % (e,))
    scale_ref = max(1.0, max(norm(e.start) for e in elems))
    # Chain closure.
    n = len(elems)
    for i in range(n):
        p, q = elems[i].end, elems[(i + 1) % n].start
        if dist(p, q) > 1e4 * tol * scale_ref:
            raise GeometryError(
                "chain not closed between element %d and %d (gap %.3e)"
                % (i, (i + 1) % n, dist(p, q)))
    # Normal monotonicity and total turn.
    total = 0.0
    for i in range(n):
        s_i, e_i = _element_normal_span(elems[i])
        total += e_i - s_i
        s_next, _ = _element_normal_span(elems[(i + 1) % n])
        turn = (s_next - e_i) % TWO_PI
        if turn > TWO_PI - 1e-9:
            turn -= TWO_PI  # tiny negative turn from rounding
        if turn < -1e-6:
            raise GeometryError("normal angle decreases at junction %d" % i)
        total += max(turn, 0.0)
    if abs(total - TWO_PI) > 1e-6:
        raise GeometryError(
            "total normal turn is %.12f, expected 2*pi" % total)
    if body.degenerate:
        if any(isinstance(e, Arc) for e in elems):
            raise GeometryError("degenerate body cannot contain arcs")
    return True


# ---------------------------------------------------------------------------
# Support machinery
# ---------------------------------------------------------------------------

def support(body, theta):
    """Support value and an attaining boundary point in direction theta.

    Returns (h, point) with h = max_{x in body} <x, u(theta)>.
    """
    u = unit(theta)
    best = -math.inf
    best_p = None
    for e in body.elements:
        if isinstance(e, Segment):
            for p in (e.a, e.b):
                v = dot(p, u)
                if v > best:
                    best, best_p = v, p
        else:
            if e.contains_normal(theta, tol=1e-12):
                p = e.point_at(theta)
                v = dot(e.center, u) + e.radius
                if v > best:
                    best, best_p = v, p
            else:
                for p in (e.start, e.end):
                    v = dot(p, u)
                    if v > best:
                        best, best_p = v, p
    return best, best_p


def breadth(body, theta):
    """Distance between the two supporting lines orthogonal to u(theta)."""
    h1, _ = support(body, theta)
    h2, _ = support(body, theta + math.pi)
    return h1 + h2


def pieces(body):
    """Decompose the normal circle into generator pieces.

    Returns a list of (t0, t1, point, rho) with t1 >= t0 covering one full
    turn: on normal angles in [t0, t1] the support is <point, u> + rho,
    where rho > 0 marks an arc (point is its center) and rho = 0 a vertex.
    Segments separate pieces but have zero normal measure themselves.
    """
    elems = body.elements
    out = []
    n = len(elems)
    s0, _ = _element_normal_span(elems[0])
    cursor = s0
    for i in range(n):
        e = elems[i]
        s_i, e_i = _element_normal_span(e)
        if isinstance(e, Arc):
            out.append((cursor, cursor + e.sweep, e.center, e.radius))
            cursor += e.sweep
        # vertex cone between e and the next element
        s_next, _ = _element_normal_span(elems[(i + 1) % n])
        turn = (s_next - e_i) % TWO_PI
        if turn > TWO_PI - 1e-9:
            turn = 0.0
        if turn > TOL_ANGLE:
            out.append((cursor, cursor + turn, e.end, 0.0))
            cursor += turn
    return out


def piece_at(body_pieces, theta):
    """Generator piece active at normal angle theta (boundaries arbitrary)."""
    for t0, t1, p, rho in body_pieces:
        if (theta - t0) % TWO_PI <= (t1 - t0) + 1e-9:
            return (t0, t1, p, rho)
    # numerical fallback: nearest piece boundary
    best = min(body_pieces, key=lambda pc: min(
        (theta - pc[0]) % TWO_PI, (pc[0] - theta) % TWO_PI))
    return best


def normal_events(body):
    """Sorted distinct normal angles where the support generator changes."""
    angs = []
    for e in body.elements:
        s, t = _element_normal_span(e)
        angs.append(wrap(s))
        angs.append(wrap(t))
    angs.sort()
    out = []
    for a in angs:
        if not out or a - out[-1] > TOL_ANGLE:
            out.append(a)
    if out and (out[0] + TWO_PI) - out[-1] <= TOL_ANGLE:
        out.pop()
    return out


def _segment_vector_at(body, theta):
    """Summed edge vector of segments whose outward normal is theta."""
    vx = vy = 0.0
    for e in body.elements:
        if isinstance(e, Segment):
            d = (theta - e.normal_angle) % TWO_PI
            if d <= 1e-9 or d >= TWO_PI - 1e-9:
                vx += e.b[0] - e.a[0]
                vy += e.b[1] - e.a[1]
    return (vx, vy)


def _generator_point(piece, theta):
    """Boundary point of a generator piece at normal angle theta."""
    _, _, p, rho = piece
    if rho == 0.0:
        return p
    u = unit(theta)
    return (p[0] + rho * u[0], p[1] + rho * u[1])


def minkowski_sum(body_a, body_b):
    """Minkowski sum of two bodies via merged normal decompositions."""
    pa, pb = pieces(body_a), pieces(body_b)
    events = sorted(set(
        wrap(t) for t0, t1, _, _ in pa + pb for t in (t0, t1)
    ) | set(
        e.normal_angle for bd in (body_a, body_b) for e in bd.elements
        if isinstance(e, Segment)))
    merged = [events[0]]
    for a in events[1:]:
        if a - merged[-1] > TOL_ANGLE:
            merged.append(a)
    if (merged[0] + TWO_PI) - merged[-1] <= TOL_ANGLE and len(merged) > 1:
        merged.pop()
    m = len(merged)
    elems = []
    for k in range(m):
        t_line = merged[k]
        t_next = merged[(k + 1) % m]
        span = (t_next - t_line) % TWO_PI
        if m == 1:
            span = TWO_PI
        # segment contribution exactly at t_line
        sv_a = _segment_vector_at(body_a, t_line)
        sv_b = _segment_vector_at(body_b, t_line)
        sv = (sv_a[0] + sv_b[0], sv_a[1] + sv_b[1])
        if norm(sv) > TOL_GEOM:
            ga = piece_at(pa, t_line - 1e-10)
            gb = piece_at(pb, t_line - 1e-10)
            start = add(_generator_point(ga, t_line),
                        _generator_point(gb, t_line))
            elems.append(Segment(start, add(start, sv)))
        if span <= TOL_ANGLE:
            continue
        mid = t_line + span / 2.0
        ga = piece_at(pa, mid)
        gb = piece_at(pb, mid)
        rho = ga[3] + gb[3]
        if rho > TOL_GEOM:
            center = add(ga[2], gb[2])
            elems.append(Arc(center, rho, wrap(t_line),
                             wrap(t_line) + span))
    if not elems:
        raise GeometryError("empty Minkowski sum result")
    degenerate = body_a.degenerate and body_b.degenerate and not any(
        isinstance(e, Arc) for e in elems)
    return ArcPolygon(tuple(elems), degenerate=degenerate)


def support_along(body_a, body_b, theta):
    """Support of the Minkowski sum without forming it."""
    h1, p1 = support(body_a, theta)
    h2, p2 = support(body_b, theta)
    return h1 + h2, add(p1, p2)


# ---------------------------------------------------------------------------
# Affine maps
# ---------------------------------------------------------------------------

def translate(body, v):
    elems = []
    for e in body.elements:
        if isinstance(e, Segment):
            elems.append(Segment(add(e.a, v), add(e.b, v)))
        else:
            elems.append(Arc(add(e.center, v), e.radius,
                             e.normal_start, e.normal_end))
    return ArcPolygon(tuple(elems), degenerate=body.degenerate)


def scale(body, factor, center=(0.0, 0.0)):
    """Homothety with positive ratio about the given center."""
    if factor <= 0.0:
        raise GeometryError("scale factor must be positive")

    def mp(p):
        return (center[0] + factor * (p[0] - center[0]),
                center[1] + factor * (p[1] - center[1]))

    elems = []
    for e in body.elements:
        if isinstance(e, Segment):
            elems.append(Segment(mp(e.a), mp(e.b)))
        else:
            elems.append(Arc(mp(e.center), factor * e.radius,
                             e.normal_start, e.normal_end))
    return ArcPolygon(tuple(elems), degenerate=body.degenerate)


def rotate(body, angle, center=(0.0, 0.0)):
    c, s = math.cos(angle), math.sin(angle)

    def mp(p):
        x, y = p[0] - center[0], p[1] - center[1]
        return (center[0] + c * x - s * y, center[1] + s * x + c * y)

    elems = []
    for e in body.elements:
        if isinstance(e, Segment):
            elems.append(Segment(mp(e.a), mp(e.b)))
        else:
            ns = e.normal_start + angle
            elems.append(Arc(mp(e.center), e.radius, ns, ns + e.sweep))
    return ArcPolygon(tuple(elems), degenerate=body.degenerate)


# ---------------------------------------------------------------------------
# Halfplane clipping
# ---------------------------------------------------------------------------

def clip_halfplane(body, normal_angle, offset, tol=TOL_GEOM):
    """Intersect the body with {x : <x, u(normal_angle)> <= offset}.

    The cutting line must pass through the interior: clipping that removes
    nothing, or everything, or leaves a degenerate sliver raises.
    """
    if body.degenerate:
        raise GeometryError("cannot clip a degenerate body")
    u = unit(normal_angle)

    def sd(p):
        return dot(p, u) - offset

    kept = []  # kept (sub)elements in chain order
    removed_any = False
    for e in body.elements:
        if isinstance(e, Segment):
            da, db = sd(e.a), sd(e.b)
            if da <= tol and db <= tol:
                kept.append(e)
                continue
            removed_any = True
            if da >= -tol and db >= -tol:
                continue
            t = da / (da - db)
            x = (e.a[0] + t * (e.b[0] - e.a[0]),
                 e.a[1] + t * (e.b[1] - e.a[1]))
            if da < -tol:
                kept.append(Segment(e.a, x))
            else:
                kept.append(Segment(x, e.b))
        else:
            kept_sub, cut = _clip_arc(e, u, offset, normal_angle, tol)
            removed_any = removed_any or cut
            kept.extend(kept_sub)
    if not removed_any:
        raise GeometryError("clip line does not intersect the body interior")
    if not kept:
        raise GeometryError("clip removes the entire body")
    # Find the single gap in the kept chain and bridge it with the chord.
    n = len(kept)
    gaps = [i for i in range(n)
            if dist(kept[i].end, kept[(i + 1) % n].start) > 1e3 * tol]
    if len(gaps) != 1:
        raise GeometryError("clip produced %d chain gaps" % len(gaps))
    g = gaps[0]
    chord = Segment(kept[g].end, kept[(g + 1) % n].start)
    if dist(chord.a, chord.b) <= 10 * tol:
        raise GeometryError("clip leaves a degenerate junction")
    order = kept[:g + 1] + [chord] + kept[g + 1:]
    out = ArcPolygon(tuple(order))
    validate(out)
    return out


def _clip_arc(arc, u, offset, normal_angle, tol):
    """Kept subarcs of one arc under <x,u> <= offset; returns (subs, cut)."""
    cdot = dot(arc.center, u)
    rhs = (offset - cdot) / arc.radius
    s = arc.normal_start
    sweep = arc.sweep

    def sd_at(phi):
        return cdot + arc.radius * math.cos(phi - normal_angle) - offset

    if rhs >= 1.0 - 1e-15:
        return [arc], False
    if rhs <= -1.0 + 1e-15:
        return [], True
    psi = math.acos(rhs)
    # kept normals phi satisfy (phi - normal_angle) mod 2pi in [psi, 2pi-psi]
    lo = normal_angle + psi
    hi = normal_angle + TWO_PI - psi
    # Intersect [lo, hi] (mod 2pi) with the arc's [s, s + sweep].
    subs = []
    cut = False
    # shift lo near s
    base = s + (lo - s) % TWO_PI
    for k in (-1, 0):
        a0 = base + k * TWO_PI
        a1 = a0 + (hi - lo)
        t0, t1 = max(a0, s), min(a1, s + sweep)
        if t1 - t0 > 1e-12:
            subs.append(Arc(arc.center, arc.radius, t0, t1))
    kept_measure = sum(a.sweep for a in subs)
    if kept_measure < sweep - 1e-12:
        cut = True
    if not cut:
        return [arc], False
    # order the subarcs along the original sweep
    subs.sort(key=lambda a: (a.normal_start - s) % TWO_PI)
    return subs, True


# ---------------------------------------------------------------------------
# Hulls and disk intersections
# ---------------------------------------------------------------------------

def hull_points_disks(points, disks=(), tol=TOL_GEOM):
    """Convex hull of points and closed disks as an arc polygon.

    ``disks`` is an iterable of ((x, y), radius).  Needs either one disk or
    enough points to span an interior; two points alone give the degenerate
    segment body.
    """
    gens = [((float(p[0]), float(p[1])), 0.0) for p in points]
    gens += [((float(c[0]), float(c[1])), float(r)) for c, r in disks]
    # prune duplicates and dominated point generators
    pruned = []
    for c, r in gens:
        keep = True
        for c2, r2 in gens:
            if (c2, r2) == (c, r):
                continue
            if r2 >= r and dist(c, c2) <= r2 - r + 1e-15:
                # strictly inside another disk
                if (r2 > r + 1e-15 or dist(c, c2) > 1e-15
                        or gens.index((c2, r2)) < gens.index((c, r))):
                    keep = False
                    break
        if keep:
            pruned.append((c, r))
    gens = pruned
    if not gens:
        raise GeometryError("no generators")
    if len(gens) == 1:
        c, r = gens[0]
        if r <= tol:
            raise GeometryError("hull of a single point is degenerate")
        return disk(c, r)

    def g(i, theta):
        c, r = gens[i]
        return c[0] * math.cos(theta) + c[1] * math.sin(theta) + r

    # candidate breakpoints: pairwise support crossings
    cand = [0.0]
    n = len(gens)
    for i in range(n):
        for j in range(i + 1, n):
            (ci, ri), (cj, rj) = gens[i], gens[j]
            ax, ay = ci[0] - cj[0], ci[1] - cj[1]
            c0 = rj - ri
            nn = math.hypot(ax, ay)
            if nn <= 1e-15:
                continue
            if abs(c0) <= nn:
                base = math.atan2(ay, ax)
                d = math.acos(max(-1.0, min(1.0, c0 / nn)))
                cand.append(wrap(base + d))
                cand.append(wrap(base - d))
    cand = sorted(set(cand))
    merged = [cand[0]]
    for a in cand[1:]:
        if a - merged[-1] > 1e-12:
            merged.append(a)
    if len(merged) > 1 and (merged[0] + TWO_PI) - merged[-1] <= 1e-12:
        merged.pop()
    # active generator per interval
    m = len(merged)
    intervals = []  # (t0, t1, gen index)
    for k in range(m):
        t0 = merged[k]
        t1 = merged[(k + 1) % m]
        span = (t1 - t0) % TWO_PI if m > 1 else TWO_PI
        if span <= 1e-12:
            continue
        mid = t0 + span / 2.0
        vals = [g(i, mid) for i in range(n)]
        intervals.append((t0, t0 + span, max(range(n), key=vals.__getitem__)))
    # merge consecutive intervals of the same generator
    merged_iv = []
    for iv in intervals:
        if merged_iv and merged_iv[-1][2] == iv[2] and \
                abs(wrap(merged_iv[-1][1]) - wrap(iv[0])) <= 1e-12:
            merged_iv[-1] = (merged_iv[-1][0], merged_iv[-1][1]
                             + (iv[1] - iv[0]), iv[2])
        else:
            merged_iv.append((iv[0], iv[1], iv[2]))
    if len(merged_iv) > 1 and merged_iv[0][2] == merged_iv[-1][2]:
        first = merged_iv.pop(0)
        last = merged_iv.pop()
        merged_iv.append((last[0], last[1] + (first[1] - first[0]),
                          last[2]))
    if len(merged_iv) == 1:
        c, r = gens[merged_iv[0][2]]
        if r <= tol:
            raise GeometryError("hull is a single point")
        return disk(c, r)
    elems = []
    k_iv = len(merged_iv)
    for k in range(k_iv):
        t0, t1, i = merged_iv[k]
        c, r = gens[i]
        if r > tol and t1 - t0 > 1e-12:
            elems.append(Arc(c, r, t0, t1))
        # transition to next interval
        t0n, _, jn = merged_iv[(k + 1) % k_iv]
        cj, rj = gens[jn]
        th = t1  # == t0n mod 2pi
        p_i = (c[0] + r * math.cos(th), c[1] + r * math.sin(th))
        p_j = (cj[0] + rj * math.cos(th), cj[1] + rj * math.sin(th))
        if dist(p_i, p_j) > tol:
            elems.append(Segment(p_i, p_j))
    if not elems:
        raise GeometryError("hull construction collapsed")
    if all(isinstance(e, Segment) for e in elems) and len(elems) == 2:
        return ArcPolygon(tuple(elems), degenerate=True)
    out = ArcPolygon(tuple(elems))
    validate(out)
    return out


def disk_intersection(centers, radius, tol=TOL_GEOM):
    """Intersection of two or three equal-radius disks as an arc polygon."""
    cs = [tuple(map(float, c)) for c in centers]
    rho = float(radius)
    if len(cs) == 1:
        return disk(cs[0], rho)
    verts = []
    n = len(cs)
    for i in range(n):
        for j in range(i + 1, n):
            d = dist(cs[i], cs[j])
            if d >= 2 * rho - 1e-15 or d <= 1e-15:
                continue
            mid = ((cs[i][0] + cs[j][0]) / 2, (cs[i][1] + cs[j][1]) / 2)
            h = math.sqrt(max(rho * rho - (d / 2) ** 2, 0.0))
            ux, uy = (cs[j][0] - cs[i][0]) / d, (cs[j][1] - cs[i][1]) / d
            for sgn in (+1.0, -1.0):
                p = (mid[0] - sgn * h * uy, mid[1] + sgn * h * ux)
                if all(dist(p, c) <= rho + 1e-9 for c in cs):
                    verts.append(p)
    # dedupe
    uniq = []
    for p in verts:
        if all(dist(p, q) > 1e-9 for q in uniq):
            uniq.append(p)
    if len(uniq) < 2:
        raise GeometryError("disk intersection has empty interior")
    cx = sum(p[0] for p in uniq) / len(uniq)
    cy = sum(p[1] for p in uniq) / len(uniq)
    uniq.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    elems = []
    k = len(uniq)
    for i in range(k):
        a, b = uniq[i], uniq[(i + 1) % k]
        placed = False
        for c in cs:
            if abs(dist(a, c) - rho) > 1e-9 or abs(dist(b, c) - rho) > 1e-9:
                continue
            ns = angle_of(sub(a, c))
            ne = angle_of(sub(b, c))
            sweep = (ne - ns) % TWO_PI
            if sweep >= math.pi - 1e-9 or sweep <= 1e-12:
                continue
            midp = (c[0] + rho * math.cos(ns + sweep / 2),
                    c[1] + rho * math.sin(ns + sweep / 2))
            if all(dist(midp, c2) <= rho + 1e-9 for c2 in cs):
                elems.append(Arc(c, rho, ns, ns + sweep))
                placed = True
                break
        if not placed:
            raise GeometryError("disk intersection boundary mismatch")
    out = ArcPolygon(tuple(elems))
    validate(out)
    return out


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def body_to_dict(body):
    elems = []
    for e in body.elements:
        if isinstance(e, Segment):
            elems.append({"type": "segment",
                          "a": [e.a[0], e.a[1]], "b": [e.b[0], e.b[1]]})
        else:
            elems.append({"type": "arc",
                          "center": [e.center[0], e.center[1]],
                          "radius": e.radius,
                          "normal_start": e.normal_start,
                          "normal_end": e.normal_end})
    return {"degenerate": bool(body.degenerate), "elements": elems}


def body_from_dict(data):
    elems = []
    for d in data["elements"]:
        if d["type"] == "segment":
            elems.append(Segment(tuple(map(float, d["a"])),
                                 tuple(map(float, d["b"]))))
        elif d["type"] == "arc":
            elems.append(Arc(tuple(map(float, d["center"])),
                             float(d["radius"]),
                             float(d["normal_start"]),
                             float(d["normal_end"])))
        else:
            raise GeometryError("unknown element type %r" % d.get("type"))
    return ArcPolygon(tuple(elems), degenerate=bool(data.get("degenerate")))


def dump_body(body, fp):
    json.dump(body_to_dict(body), fp, indent=2)


def load_body(fp):
    return body_from_dict(json.load(fp))
