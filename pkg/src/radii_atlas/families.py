"""Named families of extremal convex bodies.

Every constructor returns a body normalized to circumradius 1 with
circumcenter at the origin.  The ten extreme shapes of the diagram are the
fixed bodies; the parametric families fill the edges and facets between
them.  Closed-form radii are provided wherever they exist so constructions
can be cross-checked against the kernel.

Shorthand used in identifiers (all bodies live inside the unit circle S):
``eqt`` equilateral triangle, ``ret`` Reuleaux triangle, ``rat``
right-angled isosceles triangle, ``sb`` sailing boat (circle cut by a
right-angled isosceles wedge), ``srt`` sliced Reuleaux triangle, ``frt``
flattened Reuleaux triangle, ``bt`` bent trapezoid, ``hood`` the hood
(two parallel cuts of an isosceles Reuleaux-like set).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import (
    TWO_PI,
    Arc,
    ArcPolygon,
    GeometryError,
    Segment,
    add,
    angle_of,
    body_from_points,
    clip_halfplane,
    disk,
    disk_intersection,
    dist,
    dot,
    hull_points_disks,
    minkowski_sum,
    norm,
    scale,
    segment_body,
    sub,
    unit,
    validate,
    wrap,
)

SQRT3 = math.sqrt(3.0)

# canonical equilateral triangle vertices on the unit circle
P1 = (0.0, 1.0)
P2 = (-SQRT3 / 2.0, -0.5)
P3 = (SQRT3 / 2.0, -0.5)

R_EQT = 0.5
R_RET = SQRT3 - 1.0
R_FRT = 3.0 * SQRT3 / 8.0
R_RAT = math.sqrt(2.0) - 1.0
R_SB = 1.0 / math.sqrt(2.0)

GAMMA_BT = math.asin(0.75)


class FamilyError(GeometryError):
    """Raised for parameters outside a family's validity region."""


@dataclass(frozen=True)
class FamilySpec:
    """A family name with its parameter assignment.

    ``inner`` carries the nested spec for the rounded family.
    """

    name: str
    params: dict = field(default_factory=dict)
    inner: "FamilySpec | None" = None

    def describe(self):
        s = self.name
        items = []
        if self.inner is not None:
            items.append("inner=" + self.inner.describe())
        items += ["%s=%.12g" % (k, v) for k, v in sorted(self.params.items())]
        if items:
            s += ":" + ",".join(items)
        return s


@dataclass(frozen=True)
class ExpectedRadii:
    """Closed-form radii where available (None: no closed form)."""

    inradius: float | None
    width: float | None
    diameter: float | None
    circumradius: float | None


def _tangent_normals(point, center, rho):
    """Outward normals u of the two lines through ``point`` tangent to the
    circle (center, rho), oriented so the disk lies on the kept side
    {x : <x,u> <= <point,u>}."""
    v = sub(point, center)
    d = norm(v)
    if d < rho - 1e-12:
        raise FamilyError("tangent point inside the circle")
    d = max(d, rho)
    c = rho / d
    s = math.sqrt(max(1.0 - c * c, 0.0))
    ux, uy = v[0] / d, v[1] / d
    out = []
    for sgn in (+1.0, -1.0):
        u = (c * ux - sgn * s * uy, c * uy + sgn * s * ux)
        out.append(u)
    return out


def _line_angle_to(u, direction):
    """Undirected angle between the line with normal u and a direction."""
    d = (-u[1], u[0])
    c = abs(d[0] * direction[0] + d[1] * direction[1]) / max(
        norm(direction), 1e-15)
    return math.acos(min(1.0, c))


def _clip_if_cuts(body, normal_angle, offset):
    """Clip, quietly skipping tangent or non-intersecting halfplanes."""
    try:
        return clip_halfplane(body, normal_angle, offset)
    except GeometryError:
        return body


# ---------------------------------------------------------------------------
# Fixed extreme bodies
# ---------------------------------------------------------------------------

def ball():
    return disk((0.0, 0.0), 1.0)


def segment():
    return segment_body((-1.0, 0.0), (1.0, 0.0))


def eqt():
    return body_from_points([P3, P1, P2])


def ret():
    return disk_intersection([P1, P2, P3], SQRT3)


def rat():
    return body_from_points([(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)])


def sb():
    """Circle clipped to a right-angled isosceles wedge (sailing boat)."""
    b = ball()
    o = 1.0 / math.sqrt(2.0)
    b = clip_halfplane(b, math.atan2(o, o), o)
    b = clip_halfplane(b, math.atan2(o, -o), o)
    b = clip_halfplane(b, 3.0 * math.pi / 2.0, o)
    return b


def frt():
    """Reuleaux triangle with its bottom bulge flattened to a chord."""
    return clip_halfplane(ret(), 3.0 * math.pi / 2.0, 0.5)


def srt():
    return slirt(R_RET)


def bt():
    return btrap(GAMMA_BT)


def hood_inradius():
    """Root of (r+1)^2 = (sqrt(1-r^2)+1)^2 + r^2 on (0, 1)."""
    def f(r):
        return (r + 1.0) ** 2 - (math.sqrt(1.0 - r * r) + 1.0) ** 2 - r * r

    lo, hi = 0.5, 0.999
    flo = f(lo)
    for _ in range(200):
        mid = (lo + hi) / 2.0
        fm = f(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2.0


R_HOOD = hood_inradius()


def hood_vertex():
    d = 1.0 + R_HOOD
    return hood(2.0 * math.acos(d / 2.0))


# ---------------------------------------------------------------------------
# Edge families
# ---------------------------------------------------------------------------

def iso(gamma):
    """Isosceles triangle inscribed in S with apex angle gamma in (0, pi/2].

    For gamma <= pi/3 the two equal edges realize the diameter; for larger
    gamma the base does.  gamma = 0 degenerates to the segment body.
    """
    if not 0.0 <= gamma <= math.pi / 2.0 + 1e-12:
        raise FamilyError("iso: gamma must lie in [0, pi/2]")
    if gamma <= 1e-12:
        return segment_body((0.0, 1.0), (0.0, -1.0))
    apex = (0.0, 1.0)
    q1 = unit(3.0 * math.pi / 2.0 - gamma)
    q2 = unit(3.0 * math.pi / 2.0 + gamma)
    return body_from_points([apex, q1, q2])


def rect(r):
    """Right triangle inscribed with hypotenuse on a diameter (D = 2R)."""
    if not -1e-12 <= r <= R_RAT + 1e-12:
        raise FamilyError("rect: r must lie in [0, sqrt(2)-1]")
    if r <= 1e-12:
        return segment()

    def inr(t):
        p = unit(t)
        a = dist(p, (-1.0, 0.0))
        b = dist(p, (1.0, 0.0))
        return (a + b - 2.0) / 2.0

    lo, hi = 1e-9, math.pi / 2.0
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if inr(mid) < r:
            lo = mid
        else:
            hi = mid
    t = (lo + hi) / 2.0
    return body_from_points([(1.0, 0.0), unit(t), (-1.0, 0.0)])


def _ncreb_shift(r):
    """Maximal upward shift of the inball for the non-concentric blossoms."""
    if r < R_FRT:
        return r - 0.5
    return -0.5 + math.sqrt(max((SQRT3 - r) ** 2 - 0.75, 0.0))


def ncreb(r, t=0.0):
    """Reuleaux blossom with inball shifted toward the top vertex.

    t = 0 is the concentric blossom (ub1 edge at this inradius); t = 1
    shifts until the inball touches the chord [P2, P3] (small r) or both
    top arcs (large r).
    """
    if not R_EQT - 1e-12 <= r <= R_RET + 1e-12:
        raise FamilyError("ncreb: r must lie in [1/2, sqrt(3)-1]")
    if not -1e-12 <= t <= 1.0 + 1e-12:
        raise FamilyError("ncreb: t must lie in [0, 1]")
    vy = max(0.0, min(1.0, t)) * _ncreb_shift(min(max(r, R_EQT), R_RET))
    body = ret()
    # tangent lines to the shifted inball at the equilateral normals
    for th, off in ((3.0 * math.pi / 2.0, r - vy),
                    (math.pi / 6.0, r + vy / 2.0),
                    (5.0 * math.pi / 6.0, r + vy / 2.0)):
        body = _clip_if_cuts(body, th, off)
    return body


def reb(r):
    """Concentric Reuleaux blossom: scaled triangle meet Reuleaux triangle."""
    return ncreb(r, 0.0)


def yamanouti(r):
    """Hull of the equilateral triangle and the meet of three disks of
    radius r + 1 around its vertices."""
    if not R_EQT - 1e-12 <= r <= R_RET + 1e-12:
        raise FamilyError("yamanouti: r must lie in [1/2, sqrt(3)-1]")
    s = r + 1.0
    if s >= SQRT3 - 1e-9:
        return ret()
    verts = [P1, P2, P3]
    elems = []
    sigma = math.acos(s / SQRT3)
    for i in range(3):
        a = verts[i]
        b = verts[(i + 1) % 3]
        c = verts[(i + 2) % 3]  # arc center bulging over edge [a, b]

        def tangent_point(p):
            v = sub(p, c)
            base = angle_of(v)
            return [(c[0] + s * math.cos(base + sg * sigma),
                     c[1] + s * math.sin(base + sg * sigma))
                    for sg in (+1.0, -1.0)]

        ta_cands = tangent_point(a)
        tb_cands = tangent_point(b)
        # choose tangent points on the outward side of edge [a, b]
        mid_out = angle_of(sub(((a[0] + b[0]) / 2, (a[1] + b[1]) / 2), c))

        def pick(cands):
            return min(cands, key=lambda p: min(
                (angle_of(sub(p, c)) - mid_out) % TWO_PI,
                (mid_out - angle_of(sub(p, c))) % TWO_PI))

        ta, tb = pick(ta_cands), pick(tb_cands)
        na, nb = angle_of(sub(ta, c)), angle_of(sub(tb, c))
        if dist(a, ta) > 1e-9:
            elems.append(Segment(a, ta))
        elems.append(Arc(c, s, na, na + (nb - na) % TWO_PI))
        if dist(tb, b) > 1e-9:
            elems.append(Segment(tb, b))
    out = ArcPolygon(tuple(elems))
    validate(out)
    return out


def csb(gamma):
    """Concentric sailing boat: circle cut to an isosceles wedge whose
    incircle is concentric with S.  gamma in [pi/3, pi/2]."""
    if not math.pi / 3.0 - 1e-12 <= gamma <= math.pi / 2.0 + 1e-12:
        raise FamilyError("csb: gamma must lie in [pi/3, pi/2]")
    d = math.sin(gamma / 2.0)
    c = math.sqrt(1.0 - d * d)
    b = ball()
    b = clip_halfplane(b, math.atan2(d, c), d)
    b = clip_halfplane(b, math.atan2(d, -c), d)
    b = clip_halfplane(b, 3.0 * math.pi / 2.0, d)
    return b


def rsb(r):
    """Right-angled sailing boat: fixed 45-degree wedge at the top of the
    circle, hypotenuse sliding with the inradius r in [sqrt(2)-1, 1/sqrt2]."""
    if not R_RAT - 1e-12 <= r <= R_SB + 1e-12:
        raise FamilyError("rsb: r must lie in [sqrt(2)-1, 1/sqrt(2)]")
    o = 1.0 / math.sqrt(2.0)
    b = ball()
    b = clip_halfplane(b, math.atan2(o, o), o)
    b = clip_halfplane(b, math.atan2(o, -o), o)
    hyp = (1.0 + math.sqrt(2.0)) * r - 1.0
    b = _clip_if_cuts(b, 3.0 * math.pi / 2.0, hyp)
    return b


def _iso_high_inradius(gamma):
    """Inradius of iso(gamma) for gamma >= pi/3 (diameter on the base)."""
    d = 2.0 * math.sin(gamma)
    return (d / 2.0) * (1.0 / math.cos(gamma / 2.0) - math.tan(gamma / 2.0))


def sboat(r, gamma):
    """General sailing boat: isosceles wedge scaled about its apex until
    its inradius is r, met with the circle.  gamma in [pi/3, pi/2],
    r in [r(iso), sin(gamma/2)]."""
    if not math.pi / 3.0 - 1e-12 <= gamma <= math.pi / 2.0 + 1e-12:
        raise FamilyError("sboat: gamma must lie in [pi/3, pi/2]")
    r_lo = _iso_high_inradius(gamma)
    r_hi = math.sin(gamma / 2.0)
    if not r_lo - 1e-9 <= r <= r_hi + 1e-9:
        raise FamilyError("sboat: r must lie in [%.12g, %.12g]"
                          % (r_lo, r_hi))
    apex = (0.0, 1.0)
    q1 = unit(3.0 * math.pi / 2.0 - gamma)
    tau = r / r_lo
    # legs through the apex are scale-invariant
    for q in (q1, (-q1[0], q1[1])):
        dvec = sub(q, apex)
        u = (dvec[1], -dvec[0])
        nu = norm(u)
        u = (u[0] / nu, u[1] / nu)
        if dot(u, apex) < 0:
            u = (-u[0], -u[1])
        b = locals().get("b")
    b = ball()
    for q in (q1, (-q1[0], q1[1])):
        dvec = sub(q, apex)
        u = (dvec[1], -dvec[0])
        nu = norm(u)
        u = (u[0] / nu, u[1] / nu)
        if dot(u, apex) < 0:
            u = (-u[0], -u[1])
        b = _clip_if_cuts(b, angle_of(u), dot(u, apex))
    yb = 1.0 - tau * (1.0 + math.cos(gamma))
    b = _clip_if_cuts(b, 3.0 * math.pi / 2.0, -yb)
    return b


def beq(r):
    """Bent equilateral: hull of the equilateral triangle and a ball of
    radius r pushed up its symmetry axis.  r in [1/2, sqrt(3)-1]."""
    if not R_EQT - 1e-12 <= r <= R_RET + 1e-12:
        raise FamilyError("beq: r must lie in [1/2, sqrt(3)-1]")
    if r <= R_EQT + 1e-12:
        return eqt()
    cy = _ncreb_shift(r)
    return hull_points_disks([P1, P2, P3], [((0.0, cy), r)])


def _slice_tangent(r, center):
    """Cut line through P2 tangent to the ball (center, r): the tangent
    making the smaller angle with the chord [P2, P3]."""
    cands = _tangent_normals(P2, center, r)
    u = min(cands, key=lambda u: _line_angle_to(u, (1.0, 0.0)))
    return angle_of(u), dot(u, P2)


def slirt(r):
    """Maximally sliced Reuleaux triangle: the Reuleaux triangle with the
    inball shifted to touch both top arcs, cut by a line through the
    bottom-left vertex tangent to that inball.  r in [3sqrt(3)/8,
    sqrt(3)-1]."""
    if not R_FRT - 1e-9 <= r <= R_RET + 1e-12:
        raise FamilyError("slirt: r must lie in [3*sqrt(3)/8, sqrt(3)-1]")
    c = (0.0, _ncreb_shift(max(r, R_FRT)))
    th, off = _slice_tangent(r, c)
    return _clip_if_cuts(ret(), th, off)


def csrt(gamma):
    """Concentric sliced Reuleaux triangle: cut through the bottom-left
    vertex keeping the concentric inball.  gamma in
    [asin(sqrt(3)-1) - pi/6, pi/6] is the angle between the cut and the
    adjacent vertex chord."""
    g_lo = math.asin(SQRT3 - 1.0) - math.pi / 6.0
    if not g_lo - 1e-12 <= gamma <= math.pi / 6.0 + 1e-12:
        raise FamilyError("csrt: gamma out of range")
    th = 3.0 * math.pi / 2.0 - gamma
    u = unit(th)
    return _clip_if_cuts(ret(), th, dot(u, P2))


def btrap(gamma):
    """Bent trapezoid: isosceles trapezoid inscribed in S with the two
    slanted edges replaced by arcs of radius equal to the diameter.
    gamma in [0, pi/3]; gamma = 0 degenerates to the segment."""
    if not -1e-12 <= gamma <= math.pi / 3.0 + 1e-12:
        raise FamilyError("btrap: gamma must lie in [0, pi/3]")
    if gamma <= 1e-9:
        return segment()
    d = 2.0 * math.cos(gamma / 2.0)
    y0 = -math.sin(gamma / 2.0)
    p1 = (-d / 2.0, y0)
    p2 = (d / 2.0, y0)
    # second intersection of circle(p1, d) with S: reflect p2 across p1's ray
    ux, uy = p1[0], p1[1]  # |p1| = 1
    doty = p2[0] * ux + p2[1] * uy
    p3 = (2.0 * doty * ux - p2[0], 2.0 * doty * uy - p2[1])
    p4 = (-p3[0], p3[1])
    elems = [Segment(p1, p2)]
    a1 = angle_of(sub(p2, p1))
    a2 = angle_of(sub(p3, p1))
    elems.append(Arc(p1, d, a1, a1 + (a2 - a1) % TWO_PI))
    if dist(p3, p4) > 1e-9:
        elems.append(Segment(p3, p4))
    b1 = angle_of(sub(p4, p2))
    b2 = angle_of(sub(p1, p2))
    elems.append(Arc(p2, d, b1, b1 + (b2 - b1) % TWO_PI))
    out = ArcPolygon(tuple(elems))
    validate(out)
    return out


def _hood_points(gamma):
    d = 2.0 * math.cos(gamma / 2.0)
    y = 1.0 - d * d / 2.0
    x = math.sqrt(max(1.0 - y * y, 0.0))
    return d, (0.0, 1.0), (-x, y), (x, y)


def hood(gamma):
    """Hood: meet of three disks of radius D around an isosceles inscribed
    triangle, cut by two parallel lines through the base vertices, the
    first tangent to the concentric inball of radius D - 1.

    gamma in [2*acos((1+r_H)/2), pi/3]; at pi/3 this is the sliced
    Reuleaux triangle."""
    g_lo = 2.0 * math.acos((1.0 + R_HOOD) / 2.0)
    if not g_lo - 1e-9 <= gamma <= math.pi / 3.0 + 1e-12:
        raise FamilyError("hood: gamma out of range")
    d, p1, p2, p3 = _hood_points(gamma)
    r = d - 1.0
    base = disk_intersection([p1, p2, p3], d)
    cands = _tangent_normals(p2, (0.0, 0.0), r)
    u = min(cands, key=lambda u: _line_angle_to(u, sub(p1, p2)))
    body = _clip_if_cuts(base, angle_of(u), dot(u, p2))
    un = (-u[0], -u[1])
    body = _clip_if_cuts(body, angle_of(un), dot(un, p3))
    return body


def bpen(r, gamma, _validate=True):
    """Bent pentagon: meet of three disks of radius D around an isosceles
    inscribed triangle, cut by two parallel lines, the first through the
    base vertex p2 tangent to an inball touching the arcs around the apex
    and p2.  Valid for 8r >= 3D (the inball reaches the cut side) and as
    long as the second line still supports the inball."""
    if not 0.0 < gamma <= math.pi / 3.0 + 1e-12:
        raise FamilyError("bpen: gamma must lie in (0, pi/3]")
    d, p1, p2, p3 = _hood_points(gamma)
    if _validate and 8.0 * r < 3.0 * d - 1e-9:
        raise FamilyError("bpen: needs 8r >= 3D (inball too small)")
    if r > d - 1.0 + 1e-9:
        raise FamilyError("bpen: inball too large for this diameter")
    c = _bpen_center(r, d, p1, p2, p3)
    base = disk_intersection([p1, p2, p3], d)
    cands = _tangent_normals(p2, c, r)
    u = min(cands, key=lambda u: _line_angle_to(u, sub(p1, p2)))
    body = _clip_if_cuts(base, angle_of(u), dot(u, p2))
    un = (-u[0], -u[1])
    if _validate and dot(un, sub(c, p3)) < r - 1e-9:
        raise FamilyError("bpen: second cut would slice the inball")
    body = _clip_if_cuts(body, angle_of(un), dot(un, p3))
    return body


def _bpen_center(r, d, p1, p2, p3):
    """Inball center equidistant d - r from p1 and p2, on the p3 side."""
    rr = d - r
    mid = ((p1[0] + p2[0]) / 2.0, (p1[1] + p2[1]) / 2.0)
    base = dist(p1, p2)
    h2 = rr * rr - (base / 2.0) ** 2
    if h2 < 0.0:
        raise FamilyError("bpen: no inball position exists")
    h = math.sqrt(h2)
    ux, uy = (p2[0] - p1[0]) / base, (p2[1] - p1[1]) / base
    for sgn in (+1.0, -1.0):
        c = (mid[0] - sgn * h * uy, mid[1] + sgn * h * ux)
        if dot(sub(c, mid), sub(p3, mid)) > 0:
            return c
    raise FamilyError("bpen: inball center selection failed")


def biso(r, gamma):
    """Bent isosceles: hull of the isosceles triangle and the bent-pentagon
    inball (the minimal companion of the bent pentagon)."""
    d, p1, p2, p3 = _hood_points(gamma)
    c = _bpen_center(r, d, p1, p2, p3)
    return hull_points_disks([p1, p2, p3], [(c, r)])


def triangle(r, diameter):
    """Acute triangle inscribed in S with the given diameter and inradius.

    The longest edge is a chord of length ``diameter``; the apex slides
    along the far arc between the two isosceles positions."""
    d = diameter
    if not SQRT3 - 1e-9 <= d <= 2.0 + 1e-12:
        raise FamilyError("triangle: diameter must lie in [sqrt(3), 2]")
    yc = -math.sqrt(max(1.0 - (d / 2.0) ** 2, 0.0))
    a = (-d / 2.0, yc)
    b = (d / 2.0, yc)

    def inr(phi):
        p = unit(phi)
        la, lb = dist(p, a), dist(p, b)
        ar = abs((b[0] - a[0]) * (p[1] - a[1])
                 - (p[0] - a[0]) * (b[1] - a[1])) / 2.0
        return 2.0 * ar / (la + lb + d)

    # apex range: symmetric top down to where |p - a| reaches d
    phi_hi = math.pi / 2.0
    lo, hi = 0.0, math.pi / 2.0  # angle offset from the top
    def edge_excess(off):
        return dist(unit(phi_hi + off), a) - d
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if edge_excess(mid) > 0.0:
            hi = mid
        else:
            lo = mid
    off_max = (lo + hi) / 2.0
    r_max = inr(phi_hi)
    r_min = inr(phi_hi + off_max)
    if not r_min - 1e-9 <= r <= r_max + 1e-9:
        raise FamilyError("triangle: r must lie in [%.12g, %.12g] for this "
                          "diameter" % (r_min, r_max))
    lo, hi = 0.0, off_max
    for _ in range(200):
        mid = (lo + hi) / 2.0
        if inr(phi_hi + mid) > r:
            lo = mid
        else:
            hi = mid
    p = unit(phi_hi + (lo + hi) / 2.0)
    return body_from_points([b, p, a])


def lb2hull(gamma, t):
    """Hull of the isosceles triangle of a bent trapezoid and a concentric
    ball grown inside the trapezoid: sweeps the inradius across the facet
    where the width equals the trapezoid bound.  gamma in (0, pi/3],
    t in (0, 1]."""
    if not 0.0 < gamma <= math.pi / 3.0 + 1e-12:
        raise FamilyError("lb2hull: gamma must lie in (0, pi/3]")
    if not 0.0 < t <= 1.0 + 1e-12:
        raise FamilyError("lb2hull: t must lie in (0, 1]")
    trap = btrap(gamma)
    from .radii import inball  # local import to avoid a cycle
    c0, rmax, _ = inball(trap)
    d = 2.0 * math.cos(gamma / 2.0)
    y0 = -math.sin(gamma / 2.0)
    p1 = (-d / 2.0, y0)
    p2 = (d / 2.0, y0)
    ux, uy = p1[0], p1[1]
    doty = p2[0] * ux + p2[1] * uy
    p3 = (2.0 * doty * ux - p2[0], 2.0 * doty * uy - p2[1])
    rho = t * rmax
    return hull_points_disks([p1, p2, p3], [(c0, rho)])


def gslice(r, t):
    """General sliced Reuleaux triangle: the Reuleaux triangle flattened
    below the shifted inball and cut by a line through the bottom-left
    vertex rotating from the width-preserving position (t = 0) to the
    inball tangent (t = 1)."""
    if not R_FRT - 1e-9 <= r <= R_RET + 1e-12:
        raise FamilyError("gslice: r must lie in [3*sqrt(3)/8, sqrt(3)-1]")
    if not -1e-12 <= t <= 1.0 + 1e-12:
        raise FamilyError("gslice: t must lie in [0, 1]")
    if t >= 1.0 - 1e-12:
        return slirt(r)
    vy = _ncreb_shift(max(r, R_FRT))
    c = (0.0, vy)
    filled = _clip_if_cuts(ret(), 3.0 * math.pi / 2.0, r - vy)
    from .radii import width_and_diameter
    w0, _, _, _ = width_and_diameter(filled)
    # starting cut: distance from the top vertex equals the current width
    th_start = math.pi / 3.0 + math.acos(max(-1.0, min(1.0, -w0 / SQRT3)))
    th_end, _ = _slice_tangent(r, c)
    th_end_u = th_start + ((th_end - th_start) % TWO_PI)
    if th_end_u - th_start > math.pi:
        th_end_u -= TWO_PI
    th = th_start + t * (th_end_u - th_start)
    u = unit(th)
    return _clip_if_cuts(filled, th, dot(u, P2))


def mix(lam):
    """Minkowski interpolation between the Reuleaux triangle (lam = 0) and
    the equilateral triangle (lam = 1)."""
    if not -1e-12 <= lam <= 1.0 + 1e-12:
        raise FamilyError("mix: lambda must lie in [0, 1]")
    if lam <= 1e-12:
        return ret()
    if lam >= 1.0 - 1e-12:
        return eqt()
    return minkowski_sum(scale(eqt(), lam), scale(ret(), 1.0 - lam))


def rounded(inner_body, lam):
    """Minkowski rounding toward the ball: (1-lam) K + lam B."""
    if not -1e-12 <= lam <= 1.0 + 1e-12:
        raise FamilyError("rounded: lambda must lie in [0, 1]")
    if lam <= 1e-12:
        return inner_body
    if lam >= 1.0 - 1e-12:
        return ball()
    return minkowski_sum(scale(inner_body, 1.0 - lam),
                         disk((0.0, 0.0), lam))


# ---------------------------------------------------------------------------
# Registry, expected radii, parsing
# ---------------------------------------------------------------------------

_FIXED = {
    "ball": ball,
    "segment": segment,
    "eqt": eqt,
    "ret": ret,
    "rat": rat,
    "sb": sb,
    "srt": srt,
    "frt": frt,
    "bt": bt,
    "hood_vertex": hood_vertex,
}

_PARAMETRIC = {
    "iso": (iso, ("gamma",)),
    "rect": (rect, ("r",)),
    "reb": (reb, ("r",)),
    "ncreb": (ncreb, ("r", "t")),
    "yamanouti": (yamanouti, ("r",)),
    "csb": (csb, ("gamma",)),
    "rsb": (rsb, ("r",)),
    "sboat": (sboat, ("r", "gamma")),
    "beq": (beq, ("r",)),
    "slirt": (slirt, ("r",)),
    "csrt": (csrt, ("gamma",)),
    "btrap": (btrap, ("gamma",)),
    "hood": (hood, ("gamma",)),
    "bpen": (bpen, ("r", "gamma")),
    "biso": (biso, ("r", "gamma")),
    "triangle": (triangle, ("r", "diameter")),
    "lb2hull": (lb2hull, ("gamma", "t")),
    "gslice": (gslice, ("r", "t")),
    "mix": (mix, ("lam",)),
}


def family_names():
    return sorted(_FIXED) + sorted(_PARAMETRIC) + ["rounded"]


def construct(spec):
    """Build the body described by a FamilySpec."""
    if spec.name == "rounded":
        if spec.inner is None:
            raise FamilyError("rounded: missing inner family")
        lam = spec.params.get("lambda")
        if lam is None:
            raise FamilyError("rounded: missing lambda")
        return rounded(construct(spec.inner), lam)
    if spec.name in _FIXED:
        if spec.params:
            raise FamilyError("%s takes no parameters" % spec.name)
        return _FIXED[spec.name]()
    if spec.name in _PARAMETRIC:
        fn, argnames = _PARAMETRIC[spec.name]
        missing = [a for a in argnames if a not in spec.params]
        extra = [k for k in spec.params if k not in argnames]
        if missing or extra:
            raise FamilyError(
                "%s expects parameters %s" % (spec.name, ", ".join(argnames)))
        return fn(*[spec.params[a] for a in argnames])
    raise FamilyError("unknown family %r" % spec.name)


def parse_family(text):
    """Parse a family spec string like 'iso:gamma=0.9' or
    'rounded:inner=reb:r=0.6,lambda=0.3'."""
    text = text.strip()
    if ":" not in text:
        return FamilySpec(text, {})
    name, rest = text.split(":", 1)
    name = name.strip()
    if name == "rounded":
        if not rest.startswith("inner="):
            raise FamilyError("rounded spec must be "
                              "'rounded:inner=<spec>,lambda=<value>'")
        cut = rest.rfind(",lambda=")
        if cut < 0:
            raise FamilyError("rounded spec is missing ',lambda='")
        inner = parse_family(rest[len("inner="):cut])
        lam = float(rest[cut + len(",lambda="):])
        return FamilySpec("rounded", {"lambda": lam}, inner=inner)
    params = {}
    if rest:
        for item in rest.split(","):
            if "=" not in item:
                raise FamilyError("bad parameter %r" % item)
            k, v = item.split("=", 1)
            params[k.strip()] = float(v)
    return FamilySpec(name, params)


def expected_radii(spec):
    """Closed-form (inradius, width, diameter, circumradius) where known."""
    n, p = spec.name, spec.params
    if n == "rounded":
        lam = p["lambda"]
        inner = expected_radii(spec.inner)
        def mixv(v, bv):
            return None if v is None else (1.0 - lam) * v + lam * bv
        return ExpectedRadii(mixv(inner.inradius, 1.0),
                             mixv(inner.width, 2.0),
                             mixv(inner.diameter, 2.0),
                             mixv(inner.circumradius, 1.0))
    if n == "ball":
        return ExpectedRadii(1.0, 2.0, 2.0, 1.0)
    if n == "segment":
        return ExpectedRadii(0.0, 0.0, 2.0, 1.0)
    if n == "eqt":
        return ExpectedRadii(0.5, 1.5, SQRT3, 1.0)
    if n == "ret":
        return ExpectedRadii(SQRT3 - 1.0, SQRT3, SQRT3, 1.0)
    if n == "rat":
        return ExpectedRadii(math.sqrt(2.0) - 1.0, 1.0, 2.0, 1.0)
    if n == "sb":
        return ExpectedRadii(R_SB, 1.0 + R_SB, 2.0, 1.0)
    if n == "srt":
        return expected_radii(FamilySpec("slirt", {"r": SQRT3 - 1.0}))
    if n == "frt":
        return ExpectedRadii(R_FRT, 1.5, SQRT3, 1.0)
    if n == "bt":
        d = math.sqrt(2.0 + math.sqrt(7.0) / 2.0)
        return ExpectedRadii(3.0 * d / 8.0, 0.75 * d, d, 1.0)
    if n == "hood_vertex":
        return ExpectedRadii(R_HOOD, 2.0 * R_HOOD, 1.0 + R_HOOD, 1.0)
    if n == "iso":
        g = p["gamma"]
        if g <= 1e-12:
            return ExpectedRadii(0.0, 0.0, 2.0, 1.0)
        if g <= math.pi / 3.0 + 1e-12:
            d = 2.0 * math.cos(g / 2.0)
            w = d * math.sin(g)
            return ExpectedRadii(w / (2.0 + 2.0 * math.sin(g / 2.0)),
                                 w, d, 1.0)
        d = 2.0 * math.sin(g)
        r = _iso_high_inradius(g)
        return ExpectedRadii(r, r * (1.0 + 1.0 / math.sin(g / 2.0)), d, 1.0)
    if n == "rect":
        r = p["r"]
        return ExpectedRadii(r, r * (r + 2.0) / 2.0, 2.0, 1.0)
    if n in ("reb", "yamanouti"):
        r = p["r"]
        return ExpectedRadii(r, r + 1.0, SQRT3, 1.0)
    if n == "ncreb":
        r = p["r"]
        w = r + 1.0 if p.get("t", 0.0) <= 1e-12 else None
        return ExpectedRadii(r, w, SQRT3, 1.0)
    if n == "csb":
        g = p["gamma"]
        r = math.sin(g / 2.0)
        return ExpectedRadii(r, r + 1.0, 2.0 * math.sin(g), 1.0)
    if n == "rsb":
        r = p["r"]
        return ExpectedRadii(r, (math.sqrt(2.0) + 1.0) * r, 2.0, 1.0)
    if n == "sboat":
        r, g = p["r"], p["gamma"]
        return ExpectedRadii(r, r * (1.0 + 1.0 / math.sin(g / 2.0)),
                             2.0 * math.sin(g), 1.0)
    if n == "beq":
        return ExpectedRadii(p["r"], 1.5, SQRT3, 1.0)
    if n == "slirt":
        r = p["r"]
        w = SQRT3 * math.cos(math.pi / 6.0 - math.asin(r / (SQRT3 - r))
                             + math.acos(SQRT3 / (2.0 * (SQRT3 - r))))
        return ExpectedRadii(r, w, SQRT3, 1.0)
    if n == "csrt":
        g = p["gamma"]
        return ExpectedRadii(SQRT3 - 1.0,
                             SQRT3 * math.sin(math.pi / 3.0 + g), SQRT3, 1.0)
    if n == "btrap":
        g = p["gamma"]
        if g <= 1e-9:
            return ExpectedRadii(0.0, 0.0, 2.0, 1.0)
        d = 2.0 * math.cos(g / 2.0)
        w = d * math.sin(g)
        r = w / 2.0 if g <= GAMMA_BT + 1e-12 else 3.0 * d / 8.0
        return ExpectedRadii(r, w, d, 1.0)
    if n == "hood":
        g = p["gamma"]
        d = 2.0 * math.cos(g / 2.0)
        r = d - 1.0
        alpha = g - math.asin(r)
        w = 2.0 * d * math.sin(g / 2.0) * math.cos(alpha)
        return ExpectedRadii(r, w, d, 1.0)
    if n in ("bpen", "biso"):
        r, g = p["r"], p["gamma"]
        d = 2.0 * math.cos(g / 2.0)
        return ExpectedRadii(r, bent_pentagon_width(r, d, 1.0), d, 1.0)
    if n == "triangle":
        r, d = p["r"], p["diameter"]
        w = 2.0 * r * (d + (2.0 * r / d)
                       * (1.0 + math.sqrt(max(1.0 - (d / 2.0) ** 2, 0.0)))) / d
        return ExpectedRadii(r, w, d, 1.0)
    if n == "lb2hull":
        g = p["gamma"]
        d = 2.0 * math.cos(g / 2.0)
        return ExpectedRadii(None, d * math.sin(g), d, 1.0)
    if n == "gslice":
        return ExpectedRadii(p["r"], None, SQRT3, 1.0)
    if n == "mix":
        lam = p["lam"]
        w = lam * 1.5 + (1.0 - lam) * SQRT3
        return ExpectedRadii(w - 1.0, w, SQRT3, 1.0)
    raise FamilyError("unknown family %r" % n)


def bent_pentagon_width(r, d, big_r):
    """Width of the bent pentagon: the tight lower bound on w at (r, D, R)
    in the region below the bent-trapezoid bound."""
    x = d / (2.0 * big_r)
    s = math.sqrt(max(1.0 - x * x, 0.0))
    inner = (math.acos(min(1.0, d / (2.0 * (d - r))))
             + math.acos(min(1.0, x))
             - math.asin(min(1.0, r / (d - r))))
    return 2.0 * d * s * math.cos(inner)


# ---------------------------------------------------------------------------
# The ten extreme shapes: exact data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VertexInfo:
    """One extreme shape: exact diagram point, printed reference point,
    and the tight/slack sign pattern of the nine inequalities in the order
    (lb1, lb2, lb3, ib1, ib2, ib3, ub1, ub2, ub3)."""

    name: str
    spec: FamilySpec
    exact_point: tuple
    printed_point: tuple
    pattern: str
    artefacts: tuple = ()


def vertex_table():
    """The ten extreme shapes with exact coordinates and sign patterns.

    ``artefacts`` lists inequalities whose printed sign is '-' or '+-' yet
    whose residual degenerates to exact equality at that vertex (both
    happen only for the segment, where r = w = 0 collapses the bounds).
    """
    s2 = math.sqrt(2.0)
    w_srt = SQRT3 * math.cos(math.pi / 3.0 - math.asin(SQRT3 - 1.0))
    d_bt = math.sqrt(2.0 + math.sqrt(7.0) / 2.0)
    rh = R_HOOD
    return [
        VertexInfo("ball", FamilySpec("ball"), (1.0, 1.0, 1.0),
                   (1.0, 1.0, 1.0), "+--++-+--"),
        VertexInfo("eqt", FamilySpec("eqt"), (0.5, 0.75, SQRT3 / 2.0),
                   (0.5, 0.75, 0.8660), "-+---++++"),
        VertexInfo("segment", FamilySpec("segment"), (0.0, 0.0, 1.0),
                   (0.0, 0.0, 1.0), "++-+---~+",
                   artefacts=("lb3", "ub2")),
        VertexInfo("ret", FamilySpec("ret"),
                   (SQRT3 - 1.0, SQRT3 / 2.0, SQRT3 / 2.0),
                   (0.7321, 0.8660, 0.8660), "----+++--"),
        VertexInfo("rat", FamilySpec("rat"), (s2 - 1.0, 0.5, 1.0),
                   (0.4142, 0.5, 1.0), "---+---++"),
        VertexInfo("sb", FamilySpec("sb"),
                   (1.0 / s2, (1.0 / s2 + 1.0) / 2.0, 1.0),
                   (0.7071, 0.8536, 1.0), "---+--++-"),
        VertexInfo("srt", FamilySpec("srt"),
                   (SQRT3 - 1.0, w_srt / 2.0, SQRT3 / 2.0),
                   (0.7321, 0.8440, 0.8660), "--+-++---"),
        VertexInfo("frt", FamilySpec("frt"),
                   (R_FRT, 0.75, SQRT3 / 2.0),
                   (0.6495, 0.75, 0.8660), "-++--+---"),
        VertexInfo("bt", FamilySpec("bt"),
                   (3.0 * d_bt / 8.0, 3.0 * d_bt / 8.0, d_bt / 2.0),
                   (0.6836, 0.6836, 0.9114), "+++------"),
        VertexInfo("hood_vertex", FamilySpec("hood_vertex"),
                   (rh, rh, (rh + 1.0) / 2.0),
                   (0.7935, 0.7935, 0.8967), "+-+-+----"),
    ]


def companions(spec):
    """Minimal/maximal companion bodies sharing the diagram point.

    Returns a dict with optional keys 'min' and 'max' (FamilySpec or a
    body-producing callable is resolved to a body); families without a
    named companion return an empty dict."""
    n, p = spec.name, spec.params
    out = {}
    if n in ("srt",):
        out["min"] = hull_points_disks([P1, P2, P3],
                                       [((0.0, 0.0), SQRT3 - 1.0)])
        out["max"] = srt()
    elif n == "slirt":
        out["min"] = beq(p["r"])
        out["max"] = slirt(p["r"])
    elif n == "frt":
        out["min"] = beq(R_FRT)
        out["max"] = frt()
    elif n == "sb":
        s2 = 1.0 / math.sqrt(2.0)
        out["min"] = body_from_points(
            [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (-s2, -s2), (s2, -s2)])
        out["max"] = sb()
    elif n == "bt":
        out["min"] = lb2hull(GAMMA_BT, 1.0)
        out["max"] = bt()
    elif n == "btrap":
        out["min"] = lb2hull(p["gamma"], 1.0)
        out["max"] = btrap(p["gamma"])
    elif n == "hood_vertex":
        g = 2.0 * math.acos((1.0 + R_HOOD) / 2.0)
        _, p1, p2, p3 = _hood_points(g)
        out["min"] = hull_points_disks([p1, p2, p3],
                                       [((0.0, 0.0), R_HOOD)])
        out["max"] = hood_vertex()
    elif n == "hood":
        d, p1, p2, p3 = _hood_points(p["gamma"])
        out["min"] = hull_points_disks([p1, p2, p3],
                                       [((0.0, 0.0), d - 1.0)])
        out["max"] = hood(p["gamma"])
    elif n == "bpen":
        out["min"] = biso(p["r"], p["gamma"])
        out["max"] = bpen(p["r"], p["gamma"])
    elif n == "reb":
        out["min"] = yamanouti(p["r"])
        out["max"] = reb(p["r"])
    return out
