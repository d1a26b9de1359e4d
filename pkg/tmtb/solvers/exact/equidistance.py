"""
Vectorised equidistance kernels.

Lines are rows ``(nx, ny, c)`` with a unit normal, describing ``n . X = c``.
Every kernel takes ``(m, ...)`` arrays and returns ``(m', 2)`` candidate
centers; rows that have no solution are filled with NaN and are dropped by the
caller.
"""

import numpy as np

# Below this a normalised coefficient counts as zero.
COEF_TOL = 1e-12
# Below this |n1 - n2| two unit normals are the same direction.
NORMAL_TOL = 1e-9


def _as2(a) -> np.ndarray:
    return np.asarray(a, dtype=float).reshape(-1, 2)


def _as3(a) -> np.ndarray:
    return np.asarray(a, dtype=float).reshape(-1, 3)


def lines_through(a, b) -> np.ndarray:
    """Supporting lines of the segments ``a[i] -> b[i]`` with left normals."""
    a, b = _as2(a), _as2(b)
    d = b - a
    length = np.hypot(d[:, 0], d[:, 1])
    nx = -d[:, 1] / length
    ny = d[:, 0] / length
    return np.column_stack([nx, ny, nx * a[:, 0] + ny * a[:, 1]])


def canonical_lines(lines) -> np.ndarray:
    """Flip normals so ``nx > 0`` or ``nx == 0, ny > 0``; equal lines get equal rows."""
    lines = _as3(lines).copy()
    flip = (lines[:, 0] < 0) | ((lines[:, 0] == 0) & (lines[:, 1] < 0))
    lines[flip] *= -1.0
    return lines


def perpendicular_bisectors(p, q) -> np.ndarray:
    """Lines of points equidistant from ``p[i]`` and ``q[i]``."""
    p, q = _as2(p), _as2(q)
    d = q - p
    length = np.hypot(d[:, 0], d[:, 1])
    with np.errstate(divide="ignore", invalid="ignore"):
        nx = d[:, 0] / length
        ny = d[:, 1] / length
    mx = (p[:, 0] + q[:, 0]) / 2.0
    my = (p[:, 1] + q[:, 1]) / 2.0
    return np.column_stack([nx, ny, nx * mx + ny * my])


def angle_bisectors(l1, l2) -> np.ndarray:
    """
    The two lines equidistant from ``l1[i]`` and ``l2[i]``.

    Returns a ``(m, 2, 3)`` array. For parallel lines one of the two rows is
    the midline and the other is NaN.
    """
    l1, l2 = _as3(l1), _as3(l2)
    out = np.full((l1.shape[0], 2, 3), np.nan)
    for slot, sign in enumerate((1.0, -1.0)):
        m = l1[:, :2] - sign * l2[:, :2]
        e = l1[:, 2] - sign * l2[:, 2]
        norm = np.hypot(m[:, 0], m[:, 1])
        ok = norm > NORMAL_TOL
        safe = np.where(ok, norm, 1.0)
        out[ok, slot, 0] = (m[:, 0] / safe)[ok]
        out[ok, slot, 1] = (m[:, 1] / safe)[ok]
        out[ok, slot, 2] = (e / safe)[ok]
    return out


def intersect_lines(l1, l2) -> np.ndarray:
    """Intersection points of ``l1[i]`` and ``l2[i]``; NaN when parallel."""
    l1, l2 = _as3(l1), _as3(l2)
    det = l1[:, 0] * l2[:, 1] - l1[:, 1] * l2[:, 0]
    ok = np.abs(det) > COEF_TOL
    safe = np.where(ok, det, 1.0)
    x = (l1[:, 2] * l2[:, 1] - l2[:, 2] * l1[:, 1]) / safe
    y = (l1[:, 0] * l2[:, 2] - l2[:, 0] * l1[:, 2]) / safe
    pts = np.column_stack([x, y])
    pts[~ok] = np.nan
    return pts


def circumcenters(p, q, r) -> np.ndarray:
    """Circumcenters of the triangles ``p[i], q[i], r[i]``; NaN when collinear."""
    p, q, r = _as2(p), _as2(q), _as2(r)
    b = q - p
    c = r - p
    bb = b[:, 0] ** 2 + b[:, 1] ** 2
    cc = c[:, 0] ** 2 + c[:, 1] ** 2
    d = 2.0 * (b[:, 0] * c[:, 1] - b[:, 1] * c[:, 0])
    ok = np.abs(d) > COEF_TOL * 2.0 * np.sqrt(bb * cc)
    safe = np.where(ok, d, 1.0)
    ux = (c[:, 1] * bb - b[:, 1] * cc) / safe
    uy = (b[:, 0] * cc - c[:, 0] * bb) / safe
    pts = np.column_stack([p[:, 0] + ux, p[:, 1] + uy])
    pts[~ok] = np.nan
    return pts


def quadratic_roots(a, b, c) -> np.ndarray:
    """
    Real roots of ``a t^2 + b t + c = 0`` row by row.

    Coefficients are normalised first; a vanishing leading coefficient falls
    back to the linear root and a slightly negative discriminant is clamped to
    a double root.

    Returns:
        ``(m, 2)`` array of roots, NaN where a root does not exist
    """
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    c = np.asarray(c, dtype=float).ravel()
    roots = np.full((a.shape[0], 2), np.nan)
    scale = np.maximum(np.maximum(np.abs(a), np.abs(b)), np.abs(c))
    live = scale > 0
    safe_scale = np.where(live, scale, 1.0)
    a, b, c = a / safe_scale, b / safe_scale, c / safe_scale

    linear = live & (np.abs(a) <= COEF_TOL)
    lin_ok = linear & (np.abs(b) > COEF_TOL)
    roots[lin_ok, 0] = -c[lin_ok] / b[lin_ok]

    quad = live & ~linear
    disc = b * b - 4.0 * a * c
    disc = np.where((disc < 0) & (disc > -COEF_TOL), 0.0, disc)
    quad &= disc >= 0
    sq = np.sqrt(np.where(quad, disc, 0.0))
    q = -0.5 * (b + np.copysign(sq, b))
    zero_q = quad & (q == 0)
    safe_q = np.where(q == 0, 1.0, q)
    safe_a = np.where(quad, a, 1.0)
    roots[quad, 0] = np.where(zero_q, 0.0, c / safe_q)[quad]
    roots[quad, 1] = np.where(zero_q, 0.0, q / safe_a)[quad]
    return roots


def line_parabola_roots(k, focus, directrix) -> np.ndarray:
    """
    Points of line ``k[i]`` equidistant from ``focus[i]`` and line ``directrix[i]``.

    Returns:
        ``(m, 2, 2)`` array: up to two points per row, NaN when absent
    """
    k, focus, directrix = _as3(k), _as2(focus), _as3(directrix)
    x0 = k[:, :2] * k[:, 2:3]
    w = np.column_stack([-k[:, 1], k[:, 0]])
    d = x0 - focus
    c0 = directrix[:, 0] * x0[:, 0] + directrix[:, 1] * x0[:, 1] - directrix[:, 2]
    c1 = directrix[:, 0] * w[:, 0] + directrix[:, 1] * w[:, 1]
    a = 1.0 - c1 * c1
    b = 2.0 * (w[:, 0] * d[:, 0] + w[:, 1] * d[:, 1] - c0 * c1)
    cc = d[:, 0] ** 2 + d[:, 1] ** 2 - c0 * c0
    t = quadratic_roots(a, b, cc)
    return x0[:, None, :] + t[:, :, None] * w[:, None, :]


def eee_centers(p, q, r) -> np.ndarray:
    """Three points: the circumcenter."""
    return circumcenters(p, q, r)


def eel_centers(p, q, line) -> np.ndarray:
    """Two points and a line: point bisector against the point-line parabola."""
    bis = perpendicular_bisectors(p, q)
    return line_parabola_roots(bis, p, line).reshape(-1, 2)


def ell_centers(p, l1, l2) -> np.ndarray:
    """One point and two lines: both line bisectors against the point-line parabola."""
    p, l1 = _as2(p), _as3(l1)
    bis = angle_bisectors(l1, l2)
    parts = [line_parabola_roots(bis[:, slot, :], p, l1) for slot in range(2)]
    return np.stack(parts, axis=1).reshape(-1, 2)


def lll_centers(l1, l2, l3) -> np.ndarray:
    """Three lines: pairwise bisector intersections."""
    b12 = angle_bisectors(l1, l2)
    b13 = angle_bisectors(l1, l3)
    parts = [intersect_lines(b12[:, i, :], b13[:, j, :]) for i in range(2) for j in range(2)]
    return np.stack(parts, axis=1).reshape(-1, 2)


def endpoint_midpoints(p, q) -> np.ndarray:
    """Midpoints of ``p[i]`` and ``q[i]``."""
    return (_as2(p) + _as2(q)) / 2.0


def projection_midpoints(p, a, b, slack: float = 0.0) -> np.ndarray:
    """
    Midpoints between ``p[i]`` and its projection on segment ``a[i] -> b[i]``.

    NaN when the projection falls outside the segment by more than ``slack``
    in the segment parameter.
    """
    p, a, b = _as2(p), _as2(a), _as2(b)
    d = b - a
    lam = ((p - a) * d).sum(axis=1) / (d * d).sum(axis=1)
    ok = (lam >= -slack) & (lam <= 1.0 + slack)
    foot = a + np.clip(lam, 0.0, 1.0)[:, None] * d
    mid = (p + foot) / 2.0
    mid[~ok] = np.nan
    return mid
