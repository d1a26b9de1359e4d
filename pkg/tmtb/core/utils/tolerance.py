"""
Numeric tolerances shared by every solver.
"""

# Two points closer than this are the same point.
TOL_PT = 1e-9

REL_TOL = 1e-9
ABS_TOL = 1e-12


def radius_slack(radius: float, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> float:
    """Allowed excess over ``radius`` before a distance counts as outside."""
    return max(rel_tol * abs(radius), abs_tol)


def exceeds(value: float, bound: float, rel_tol: float = REL_TOL, abs_tol: float = ABS_TOL) -> bool:
    """True when ``value`` is larger than ``bound`` beyond the tolerance."""
    return value > bound + radius_slack(bound, rel_tol, abs_tol)
