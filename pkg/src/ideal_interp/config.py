import os

DEFAULT_MAX_DEGREE = 64


def max_degree() -> int:
    """Runaway guard for every monomial enumeration (IDEAL_INTERP_MAX_DEGREE)."""
    raw = os.environ.get("IDEAL_INTERP_MAX_DEGREE")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_DEGREE
    return max(value, 0)
