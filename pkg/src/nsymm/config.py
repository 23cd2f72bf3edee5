"""Global degree limit.

The algebra has countably many generators; this artifact works at a
bounded degree.  Operations indexed by a degree reject requests above
the limit instead of truncating silently.  The limit defaults to 8 and
can be overridden per call (``max_degree=``), globally
(:func:`set_max_degree`), or lexically (:func:`degree_limit`).
"""

from contextlib import contextmanager

DEFAULT_MAX_DEGREE = 8

_max_degree = DEFAULT_MAX_DEGREE


class DegreeOverflowError(ValueError):
    """A request exceeded the configured maximum degree."""


def max_degree():
    return _max_degree


def set_max_degree(n):
    global _max_degree
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"max degree must be an integer >= 1, got {n!r}")
    _max_degree = n


@contextmanager
def degree_limit(n):
    """Temporarily raise or lower the global degree limit."""
    global _max_degree
    previous = _max_degree
    set_max_degree(n)
    try:
        yield
    finally:
        _max_degree = previous


def resolve_limit(limit=None):
    if limit is None:
        return _max_degree
    if not isinstance(limit, int) or limit < 1:
        raise ValueError(f"max degree must be an integer >= 1, got {limit!r}")
    return limit


def check_index(n, limit=None, what="generator index"):
    """Validate a degree-indexed request: 1 <= n <= limit."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"{what} must be an integer >= 1, got {n!r}")
    bound = resolve_limit(limit)
    if n > bound:
        raise DegreeOverflowError(f"{what} {n} exceeds the degree limit {bound}")
    return n
