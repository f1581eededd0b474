"""Error types shared across the package."""


class DomainError(ValueError):
    """An argument violates a documented precondition (dimension, index, range)."""


class ValidationError(RuntimeError):
    """A computed value failed its own consistency checks."""


def require_level(n, minimum: int = 2) -> int:
    """Check that `n` is an integer dimension of at least `minimum`."""
    if isinstance(n, bool) or not float(n).is_integer():
        raise DomainError(f"invalid-dimension: level count must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise DomainError(f"invalid-dimension: level count must be >= {minimum}, got {n}")
    return n


def require_index(j, n: int) -> int:
    """Check that `j` is a valid residue index in 0..n-1."""
    if isinstance(j, bool) or not float(j).is_integer():
        raise DomainError(f"invalid-index: index must be an integer, got {j!r}")
    j = int(j)
    if not 0 <= j < n:
        raise DomainError(f"invalid-index: need 0 <= j < {n}, got {j}")
    return j
