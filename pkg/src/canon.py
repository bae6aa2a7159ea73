"""
Canonical representatives of RPMs under rotation and reversal.
"""
import logging
from typing import FrozenSet

from src.graph_core import DomainError, Matching, require_rpm, reverse, rotate

logger = logging.getLogger(__name__)


def normalize(m: Matching) -> Matching:
    """
    Normalize an RPM.

    First rotate until the c_1 edge is {0, n-1}. Then scan colors
    c_2, c_3, ... in ascending order: the first edge {i, j} with i+j != n-1
    decides between keeping the matching (i+j < n-1) and reversing it
    (i+j > n-1). If every edge satisfies i+j = n-1 the matching is returned
    as is.

    Raises:
        DomainError: If m is not an RPM.
    """
    require_rpm(m, "normalize")
    n = m.n
    if n < 2:
        return m

    i, j = m.edge_of_color()[1]
    if (i, j) != (0, n - 1):
        m = rotate(m, -j)

    by_color = m.edge_of_color()
    for k in range(2, n // 2 + 1):
        i, j = by_color[k]
        if i + j < n - 1:
            return m
        if i + j > n - 1:
            return reverse(m)
    return m


def is_normalized(m: Matching) -> bool:
    """True iff m is an N-RPM, i.e. a fixed point of normalize."""
    return normalize(m) == m


def same_class(a: Matching, b: Matching) -> bool:
    """
    True iff a and b normalize to the same N-RPM.

    Raises:
        DomainError: If the matchings live on different n or are not RPMs.
    """
    if a.n != b.n:
        raise DomainError(f"cannot compare a matching of K•_{a.n} with one of K•_{b.n}")
    return normalize(a) == normalize(b)


def orbit(m: Matching) -> FrozenSet[Matching]:
    """All images of m under the 2n maps rotate(., a) and rotate(reverse(.), a)."""
    if m.n == 0:
        return frozenset([m])
    mirrored = reverse(m)
    images = set()
    for alpha in range(m.n):
        images.add(rotate(m, alpha))
        images.add(rotate(mirrored, alpha))
    return frozenset(images)
