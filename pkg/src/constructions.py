"""
Closed-form and recursive RPM constructions.

kirkman       -- the circle-method matching {i, n-1-i}.
t_matching    -- an RPM for even n = 8k or 8k+2.
ars           -- the arch-recursive-slide matching for odd n, always cuttable.
"""
import logging
from typing import Dict, List, Tuple

from src.graph_core import DomainError, Edge, Matching, rotate
from src.utils import residue_split

logger = logging.getLogger(__name__)


def kirkman(n: int) -> Matching:
    """The Kirkman matching {{i, n-1-i} : i < floor(n/2)}; an RPM only for n = 2 or odd n."""
    if n < 0:
        raise DomainError(f"graph size must be nonnegative, got {n}")
    return Matching(n, tuple((i, n - 1 - i) for i in range(n // 2)))


def is_kirkman_rainbow(n: int) -> bool:
    """Closed form of is_rpm(kirkman(n)). n = 0 counts: the empty matching is rainbow."""
    return n in (0, 2) or n % 2 == 1


def cuttable_kirkman_rotations(n: int) -> Tuple[Matching, Matching]:
    """
    The two rotations of the Kirkman matching by +/- floor((n+1)/4); both are
    cuttable RPMs.

    Raises:
        DomainError: For even n other than 2.
    """
    if n < 1 or (n % 2 == 0 and n != 2):
        raise DomainError(f"the Kirkman matching of K•_{n} is not an RPM (needs n = 2 or odd n)")
    base = kirkman(n)
    shift = (n + 1) // 4
    return rotate(base, shift), rotate(base, -shift)


def t_parts(n: int) -> Dict[str, List[Edge]]:
    """
    The four parts T', T'', T''' and T-bar of the even-case construction.

    Index ranges whose upper bound is negative are empty (k = 1 leaves T' and
    T''' empty for n = 8).
    """
    if n % 2:
        raise DomainError(f"t_matching builds RPMs for even n only, got n={n}")
    k, r = residue_split(n)
    if r in (4, 6):
        raise DomainError(f"no RPM exists in K•_{n}: n ≡ {r} (mod 8)")
    if k < 1:
        raise DomainError(f"the closed form needs n >= 8, got n={n}")

    if r == 0:
        return {
            "t1": [(1 + i, 8 * k - 2 - i) for i in range(2 * k - 2)],
            "t2": [(2 * k + i, 6 * k - i) for i in range(k)],
            "t3": [(3 * k + i, 5 * k - 2 - i) for i in range(k - 1)],
            "tbar": [(0, 4 * k - 1), (2 * k - 1, 8 * k - 1), (5 * k - 1, 5 * k)],
        }
    return {
        "t1": [(1 + i, 8 * k - i) for i in range(2 * k - 1)],
        "t2": [(2 * k + 1 + i, 6 * k + 1 - i) for i in range(k)],
        "t3": [(3 * k + 1 + i, 5 * k - 1 - i) for i in range(k - 1)],
        "tbar": [(0, 2 * k), (4 * k, 8 * k + 1), (5 * k, 5 * k + 1)],
    }


def t_matching(n: int) -> Matching:
    """
    An RPM of K•_n for n ≡ 0 or 2 (mod 8).

    Raises:
        DomainError: For odd n, and for n ≡ 4 or 6 (mod 8) where no RPM exists.
    """
    if n % 2:
        raise DomainError(f"t_matching builds RPMs for even n only, got n={n}")
    if n % 8 in (4, 6):
        raise DomainError(f"no RPM exists in K•_{n}: n ≡ {n % 8} (mod 8)")
    if n == 0:
        return Matching(0)
    if n == 2:
        return Matching(2, ((0, 1),))

    parts = t_parts(n)
    edges = parts["t1"] + parts["t2"] + parts["t3"] + parts["tbar"]
    return Matching(n, tuple(edges))


def embedding_base(n: int) -> int:
    """Offset of the embedded sub-matching: 4k, 4k+2, 4k+3, 4k+5 for n ≡ 1, 3, 5, 7 (mod 8)."""
    k, r = residue_split(n)
    return 4 * k + {1: 0, 3: 2, 5: 3, 7: 5}[r]


def embed_even(n: int, sub: Matching) -> List[Edge]:
    """Place sub on the even-spaced vertices base, base+2, ... of K•_n."""
    base = embedding_base(n)
    return [(base + 2 * i, base + 2 * j) for i, j in sub.edges]


def arch_and_slide(n: int) -> Tuple[List[Edge], List[Edge]]:
    """The fixed arch and slide parts of the odd-n construction."""
    if n % 2 == 0 or n < 1:
        raise DomainError(f"the ARS construction needs odd n >= 1, got n={n}")
    if n == 1:
        return [], []

    k, r = residue_split(n)
    if r in (1, 3):
        arch = [(i, 2 * k - 1 - i) for i in range(k)]
    else:
        arch = [(i, 2 * k + 1 - i) for i in range(k + 1)]

    if r == 1:
        slide = [(2 * k + i, 4 * k + 1 + 2 * i) for i in range(2 * k)]
    elif r == 3:
        slide = [(2 * k + i, 4 * k + 1 + 2 * i) for i in range(2 * k + 1)]
    elif r == 5:
        slide = [(2 * k + 2 + i, 4 * k + 4 + 2 * i) for i in range(2 * k + 1)]
    else:
        slide = [(2 * k + 2 + i, 4 * k + 4 + 2 * i) for i in range(2 * k + 2)]
    return arch, slide


def ars_parts(n: int) -> Dict[str, List[Edge]]:
    """Arch, slide and embedded parts of the ARS matching of K•_n."""
    arch, slide = arch_and_slide(n)
    if n == 1:
        return {"arch": [], "slide": [], "embedded": []}
    k, _ = residue_split(n)
    return {"arch": arch, "slide": slide, "embedded": embed_even(n, ars(2 * k + 1))}


def ars(n: int) -> Matching:
    """
    The arch-recursive-slide matching of K•_n for odd n.

    The embedded part is ars(2k+1) spread over even offsets, so the recursion
    is O(log n) deep.

    Raises:
        DomainError: For even n.
    """
    parts = ars_parts(n)
    return Matching(n, tuple(parts["arch"] + parts["slide"] + parts["embedded"]))
