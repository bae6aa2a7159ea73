"""
Recursive families of cuttable RPMs with pairwise different N-RPMs.

family(n) keeps the arch and slide parts of the ARS matching fixed and
varies the embedded sub-matching over every member M of family(2k+1) and
its variants f(M), rev(M) and g(M).
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from src.constructions import arch_and_slide, cuttable_kirkman_rotations, embed_even
from src.graph_core import DomainError, Edge, Matching, is_cuttable, reverse, rotate
from src.utils import odd_rotation_step, residue_split

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RpmFamily:
    """Deduplicated members of the family for odd n, in canonical order."""
    n: int
    members: Tuple[Matching, ...]

    @property
    def count(self) -> int:
        return len(self.members)

    def to_dict(self, count_only: bool = False) -> Dict[str, object]:
        payload: Dict[str, object] = {"n": self.n, "count": self.count}
        if not count_only:
            payload["members"] = [m.to_dict() for m in self.members]
        return payload


def _require_odd(m: Matching, operation: str) -> None:
    if m.n % 2 == 0:
        raise DomainError(f"{operation} is defined for odd n only, got n={m.n}")


def f_op(m: Matching) -> Matching:
    """rotate(m, -2k) for n = 8k+1, 8k+3; rotate(m, -2k-2) for n = 8k+5, 8k+7."""
    _require_odd(m, "f")
    return rotate(m, -odd_rotation_step(m.n))


def g_op(m: Matching) -> Matching:
    """rotate(reverse(m), 2k) or rotate(reverse(m), 2k+2), split like f_op."""
    _require_odd(m, "g")
    return rotate(reverse(m), odd_rotation_step(m.n))


def xi3_embed(n: int, m: Matching) -> FrozenSet[Edge]:
    """
    Embed a cuttable RPM m of K•_{2k+1} into K•_n on the vertices
    base, base+2, ..., base+4k.

    Raises:
        DomainError: If n is not odd >= 3, m has the wrong size, or m is not a
            cuttable RPM.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"the embedding needs odd n >= 3, got n={n}")
    k, _ = residue_split(n)
    if m.n != 2 * k + 1:
        raise DomainError(f"K•_{n} embeds matchings of K•_{2 * k + 1}, got one of K•_{m.n}")
    if not is_cuttable(m):
        raise DomainError(f"only cuttable RPMs can be embedded, {list(map(list, m.edges))} is not")
    return frozenset(embed_even(n, m))


def compose(n: int, sub: Matching) -> Matching:
    """Arch and slide of K•_n together with the embedded sub-matching."""
    arch, slide = arch_and_slide(n)
    return Matching(n, tuple(arch + slide + sorted(xi3_embed(n, sub))))


def variants(m: Matching) -> Tuple[Matching, Matching, Matching, Matching]:
    return m, f_op(m), reverse(m), g_op(m)


def family(n: int, kirkman_seeds: bool = False) -> RpmFamily:
    """
    The recursive family of cuttable RPMs of K•_n.

    Args:
        n (int): Odd graph size.
        kirkman_seeds (bool): Also embed the cuttable Kirkman rotations of
            K•_{2k+1} next to the recursive members.

    Raises:
        DomainError: For even n.
    """
    if n < 1 or n % 2 == 0:
        raise DomainError(f"families exist for odd n >= 1 only, got n={n}")
    if n == 1:
        return RpmFamily(1, (Matching(1),))

    k, _ = residue_split(n)
    pool = family(2 * k + 1, kirkman_seeds).members
    candidates: List[Matching] = [variant for sub in pool for variant in variants(sub)]
    if kirkman_seeds:
        # The two rotations are each other's reversal; f and g of them are
        # plain Kirkman rotations, which are not cuttable.
        candidates.extend(cuttable_kirkman_rotations(2 * k + 1))
        # Seeded members have no cuttability guarantee for their variants.
        candidates = [sub for sub in candidates if is_cuttable(sub)]

    seen = set()
    members: List[Matching] = []
    for sub in candidates:
        member = compose(n, sub)
        if member not in seen:
            seen.add(member)
            members.append(member)

    logger.debug("family(%d): %d members from %d sub-matchings", n, len(members), len(pool))
    return RpmFamily(n, tuple(sorted(members)))
