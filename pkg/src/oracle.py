"""
Brute-force ground truth for small n.

enumerate_rpms backtracks over the color classes of K•_n, largest color
first, picking one vertex-disjoint edge per class. Nothing is reduced by
symmetry during the search; classes are formed afterwards with normalize so
the canon module is cross-checked independently.
"""
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from src.canon import normalize, orbit
from src.constructions import kirkman
from src.graph_core import DomainError, Edge, Matching, color_index, iter_edges, reverse, rotate

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 16


class EnumerationRefused(DomainError):
    """n is above the enumeration guard and no override was given."""


class OracleInconsistency(RuntimeError):
    """The RPM count disagrees with the sum of class orbit sizes."""


@dataclass(frozen=True)
class EnumerationReport:
    n: int
    rpm_count: int
    class_count: int
    class_representatives: Tuple[Matching, ...]
    orbit_sizes: Tuple[int, ...]

    def orbit_sum_consistent(self) -> bool:
        return sum(self.orbit_sizes) == self.rpm_count

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "rpm_count": self.rpm_count,
            "class_count": self.class_count,
            "representatives": [m.to_dict() for m in self.class_representatives],
            "orbit_sizes": list(self.orbit_sizes),
        }


def color_classes(n: int) -> Dict[int, Tuple[Edge, ...]]:
    """Edges of K•_n grouped by color index, each group in canonical order."""
    classes: Dict[int, List[Edge]] = {k: [] for k in range(1, n // 2 + 1)}
    if n >= 2:
        for edge in iter_edges(n):
            classes[color_index(n, edge)].append(edge)
    return {k: tuple(edges) for k, edges in classes.items()}


def _search_branch(n: int, first: Edge, limit: Optional[int]) -> List[Tuple[Edge, ...]]:
    """All RPMs whose largest-color edge is `first`, in search order."""
    classes = color_classes(n)
    order = sorted(classes, reverse=True)
    found: List[Tuple[Edge, ...]] = []
    chosen: List[Edge] = [first]

    def extend(depth: int, used: int) -> bool:
        if depth == len(order):
            found.append(tuple(chosen))
            return limit is not None and len(found) >= limit
        for u, v in classes[order[depth]]:
            bits = (1 << u) | (1 << v)
            if used & bits:
                continue
            chosen.append((u, v))
            stop = extend(depth + 1, used | bits)
            chosen.pop()
            if stop:
                return True
        return False

    extend(1, (1 << first[0]) | (1 << first[1]))
    return found


def _check_bound(n: int, max_n: int, force: bool) -> None:
    if n < 0:
        raise DomainError(f"graph size must be nonnegative, got {n}")
    if n > max_n and not force:
        raise EnumerationRefused(
            f"refusing to enumerate K•_{n}: above the bound n <= {max_n} (use force to override)"
        )


def enumerate_rpms(
    n: int,
    limit: Optional[int] = None,
    max_n: int = DEFAULT_MAX_N,
    force: bool = False,
    jobs: int = 1,
) -> List[Matching]:
    """
    Every RPM of K•_n in canonical order.

    Args:
        n (int): Graph size.
        limit (int, optional): Stop after this many RPMs in search order.
        max_n (int): Refuse larger n unless force is set.
        force (bool): Override the size guard.
        jobs (int): Worker processes for the top-level branches. The result
            is identical to a sequential run.

    Raises:
        EnumerationRefused: If n > max_n and force is not set.
    """
    _check_bound(n, max_n, force)
    if limit is not None and limit <= 0:
        return []
    if n < 2:
        return [Matching(n)]

    top = max(color_classes(n))
    branches = color_classes(n)[top]

    per_branch: List[List[Tuple[Edge, ...]]] = [[] for _ in branches]
    if jobs > 1 and len(branches) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = {
                executor.submit(_search_branch, n, first, limit): index
                for index, first in enumerate(branches)
            }
            for future in as_completed(futures):
                per_branch[futures[future]] = future.result()
    else:
        remaining = limit
        for index, first in enumerate(branches):
            per_branch[index] = _search_branch(n, first, remaining)
            if remaining is not None:
                remaining -= len(per_branch[index])
                if remaining <= 0:
                    break

    merged: List[Tuple[Edge, ...]] = [edges for found in per_branch for edges in found]
    if limit is not None:
        merged = merged[:limit]

    result = sorted(Matching(n, edges) for edges in merged)
    logger.info("K•_%d: %d RPMs enumerated", n, len(result))
    return result


def census(n: int, max_n: int = DEFAULT_MAX_N, force: bool = False, jobs: int = 1) -> EnumerationReport:
    """
    Enumerate all RPMs of K•_n and group them by their N-RPM.

    Raises:
        EnumerationRefused: As enumerate_rpms.
        OracleInconsistency: If the class orbits do not add up to the RPM count.
    """
    rpms = enumerate_rpms(n, max_n=max_n, force=force, jobs=jobs)
    representatives = sorted({normalize(m) for m in rpms})
    orbit_sizes = tuple(len(orbit(rep)) for rep in representatives)

    report = EnumerationReport(
        n=n,
        rpm_count=len(rpms),
        class_count=len(representatives),
        class_representatives=tuple(representatives),
        orbit_sizes=orbit_sizes,
    )
    if not report.orbit_sum_consistent():
        raise OracleInconsistency(
            f"K•_{n}: {report.rpm_count} RPMs but class orbits sum to {sum(orbit_sizes)}"
        )
    return report


def is_self_reversed(m: Matching) -> bool:
    """True iff rotate(m, a) == reverse(m) for some a."""
    mirrored = reverse(m)
    return any(rotate(m, alpha) == mirrored for alpha in range(max(m.n, 1)))


def kirkman_characterization_counterexamples(
    n: int, max_n: int = DEFAULT_MAX_N, force: bool = False
) -> List[Matching]:
    """
    Self-reversed RPMs of K•_n that are not rotations of the Kirkman matching.

    Raises:
        DomainError: For even n.
    """
    if n % 2 == 0:
        raise DomainError(f"the Kirkman characterization is checked for odd n, got n={n}")
    _check_bound(n, max_n, force)
    kirkman_rotations = {rotate(kirkman(n), beta) for beta in range(max(n, 1))}
    return [
        m for m in enumerate_rpms(n, max_n=max_n, force=force)
        if is_self_reversed(m) and m not in kirkman_rotations
    ]


def verify_property9(n: int, max_n: int = DEFAULT_MAX_N, force: bool = False) -> bool:
    """True iff every self-reversed RPM of K•_n is a rotation of the Kirkman matching."""
    return not kirkman_characterization_counterexamples(n, max_n=max_n, force=force)
