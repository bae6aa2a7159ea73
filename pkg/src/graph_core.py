"""
The circular-distance colored complete graph K•_n, modelled by n alone.

Vertices are 0..n-1 and edge {i, j} gets color index min(|i-j|, n-|i-j|).
A Matching carries its n so rotation, reversal and coloring are always
well defined.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class DomainError(ValueError):
    """An input violates a precondition of a matching operation."""


def canonical_edge(n: int, u: int, v: int) -> Edge:
    """
    Validate an edge of K•_n and return it as (min, max).

    Raises:
        DomainError: On loops or endpoints outside 0..n-1.
    """
    if isinstance(u, bool) or isinstance(v, bool) or not isinstance(u, int) or not isinstance(v, int):
        raise DomainError(f"edge endpoints must be integers, got {{{u!r}, {v!r}}}")
    if u == v:
        raise DomainError(f"edge {{{u}, {v}}} is a loop")
    if not (0 <= u < n and 0 <= v < n):
        raise DomainError(f"edge {{{u}, {v}}} has an endpoint outside 0..{n - 1}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class Matching:
    """
    A set of vertex-disjoint edges of K•_n.

    Edges are stored as (min, max) pairs in lexicographic order, so equality,
    hashing and ordering compare n first and then the edge sets.
    """
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise DomainError(f"graph size must be a nonnegative integer, got {self.n!r}")

        canon = []
        for pair in self.edges:
            pair = tuple(pair)
            if len(pair) != 2:
                raise DomainError(f"an edge needs exactly two endpoints, got {list(pair)}")
            canon.append(canonical_edge(self.n, pair[0], pair[1]))
        canon.sort()

        covered = set()
        for u, v in canon:
            for x in (u, v):
                if x in covered:
                    raise DomainError(f"vertex {x} is covered by more than one edge")
                covered.add(x)

        object.__setattr__(self, 'edges', tuple(canon))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        u, v = edge
        return (min(u, v), max(u, v)) in self.edges

    def vertices(self) -> FrozenSet[int]:
        return frozenset(x for edge in self.edges for x in edge)

    def colors(self) -> List[int]:
        """Color index of every edge, in edge order."""
        return [color_index(self.n, edge) for edge in self.edges]

    def edge_of_color(self) -> Dict[int, Edge]:
        """
        Map color index -> edge. Only meaningful for rainbow matchings; with
        repeated colors the last edge wins.
        """
        return {color_index(self.n, edge): edge for edge in self.edges}

    def to_dict(self) -> Dict[str, object]:
        return {"n": self.n, "edges": [list(edge) for edge in self.edges]}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Matching":
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise DomainError("a matching needs the keys 'n' and 'edges'")
        edges = data["edges"]
        if not isinstance(edges, list):
            raise DomainError("'edges' must be a list of [u, v] pairs")
        for pair in edges:
            if not isinstance(pair, (list, tuple)):
                raise DomainError(f"edge {pair!r} is not a [u, v] pair")
        return cls(data["n"], tuple(tuple(pair) for pair in edges))


def color_index(n: int, edge: Edge) -> int:
    """
    Circular-distance color of an edge: min(|u-v|, n-|u-v|).

    Raises:
        DomainError: If n < 2 or the edge is not an edge of K•_n.
    """
    if n < 2:
        raise DomainError(f"K•_{n} has no edges to color")
    u, v = canonical_edge(n, edge[0], edge[1])
    d = v - u
    return min(d, n - d)


def rotate(m: Matching, alpha: int) -> Matching:
    """
    The alpha-rotated matching: every {i, j} becomes {(i+alpha) mod n, (j+alpha) mod n}.
    Negative and oversized alpha are reduced mod n.
    """
    n = m.n
    if n == 0:
        return m
    shift = alpha % n
    if shift == 0:
        return m
    return Matching(n, tuple(((u + shift) % n, (v + shift) % n) for u, v in m.edges))


def reverse(m: Matching) -> Matching:
    """The reversed matching: every {i, j} becomes {n-1-i, n-1-j}."""
    last = m.n - 1
    return Matching(m.n, tuple((last - u, last - v) for u, v in m.edges))


def covered_colors(m: Matching) -> FrozenSet[int]:
    return frozenset(m.colors()) if m.n >= 2 else frozenset()


def rpm_violation(m: Matching) -> Optional[str]:
    """
    Describe the first reason m is not a rainbow (near-)perfect matching,
    or return None when it is one.
    """
    expected = m.n // 2
    if len(m) != expected:
        return f"has {len(m)} edges, an RPM of K•_{m.n} needs {expected}"
    seen: Dict[int, Edge] = {}
    for edge in m.edges:
        k = color_index(m.n, edge)
        if k in seen:
            return f"color c_{k} is used by both {list(seen[k])} and {list(edge)}"
        seen[k] = edge
    return None


def is_rpm(m: Matching) -> bool:
    """True iff |m| = floor(n/2) and all edge colors are distinct."""
    if len(m) != m.n // 2:
        return False
    colors = m.colors() if m.n >= 2 else []
    return len(set(colors)) == len(colors)


def require_rpm(m: Matching, operation: str) -> None:
    problem = rpm_violation(m)
    if problem is not None:
        raise DomainError(f"{operation} needs a rainbow perfect matching; the input {problem}")


def is_cuttable(m: Matching) -> bool:
    """
    True iff every edge {i, j} of the RPM m satisfies |i-j| <= n/2.

    Raises:
        DomainError: If m is not an RPM.
    """
    require_rpm(m, "is_cuttable")
    return all(2 * (v - u) <= m.n for u, v in m.edges)


def iter_edges(n: int) -> Iterable[Edge]:
    """All edges of K•_n in canonical order."""
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)
