"""
Round-robin schedules from rainbow near-perfect matchings.

For n teams and an RPM m of K•_{n-1}, round i is rotate(m, i) plus a game
between the hub team n-1 and the vertex that rotation leaves uncovered.
Because m uses every color exactly once, the n-1 rotations cover every
pair of K_{n-1} exactly once.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.graph_core import DomainError, Edge, Matching, require_rpm, reverse, rotate

logger = logging.getLogger(__name__)

VARIANTS = ("direct", "reversed")


class ScheduleInvalid(RuntimeError):
    """A generated schedule failed validation."""


@dataclass(frozen=True)
class Schedule:
    """
    teams: even number of teams; rounds: games per round as (a, b) with a < b.

    Rounds are not validated on construction so that broken schedules read
    from files can still be reported on by validate_schedule.
    """
    teams: int
    rounds: Tuple[Tuple[Edge, ...], ...] = field(default=())

    def __post_init__(self):
        normalized = tuple(
            tuple(sorted((min(a, b), max(a, b)) for a, b in games))
            for games in self.rounds
        )
        object.__setattr__(self, 'rounds', normalized)

    def to_dict(self) -> dict:
        return {
            "teams": self.teams,
            "rounds": [[list(game) for game in games] for games in self.rounds],
        }


@dataclass(frozen=True)
class Violation:
    kind: str
    round: Optional[int]
    detail: Tuple[int, ...]
    message: str


def unmatched_vertex(m: Matching) -> int:
    """
    The single vertex of K•_n not covered by m.

    Raises:
        DomainError: If zero or several vertices are uncovered.
    """
    uncovered = sorted(set(range(m.n)) - m.vertices())
    if len(uncovered) != 1:
        raise DomainError(
            f"expected exactly one uncovered vertex in K•_{m.n}, found {len(uncovered)}"
        )
    return uncovered[0]


def schedule_from_rpm(m: Matching, variant: str = "direct") -> Schedule:
    """
    Build the n-1 rounds for n = m.n + 1 teams.

    variant='direct' rotates m itself; variant='reversed' rotates reverse(m).
    The hub team n-1 always plays the vertex left uncovered in that round.

    Raises:
        DomainError: If m is not a rainbow near-perfect matching or the
            variant is unknown.
    """
    if variant not in VARIANTS:
        raise DomainError(f"unknown schedule variant {variant!r}, expected one of {VARIANTS}")
    if m.n % 2 == 0:
        raise DomainError(f"schedules need a near-perfect matching of odd K•_n, got n={m.n}")
    require_rpm(m, "schedule_from_rpm")

    base = m if variant == "direct" else reverse(m)
    hub = m.n
    anchor = unmatched_vertex(base)

    rounds = []
    for i in range(m.n):
        games = rotate(base, i).edges + (((anchor + i) % m.n, hub),)
        rounds.append(games)

    schedule = Schedule(teams=m.n + 1, rounds=tuple(rounds))
    logger.debug("built %s schedule for %d teams", variant, schedule.teams)
    return schedule


def validate_schedule(s: Schedule) -> List[Violation]:
    """
    Check both round-robin constraints. An empty list means the schedule is
    feasible; rounds in messages are 1-indexed.
    """
    violations: List[Violation] = []
    teams = s.teams

    if len(s.rounds) != teams - 1:
        violations.append(Violation(
            "round_count", None, (len(s.rounds),),
            f"expected {teams - 1} rounds for {teams} teams, found {len(s.rounds)}",
        ))

    pair_rounds = {}
    for index, games in enumerate(s.rounds, start=1):
        appearances = Counter()
        for a, b in games:
            if a == b or not (0 <= a < teams and 0 <= b < teams):
                violations.append(Violation(
                    "invalid_game", index, (a, b),
                    f"round {index}: game {{{a}, {b}}} is not a game between two of the {teams} teams",
                ))
                continue
            appearances[a] += 1
            appearances[b] += 1
            if (a, b) in pair_rounds:
                violations.append(Violation(
                    "pair_repeated", index, (a, b),
                    f"round {index}: teams {a} and {b} already met in round {pair_rounds[(a, b)]}",
                ))
            else:
                pair_rounds[(a, b)] = index

        for team in range(teams):
            if appearances[team] == 0:
                violations.append(Violation(
                    "team_idle", index, (team,), f"round {index}: team {team} does not play",
                ))
            elif appearances[team] > 1:
                violations.append(Violation(
                    "team_double_booked", index, (team,),
                    f"round {index}: team {team} plays {appearances[team]} games",
                ))

    for a in range(teams):
        for b in range(a + 1, teams):
            if (a, b) not in pair_rounds:
                violations.append(Violation(
                    "pair_missing", None, (a, b), f"teams {a} and {b} never meet",
                ))
    return violations


def ensure_valid(s: Schedule) -> Schedule:
    """Return s unchanged, or raise ScheduleInvalid naming the first violation."""
    violations = validate_schedule(s)
    if violations:
        raise ScheduleInvalid(f"{len(violations)} violations, first: {violations[0].message}")
    return s


def schedule_rounds_as_set(s: Schedule) -> FrozenSet[Tuple[Edge, ...]]:
    return frozenset(s.rounds)


def rounds_from_games(teams: int, games: Sequence[Tuple[int, int, int]]) -> Schedule:
    """Group (round, a, b) rows, rounds 1-indexed, into a Schedule."""
    if not games:
        return Schedule(teams=teams)
    last = max(r for r, _, _ in games)
    grouped: List[List[Edge]] = [[] for _ in range(last)]
    for r, a, b in games:
        if r < 1:
            raise DomainError(f"round numbers start at 1, got {r}")
        grouped[r - 1].append((a, b))
    return Schedule(teams=teams, rounds=tuple(tuple(g) for g in grouped))
