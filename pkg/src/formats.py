import csv
import io
import json
import logging
import os
from typing import Any, Dict, Optional

from src.graph_core import DomainError, Matching
from src.scheduler import Schedule, rounds_from_games

logger = logging.getLogger(__name__)

SCHEDULE_FIELDS = ['round', 'team_a', 'team_b']


class FormatError(DomainError):
    """A file does not follow one of the matching, family, report or schedule formats."""


class Codec:
    """
    Reads and writes the JSON and CSV formats shared by every subcommand.
    Output is deterministic: content is already canonically ordered and keys
    are emitted in a fixed order.
    """

    def __init__(self, json_indent: Optional[int] = None):
        self.json_indent = json_indent
        self.encoding = 'utf-8'

    def dumps(self, payload: Dict[str, Any]) -> str:
        if self.json_indent:
            return json.dumps(payload, indent=self.json_indent)
        return json.dumps(payload, separators=(',', ':'))

    def load_json(self, path: str) -> Any:
        try:
            with open(path, 'r', encoding=self.encoding) as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise FormatError(f"{path} is not valid JSON: {e}") from e
        except OSError as e:
            raise FormatError(f"cannot read {path}: {e}") from e

    def read_matching(self, path: str) -> Matching:
        """
        Load a matching. Pairs given as [v, u] are normalized to [u, v];
        repeated vertices and out-of-range endpoints are rejected.
        """
        data = self.load_json(path)
        try:
            return Matching.from_dict(data)
        except DomainError as e:
            raise FormatError(f"{path}: {e}") from e

    def schedule_csv(self, schedule: Schedule) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=SCHEDULE_FIELDS, lineterminator='\n')
        writer.writeheader()
        for index, games in enumerate(schedule.rounds, start=1):
            for a, b in games:
                writer.writerow({'round': index, 'team_a': a, 'team_b': b})
        return buffer.getvalue()

    def schedule_json(self, schedule: Schedule) -> str:
        return self.dumps(schedule.to_dict())

    def render_schedule(self, schedule: Schedule, fmt: str) -> str:
        if fmt == 'csv':
            return self.schedule_csv(schedule)
        if fmt == 'json':
            return self.schedule_json(schedule) + '\n'
        raise FormatError(f"unknown schedule format {fmt!r}")

    def read_schedule(self, path: str) -> Schedule:
        """Load a schedule from CSV or JSON, chosen by extension."""
        fmt = format_from_path(path)
        if fmt == 'json':
            data = self.load_json(path)
            try:
                rounds = tuple(tuple((int(a), int(b)) for a, b in games) for games in data['rounds'])
                return Schedule(teams=int(data['teams']), rounds=rounds)
            except (KeyError, TypeError, ValueError) as e:
                raise FormatError(f"{path}: malformed schedule JSON ({e})") from e

        try:
            with open(path, 'r', encoding=self.encoding, newline='') as f:
                reader = csv.DictReader(f)
                if reader.fieldnames != SCHEDULE_FIELDS:
                    raise FormatError(f"{path}: expected header {','.join(SCHEDULE_FIELDS)}")
                rows = [(int(r['round']), int(r['team_a']), int(r['team_b'])) for r in reader]
        except FormatError:
            raise
        except (OSError, ValueError, TypeError) as e:
            raise FormatError(f"{path}: cannot read schedule CSV ({e})") from e

        teams = 1 + max((max(a, b) for _, a, b in rows), default=-1)
        return rounds_from_games(teams, rows)

    def write_text(self, text: str, path: str) -> None:
        try:
            with open(path, 'w', encoding=self.encoding, newline='') as f:
                f.write(text)
        except Exception as e:
            logger.error(f"Failed to write {path}: {e}")
            raise


def format_from_path(path: str, override: Optional[str] = None) -> str:
    if override:
        return override
    ext = os.path.splitext(path)[1].lower()
    if ext == '.csv':
        return 'csv'
    if ext == '.json':
        return 'json'
    raise FormatError(f"cannot tell the format of {path!r}: use a .csv or .json extension")

