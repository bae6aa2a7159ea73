import logging
from typing import Optional, Tuple

from rich.console import Console
from rich.logging import RichHandler

logger = logging.getLogger(__name__)

# Diagnostics only. Stdout carries data.
stderr_console = Console(stderr=True)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """
    Install the rich stderr handler and, optionally, a plain file handler.

    Args:
        level (str): Root log level name (DEBUG, INFO, WARNING, ...).
        log_file (str, optional): Append log records to this path as well.
    """
    handlers = [RichHandler(console=stderr_console, show_path=False, rich_tracebacks=True)]
    if log_file:
        file_handler = logging.FileHandler(log_file, mode='a')
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.WARNING),
        format="%(message)s",
        handlers=handlers,
        force=True,
    )


def residue_split(n: int) -> Tuple[int, int]:
    """
    Split n as 8k + r.

    The odd-n constructions and the f/g operators are all case-split on
    n mod 8 with k = n div 8.

    Returns:
        Tuple[int, int]: (k, r).
    """
    return divmod(n, 8)


def odd_rotation_step(n: int) -> int:
    """Rotation amount 2k (n = 8k+1, 8k+3) or 2k+2 (n = 8k+5, 8k+7)."""
    k, r = residue_split(n)
    return 2 * k if r in (1, 3) else 2 * k + 2
