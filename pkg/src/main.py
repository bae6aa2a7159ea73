import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from rich.markup import escape
from rich.table import Table

from src import __version__
from src.config_manager import ConfigManager
from src.formats import Codec, format_from_path
from src.graph_core import DomainError, Matching, covered_colors, is_cuttable, rpm_violation
from src.utils import configure_logging, stderr_console as console

logger = logging.getLogger("RainbowSched")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

METHODS = ("kirkman", "t", "ars")


def build_matching(n: int, method: str) -> Matching:
    from src.constructions import ars, is_kirkman_rainbow, kirkman, t_matching

    if method == "kirkman":
        if not is_kirkman_rainbow(n):
            console.print(f"[yellow]⚠ The Kirkman matching of K•_{n} is not rainbow (n is even and not 2).[/yellow]")
        return kirkman(n)
    if method == "t":
        return t_matching(n)
    return ars(n)


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def load_settings(args: argparse.Namespace) -> Dict[str, Any]:
    """
    Load the layered configuration, check its value types and install logging.

    Raises:
        DomainError: On a setting of the wrong type or a log file that cannot be opened.
    """
    config_manager = ConfigManager(config_path=args.config) if args.config else ConfigManager()
    config = config_manager.load_config()
    try:
        config['oracle']['max_n'] = int(config['oracle']['max_n'])
        config['oracle']['jobs'] = int(config['oracle']['jobs'])
        indent = config['output']['json_indent']
        config['output']['json_indent'] = None if indent is None else int(indent)
    except (TypeError, ValueError) as e:
        raise DomainError(f"invalid setting in {config_manager.config_path}: {e}") from e

    log_file = args.log_file or config['logging']['file'] or None
    try:
        configure_logging(args.log_level or config['logging']['level'], log_file)
    except OSError as e:
        raise DomainError(f"cannot open log file {log_file}: {e}") from e

    logger.debug("running %s with %s", args.command, config_manager.config_path)
    return config


def cmd_generate(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    matching = build_matching(args.n, args.method)
    emit(codec.dumps(matching.to_dict()))
    return EXIT_OK


def cmd_normalize(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    from src.canon import normalize

    matching = codec.read_matching(args.input)
    emit(codec.dumps(normalize(matching).to_dict()))
    return EXIT_OK


def verify_schedule_file(path: str, codec: Codec) -> int:
    from src.scheduler import validate_schedule

    schedule = codec.read_schedule(path)
    violations = validate_schedule(schedule)
    if not violations:
        console.print(f"[bold green]✔ Verified: {schedule.teams} teams, {len(schedule.rounds)} rounds.[/bold green]")
        return EXIT_OK

    table = Table(title=f"{len(violations)} violations", show_header=True, header_style="bold magenta")
    table.add_column("Kind", style="dim")
    table.add_column("Round", justify="right")
    table.add_column("Problem")
    for v in violations:
        table.add_row(v.kind, "-" if v.round is None else str(v.round), escape(v.message))
    console.print(table)
    console.print("[bold red]❌ Not a valid round-robin schedule.[/bold red]")
    return EXIT_FAILED


def cmd_verify(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    from src.canon import is_normalized

    if args.schedule is not None:
        if args.cuttable:
            raise DomainError("--cuttable applies to matching files, not schedules")
        return verify_schedule_file(args.schedule, codec)

    matching = codec.read_matching(args.input)
    problem = rpm_violation(matching)
    if problem is not None:
        console.print(f"[bold red]❌ Not an RPM: the matching {escape(problem)}.[/bold red]")
        return EXIT_FAILED

    cuttable = is_cuttable(matching)
    table = Table(title=f"K•_{matching.n}", show_header=True, header_style="bold magenta")
    table.add_column("Check", style="dim")
    table.add_column("Result", style="bold")
    table.add_row("Edges", str(len(matching)))
    table.add_row("Colors", f"{len(covered_colors(matching))} of {matching.n // 2}")
    table.add_row("Rainbow", "[green]yes[/green]")
    table.add_row("Cuttable", "[green]yes[/green]" if cuttable else "no")
    table.add_row("Normalized", "yes" if is_normalized(matching) else "no")
    console.print(table)

    if args.cuttable and not cuttable:
        console.print("[bold red]❌ The RPM is not cuttable: some edge has |i-j| > n/2.[/bold red]")
        return EXIT_FAILED
    console.print("[bold green]✔ Verified.[/bold green]")
    return EXIT_OK


def cmd_family(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    from src.family import family

    with console.status(f"[bold blue]Building the family for K•_{args.n}...[/bold blue]", spinner="dots"):
        result = family(args.n, kirkman_seeds=args.kirkman_seeds)
    console.print(f"[green]✔ {result.count} members[/green]")
    emit(codec.dumps(result.to_dict(count_only=args.count_only)))
    return EXIT_OK


def _oracle_options(args: argparse.Namespace, config: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "max_n": config['oracle']['max_n'],
        "force": args.force,
        "jobs": args.jobs if args.jobs is not None else config['oracle']['jobs'],
    }


def _print_report_summary(report) -> None:
    table = Table(title=f"Census of K•_{report.n}", show_header=True, header_style="bold magenta")
    table.add_column("Metric", style="dim")
    table.add_column("Value", style="bold")
    table.add_row("RPMs", str(report.rpm_count))
    table.add_row("N-RPM classes", str(report.class_count))
    table.add_row("Orbit sum", str(sum(report.orbit_sizes)))
    console.print(table)


def cmd_census(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    from src.oracle import census

    with console.status(f"[bold magenta]Enumerating RPMs of K•_{args.n}...[/bold magenta]", spinner="arc"):
        report = census(args.n, **_oracle_options(args, config))
    _print_report_summary(report)
    emit(codec.dumps(report.to_dict()))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    from src.oracle import enumerate_rpms

    if args.census:
        if args.limit is not None:
            raise DomainError("--limit cannot be combined with --census")
        return cmd_census(args, codec, config)

    with console.status(f"[bold magenta]Enumerating RPMs of K•_{args.n}...[/bold magenta]", spinner="arc"):
        rpms = enumerate_rpms(args.n, limit=args.limit, **_oracle_options(args, config))
    console.print(f"[green]✔ {len(rpms)} RPMs[/green]")
    emit(codec.dumps({
        "n": args.n,
        "rpm_count": len(rpms),
        "matchings": [m.to_dict() for m in rpms],
    }))
    return EXIT_OK


def cmd_schedule(args: argparse.Namespace, codec: Codec, config: Dict[str, Any]) -> int:
    from src.scheduler import ensure_valid, schedule_from_rpm

    # Flags first, computation after.
    if args.input is None and args.teams is None:
        raise DomainError("--method needs --teams")
    if args.teams is not None and (args.teams < 2 or args.teams % 2):
        raise DomainError(f"--teams must be an even number >= 2, got {args.teams}")
    fmt = args.format or (format_from_path(args.out) if args.out else 'json')

    if args.input is not None:
        matching = codec.read_matching(args.input)
        if args.teams is not None and args.teams != matching.n + 1:
            raise DomainError(f"a matching of K•_{matching.n} schedules {matching.n + 1} teams, not {args.teams}")
    else:
        matching = build_matching(args.teams - 1, args.method)

    schedule = ensure_valid(schedule_from_rpm(matching, args.variant))
    text = codec.render_schedule(schedule, fmt)
    if args.out:
        codec.write_text(text, args.out)
        console.print(f"[green]✔ {schedule.teams} teams, {len(schedule.rounds)} rounds written to {args.out}[/green]")
    else:
        emit(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowsched",
        description="Rainbow perfect matchings of circular-distance colored complete graphs and round-robin schedules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="YAML configuration file (default: per-user config.yaml).")
    parser.add_argument("--log-level", help="Log level, overrides the configuration.")
    parser.add_argument("--log-file", help="Also append log records to this file.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="Construct a matching.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, required=True)
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("normalize", help="Print the N-RPM of a matching file.")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser("verify", help="Exit 0 if the file holds an RPM or a valid schedule, 1 otherwise.")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--in", dest="input", help="Matching JSON file.")
    target.add_argument("--schedule", help="Schedule CSV or JSON file.")
    p.add_argument("--cuttable", action="store_true", help="Also require the RPM to be cuttable.")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("family", help="Generate the recursive family for odd n.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--kirkman-seeds", action="store_true",
                   help="Also embed the cuttable Kirkman rotations of the sub-graph.")
    p.set_defaults(handler=cmd_family)

    for name, handler in (("enumerate", cmd_enumerate), ("census", cmd_census)):
        p = sub.add_parser(name, help="Exhaustively enumerate RPMs for small n.")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--force", action="store_true", help="Ignore the oracle size guard.")
        p.add_argument("--jobs", type=int, help="Worker processes (output does not change).")
        if name == "enumerate":
            p.add_argument("--census", action="store_true", help="Report classes instead of matchings.")
            p.add_argument("--limit", type=int)
        p.set_defaults(handler=handler)

    p = sub.add_parser("schedule", help="Build a round-robin schedule.")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--method", choices=METHODS)
    source.add_argument("--in", dest="input")
    p.add_argument("--teams", type=int)
    p.add_argument("--variant", choices=("direct", "reversed"), default="direct")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"))
    p.set_defaults(handler=cmd_schedule)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    handler: Callable[..., int] = args.handler
    try:
        config = load_settings(args)
        codec = Codec(json_indent=config['output']['json_indent'])
        return handler(args, codec, config)
    except DomainError as e:
        console.print(f"[bold red]error:[/bold red] {escape(str(e))}")
        return EXIT_USAGE
    except Exception:
        console.print_exception(show_locals=False)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
