"""
Print the headline numbers of the package: family sizes, the sizes with no
RPM, and the small-n census. Run from the repository root:

    python scripts/reproduce_tables.py [--census-max 13] [--jobs 4]
"""
import argparse
import os
import sys

from rich.table import Table

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.oracle import census, enumerate_rpms  # noqa: E402
from src.family import family  # noqa: E402
from src.utils import stderr_console as console  # noqa: E402

FAMILY_SIZES = (7, 9, 25, 33, 97, 129, 385, 513, 1537, 2049)


def family_table() -> Table:
    table = Table(title="Family sizes", header_style="bold magenta")
    table.add_column("n", justify="right")
    table.add_column("members", justify="right")
    for n in FAMILY_SIZES:
        table.add_row(str(n), str(family(n).count))
    return table


def nonexistence_table(max_n: int, jobs: int) -> Table:
    table = Table(title="Even n without an RPM", header_style="bold magenta")
    table.add_column("n", justify="right")
    table.add_column("n mod 8", justify="right")
    table.add_column("RPMs", justify="right")
    for n in range(2, max_n + 1, 2):
        found = enumerate_rpms(n, limit=1, max_n=max_n, jobs=jobs)
        table.add_row(str(n), str(n % 8), "none" if not found else "yes")
    return table


def census_table(max_n: int, jobs: int) -> Table:
    table = Table(title="Census", header_style="bold magenta")
    table.add_column("n", justify="right")
    table.add_column("RPMs", justify="right")
    table.add_column("N-RPM classes", justify="right")
    table.add_column("family", justify="right")
    for n in range(1, max_n + 1):
        report = census(n, max_n=max_n, jobs=jobs)
        members = str(family(n).count) if n % 2 else "-"
        table.add_row(str(n), str(report.rpm_count), str(report.class_count), members)
    return table


def main():
    parser = argparse.ArgumentParser(description="Reproduce the package's summary tables.")
    parser.add_argument("--census-max", type=int, default=13)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    with console.status("[bold blue]Building families...[/bold blue]", spinner="dots"):
        families = family_table()
    console.print(families)

    with console.status("[bold magenta]Searching even sizes...[/bold magenta]", spinner="arc"):
        missing = nonexistence_table(16, args.jobs)
    console.print(missing)

    with console.status("[bold magenta]Enumerating small sizes...[/bold magenta]", spinner="arc"):
        small = census_table(args.census_max, args.jobs)
    console.print(small)


if __name__ == "__main__":
    main()
