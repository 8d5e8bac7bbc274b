"""Command-line interface.

Exit codes: 0 success, 1 property failure (``verify``), 2 usage or domain
error. All integers are read and written in decimal.
"""

import csv
import itertools
import json
import sys

import click

from . import enums
from .oracle import run_suite
from .tuplings import CANTOR, CANTOR_SWAPPED, DYADIC, FUNCTION_NAMES, RS2, make_tupling

PAIRINGS = {"cantor": CANTOR, "cantor-swapped": CANTOR_SWAPPED, "rs": RS2, "dyadic": DYADIC}
FAMILIES = {"rs": enums.rs_family, "fold-cantor": enums.fold_cantor_family}


class DomainError(click.ClickException):
    exit_code = 2


def _nat(text):
    text = text.strip()
    if not (text.isascii() and text.isdigit()):
        raise DomainError(f"expected a non-negative decimal integer, got {text!r}")
    return int(text)


def _resolve(name, dim):
    try:
        return make_tupling(name, dim)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _emit(as_json, output, text, **envelope):
    if as_json:
        click.echo(json.dumps({**envelope, "output": output}))
    else:
        click.echo(text)


fn_option = click.option("--fn", "fn", type=click.Choice(FUNCTION_NAMES), required=True)
dim_option = click.option("--dim", type=click.IntRange(min=1), default=2, show_default=True)
json_option = click.option("--json", "as_json", is_flag=True, help="Emit a JSON envelope.")
pairing_option = click.option(
    "--pairing", type=click.Choice(sorted(PAIRINGS)), default="rs", show_default=True
)


@click.group()
def main():
    """Exact pairing and tupling functions, shells, and enumerations."""


@main.command()
@fn_option
@dim_option
@json_option
@click.argument("coords", nargs=-1, required=True)
def encode(fn, dim, as_json, coords):
    """Encode COORDS to a single natural number."""
    f = _resolve(fn, dim)
    point = tuple(_nat(c) for c in coords)
    if len(point) != dim:
        raise DomainError(f"{fn} with --dim {dim} takes {dim} coordinates, got {len(point)}")
    try:
        code = f.encode(point)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(as_json, code, str(code), input=list(point), function=fn, dim=dim)


@main.command()
@fn_option
@dim_option
@json_option
@click.argument("code")
def decode(fn, dim, as_json, code):
    """Decode CODE to a point."""
    f = _resolve(fn, dim)
    z = _nat(code)
    try:
        point = f.decode(z)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(as_json, list(point), " ".join(map(str, point)), input=z, function=fn, dim=dim)


@main.command()
@click.argument("mode", type=click.Choice(["rank", "unrank"]))
@pairing_option
@json_option
@click.argument("arg")
def tree(mode, pairing, as_json, arg):
    """Rank an s-expression tree, or unrank an index to one."""
    f = PAIRINGS[pairing]
    if mode == "unrank":
        n = _nat(arg)
        out = enums.format_tree(enums.tree_unrank(n, f))
        _emit(as_json, out, out, input=n, function=pairing, dim=2)
    else:
        try:
            t = enums.parse_tree(arg)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        n = enums.tree_rank(t, f)
        _emit(as_json, n, str(n), input=arg, function=pairing, dim=2)


@main.command()
@click.argument("mode", type=click.Choice(["rank", "unrank"]))
@click.option("--scheme", type=click.Choice(["xi", "zeta"]), default="xi", show_default=True)
@pairing_option
@click.option(
    "--family",
    type=click.Choice(sorted(FAMILIES)),
    default="rs",
    show_default=True,
    help="Tupling family used by the zeta scheme.",
)
@json_option
@click.argument("arg")
def seq(mode, scheme, pairing, family, as_json, arg):
    """Rank a comma-separated sequence, or unrank an index to one."""
    f = PAIRINGS[pairing]
    g = FAMILIES[family]
    if mode == "unrank":
        n = _nat(arg)
        u = enums.seq_unrank_xi(n, f) if scheme == "xi" else enums.seq_unrank_zeta(n, f, g)
        _emit(as_json, list(u), enums.format_seq(u), input=n, function=pairing, dim=2)
    else:
        try:
            u = enums.parse_seq(arg)
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        n = enums.seq_rank_xi(u, f) if scheme == "xi" else enums.seq_rank_zeta(u, f, g)
        _emit(as_json, n, str(n), input=list(u), function=pairing, dim=2)


@main.command()
@fn_option
@dim_option
@click.option("--max", "grid_max", type=click.IntRange(min=0), default=3, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
def shells(fn, dim, grid_max, fmt):
    """Emit code and shell number for every point of the grid [0, MAX]^dim, in code order."""
    f = _resolve(fn, dim)
    if f.standard_shell is None:
        raise DomainError(f"{f.name} has no standard shell numbering")
    rows = sorted(
        (f.encode(p), p) for p in itertools.product(range(grid_max + 1), repeat=dim)
    )
    out = click.get_text_stream("stdout")
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow([f"x{i}" for i in range(1, dim + 1)] + ["code", "shell"])
        for code, p in rows:
            writer.writerow(list(p) + [code, f.standard_shell(p)])
    else:
        for code, p in rows:
            out.write(json.dumps({"point": list(p), "code": code, "shell": f.standard_shell(p)}) + "\n")


@main.command()
@click.option("--limit", type=click.IntRange(min=0), default=10 ** 4, show_default=True)
@json_option
def verify(limit, as_json):
    """Run the property suite on prefixes of length LIMIT."""
    verdicts = run_suite(limit)
    for v in verdicts:
        if as_json:
            click.echo(json.dumps({"property": v.name, "ok": v.ok, "checked": v.checked}))
        else:
            click.echo(v.line())
    failed = sum(not v for v in verdicts)
    summary = f"{len(verdicts) - failed}/{len(verdicts)} properties passed"
    if failed:
        click.echo(summary, err=True)
        sys.exit(1)
    if not as_json:
        click.echo(summary)


if __name__ == "__main__":
    main()
