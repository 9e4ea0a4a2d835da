"""``relcat`` command line.

Results go to stdout and logs to stderr. Exit status: 0 on success,
Holds or Equal; 1 on Fails, Unequal or an arithmetic difference (the
witness is printed); 2 on usage, parse and type errors.
"""
import asyncio
import functools
import json
import sys
from typing import Callable, Dict, List

import click

from src.calculus.formulas import Letter
from src.calculus.parser import parse_arrow_term, parse_equation, parse_formula
from src.calculus.pointed import Fails
from src.calculus.printer import render_term, render_type
from src.calculus.relations import Equal
from src.calculus.terms import Equation
from src.calculus.theories import Theory, random_axiom_instances
from src.calculus.typecheck import infer_type
from src.core.config import get_settings
from src.core.exceptions import RelcatError
from src.core.logging import setup_logging
from src.schemas.iso import ScanReportModel
from src.schemas.theories import AxiomCatalog
from src.services.coherence import CoherenceService
from src.services.conjecture_scan import ConjectureScanner
from src.services.iso_search import IsoService
from src.services.model_checker import ModelChecker

settings = get_settings()

EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_assignment(text: str) -> Dict[str, int]:
    """``p=3,q=4`` to ``{"p": 3, "q": 4}``."""
    result: Dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise click.BadParameter(f"expected name=value, got {item!r}")
        try:
            result[name.strip()] = int(value)
        except ValueError:
            raise click.BadParameter(f"{value!r} is not an integer")
        if result[name.strip()] < 0:
            raise click.BadParameter(f"{name.strip()} must be non-negative")
    return result


def parse_sizes(text: str) -> List[int]:
    """``1..3`` or ``1,2,3``."""
    try:
        if ".." in text:
            low, high = (int(x) for x in text.split("..", 1))
            sizes = list(range(low, high + 1))
        else:
            sizes = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise click.BadParameter(f"cannot read sizes from {text!r}")
    if not sizes or min(sizes) < 1:
        raise click.BadParameter("sizes must be positive")
    if max(sizes) > settings.RELCAT_SIZE_CAP:
        raise click.BadParameter(
            f"size {max(sizes)} is above RELCAT_SIZE_CAP={settings.RELCAT_SIZE_CAP}"
        )
    return sizes


def domain_errors(command: Callable) -> Callable:
    """Report workbench errors on stderr and exit with the usage status."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except RelcatError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


@click.group()
@click.option("--log-level", default=None, help="Override LOG_LEVEL for this run.")
@click.option("--ascii", "ascii_", is_flag=True, help="Print ASCII connectives.")
@click.pass_context
def cli(ctx: click.Context, log_level: str, ascii_: bool):
    """Workbench for relevant and symmetric monoidal closed categories."""
    setup_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["ascii"] = ascii_


@cli.command()
@click.argument("term")
@click.pass_context
@domain_errors
def typecheck(ctx: click.Context, term: str):
    """Print the type A ⊢ B of TERM."""
    arrow = infer_type(parse_arrow_term(term))
    click.echo(render_type(arrow.source, arrow.target, ctx.obj["ascii"]))


@cli.command(name="eval")
@click.argument("term")
@click.option("--val", "val", default="", help="Letter sizes, e.g. p=3,q=4.")
@click.pass_context
@domain_errors
def eval_(ctx: click.Context, term: str, val: str):
    """Print the table of TERM in pointed sets."""
    parsed = parse_arrow_term(term)
    arrow = infer_type(parsed)
    table = ModelChecker().evaluate(parsed, parse_assignment(val))
    click.echo(f"{render_type(arrow.source, arrow.target, ctx.obj['ascii'])}  "
               f"({table.dom.size} -> {table.cod.size})")
    for line in table.lines():
        click.echo(line)


@cli.command()
@click.argument("equation")
@click.option("--sizes", default=None, help="Sizes per letter, e.g. 1..3.")
@domain_errors
def check(equation: str, sizes: str):
    """Check EQUATION (lhs = rhs) under all small valuations."""
    lhs, rhs = parse_equation(equation)
    verdict = ModelChecker().check(Equation(lhs, rhs), parse_sizes(sizes) if sizes else None)
    if isinstance(verdict, Fails):
        sigma = ",".join(f"{k}={v}" for k, v in sorted(verdict.valuation.items()))
        click.echo(
            f"FAILS at {sigma}: element {verdict.element} "
            f"lhs={verdict.lhs_value} rhs={verdict.rhs_value}"
        )
        sys.exit(EXIT_FAILED)
    click.echo(
        f"HOLDS checked={verdict.checked} skipped={verdict.skipped}"
        + (" (sampled family)" if verdict.truncated else "")
    )


@cli.command()
@click.argument("left")
@click.argument("right")
@domain_errors
def releq(left: str, right: str):
    """Decide LEFT = RIGHT in the free relevant monoidal category."""
    verdict = CoherenceService().decide(parse_arrow_term(left), parse_arrow_term(right))
    if isinstance(verdict, Equal):
        click.echo("Equal")
        click.echo(f"  {verdict.relation}")
        return
    click.echo(f"Unequal ({verdict.reason})")
    click.echo(f"  {verdict.detail}")
    sys.exit(EXIT_FAILED)


@cli.command()
@click.argument("left")
@click.argument("right")
@click.option("--bound", default=4, show_default=True, type=click.IntRange(0, 8))
@click.option("--search-depth", default=0, type=click.IntRange(0, None),
              help="Also search for inverse arrows up to this depth.")
@click.pass_context
@domain_errors
def iso(ctx: click.Context, left: str, right: str, bound: int, search_depth: int):
    """Compare two formulae in the calculus S and arithmetically."""
    service = IsoService()
    a, b = parse_formula(left), parse_formula(right)
    verdict = service.compare(a, b, bound)
    click.echo(verdict.text())
    if search_depth:
        found = service.search(a, b, search_depth)
        if found is None:
            click.echo("no inverse pair found")
        else:
            click.echo(f"forward  {render_term(found.forward, ctx.obj['ascii'])}")
            click.echo(f"backward {render_term(found.backward, ctx.obj['ascii'])}")
    if verdict.arith is not None and not verdict.arith.ok:
        sys.exit(EXIT_FAILED)


@cli.command()
@click.argument("formula")
@click.option("--assign", default="", help="Letter values, e.g. p=2,q=3.")
@domain_errors
def arith(formula: str, assign: str):
    """Print the natural number denoted by FORMULA."""
    click.echo(IsoService().arith(parse_formula(formula), parse_assignment(assign)))


@cli.command()
@click.option("--max-size", default=3, show_default=True, type=click.IntRange(0, None))
@click.option("--letters", "letter_list", default="p,q", show_default=True)
@click.option("--bound", default=4, show_default=True, type=click.IntRange(0, 8))
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--workers", default=None, type=click.IntRange(1, None))
@click.option("--diversified", "diversified_only", is_flag=True,
              help="Only scan diversified formulae.")
@click.option("--json", "as_json", is_flag=True)
@domain_errors
def scan(max_size: int, letter_list: str, bound: int, seed: int, workers: int,
         diversified_only: bool, as_json: bool):
    """Classify pairs of small formulae by S-equality and arithmetic."""
    names = [x.strip() for x in letter_list.split(",") if x.strip()]
    if not names:
        raise click.BadParameter("at least one letter", param_hint="--letters")
    for name in names:
        if not isinstance(parse_formula(name), Letter):
            raise click.BadParameter(f"{name!r} is not a letter", param_hint="--letters")
    report = asyncio.run(
        ConjectureScanner(workers).scan(max_size, names, bound, seed, diversified_only)
    )
    if as_json:
        click.echo(ScanReportModel.from_report(report).model_dump_json(indent=2))
    else:
        for line in report.lines():
            click.echo(line)
    if report.unsound:
        sys.exit(EXIT_FAILED)


@cli.command()
@click.option("--theory", default="RMC", show_default=True,
              type=click.Choice([t.value for t in Theory]))
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def axioms(ctx: click.Context, theory: str, as_json: bool):
    """List the axiom schemata of a theory."""
    catalog = AxiomCatalog.for_theory(Theory(theory), ctx.obj["ascii"])
    if as_json:
        click.echo(catalog.model_dump_json(indent=2))
        return
    for entry in catalog.axioms:
        click.echo(f"({entry.name}) {entry.lhs} = {entry.rhs}   [{entry.type}]")
        for hole in entry.holes:
            click.echo(f"    {hole}")
    click.echo(f"{catalog.count} schemata")


@cli.command()
@click.option("--theory", default="RMC", show_default=True,
              type=click.Choice([t.value for t in Theory]))
@click.option("--count", default=100, show_default=True, type=click.IntRange(1, None))
@click.option("--size-bound", default=4, show_default=True, type=click.IntRange(1, None))
@click.option("--seed", default=42, show_default=True, type=int)
@click.option("--sizes", default=None, help="Sizes per letter, e.g. 1..3.")
@click.option("--workers", default=None, type=click.IntRange(1, None))
@domain_errors
def soundness(theory: str, count: int, size_bound: int, seed: int, sizes: str, workers: int):
    """Check random axiom instances of a theory in pointed sets."""
    equations = random_axiom_instances(Theory(theory), size_bound, count, seed)
    verdicts = asyncio.run(
        ModelChecker().check_many(equations, parse_sizes(sizes) if sizes else None, workers)
    )
    failures = 0
    for equation, verdict in zip(equations, verdicts):
        if isinstance(verdict, Fails):
            failures += 1
            sigma = ",".join(f"{k}={v}" for k, v in sorted(verdict.valuation.items()))
            click.echo(
                f"FAILS ({equation.name}) {render_term(equation.lhs)} = "
                f"{render_term(equation.rhs)} at {sigma}: element {verdict.element}"
            )
    click.echo(f"{theory} instances {len(equations)} seed {seed} failures {failures}")
    if failures:
        sys.exit(EXIT_FAILED)


@cli.command(name="witness-nonnatural")
@click.option("--max-size", default=3, show_default=True, type=click.IntRange(1, 4))
@click.option("--json", "as_json", is_flag=True)
@domain_errors
def witness_nonnatural(max_size: int, as_json: bool):
    """Show that smash projections are not natural."""
    witness = ModelChecker().witness_nonnatural(max_size)
    if as_json:
        click.echo(json.dumps({
            "projection": witness.projection,
            "f": witness.f.table.tolist(),
            "g": witness.g.table.tolist(),
            "element": witness.element,
            "lhs": witness.lhs.table.tolist(),
            "rhs": witness.rhs.table.tolist(),
            "verified": witness.verify(),
        }))
    else:
        click.echo(f"projection {witness.projection} of a smash product")
        click.echo(f"f: {witness.f.dom.size} -> {witness.f.cod.size}  {witness.f.table.tolist()}")
        click.echo(f"g: {witness.g.dom.size} -> {witness.g.cod.size}  {witness.g.table.tolist()}")
        side = "f" if witness.projection == 1 else "g"
        click.echo(
            f"at element {witness.element}: proj∘(f⊗g) gives {witness.lhs(witness.element)}, "
            f"{side}∘proj gives {witness.rhs(witness.element)}"
        )
        click.echo("verified" if witness.verify() else "NOT verified")
    if not witness.verify():
        sys.exit(EXIT_FAILED)


def main():
    cli(obj={})


if __name__ == "__main__":
    main()
