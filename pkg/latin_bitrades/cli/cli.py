"""
Command Line Interface Module

This module provides the command-line interface of the toolkit.
"""

import functools
import json
from pathlib import Path
from typing import Any, Dict, Optional

import click

from latin_bitrades.catalogue.worked_examples import EXAMPLE_IDS, check_example
from latin_bitrades.core.formats import bitrade_from_json, parse_entry, parse_overlay, parse_square
from latin_bitrades.core.partial_latin_square import Bitrade, PartialLatinSquare
from latin_bitrades.core.search import is_minimal, is_primary
from latin_bitrades.core.verifiers import diagnose_bitrade, embedded_in, homogeneity, is_orthogonal_direct
from latin_bitrades.cosets.bridge import isotopy_bridge
from latin_bitrades.cosets.cdh import cdh_bitrade
from latin_bitrades.cosets.group_table import FiniteGroupTable
from latin_bitrades.cosets.small_groups import small_group
from latin_bitrades.exporters.exporter_factory import ExporterFactory
from latin_bitrades.fields.finite_field import make_field, parse_polynomial
from latin_bitrades.fields.mersenne import mersenne_params, mersenne_trade, published_relabeling, relabel_construction
from latin_bitrades.fields.orthomorphism import ortho_trade
from latin_bitrades.groups.paratopism import parse_generators
from latin_bitrades.groups.paratopism_group import STABILIZER_KINDS, ParatopismGroup, closure, orbit, stab
from latin_bitrades.models import RunConfig, VerifyReport
from latin_bitrades.trades.trade_engine import BLOCK_METHODS, Construction, construct, is_block, parse_tau
from latin_bitrades.utils.config_loader import OUTPUT_FORMATS, ConfigLoader
from latin_bitrades.utils.errors import BitradeError, ParseError
from latin_bitrades.utils.logger import get_logger, setup_logging

logger = get_logger(__name__)

INCONCLUSIVE_EXIT = 4
VERIFY_FAILED_EXIT = 2


@click.group()
@click.option('--config', '-c', type=click.Path(exists=True), help='Path to configuration file')
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose output')
@click.option('--format', '-f', 'output_format', type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
              default=None, help='Bitrade output format (overrides the configuration)')
@click.pass_context
def cli(ctx, config, verbose, output_format):
    """Latin bitrades from autoparatopism groups."""
    # Load configuration
    try:
        config_dict = ConfigLoader.load_and_validate_config(config)
    except ValueError as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(1)

    # Set up logging
    log_config = dict(config_dict.get("logging") or {})
    if verbose:
        log_config["level"] = "DEBUG"
    setup_logging(log_config)

    # Store configuration in context
    ctx.ensure_object(dict)
    ctx.obj['config'] = config_dict
    ctx.obj['output_format'] = output_format or config_dict.get("output", {}).get("format", "overlay")


def reports_errors(command):
    """Translate toolkit errors into messages and exit codes."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except BitradeError as e:
            logger.error(f"{ctx.command.name} failed: {e}")
            click.echo(f"error: {e}", err=True)
            ctx.exit(e.exit_code)

    return wrapper


def run_config(ctx, subcommand: str, inputs: Optional[Dict[str, Any]] = None, **flags) -> RunConfig:
    """
    Resolve the configuration of one command.

    Args:
        ctx: Click context holding the loaded configuration
        subcommand: Command name
        inputs: Input paths by role; None values are dropped
        **flags: Command flags such as paper_labels or method

    Returns:
        The validated run configuration
    """
    config = ctx.obj['config']
    budgets = config.get("budgets", {})
    cfg = RunConfig(
        subcommand=subcommand,
        inputs={k: str(v) for k, v in (inputs or {}).items() if v is not None},
        output_format=ctx.obj['output_format'],
        closure_cap=budgets.get("closure_cap", 1_000_000),
        search_nodes=budgets.get("search_nodes", 10_000_000),
        **flags,
    )
    logger.info(f"Running {subcommand} with inputs {cfg.inputs}")
    return cfg


def read_square(path: str) -> PartialLatinSquare:
    return parse_square(Path(path).read_text(), source=path)


def read_group(square_path: str, generators_path: str, cfg: RunConfig):
    """Read a square and close its generator file against it."""
    square = read_square(square_path)
    gens = parse_generators(Path(generators_path).read_text(), square.order, source=generators_path)
    return square, closure(gens, square, cfg.closure_cap)


def read_bitrade(path: str):
    """Read a bitrade from JSON or from an overlay grid; returns (bitrade, square or None)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return bitrade_from_json(text, source=path), None
    square, bitrade = parse_overlay(text, source=path)
    return bitrade, square


def emit_bitrade(cfg: RunConfig, bitrade: Bitrade, square: Optional[PartialLatinSquare], output: Optional[str]) -> None:
    """Write the bitrade to a file, or echo it when no file is given."""
    exporter = ExporterFactory.create_exporter(cfg.output_format)
    if output:
        exporter.export(bitrade, output, square)
    else:
        click.echo(exporter.render(bitrade, square), nl=False)


def emit_report(cfg: RunConfig, report) -> None:
    if cfg.output_format == "json":
        click.echo(report.model_dump_json())
    else:
        click.echo("\n".join(report.to_lines()))


def emit_construction(ctx, cfg: RunConfig, built: Construction, output: Optional[str]) -> None:
    emit_bitrade(cfg, built.bitrade, built.square, output)
    emit_report(cfg, built.report)
    if built.report.minimal == "inconclusive":
        logger.warning("Minimality search hit its budget")
        ctx.exit(INCONCLUSIVE_EXIT)


@cli.command("construct")
@click.option('--square', '-s', required=True, type=click.Path(exists=True), help='Square file')
@click.option('--generators', '-g', required=True, type=click.Path(exists=True), help='Generator file')
@click.option('--tau', '-t', required=True, type=click.Path(exists=True), help='Triple JSON file')
@click.option('--output', '-o', type=click.Path(), help='Write the bitrade to this file')
@click.option('--minimality', is_flag=True, help='Run the budgeted minimality search')
@click.pass_context
@reports_errors
def construct_cmd(ctx, square, generators, tau, output, minimality):
    """Build the bitrade of a group and a triple (e, theta, theta_bar)."""
    cfg = run_config(ctx, "construct", {"square": square, "generators": generators, "tau": tau})
    l, g = read_group(square, generators, cfg)
    triple = parse_tau(Path(tau).read_text(), l.order, source=tau)
    built = construct(l, g, triple, cfg.search_nodes if minimality else None)
    emit_construction(ctx, cfg, built, output)


@cli.command()
@click.option('--bitrade', '-b', required=True, type=click.Path(exists=True), help='Bitrade JSON or overlay file')
@click.option('--square', '-s', type=click.Path(exists=True), help='Ambient square to check the embedding in')
@click.option('--search/--no-search', default=True, help='Run the minimality and primality searches')
@click.pass_context
@reports_errors
def verify(ctx, bitrade, square, search):
    """Check a bitrade and report its properties."""
    cfg = run_config(ctx, "verify", {"bitrade": bitrade, "square": square})
    b, overlay_square = read_bitrade(bitrade)
    ambient = read_square(square) if square else overlay_square

    report = VerifyReport(diagnostics=diagnose_bitrade(b))
    if ambient is not None:
        report.embedded = embedded_in(b.t, ambient)
    if report.diagnostics.valid:
        report.k = homogeneity(b.t)
        report.orthogonal = is_orthogonal_direct(b)
        if search:
            report.minimal = is_minimal(b.t, cfg.search_nodes).value
            report.primary = is_primary(b, cfg.search_nodes).value
        else:
            report.minimal = report.primary = "skipped"

    emit_report(cfg, report)
    if not report.passed:
        ctx.exit(VERIFY_FAILED_EXIT)
    if "inconclusive" in (report.minimal, report.primary):
        ctx.exit(INCONCLUSIVE_EXIT)


@cli.command("closure")
@click.option('--square', '-s', required=True, type=click.Path(exists=True), help='Square file')
@click.option('--generators', '-g', required=True, type=click.Path(exists=True), help='Generator file')
@click.option('--list', 'list_elements', is_flag=True, help='Print every element')
@click.pass_context
@reports_errors
def closure_cmd(ctx, square, generators, list_elements):
    """Print the order of the group spanned by the generators."""
    cfg = run_config(ctx, "closure", {"square": square, "generators": generators})
    _, g = read_group(square, generators, cfg)
    click.echo(f"order={len(g)}")
    if list_elements:
        for x in g:
            click.echo(str(x))


@cli.command("stab")
@click.option('--square', '-s', required=True, type=click.Path(exists=True), help='Square file')
@click.option('--generators', '-g', required=True, type=click.Path(exists=True), help='Generator file')
@click.option('--entry', '-e', required=True, help='Entry as "r,c,s"')
@click.option('--kind', '-k', type=click.Choice(sorted(STABILIZER_KINDS) + ['all']), default='all',
              help='Stabilizer to report')
@click.pass_context
@reports_errors
def stab_cmd(ctx, square, generators, entry, kind):
    """Print stabilizer orders of an entry, or the elements of one stabilizer."""
    cfg = run_config(ctx, "stab", {"square": square, "generators": generators})
    _, g = read_group(square, generators, cfg)
    e = parse_entry(entry)
    if kind == 'all':
        click.echo(" ".join(f"{name}={len(stab(g, e, name))}" for name in ("full", "row", "col", "sym")))
        return
    subgroup = stab(g, e, kind)
    click.echo(f"{kind}={len(subgroup)}")
    for x in subgroup:
        click.echo(str(x))


@cli.command("orbit")
@click.option('--square', '-s', required=True, type=click.Path(exists=True), help='Square file')
@click.option('--generators', '-g', required=True, type=click.Path(exists=True), help='Generator file')
@click.option('--entry', '-e', required=True, help='Entry as "r,c,s"')
@click.pass_context
@reports_errors
def orbit_cmd(ctx, square, generators, entry):
    """Print the orbit of an entry, one entry per line."""
    cfg = run_config(ctx, "orbit", {"square": square, "generators": generators})
    _, g = read_group(square, generators, cfg)
    entries = sorted(orbit(g, parse_entry(entry)))
    click.echo(f"size={len(entries)}")
    for r, c, s in entries:
        click.echo(f"{r},{c},{s}")


@cli.command()
@click.option('--group', '-g', 'group_path', type=click.Path(exists=True), help='Group table file')
@click.option('--small', help='Name of a stored small group, e.g. Z2^2 or Q8')
@click.option('--a', 'a', required=True, type=int, help='Index of a')
@click.option('--b', 'b', required=True, type=int, help='Index of b')
@click.option('--c', 'c', required=True, type=int, help='Index of c')
@click.option('--output', '-o', type=click.Path(), help='Write the bitrade to this file')
@click.pass_context
@reports_errors
def cdh(ctx, group_path, small, a, b, c, output):
    """Build the coset bitrade of a group and a, b, c with abc = 1."""
    cfg = run_config(ctx, "cdh", {"group": group_path})
    if (group_path is None) == (small is None):
        raise click.UsageError("give exactly one of --group and --small")
    if group_path:
        table = FiniteGroupTable.parse(Path(group_path).read_text(), source=group_path)
    else:
        try:
            table = small_group(small)
        except ValueError as e:
            raise ParseError(str(e))
    result = cdh_bitrade(table, a, b, c)
    emit_bitrade(cfg, result.bitrade, None, output)
    emit_report(cfg, result.report)


@cli.command()
@click.option('--square', '-s', required=True, type=click.Path(exists=True), help='Square file')
@click.option('--generators', '-g', required=True, type=click.Path(exists=True), help='Generator file of automorphisms')
@click.option('--tau', '-t', required=True, type=click.Path(exists=True), help='Triple JSON file')
@click.pass_context
@reports_errors
def bridge(ctx, square, generators, tau):
    """Certify the isotopy between an orbit bitrade and its coset bitrade."""
    cfg = run_config(ctx, "bridge", {"square": square, "generators": generators, "tau": tau})
    l, g = read_group(square, generators, cfg)
    certificate = isotopy_bridge(l, g, parse_tau(Path(tau).read_text(), l.order, source=tau))
    emit_report(cfg, certificate)
    if not certificate.valid:
        ctx.exit(5)


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Degree q with 2^q - 1 prime')
@click.option('--poly', help='Primitive polynomial bits, e.g. 1011')
@click.option('--paper-labels', is_flag=True, help='Use the published GF(8) labeling')
@click.option('--minimality/--no-minimality', default=False, help='Run the budgeted minimality search (off by default)')
@click.option('--output', '-o', type=click.Path(), help='Write the bitrade to this file')
@click.pass_context
@reports_errors
def mersenne(ctx, q, poly, paper_labels, minimality, output):
    """Build the q-homogeneous trade of size pq in GF(2^q)."""
    cfg = run_config(ctx, "mersenne", paper_labels=paper_labels)
    try:
        polynomial = parse_polynomial(poly) if poly else None
    except ValueError:
        raise ParseError(f"bad polynomial {poly!r}")
    params = mersenne_params(q, polynomial)
    built = mersenne_trade(params, cfg.search_nodes if minimality else None)
    if cfg.paper_labels:
        built = relabel_construction(built, published_relabeling(params))
    emit_construction(ctx, cfg, built, output)


@cli.command()
@click.option('--q', 'q', required=True, type=int, help='Odd prime field order')
@click.option('--a', 'a', required=True, type=int, help='Multiplier on squares')
@click.option('--b', 'b', required=True, type=int, help='Multiplier on non-squares')
@click.option('--output', '-o', type=click.Path(), help='Write the bitrade to this file')
@click.pass_context
@reports_errors
def ortho(ctx, q, a, b, output):
    """Build the trade of size mq in L(theta) of a quadratic orthomorphism."""
    cfg = run_config(ctx, "ortho")
    result = ortho_trade(make_field("prime", q), a, b)
    emit_construction(ctx, cfg, result.construction, output)


@cli.command()
@click.argument('number', type=click.IntRange(min(EXAMPLE_IDS), max(EXAMPLE_IDS)))
@click.pass_context
@reports_errors
def example(ctx, number):
    """Rebuild a worked example and compare it with its golden output."""
    cfg = run_config(ctx, "example")
    rebuilt = check_example(number, cfg.closure_cap, cfg.search_nodes)
    click.echo(rebuilt.output, nl=False)


@cli.command()
@click.option('--square', '-s', required=True, type=click.Path(exists=True), help='Square file')
@click.option('--overgroup', '-B', required=True, type=click.Path(exists=True), help='Generator file of the overgroup')
@click.option('--generators', '-g', required=True, type=click.Path(exists=True), help='Generator file of the subgroup')
@click.option('--entry', '-e', required=True, help='Entry as "r,c,s"')
@click.option('--method', '-m', type=click.Choice(BLOCK_METHODS), default='both', help='Block test to run')
@click.pass_context
@reports_errors
def block(ctx, square, overgroup, generators, entry, method):
    """Decide whether the orbit of an entry is a block for the overgroup."""
    cfg = run_config(ctx, "block", {"square": square, "overgroup": overgroup, "generators": generators},
                     method=method)
    l, g = read_group(square, generators, cfg)
    big: ParatopismGroup = closure(parse_generators(Path(overgroup).read_text(), l.order, source=overgroup),
                                   l, cfg.closure_cap)
    verdict = is_block(big, g, parse_entry(entry), cfg.method)
    if cfg.output_format == "json":
        click.echo(json.dumps({"block": verdict.is_block, **verdict.model_dump()}))
        return
    click.echo(f"block={'yes' if verdict.is_block else 'no'}")
    for name in ("algebraic", "direct"):
        value = getattr(verdict, name)
        if value is not None:
            click.echo(f"{name}={'yes' if value else 'no'}")
    if verdict.witness is not None:
        click.echo(f"witness={verdict.witness} maps {verdict.witness_entry} to {verdict.witness_image}")



def main():
    """Entry point for the CLI."""
    cli(obj={})
