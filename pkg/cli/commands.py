"""
This is the file containing all of the commands of the workbench.
`python -m cli --help` lists them.

Every command exits 0 on a positive outcome, 1 on a negative one and 2 on
bad input.
"""
import functools
import json
import logging
import os
import sys
from typing import List, Sequence

import click

import data.catalog as cat
import graphs.cycles as cy
import graphs.formats as gf
import nullstellensatz.configuration as cfg
import nullstellensatz.expansion as ex
import nullstellensatz.formats as nf
import oracle.choosability as ch
import utils
import validation
from discharge import plane
from discharge import report as rp

logger = logging.getLogger(__name__)

REDUCE_CMD = 'reduce'
ORACLE_CMD = 'oracle'
DISCHARGE_CMD = 'discharge'
VALIDATE_CMD = 'validate'
CATALOG_CMD = 'catalog'

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

TEXT = 'text'
JSON = 'json'
FORMATS = [TEXT, JSON]

SORTED = 'sorted'
AS_LISTED = 'as-listed'
ORIENTATIONS = [SORTED, AS_LISTED]

WITNESS_CAP = 10
LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

PASS = 'pass'
FAIL = 'FAIL'

INPUT_FILE = click.Path(exists=True, dir_okay=False)


def _log_level(quiet: bool) -> str:
    if quiet:
        return 'ERROR'
    level = os.environ.get('CHOOSE_LOG_LEVEL', 'WARNING').upper()
    validation.validate_enum(level, 'CHOOSE_LOG_LEVEL', LOG_LEVELS)
    return level


def _emit(ctx: click.Context, text_lines: Sequence[str], payload) -> None:
    if ctx.obj['format'] == JSON:
        click.echo(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            click.echo(line)


def guarded(func):
    """Turn a ValueError from the engines into exit status 2."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = func(*args, **kwargs)
        except ValueError as err:
            logger.debug('%s failed', ctx.info_name, exc_info=True)
            click.echo(f'error: {err}', err=True)
            ctx.exit(EXIT_ERROR)
        ctx.exit(code)
    return wrapper


def select_witnesses(witnesses: Sequence[Sequence[int]],
                     all_witnesses: bool = False) -> List[Sequence[int]]:
    """
    At most WITNESS_CAP witnesses, spread evenly over the sorted list.

    Examples:
        >>> select_witnesses([(i,) for i in range(20)])[:3]
        [(0,), (2,), (4,)]
    """
    size = len(witnesses)
    if all_witnesses or size <= WITNESS_CAP:
        return list(witnesses)
    return [witnesses[i * size // WITNESS_CAP] for i in range(WITNESS_CAP)]


def _list_lines(lists) -> List[str]:
    return [f'list {v}: ' + ' '.join(str(color) for color in sorted(colors))
            for v, colors in enumerate(lists)]


@click.group()
@click.option('--format', 'output_format', type=click.Choice(FORMATS),
              default=TEXT, show_default=True, help='Report format.')
@click.option('--quiet', is_flag=True, help='Only log errors.')
@click.pass_context
def cli(ctx, output_format, quiet):
    """List-coloring verification workbench."""
    try:
        level = _log_level(quiet)
    except ValueError as err:
        click.echo(f'error: {err}', err=True)
        ctx.exit(EXIT_ERROR)
    logging.basicConfig(level=level, stream=sys.stderr, format=LOG_FORMAT)
    logging.getLogger().setLevel(level)
    ctx.ensure_object(dict)
    ctx.obj['format'] = output_format


@cli.command(REDUCE_CMD)
@click.argument('config_path', type=INPUT_FILE)
@click.option('--orientation', type=click.Choice(ORIENTATIONS), default=SORTED,
              show_default=True,
              help='Orient edges low-to-high, or as written in the file.')
@click.option('--all-witnesses', is_flag=True,
              help=f'Print every witness instead of at most {WITNESS_CAP}.')
@click.pass_context
@guarded
def reduce_cmd(ctx, config_path, orientation, all_witnesses):
    """Check a configuration for a nonzero capped coefficient."""
    c = nf.read_configuration(config_path)
    edges = (cfg.listed_orientation(c) if orientation == AS_LISTED
             else cfg.default_orientation(c))
    verdict = ex.is_reducible(c, edges)
    shown = select_witnesses(verdict.witnesses, all_witnesses)
    lines = [f'name: {c.name}',
             f'caps: {utils.format_vector(verdict.caps)}',
             f'orientation: {orientation}',
             f'status: {verdict.status}',
             f'valid expansions: {verdict.count}']
    lines += [f'valid expansion: {utils.format_vector(w)}' for w in shown]
    payload = {
        'name': c.name,
        'caps': list(verdict.caps),
        'orientation': [list(e) for e in verdict.orientation],
        'status': verdict.status,
        'count': verdict.count,
        'witnesses': [{'exponents': list(w),
                       'coefficient': ex.coefficient(verdict.table, w)}
                      for w in shown],
    }
    _emit(ctx, lines, payload)
    return EXIT_OK if verdict.reducible else EXIT_NEGATIVE


@cli.command(ORACLE_CMD)
@click.argument('config_path', type=INPUT_FILE)
@click.option('--exhaustive', is_flag=True,
              help='Try every list assignment instead of sampling.')
@click.option('--trials', type=int, default=None,
              help='Sampled assignments (default CHOOSE_SAMPLE_TRIALS).')
@click.option('--seed', type=int, default=None,
              help='Sampling seed (default CHOOSE_SAMPLE_SEED).')
@click.option('--allow-large', is_flag=True,
              help='Run exhaustive search past CHOOSE_EXHAUSTIVE_BUDGET.')
@click.pass_context
@guarded
def oracle_cmd(ctx, config_path, exhaustive, trials, seed, allow_large):
    """Look for a list assignment of sizes cap+1 with no coloring."""
    if exhaustive and (trials is not None or seed is not None):
        raise click.UsageError('--trials and --seed apply to sampled runs only')
    c = nf.read_configuration(config_path)
    sizes = tuple(t + 1 for t in cfg.derive_caps(c))
    if exhaustive:
        verdict = ch.f_choosable_exhaustive(c.internal, sizes, allow_large=allow_large)
    else:
        verdict = ch.f_choosable_sampled(
            c.internal, sizes,
            ch.default_trials() if trials is None else trials,
            ch.default_seed() if seed is None else seed)
    lines = [f'name: {c.name}',
             f'sizes: {utils.format_vector(sizes)}',
             f'mode: {verdict.mode}',
             f'status: {verdict.status}',
             f'checked: {verdict.checked}']
    if verdict.found_counterexample:
        if verdict.trial is not None:
            lines.append(f'counterexample at trial {verdict.trial}')
        lines += _list_lines(verdict.counterexample)
    payload = {
        'name': c.name,
        'sizes': list(sizes),
        'mode': verdict.mode,
        'status': verdict.status,
        'checked': verdict.checked,
        'trial': verdict.trial,
        'counterexample': ([sorted(colors) for colors in verdict.counterexample]
                           if verdict.found_counterexample else None),
    }
    _emit(ctx, lines, payload)
    return EXIT_NEGATIVE if verdict.found_counterexample else EXIT_OK


@cli.command(DISCHARGE_CMD)
@click.argument('plane_path', type=INPUT_FILE)
@click.option('--stage', type=click.IntRange(0, 2), default=2, show_default=True,
              help='Last charge stage shown.')
@click.option('--distance', type=click.IntRange(min=0), default=cy.DEFAULT_DISTANCE,
              show_default=True, help='4-cycle distance the hypothesis check uses.')
@click.pass_context
@guarded
def discharge_cmd(ctx, plane_path, stage, distance):
    """Run both discharging rounds on a plane graph."""
    r = rp.report(plane.read_plane_graph(plane_path), distance)
    if ctx.obj['format'] == JSON:
        click.echo(json.dumps(rp.to_json(r, stage), indent=2))
    else:
        click.echo(rp.render_text(r, stage))
    return EXIT_OK if r.all_nonnegative else EXIT_NEGATIVE


@cli.command(VALIDATE_CMD)
@click.argument('graph_path', type=INPUT_FILE)
@click.option('--distance', type=click.IntRange(min=0), default=cy.DEFAULT_DISTANCE,
              show_default=True, help='Least allowed distance between 4-cycles.')
@click.pass_context
@guarded
def validate_cmd(ctx, graph_path, distance):
    """Check that any two 4-cycles are at least --distance apart."""
    g = gf.read_graph(graph_path)
    cycles = cy.enumerate_4cycles(g)
    verdict = cy.validate_hypothesis(g, distance)
    lines = [f'4-cycles: {len(cycles)}', f'hypothesis: {verdict.describe()}']
    payload = {
        'cycles': len(cycles),
        'satisfied': verdict.satisfied,
        'required': verdict.required,
        'distance': verdict.distance,
        'pair': [list(cycle) for cycle in verdict.pair] if verdict.pair else None,
    }
    _emit(ctx, lines, payload)
    return EXIT_OK if verdict.satisfied else EXIT_NEGATIVE


def _check_entry(entry: cat.CatalogEntry, trials: int, seed: int) -> dict:
    try:
        verdict = ex.is_reducible(entry.configuration)
        report = ch.cross_check(entry.configuration, ch.SAMPLED, trials, seed, verdict)
    except validation.ValidationError as err:
        logger.warning('%s could not be checked: %s', entry.name, err)
        return {'name': entry.name, 'error': str(err), 'passed': False}
    ok = verdict.reducible and report.passed
    if not ok:
        logger.warning('%s failed the catalog check', entry.name)
    return {
        'name': entry.name,
        'status': verdict.status,
        'count': verdict.count,
        'oracle': report.oracle.status,
        'checked': report.oracle.checked,
        'passed': ok,
    }


def _check_line(result: dict) -> str:
    if 'error' in result:
        return f"{result['name']}: error: {result['error']}, {FAIL}"
    return (f"{result['name']}: {result['status']}, "
            f"valid expansions {result['count']}, "
            f"oracle {result['oracle']} after {result['checked']} trials, "
            f"{PASS if result['passed'] else FAIL}")


@cli.command(CATALOG_CMD)
@click.option('--list', 'list_entries', is_flag=True, help='Print entry names.')
@click.option('--check-all', is_flag=True,
              help='Reduce and cross-check every entry.')
@click.option('--catalog', 'catalog_path',
              type=click.Path(exists=True, file_okay=False), default=None,
              help='Catalog directory (default CHOOSE_CATALOG_DIR, then the shipped one).')
@click.option('--trials', type=int, default=None,
              help='Sampled assignments per entry (default CHOOSE_SAMPLE_TRIALS).')
@click.option('--seed', type=int, default=None,
              help='Sampling seed (default CHOOSE_SAMPLE_SEED).')
@click.pass_context
@guarded
def catalog_cmd(ctx, list_entries, check_all, catalog_path, trials, seed):
    """List the configuration catalog or check every entry."""
    if list_entries and check_all:
        raise click.UsageError('choose one of --list and --check-all')
    entries = cat.read(catalog_path)
    if not check_all:
        lines = [entry.name for entry in entries]
        payload = [{'name': entry.name, 'provenance': entry.provenance,
                    'vertices': entry.configuration.internal.vertex_count,
                    'edges': len(entry.configuration.internal.edges)}
                   for entry in entries]
        _emit(ctx, lines, payload)
        return EXIT_OK
    trials = ch.default_trials() if trials is None else trials
    seed = ch.default_seed() if seed is None else seed
    results = [_check_entry(entry, trials, seed) for entry in entries]
    failed = [r['name'] for r in results if not r['passed']]
    lines = [_check_line(r) for r in results]
    lines.append(f'checked {len(results)} entries, {len(failed)} failed')
    _emit(ctx, lines, {'entries': results, 'failed': failed})
    return EXIT_NEGATIVE if failed else EXIT_OK
