"""Command Line Interface for the designcraft workbench."""

import logging
from contextlib import contextmanager

import click

from analysis.design_engine import supports_to_design, verify_t_design
from analysis.weight_enum import macwilliams
from config.settings import FILE_PATHS, LOGGING_CONFIG
from core.bch_construct import BchSpec, Variant, bch_code, build_C_m
from core.enumeration import within_budget
from core.errors import (CodeFormatError, ConstructionError, DesignCraftError, DesignError,
                         EnumerationBudgetError, FieldError, FormulaInconsistencyError,
                         VerificationBudgetError)
from core.linear_code import dual, weight_distribution
from data.code_io import read_blocks, read_code, write_blocks, write_code, write_weights
from families.registry import get_family
from main import LEVELS, run_verification

logging.basicConfig(
    level=getattr(logging, LOGGING_CONFIG['level']),
    format=LOGGING_CONFIG['format']
)
logger = logging.getLogger(__name__)

# 异常 -> 退出码
EXIT_CODES = (
    (EnumerationBudgetError, 4),
    (VerificationBudgetError, 4),
    (ConstructionError, 3),
    (FieldError, 3),
    (CodeFormatError, 2),
    (DesignError, 5),
    (FormulaInconsistencyError, 5),
)

FAMILY_CHOICES = ['table1', 'dual', 'extended-dual', 'double-dual']


@contextmanager
def exit_on_error():
    try:
        yield
    except DesignCraftError as e:
        code = next((c for cls, c in EXIT_CODES if isinstance(e, cls)), 1)
        logger.error(f"{type(e).__name__}: {e}")
        click.echo(f"Error: {e}", err=True)
        raise SystemExit(code)


def check_m(m):
    if m is None:
        raise click.UsageError("--m is required")
    if m % 2 == 0:
        raise click.BadParameter(f"m must be odd, got {m}", param_hint='--m')
    if m < 5:
        raise click.BadParameter(f"m must be at least 5, got {m}", param_hint='--m')


@click.group()
@click.option('--verbose', is_flag=True, help='Enable verbose logging')
def cli(verbose):
    """designcraft: BCH codes, weight distributions and the designs they hold."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


@cli.group()
def code():
    """Build codes."""


@code.command('build')
@click.option('--m', 'm', type=int, required=True, help='Extension degree; the length is 2^m - 1')
@click.option('--variant', type=click.Choice([v.value for v in Variant]), default=Variant.BCH_B0.value,
              help='Construction of the five-weight code C_m')
@click.option('--delta', type=int, help='Designed distance of an arbitrary primitive BCH code')
@click.option('--offset', type=int, default=0, help='First exponent of the BCH window')
@click.option('--out', type=click.Path(dir_okay=False), default=FILE_PATHS['code'], help='Code file to write')
def code_build(m, variant, delta, offset, out):
    """Build C_m (or a generic BCH code with --delta) and write the code file."""
    with exit_on_error():
        if delta is None:
            check_m(m)
            built = build_C_m(m, Variant(variant))
        else:
            built = bch_code(BchSpec(m=m, delta=delta, offset=offset))
        write_code(built, out)
    click.echo(str(built))


@cli.command()
@click.option('--code', 'code_path', type=click.Path(exists=True, dir_okay=False), help='Code file')
@click.option('--method', type=click.Choice(['enum', 'macwilliams', 'closed-form']), default='enum',
              help='How to obtain the distribution')
@click.option('--m', 'm', type=int, help='Extension degree for closed forms')
@click.option('--family', type=click.Choice(FAMILY_CHOICES), help='Closed-form family')
@click.option('--dim-dual', type=int, help='Dimension of the dual code (MacWilliams transform)')
@click.option('--target', type=click.Choice(['code', 'dual']), default='code',
              help='MacWilliams: distribution of the code (enumerate its dual) or of its dual (enumerate the code)')
@click.option('--out', type=click.Path(dir_okay=False), help='CSV file to write (default: standard output)')
@click.option('--threads', type=int, help='Worker thread cap')
def wdist(code_path, method, m, family, dim_dual, target, out, threads):
    """Weight distribution as a weight,count CSV."""
    with exit_on_error():
        if method == 'closed-form':
            if family is None:
                raise click.UsageError("--method closed-form needs --family")
            check_m(m)
            wd = get_family(family).closed_form(m)
        else:
            if code_path is None:
                raise click.UsageError(f"--method {method} needs --code")
            linear = read_code(code_path)
            if method == 'macwilliams':
                if dim_dual is None:
                    raise click.UsageError("the MacWilliams transform needs the dual dimension: pass --dim-dual")
                if dim_dual != linear.n - linear.k:
                    raise click.UsageError(f"--dim-dual {dim_dual} does not match n - k = {linear.n - linear.k}")
                if target == 'code':
                    wd = macwilliams(weight_distribution(dual(linear), threads=threads), dim_dual)
                else:
                    wd = macwilliams(weight_distribution(linear, threads=threads), linear.k)
            elif within_budget(linear.k) or m is None or family is None:
                wd = weight_distribution(linear, threads=threads)
            else:
                check_m(m)
                logger.warning(f"{linear} 超出穷举预算，改用 {family} 闭式 (m={m})")
                wd = get_family(family).closed_form(m)
        text = write_weights(wd, out)
    if out is None:
        click.echo(text, nl=False)
    else:
        click.echo(f"wrote {out}")


@cli.group()
def designs():
    """Extract and verify block designs."""


@designs.command('extract')
@click.option('--code', 'code_path', type=click.Path(exists=True, dir_okay=False), required=True, help='Code file')
@click.option('--weight', type=int, required=True, help='Codeword weight = block size')
@click.option('--out', type=click.Path(dir_okay=False), default=FILE_PATHS['blocks'], help='Blocks file to write')
@click.option('--threads', type=int, help='Worker thread cap')
def designs_extract(code_path, weight, out, threads):
    """Write the supports of all weight-w codewords as a blocks file."""
    with exit_on_error():
        design = supports_to_design(read_code(code_path), weight, threads=threads)
        write_blocks(design, out)
    click.echo(f"v={design.v} k={design.k} blocks={design.block_count}")


@designs.command('verify')
@click.option('--blocks', 'blocks_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Blocks file')
@click.option('--t', 't', type=int, required=True, help='Design strength')
@click.option('--threads', type=int, help='Worker thread cap')
def designs_verify(blocks_path, t, threads):
    """Exhaustively check the t-design property."""
    if t < 1:
        raise click.BadParameter(f"t must be positive, got {t}", param_hint='--t')
    with exit_on_error():
        design = read_blocks(blocks_path)
        if t >= design.k:
            raise click.BadParameter(f"t must be below the block size k={design.k}, got {t}", param_hint='--t')
        check = verify_t_design(design, t, threads=threads)
    if check.holds:
        click.echo(f"lambda={check.lam}")
    else:
        click.echo(f"NOT A {t}-DESIGN (min={check.min_count}, max={check.max_count})")
        raise SystemExit(5)


@cli.group()
def paper():
    """End-to-end reproduction of the published results."""


@paper.command('verify')
@click.option('--m', 'm', type=int, required=True, help='Odd extension degree m >= 5')
@click.option('--level', type=click.Choice(LEVELS), default='full',
              help='formulas: closed forms only; full: also enumerate and verify designs')
@click.option('--json', 'json_path', type=click.Path(dir_okay=False), help='Also write the JSON report here')
@click.option('--out', type=click.Path(dir_okay=False), help='Write the text report here instead of standard output')
@click.option('--threads', type=int, help='Worker thread cap')
def paper_verify(m, level, json_path, out, threads):
    """Run every check at m and print the verification report."""
    check_m(m)
    with exit_on_error():
        report = run_verification(m, level, threads)
    text = report.to_text()
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        click.echo(text, nl=False)
    if json_path:
        with open(json_path, 'w', encoding='utf-8') as f:
            f.write(report.to_json())
    raise SystemExit(report.exit_code())


if __name__ == '__main__':
    cli()
