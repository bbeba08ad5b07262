# cli.py
"""
Command line: analyze | gcheck | counterexample | validate | hilbert | macaulay.

Reports go to stdout as sorted-key JSON, diagnostics to stderr.
Exit status: 0 consistent, 1 input error, 2 a result contradicting the
expected mathematics (or a failed search).
"""
import functools
import logging
import sys

import click

import config
from db import init_db, save_report
from errors import AnalysisError
from reports import (
    analyze_report,
    build_matroid,
    counterexample_report,
    dump_report,
    gcheck_report,
    hilbert_report,
    load_matroid_file,
    macaulay_report,
    parse_order,
    parse_target,
    plain,
    validate_report,
)

logger = logging.getLogger(__name__)

EXIT_ALERT = 2


def _emit(ctx, report, json_out, store, input_text=""):
    text = dump_report(report)
    click.echo(text, nl=False)
    if json_out:
        with open(json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if store:
        init_db()
        report_id = save_report(plain(report), input_text)
        logger.info("stored report %d", report_id)
    if report["status"] != "ok":
        ctx.exit(EXIT_ALERT)


def reported(func):
    """Turn AnalysisError into a JSON error on stderr and its exit status."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return func(ctx, *args, **kwargs)
        except AnalysisError as exc:
            click.echo(dump_report(exc.to_dict()), err=True, nl=False)
            ctx.exit(exc.exit_code)

    return wrapper


def output_options(func):
    func = click.option("--json-out", type=click.Path(dir_okay=False), help="Also write the report here.")(func)
    func = click.option("--store", is_flag=True, help="Save the report in the reports database.")(func)
    return func


def _read(path):
    doc = load_matroid_file(path)
    with open(path, encoding="utf-8") as fh:
        return doc, fh.read()


@click.group()
@click.option("--log-level", default=config.LOG_LEVEL, show_default=True)
def cli(log_level):
    """Matroid h-vectors, face rings and g-elements."""
    logging.basicConfig(
        stream=sys.stderr,
        level=log_level.upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@click.argument("file")
@click.option("--target", type=click.Choice(["ind", "bc"]), default="ind", show_default=True)
@click.option("--order", default=None, help="Element order, least first, e.g. 3,0,1,2.")
@output_options
@reported
def analyze(ctx, file, target, order, json_out, store):
    """f/h/g-vectors and inequality verdicts for one matroid."""
    doc, text = _read(file)
    m = build_matroid(doc)
    report = analyze_report(m, parse_target(target), parse_order(order, m.n) if order else None)
    _emit(ctx, report, json_out, store, text)


@cli.command()
@click.argument("file")
@click.option("--seed", type=click.IntRange(min=0), default=config.DEFAULT_SEED, show_default=True)
@click.option("--bound", type=click.IntRange(min=0), default=config.DEFAULT_BOUND, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=config.DEFAULT_TRIALS, show_default=True)
@click.option("--exact", is_flag=True, help="Decide every rank in exact arithmetic.")
@click.option("--strip-coloops", is_flag=True, help="Delete coloops first; h is unchanged.")
@output_options
@reported
def gcheck(ctx, file, seed, bound, trials, exact, strip_coloops, json_out, store):
    """Search for an l.s.o.p. and a g-element of the independence complex."""
    doc, text = _read(file)
    m = build_matroid(doc)
    report = gcheck_report(m, seed=seed, bound=bound, trials=trials, exact=exact, strip=strip_coloops)
    _emit(ctx, report, json_out, store, text)


@cli.command()
@click.option("--s", "s", type=int, default=5, show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=config.DEFAULT_SEED, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=config.COUNTEREXAMPLE_TRIALS, show_default=True)
@click.option("--order", default="natural", show_default=True)
@click.option("--bound", type=click.IntRange(min=0), default=config.DEFAULT_BOUND, show_default=True)
@output_options
@reported
def counterexample(ctx, s, seed, trials, order, bound, json_out, store):
    """The degree-2 kernel on the broken-circuit complex of m_s(s)."""
    report = counterexample_report(
        s=s, order=parse_order(order, 2 * s), trials=trials, bound=bound, seed=seed
    )
    _emit(ctx, report, json_out, store, f"s={s} order={order}")


@cli.command()
@click.argument("file")
@output_options
@reported
def validate(ctx, file, json_out, store):
    """Check the matroid axioms, naming the violation if any."""
    doc, text = _read(file)
    _emit(ctx, validate_report(doc), json_out, store, text)


@cli.command()
@click.argument("file")
@click.option("--target", type=click.Choice(["ind", "bc"]), default="ind", show_default=True)
@click.option("--seed", type=click.IntRange(min=0), default=config.DEFAULT_SEED, show_default=True)
@click.option("--bound", type=click.IntRange(min=0), default=config.DEFAULT_BOUND, show_default=True)
@click.option("--order", default=None)
@click.option("--exact/--modular", default=True, show_default=True)
@output_options
@reported
def hilbert(ctx, file, target, seed, bound, order, exact, json_out, store):
    """Quotient dimensions of R(Δ,Θ) against the h-vector."""
    doc, text = _read(file)
    m = build_matroid(doc)
    report = hilbert_report(
        m,
        target=parse_target(target),
        seed=seed,
        bound=bound,
        order=parse_order(order, m.n) if order else None,
        exact=exact,
    )
    _emit(ctx, report, json_out, store, text)


@cli.command()
@click.argument("j", type=int)
@click.argument("i", type=int)
@output_options
@reported
def macaulay(ctx, j, i, json_out, store):
    """Binomial expansion of J in degree I and the pseudopower J^<I>."""
    _emit(ctx, macaulay_report(j, i), json_out, store, f"{j} {i}")


def main(argv=None):
    """Console entry; usage errors count as input errors."""
    try:
        code = cli.main(args=argv, prog_name="gelement", standalone_mode=False)
    except click.exceptions.Abort:
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    sys.exit(code or 0)


if __name__ == "__main__":
    main()
