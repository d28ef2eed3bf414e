# Standard library imports
import csv
import glob
import io
import json
import logging
import os
import time

# Third-party imports
import click

# Local imports
from ..cyclotomy import (
    check_table,
    class_census,
    derive_table,
    harvest,
    load_table,
    observe,
    primes_one_mod_24,
    save_table,
)
from ..errors import MissingTable, RankDeficient
from ..nonexist import Mode, analyze_tables, verdict_totals, verify_addition_set
from ..nonexist.verify import iter_scan
from ..ring.params import all_classes, extract_params, normalize_generator, param_record
from . import EPSILON_CHOICES, cli, handles_errors, parse_class

logger = logging.getLogger(__name__)

MODE_CHOICE = click.Choice([m.value for m in Mode])
FORMAT_CHOICE = click.Choice(["json", "csv"])


def _emit(text: str, out):
    if out:
        directory = os.path.dirname(out)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(out, "w") as fh:
            fh.write(text)
        click.echo(f"Wrote {out}", err=True)
    else:
        click.echo(text)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _load_tables(table_dir: str) -> dict:
    tables = {}
    for path in sorted(glob.glob(os.path.join(table_dir, "*.json"))):
        table = load_table(path)
        tables[table.klass] = table
    if not tables:
        raise MissingTable(f"no tables in {table_dir}")
    return tables


@cli.command("params")
@click.argument("p", type=int)
@click.option("--generator", type=int, default=None, help="Pinned primitive root.")
@click.option("--strict", is_flag=True, help="Fail if the pinned root is not admissible.")
@click.option("--out", default=None)
@click.option("--format", "fmt", type=FORMAT_CHOICE, default=None)
@click.pass_obj
@handles_errors
def cmd_params(run, p, generator, strict, out, fmt):
    """Parameter record of P for its canonical generator"""
    run = run.narrow(command="params", out=out, fmt=fmt)
    cache = run.cache
    record = cache.load_json(cache.params_path(p)) if cache.enabled and generator is None else None
    if record is None:
        ctx = normalize_generator(p, generator=generator, exhaustive=not strict, cache=cache)
        record = param_record(ctx, extract_params(ctx))
        if generator is None and cache.enabled:
            cache.save_json(cache.params_path(p), record)
    if run.fmt == "csv":
        text = _csv(list(record), [list(record.values())])
    else:
        text = json.dumps(record, indent=2)
    _emit(text, run.out)


@cli.command("derive")
@click.option("--class", "klass", callback=parse_class, default=None, help="F1,V1,Z,T (all 48 by default).")
@click.option("--pmax", type=int, default=None)
@click.option("--per-class", type=int, default=None, help="Primes harvested per class.")
@click.option("--allow-dependency", is_flag=True, help="Fit rank-deficient classes with zeroed free coefficients.")
@click.option("--out", default=None, help="Table directory.")
@click.option("--format", "fmt", type=FORMAT_CHOICE, default=None)
@click.pass_obj
@handles_errors
def cmd_derive(run, klass, pmax, per_class, allow_dependency, out, fmt):
    """Derive and validate coefficient tables"""
    run = run.narrow(command="derive", klass=klass, pmax=pmax, per_class=per_class, out=out, fmt=fmt)
    run.require_order_24_bound()
    out_dir = run.out or run.table_dir
    classes = [run.klass] if run.klass else all_classes()
    buckets = harvest(run.pmax, run.per_class, classes, jobs=run.jobs, progress=run.progress, cache=run.cache)

    failures = []
    for k in classes:
        try:
            table = derive_table(k, buckets[k], held_out=run.held_out, allow_dependency=allow_dependency)
        except RankDeficient as e:
            failures.append(e)
            logger.warning(f"Class {k} not derived: {e}")
            click.echo(f"{k}: {e}", err=True)
            continue
        os.makedirs(out_dir, exist_ok=True)
        path = os.path.join(out_dir, f"{k.label}.{run.fmt}")
        save_table(table, path, run.fmt)
        note = f" ({len(table.warnings)} warnings)" if table.warnings else ""
        click.echo(f"{k}: fitted on {len(table.provenance)} primes, validated on {len(table.validated)}{note} -> {path}")

    click.echo(f"{len(classes) - len(failures)}/{len(classes)} tables derived")
    if failures:
        raise failures[0]


@cli.command("analyze")
@click.option("--tables", "table_dir", default=None, help="Directory of table JSON files.")
@click.option("--mode", type=MODE_CHOICE, required=True)
@click.option("--epsilon", type=click.Choice(EPSILON_CHOICES), default=None)
@click.option("--class", "klass", callback=parse_class, default=None)
@click.option("--extra-pairs", is_flag=True, help="Also use the C,D and U,V partitions.")
@click.option("--out", default=None)
@click.option("--format", "fmt", type=FORMAT_CHOICE, default=None)
@click.pass_obj
@handles_errors
def cmd_analyze(run, table_dir, mode, epsilon, klass, extra_pairs, out, fmt):
    """Run the contradiction pipeline on every class of the mode's parity"""
    run = run.narrow(command="analyze", epsilon=epsilon, klass=klass, out=out, fmt=fmt, table_dir=table_dir)
    mode = Mode(mode)
    tables = _load_tables(run.table_dir)
    if run.klass is not None:
        wanted = [run.klass]
    else:
        wanted = all_classes(F1=mode.parity)
    missing = [k.label for k in wanted if k not in tables]
    if missing:
        raise MissingTable(f"{len(missing)} classes absent from {run.table_dir}: {', '.join(missing)}")

    reports = analyze_tables(
        [tables[k] for k in wanted],
        mode,
        run.epsilons,
        extra_pairs=extra_pairs,
        jobs=run.jobs,
        progress=run.progress,
    )
    if run.fmt == "csv":
        text = _csv(
            ["F1", "V1", "Z", "T", "mode", "epsilon", "verdict", "description"],
            [
                [r.klass.F1, r.klass.V1, r.klass.Z, r.klass.T, r.mode.value, r.epsilon, r.verdict.kind.value,
                 r.verdict.description]
                for r in reports
            ],
        )
    else:
        text = json.dumps([r.to_dict() for r in reports], indent=1)
    _emit(text, run.out)

    totals = verdict_totals(reports)
    click.echo(
        f"{len(reports)} reports: " + ", ".join(f"{k}={v}" for k, v in sorted(totals.items())),
        err=True,
    )


@cli.command("scan")
@click.option("--pmax", type=int, default=None)
@click.option("--mode", type=MODE_CHOICE, required=True)
@click.option("--cross-check", is_flag=True, help="Repeat each prime with its two least admissible generators.")
@click.option("--timing", is_flag=True, help="Print per-prime timing.")
@click.option("--out", default=None)
@click.pass_obj
@handles_errors
def cmd_scan(run, pmax, mode, cross_check, timing, out):
    """Test the cyclotomic criterion directly on every prime up to --pmax"""
    run = run.narrow(command="scan", pmax=pmax, out=out)
    run.require_order_24_bound()
    mode = Mode(mode)
    started = time.perf_counter()
    survivors, scanned = [], 0
    for result in iter_scan(run.pmax, mode, run.jobs, cross_check):
        scanned += 1
        if timing:
            click.echo(f"p={result.p} g={result.g} {result.seconds * 1000:.2f} ms", err=True)
        survivors.extend({"p": result.p, "epsilon": eps} for eps in result.survivors)
    _emit(json.dumps(survivors), run.out)
    click.echo(
        f"{scanned} primes scanned ({mode.value}) in {time.perf_counter() - started:.1f}s; {len(survivors)} survivors",
        err=True,
    )


@cli.command("verify-ds")
@click.argument("p", type=int)
@click.argument("n", type=int)
@click.argument("epsilon", type=click.Choice(["0", "1"]))
@click.argument("m", type=int)
@click.pass_obj
@handles_errors
def cmd_verify_ds(run, p, n, epsilon, m):
    """Brute-force check whether H_{N,EPSILON} with qualifier M is a difference set mod P"""
    report = verify_addition_set(p, n, int(epsilon), m)
    click.echo(json.dumps(report.to_dict()))


@cli.command("classes")
@click.option("--pmax", type=int, default=None)
@click.option("--out", default=None)
@click.option("--format", "fmt", type=FORMAT_CHOICE, default=None)
@click.pass_obj
@handles_errors
def cmd_classes(run, pmax, out, fmt):
    """How many primes up to --pmax fall into each of the 48 classes"""
    run = run.narrow(command="classes", pmax=pmax, out=out, fmt=fmt)
    run.require_order_24_bound()
    entries = class_census(run.pmax, jobs=run.jobs, progress=run.progress, cache=run.cache)
    if run.fmt == "csv":
        text = _csv(
            ["F1", "V1", "Z", "T", "count", "least_prime"],
            [[e.klass.F1, e.klass.V1, e.klass.Z, e.klass.T, e.count, e.least_prime] for e in entries],
        )
    else:
        text = json.dumps(
            [{"class": e.klass.as_dict(), "count": e.count, "least_prime": e.least_prime} for e in entries],
            indent=1,
        )
    _emit(text, run.out)
    empty = sum(1 for e in entries if e.least_prime is None)
    click.echo(f"{len(entries) - empty}/{len(entries)} classes realized below {run.pmax}", err=True)


@cli.command("validate")
@click.option("--tables", "table_dir", default=None)
@click.option("--pmax", type=int, default=None)
@click.pass_obj
@handles_errors
def cmd_validate(run, table_dir, pmax):
    """Check all 576 table identities for every prime up to --pmax"""
    run = run.narrow(command="validate", table_dir=table_dir, pmax=pmax)
    run.require_order_24_bound()
    tables = _load_tables(run.table_dir)
    checked, skipped = 0, set()
    for p in primes_one_mod_24(run.pmax):
        obs = observe(p, cache=run.cache)
        table = tables.get(obs.klass)
        if table is None:
            skipped.add(obs.klass)
            continue
        check_table(table, [obs])
        checked += 1
    click.echo(f"{checked} primes up to {run.pmax}: all 576 identities hold")
    if skipped:
        labels = ", ".join(str(k) for k in sorted(skipped))
        raise MissingTable(f"no table for {labels}")

