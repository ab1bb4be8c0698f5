"""Command-line driver.

Every command prints the guaranteed window next to any truncated series,
so partial output is never mistaken for an exact answer.  ``--json``
switches to a versioned machine-readable rendering.
"""

from __future__ import annotations

import json
import os
import sys

import click

from . import steenrod, verify
from .dyer_lashof import (
    AlreadyAdmissibleError,
    GradedClass,
    adem_relation,
    reduce_to_admissible,
    symmetry_extract_relations,
)
from .laurent import DEFAULT_DEGREE_BOUND, LaurentError, Window
from .parser import ParseError, parse_sum

SCHEMA = 1


def _default_bound() -> int:
    env = os.environ.get("DLASH_DEGREE_BOUND")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise click.UsageError(f"DLASH_DEGREE_BOUND is not an integer: {env!r}")
    return DEFAULT_DEGREE_BOUND


def _emit(ctx, payload: dict, text_lines: list):
    opts = ctx.obj
    if opts["json"]:
        payload = {"schema": SCHEMA, **payload}
        click.echo(json.dumps(payload, sort_keys=True))
    elif not opts["quiet"]:
        for line in text_lines:
            click.echo(line)


def _series_json(series) -> dict:
    return {
        "window": {
            "min_s": series.window.min_s,
            "min_t": series.window.min_t,
            "max_total": series.window.max_total,
        },
        "terms": series.to_json_terms(),
    }


@click.group()
@click.option("--json", "json_out", is_flag=True, help="emit JSON with a schema field")
@click.option(
    "--degree-bound",
    type=int,
    default=None,
    help=f"truncation bound (default {DEFAULT_DEGREE_BOUND}, "
    "or DLASH_DEGREE_BOUND)",
)
@click.option("--quiet", is_flag=True, help="suppress text output; exit status only")
@click.pass_context
def main(ctx, json_out, degree_bound, quiet):
    """Mod-2 power operations: Adem relations, Laurent series windows,
    and the dual Steenrod algebra action."""
    ctx.obj = {
        "json": json_out,
        "quiet": quiet,
        "bound": degree_bound if degree_bound is not None else _default_bound(),
    }


@main.command()
@click.argument("i", type=int)
@click.argument("j", type=int)
@click.pass_context
def adem(ctx, i, j):
    """Print the Adem relation for a non-admissible pair Q^I Q^J."""
    try:
        rel = adem_relation(i, j)
    except AlreadyAdmissibleError:
        _emit(
            ctx,
            {"command": "adem", "i": i, "j": j, "admissible": True},
            [f"Q^{i} Q^{j} is already admissible"],
        )
        return
    _emit(
        ctx,
        {
            "command": "adem",
            "i": i,
            "j": j,
            "admissible": False,
            "rhs": sorted(rel.rhs),
        },
        [str(rel)],
    )


@main.command()
@click.argument("expr")
@click.pass_context
def reduce(ctx, expr):
    """Rewrite EXPR (e.g. 'Q^6 Q^2 x[2]') to admissible normal form."""
    try:
        s = parse_sum(expr)
    except ParseError as e:
        raise click.ClickException(str(e))
    out = reduce_to_admissible(s)
    _emit(
        ctx,
        {
            "command": "reduce",
            "input": expr,
            "result": str(out),
            "words": [list(w) for w in sorted(out.words)],
        },
        [str(out)],
    )


@main.command()
@click.argument("degree", type=int)
@click.argument("bound", type=int, required=False)
@click.pass_context
def symmetry(ctx, degree, bound):
    """Relations forced by the symmetry of Q(t)Q(s)x on a class of DEGREE."""
    b = bound if bound is not None else ctx.obj["bound"]
    x = GradedClass("x", degree)
    window = Window(0, -b, b)
    rels = symmetry_extract_relations(x, window)
    lines = [f"# window e_s >= 0, e_t >= {-b}, total <= {b}"]
    rendered = sorted({str(r) for r in rels})
    lines.extend(rendered)
    lines.append(f"# {len(rendered)} distinct relations")
    _emit(
        ctx,
        {
            "command": "symmetry",
            "degree": degree,
            "bound": b,
            "relations": rendered,
        },
        lines,
    )


@main.command("zeta-action")
@click.argument("n", type=int)
@click.pass_context
def zeta_action(ctx, n):
    """The total operation Q(t) applied to the Milnor generator z_N."""
    bound = ctx.obj["bound"]
    try:
        series = steenrod.q_total_on_zeta(n, bound)
    except LaurentError as e:
        raise click.ClickException(str(e))
    _emit(
        ctx,
        {"command": "zeta-action", "n": n, "series": _series_json(series)},
        [
            f"Q(t) z{n}  [{series.window.describe()}]",
            str(series),
        ],
    )


@main.command()
@click.argument("max_i", type=int)
@click.pass_context
def conjugate(ctx, max_i):
    """Conjugates zbar_1 .. zbar_MAX_I of the Milnor generators."""
    try:
        zbars = steenrod.conjugate_zeta(max_i)
    except steenrod.WindowTooSmallError as e:
        raise click.ClickException(str(e))
    _emit(
        ctx,
        {
            "command": "conjugate",
            "max_i": max_i,
            "conjugates": {f"zbar{i+1}": str(z) for i, z in enumerate(zbars)},
        },
        [f"zbar{i+1} = {z}" for i, z in enumerate(zbars)],
    )


def _report_command(ctx, name: str, report: dict, extra: dict | None = None):
    lines = []
    for c in report["checks"]:
        status = "ok" if c["ok"] else "FAIL"
        lines.append(f"{status:4}  {c['identity']}")
    lines.append("passed" if report["passed"] else "FAILED")
    payload = {"command": name, "report": report}
    if extra:
        payload.update(extra)
    _emit(ctx, payload, lines)
    if not report["passed"]:
        ctx.exit(1)


@main.command()
@click.argument("max_i", type=int)
@click.pass_context
def steinberger(ctx, max_i):
    """Check the conjugate and successor formulas up to index MAX_I."""
    rep1 = steenrod.verify_steinberger_conjugate(max_i)
    rep2 = steenrod.verify_steinberger_successor(max_i)
    merged = {
        "passed": rep1["passed"] and rep2["passed"],
        "checks": rep1["checks"] + rep2["checks"],
    }
    _report_command(ctx, "steinberger", merged, {"max_i": max_i})


@main.command()
@click.pass_context
def nishida(ctx):
    """Check the conjugate form of the coaction compatibility."""
    bound = ctx.obj["bound"]
    rep = steenrod.verify_nishida_conjugate_form(bound)
    _report_command(ctx, "nishida", rep, {"degree_bound": bound})


@main.command("verify-all")
@click.pass_context
def verify_all(ctx):
    """Run every acceptance suite; nonzero exit if any check fails."""
    bound = ctx.obj["bound"]
    reports = verify.run_all(bound)
    lines = []
    for r in reports:
        status = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{status}  {r['name']}: {r['detail']}")
    ok = all(r["passed"] for r in reports)
    lines.append("all suites passed" if ok else "some suites FAILED")
    _emit(
        ctx,
        {"command": "verify-all", "degree_bound": bound, "suites": reports},
        lines,
    )
    if not ok:
        ctx.exit(1)


def entry() -> None:
    try:
        main(standalone_mode=True)
    except (LaurentError, ParseError) as e:  # pragma: no cover - safety net
        print(f"error: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    entry()
