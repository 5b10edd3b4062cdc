"""Command-line interface: ``gcomplete <command> ...``.

Words use exponent notation (``B^4CIC^2``, optional trailing ``(pt)``); the
innermost letter must be C.  Indexes are written ``[i0,i1,...;j0,j1,...]``.
All numbers are printed exactly.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import logging
import re
import sys

import click

from .basis import OutsideSpanError, basis_matrix
from .flagops import dual, evaluate, ranks_of, sparse_flags
from .gvec import IndexSet, effective_closure_check, g_dual, g_vector, toric_g
from .lattice import flags_of_lattice, lattice_of_word
from .sorder import build_order, hasse, order_to_dot
from .survey import MAX_DEGREE, survey
from .words import WordSyntaxError, enumerate_indexes, format_word, parse_index, parse_word

INTERNAL_ERROR = 2


def _word(text: str) -> str:
    try:
        letters = parse_word(text)
    except WordSyntaxError as exc:
        raise click.BadParameter(str(exc), param_hint="WORD") from None
    if letters[-1] != "C":
        raise click.BadParameter(
            f"innermost letter must be C (I(pt) repeats C(pt); B(pt) is undefined), got {letters[-1]}",
            param_hint="WORD",
        )
    return letters


def _indices(text: str, degree: int) -> IndexSet:
    if text.strip() == "all":
        return IndexSet.all(degree)
    parts = re.findall(r"\[[^\]]*\]", text)
    if not parts and text.strip():
        raise click.BadParameter(f"no indexes found in {text!r}", param_hint="--indices")
    try:
        return IndexSet(degree, [parse_index(p) for p in parts])
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--indices") from None


def _guard(fn):
    """Map internal consistency failures to a distinct exit code."""

    @functools.wraps(fn)
    def run(*args, **kw):
        try:
            return fn(*args, **kw)
        except OutsideSpanError as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(INTERNAL_ERROR)

    return run


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose):
    """Exact flag vectors and complete g-vectors of C/I/B polytopes.

    C is the pyramid, I the prism, B the bipyramid; the leftmost letter is
    applied last.  Words must end in C.
    """
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING, format="%(message)s")


@main.command("flag")
@click.argument("word")
@click.option("--sparse", is_flag=True, help="Only the flag numbers on sparse subsets.")
@_guard
def cmd_flag(word, sparse):
    """Flag vector of WORD(pt) as JSON."""
    f = evaluate(_word(word))
    if sparse:
        click.echo(json.dumps([str(x) for x in sparse_flags(f)]))
    else:
        click.echo(f.to_json())


@main.command("oracle")
@click.argument("word")
@click.option("--dot", "dot", is_flag=True, help="Dump the face lattice Hasse diagram as DOT instead.")
def cmd_oracle(word, dot):
    """Flag vector of WORD(pt) counted on its face lattice."""
    lat = lattice_of_word(_word(word))
    if dot:
        click.echo(lat.to_dot(format_word(_word(word))), nl=False)
    else:
        click.echo(flags_of_lattice(lat).to_json())


@main.command("dual")
@click.argument("word")
@click.option("--g", "show_g", is_flag=True, help="Print the g-vector of the polar instead.")
@_guard
def cmd_dual(word, show_g):
    """Flag vector (or g-vector) of the polar of WORD(pt)."""
    letters = _word(word)
    f = evaluate(letters)
    if show_g:
        g = g_dual(f)
        for k, v in g.values.items():
            click.echo(f"{k}\t{v}")
    else:
        click.echo(dual(f).to_json())


@main.command("g")
@click.argument("word")
@click.option("--negative-only", is_flag=True, help="Only print entries with g_k < 0.")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
@_guard
def cmd_g(word, negative_only, as_json):
    """Complete g-vector of WORD(pt) in canonical index order."""
    letters = _word(word)
    g = g_vector(evaluate(letters))
    if negative_only:
        g = type(g)(g.degree, g.negative())
    if as_json:
        click.echo(g.to_json(letters))
        return
    for k, v in g.values.items():
        click.echo(f"{k}\t{v}")


@main.command("toric")
@click.argument("word")
@_guard
def cmd_toric(word):
    """Toric g-vector (g_0, ..., g_{d//2}) of WORD(pt)."""
    vals = toric_g(evaluate(_word(word)))
    click.echo(" ".join(str(v) for v in vals))


@main.command("basis")
@click.argument("d", type=click.IntRange(0, 16))
@click.option("--matrix", is_flag=True, help="Emit the basis flag vectors as a CSV matrix.")
def cmd_basis(d, matrix):
    """The CD-word basis of degree D."""
    indexes = enumerate_indexes(d)
    if not matrix:
        for k in indexes:
            click.echo(f"{k}\t{k.word or '(empty)'}")
        return
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["index"] + [",".join(map(str, ranks_of(m))) for m in range(1 << d)])
    for k, row in zip(indexes, basis_matrix(d)):
        out.writerow([str(k)] + [str(x) for x in row])
    click.echo(buf.getvalue(), nl=False)


@main.command("order")
@click.argument("d", type=click.IntRange(0, 16))
@click.option("--hasse", "covers", is_flag=True, help="Only covering pairs.")
@click.option("--dot", is_flag=True, help="Hasse diagram as DOT text.")
def cmd_order(d, covers, dot):
    """Singularity order on degree-D indexes, one 'k < l' per line."""
    if dot:
        click.echo(order_to_dot(d), nl=False)
        return
    pairs = hasse(d) if covers else build_order(d).comparable_pairs()
    sep = "<." if covers else "<"
    for k, l in pairs:
        click.echo(f"{k} {sep} {l}\t{k.word} {sep} {l.word}")


@main.command("survey")
@click.argument("d", type=int)
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.option("--verify", is_flag=True, help="Recount every flag vector on its face lattice.")
@click.option("--witnesses", is_flag=True, help="List every witness word (text format).")
@click.option("--max-degree", type=int, default=MAX_DEGREE, show_default=True)
@_guard
def cmd_survey(d, fmt, verify, witnesses, max_degree):
    """g-vector signs over all 3^(D-1) words of length D ending in C.

    Words ending in I are skipped because I(pt) and C(pt) are the same
    segment; B(pt) is undefined.  Set GCOMPLETE_THREADS to use several
    worker processes (0 = one per CPU); output does not depend on it.
    """
    try:
        report = survey(d, verify=verify, max_degree=max_degree)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="D") from None
    click.echo(report.render(fmt, witnesses), nl=False)
    if verify and report.oracle_mismatches:
        sys.exit(INTERNAL_ERROR)


@main.command("effective")
@click.argument("d", type=int)
@click.option("--indices", required=True, help="Indexes like '[0,0;1,1] [1;3]', or 'all'.")
@click.option("--word", "word", required=True, help="Degree-D word.")
@click.option("--next", "next_indices", default=None,
              help="Degree-(D+1) indexes; also check them on C, I and B of the word.")
@_guard
def cmd_effective(d, indices, word, next_indices):
    """Is the index set effective (g_k >= 0 and dual g_k >= 0) on WORD(pt)?"""
    letters = _word(word)
    f = evaluate(letters)
    if f.degree != d:
        raise click.BadParameter(f"{format_word(letters)} has degree {f.degree}, not {d}", param_hint="--word")
    s = _indices(indices, d)
    g, gd = g_vector(f), g_dual(f)
    for k in enumerate_indexes(d):
        if k in s:
            click.echo(f"{k}\tg={g.values[k]}\tg_dual={gd.values[k]}")
    ok = all(g.values[k] >= 0 and gd.values[k] >= 0 for k in s)
    click.echo(f"effective: {'yes' if ok else 'no'}")
    if next_indices is not None:
        report = effective_closure_check(s, _indices(next_indices, d + 1), f)
        if report.premise:
            for op, holds in report.results.items():
                click.echo(f"{op}{format_word(letters)}: {'effective' if holds else 'not effective'}")
        click.echo(f"closure: {report.status}")


if __name__ == "__main__":
    main()
