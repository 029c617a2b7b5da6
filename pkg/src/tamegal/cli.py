"""Command-line driver: run scenario files through the verification suites.

Exit status: 0 all PASS, 1 some suite failed, 2 the scenario does not parse,
3 the scenario violates an invariant.
"""
import sys
from pathlib import Path

import click

from .scenario import (SUITES, ScenarioParseError, ScenarioInvariantError, load_scenario,
                       check_invariants, list_scenarios, corpus_dir)
from .suites import SUITE_DOCS, run_scenario, render_report, render_kv

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INVARIANT = 0, 1, 2, 3


def resolve_scenario(ref):
    """A path, or the name of a corpus scenario."""
    p = Path(ref)
    if p.exists():
        return p
    cand = corpus_dir() / f"{ref}.yaml"
    return cand if cand.exists() else p


def golden_dir() -> Path:
    return corpus_dir() / "golden"


def execute(ref, suites=(), seed=0, fmt="text"):
    """(exit status, report text)."""
    try:
        sc = load_scenario(resolve_scenario(ref))
    except ScenarioParseError as e:
        return EXIT_PARSE, f"parse error: {e}\n"
    try:
        check_invariants(sc)
        results = run_scenario(sc, seed, set(suites) or None)
    except ScenarioInvariantError as e:
        return EXIT_INVARIANT, f"invariant violation: {e}\n"
    text = (render_kv if fmt == "kv" else render_report)(sc, results, seed)
    return (EXIT_OK if all(r.passed for r in results) else EXIT_FAIL), text


@click.group()
def main():
    """Exact verification suites for tame Galois module scenarios."""


@main.command()
@click.argument("scenario")
@click.option("--suite", "suites", multiple=True, type=click.Choice(SUITES),
              help="Run only this suite (repeatable).")
@click.option("--seed", default=0, show_default=True, type=int, help="Seed for randomized sweeps.")
@click.option("--out", type=click.Path(dir_okay=False), help="Also write the report here.")
@click.option("--format", "fmt", type=click.Choice(["text", "kv"]), default="text", show_default=True,
              help="Structured text or key=value lines.")
def run(scenario, suites, seed, out, fmt):
    """Run SCENARIO (a file or a corpus name)."""
    status, text = execute(scenario, suites, seed, fmt)
    if out:
        Path(out).write_text(text)
    stream = sys.stdout if status in (EXIT_OK, EXIT_FAIL) else sys.stderr
    stream.write(text)
    sys.exit(status)


@main.command("list")
@click.option("--corpus", type=click.Path(file_okay=False), help="Directory to list instead of the bundled corpus.")
def list_cmd(corpus):
    """List corpus scenarios."""
    for p in list_scenarios(corpus):
        click.echo(p.stem)


@main.command()
@click.option("--dir", "directory", type=click.Path(file_okay=False), help="Output directory (default: the corpus golden directory).")
@click.option("--check", is_flag=True, help="Compare against existing files instead of writing.")
def golden(directory, check):
    """Write (or check) seed-0 reports for every corpus scenario."""
    d = Path(directory) if directory else golden_dir()
    d.mkdir(parents=True, exist_ok=True)
    bad = []
    for p in list_scenarios():
        _, text = execute(str(p))
        target = d / f"{p.stem}.txt"
        if check:
            if not target.exists() or target.read_text() != text:
                bad.append(p.stem)
        else:
            target.write_text(text)
        click.echo(f"{p.stem}: {'MISMATCH' if p.stem in bad else 'ok'}")
    sys.exit(EXIT_FAIL if bad else EXIT_OK)


@main.command()
@click.argument("suite")
def describe(suite):
    """Describe what SUITE verifies."""
    if suite not in SUITE_DOCS:
        raise click.UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    click.echo(f"{suite}: {SUITE_DOCS[suite]}")


if __name__ == "__main__":
    main()
