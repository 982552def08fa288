# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Command-line surface: `canonparse <command>` standalone, `bench canonparse <command>` inside a bench.
"""

import logging
import sys
from functools import wraps

import click
import pandas as pd

from canonparse.utils.conll import read_conllx
from canonparse.utils.coverage import coverage, coverage_table, itemized_table, to_tsv
from canonparse.utils.disambiguator import transform
from canonparse.utils.exceptions import BudgetExceeded, CanonParseError
from canonparse.utils.oracle import canonical_oracle, render_outcome
from canonparse.utils.settings import get_default_system, get_enumeration_budget
from canonparse.utils.system_dsl import parse_system, render_system
from canonparse.utils.transition_core import missing_mandatory
from canonparse.utils.verifier import spurious_ambiguity_report, verify_system


class UsageFailure(click.ClickException):
	exit_code = 2


def reports_errors(f):
	"""Domain errors become exit status 2 with the message on stderr"""

	@wraps(f)
	def wrapper(*args, **kwargs):
		try:
			return f(*args, **kwargs)
		except CanonParseError as e:
			raise UsageFailure(str(e))

	return wrapper


def system_option(f):
	return click.option(
		"--system",
		"system_text",
		default=None,
		help="Builtin name (arc-standard, attardi:<depth>, attardi-deg2) or templates like 'la:2,1;ra:2,1'.",
	)(f)


def load_system(system_text):
	return parse_system(system_text or get_default_system())


def load_monotonic_system(system_text):
	"""System and its enriched form; a non-monotonic system is a usage error"""
	spec = load_system(system_text)
	return spec, transform(spec)


@click.group("canonparse")
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr.")
def cli(verbose):
	"""Canonical oracles for bottom-up shift-reduce dependency parsers."""
	if verbose:
		logger = logging.getLogger("canonparse")
		logger.setLevel(logging.DEBUG)
		if not logger.handlers:
			handler = logging.StreamHandler(sys.stderr)
			handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
			logger.addHandler(handler)


@cli.command("verify")
@system_option
@click.option("--max-len", type=click.IntRange(min=1), required=True, help="Check sentence lengths 1..N.")
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Explored-configuration budget.")
@reports_errors
def verify(system_text, max_len, budget):
	"""Exhaustive checks of the oracle and the enriched system."""
	spec = load_system(system_text)
	results = verify_system(spec, max_len, get_enumeration_budget(budget))
	for result in results:
		click.echo(str(result))
	if not all(r.passed for r in results):
		sys.exit(1)


@cli.command("oracle")
@system_option
@click.option("--conll", "conll_path", type=click.Path(dir_okay=False), required=True)
@click.option("--enriched", is_flag=True, help="Print enriched transitions.")
@reports_errors
def oracle(system_text, conll_path, enriched):
	"""Canonical computation of every sentence, one line each."""
	spec, esys = load_monotonic_system(system_text)
	try:
		sentences = read_conllx(conll_path)
	except OSError as e:
		raise UsageFailure(f"{conll_path}: {e}")

	for sentence in sentences:
		if sentence.malformed:
			click.echo("MALFORMED")
			continue
		click.echo(render_outcome(canonical_oracle(sentence.tree, spec), esys if enriched else None))


@cli.command("coverage")
@system_option
@click.option("--conll", "conll_paths", type=click.Path(dir_okay=False), multiple=True, required=True)
@click.option("--itemize", is_flag=True, help="List every unparseable or malformed sentence after the table.")
@reports_errors
def coverage_command(system_text, conll_paths, itemize):
	"""TSV table of oracle failures per treebank file."""
	spec, _ = load_monotonic_system(system_text)
	rows = coverage(conll_paths, spec)
	click.echo(to_tsv(coverage_table(rows)), nl=False)
	if itemize:
		click.echo(to_tsv(itemized_table(rows), header=False), nl=False)

	errors = [row for row in rows if row.error]
	for row in errors:
		click.echo(f"{row.source}: {row.error}", err=True)
	if errors:
		sys.exit(1)


@cli.command("transform")
@system_option
@reports_errors
def transform_command(system_text):
	"""Summary of the enriched system without spurious ambiguity."""
	spec = load_system(system_text)
	missing = missing_mandatory(spec)
	if missing:
		for template in sorted(missing):
			needed = ", ".join(str(t) for t in sorted(missing[template]))
			click.echo(f"{template} needs {needed}", err=True)
	esys = transform(spec)

	click.echo(f"system\t{render_system(spec)}")
	click.echo(f"degree\t{esys.degree}")
	click.echo(f"depth\t{esys.depth}")
	click.echo(f"features\t{esys.feature_count}")
	click.echo(f"transitions\t{len(esys.transitions)}")
	click.echo("inventory\t" + " ".join(str(t) for t in esys.transitions))


@cli.command("enumerate")
@system_option
@click.option("--len", "length", type=click.IntRange(min=1), required=True, help="Sentence length.")
@click.option("--enriched", is_flag=True, help="Enumerate the enriched system.")
@click.option("--budget", type=click.IntRange(min=1), default=None, help="Explored-configuration budget.")
@reports_errors
def enumerate_command(system_text, length, enriched, budget):
	"""Complete computations per derivable tree, as TSV."""
	spec = load_system(system_text)
	system = transform(spec) if enriched else spec
	try:
		report = spurious_ambiguity_report(system, length, get_enumeration_budget(budget))
	except BudgetExceeded as e:
		click.echo(f"FAIL\tbudget\tn={length}\t{e}", err=True)
		sys.exit(1)
	table = pd.DataFrame(report.rows(), columns=["tree", "computations"])
	click.echo(to_tsv(table), nl=False)
	click.echo(
		f"computations={report.computation_count} trees={report.tree_count} "
		f"max_ambiguity={report.max_ambiguity}",
		err=True,
	)


def cli_main(argv=None):
	try:
		cli.main(args=argv, prog_name="canonparse", standalone_mode=True)
	except SystemExit as e:
		if isinstance(e.code, int):
			return e.code
		return 0 if e.code is None else 1
	return 0


def main():
	sys.exit(cli_main(sys.argv[1:]))


commands = [cli]
