# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Oracle coverage over CoNLL-X treebanks: how many gold trees the canonical oracle
of a system cannot derive.
"""

import os
from dataclasses import dataclass, field

import pandas as pd

from canonparse.utils.conll import parse_conllx
from canonparse.utils.exceptions import CanonParseError
from canonparse.utils.oracle import canonical_oracle
from canonparse.utils.settings import get_logger
from canonparse.utils.transition_core import is_projective

COVERAGE_COLUMNS = ["source", "size", "failures", "non_projective", "malformed"]
UNPARSEABLE = "Unparseable"
MALFORMED = "Malformed"


@dataclass
class SentenceResult:
	index: int
	token_count: int
	status: str
	detail: str = ""


@dataclass
class CoverageRow:
	source: str
	size: int = 0
	failures: int = 0
	non_projective: int = 0
	malformed: int = 0
	failed_sentences: list = field(default_factory=list)
	error: str = None


def sentence_coverage(sentences, spec, source=""):
	"""Coverage counters for already parsed sentences"""
	row = CoverageRow(source=source)
	for sentence in sentences:
		if sentence.malformed:
			row.malformed += 1
			row.failed_sentences.append(SentenceResult(sentence.index, sentence.n, MALFORMED, sentence.problem))
			continue

		row.size += 1
		tree = sentence.tree
		if not is_projective(tree):
			row.non_projective += 1
		outcome = canonical_oracle(tree, spec)
		if not outcome.parsed:
			row.failures += 1
			row.failed_sentences.append(SentenceResult(sentence.index, sentence.n, UNPARSEABLE, str(tree)))
	return row


def file_coverage(path, spec, label=None):
	label = label or os.path.basename(path)
	logger = get_logger()
	try:
		with open(path, "rb") as f:
			sentences = parse_conllx(f.read())
	except (OSError, CanonParseError) as e:
		logger.error(f"[coverage] {label}: {e}")
		return CoverageRow(source=label, error=str(e))

	row = sentence_coverage(sentences, spec, source=label)
	logger.info(
		f"[coverage] {label} with {spec}: size={row.size} failures={row.failures} "
		f"non_projective={row.non_projective} malformed={row.malformed}"
	)
	return row


def coverage(files, spec):
	"""One row per file, in input order; unreadable files give an error row"""
	return [file_coverage(path, spec) for path in files]


def coverage_table(rows):
	table = pd.DataFrame(
		[
			{
				"source": row.source,
				"size": None if row.error else row.size,
				"failures": None if row.error else row.failures,
				"non_projective": None if row.error else row.non_projective,
				"malformed": None if row.error else row.malformed,
			}
			for row in rows
		],
		columns=COVERAGE_COLUMNS,
	)
	for column in COVERAGE_COLUMNS[1:]:
		table[column] = table[column].astype("Int64")
	return table


def itemized_table(rows):
	return pd.DataFrame(
		[
			{"source": row.source, "sentence": item.index, "status": item.status}
			for row in rows
			for item in row.failed_sentences
		],
		columns=["source", "sentence", "status"],
	)


def to_tsv(table, header=True):
	return table.to_csv(sep="\t", index=False, header=header, lineterminator="\n")
