# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
CoNLL-X reading and writing.

Only ID (column 1), FORM (column 2) and HEAD (column 7) are used. Lines whose ID is not
a plain integer (multiword ranges, empty nodes) are skipped. Sentences that do not
form a tree rooted at 0 are kept and flagged malformed.
"""

from dataclasses import dataclass, field

from canonparse.utils.exceptions import ConllDecodeError
from canonparse.utils.settings import get_logger
from canonparse.utils.transition_core import Arc, DependencyTree, tree_problem

CONLLX_COLUMNS = 10
MIN_COLUMNS = 8
ID, FORM, HEAD = 0, 1, 6


@dataclass(frozen=True)
class ConllToken:
	id: int
	form: str
	head: int
	fields: tuple = ()

	def line(self):
		cells = list(self.fields) or [str(self.id), self.form]
		cells += ["_"] * (CONLLX_COLUMNS - len(cells))
		cells[ID], cells[FORM], cells[HEAD] = str(self.id), self.form, str(self.head)
		return "\t".join(cells)


@dataclass
class ConllSentence:
	index: int
	tokens: list = field(default_factory=list)
	problem: str = None

	@property
	def n(self):
		return len(self.tokens)

	@property
	def malformed(self):
		return self.problem is not None

	@property
	def tree(self):
		if self.malformed:
			return None
		return DependencyTree(self.n, frozenset(Arc(t.head, t.id) for t in self.tokens))

	@property
	def text(self):
		return " ".join(t.form for t in self.tokens)


def _decode(data):
	if isinstance(data, str):
		return data
	try:
		return data.decode("utf-8")
	except UnicodeDecodeError as e:
		raise ConllDecodeError(f"Treebank is not valid UTF-8: {e}")


def _blocks(text):
	block = []
	for raw in text.splitlines():
		if raw.strip():
			block.append(raw.rstrip("\r\n"))
		elif block:
			yield block
			block = []
	if block:
		yield block


def _number(cell):
	"""Non-negative ASCII integer in `cell`, or None"""
	cell = cell.strip()
	if not (cell.isascii() and cell.isdecimal()):
		return None
	return int(cell)


def _is_integer_like(cell):
	# superscripts and other non-ASCII digits
	return cell.strip().isdigit()


def _sentence_problem(tokens):
	n = len(tokens)
	ids = [t.id for t in tokens]
	if ids != list(range(1, n + 1)):
		return f"token ids {ids} are not 1..{n}"
	for t in tokens:
		if not 0 <= t.head <= n:
			return f"token {t.id} has head {t.head} outside 0..{n}"
		if t.head == t.id:
			return f"token {t.id} is its own head"
	return tree_problem(n, frozenset(Arc(t.head, t.id) for t in tokens))


def _parse_block(index, lines):
	sentence = ConllSentence(index=index)
	for line in lines:
		cells = line.split("\t")
		token_id = _number(cells[ID])
		if token_id is None:
			if _is_integer_like(cells[ID]):
				sentence.problem = f"token id {cells[ID]!r} is not an ASCII integer"
			continue
		if len(cells) < MIN_COLUMNS:
			sentence.problem = f"line {line!r} has {len(cells)} columns, need at least {MIN_COLUMNS}"
			continue
		head = _number(cells[HEAD])
		if head is None:
			sentence.problem = f"token {token_id} has non-numeric head {cells[HEAD]!r}"
			continue
		sentence.tokens.append(ConllToken(token_id, cells[FORM], head, tuple(cells)))

	if not sentence.tokens and sentence.problem is None:
		return None
	if sentence.problem is None:
		sentence.problem = _sentence_problem(sentence.tokens)
	return sentence


def parse_conllx(data):
	"""Sentences of a CoNLL-X text, numbered from 1; accepts bytes or str"""
	sentences = []
	for lines in _blocks(_decode(data)):
		sentence = _parse_block(len(sentences) + 1, lines)
		if sentence is None:
			continue
		if sentence.malformed:
			get_logger().debug(f"[conll] sentence {sentence.index} malformed: {sentence.problem}")
		sentences.append(sentence)
	return sentences


def read_conllx(path):
	with open(path, "rb") as f:
		return parse_conllx(f.read())


def write_conllx(sentences):
	out = []
	for sentence in sentences:
		out.extend(token.line() for token in sentence.tokens)
		out.append("")
	return "\n".join(out) + ("\n" if out else "")


def sentence_from_tree(index, tree, forms=None):
	forms = forms or [f"w{i}" for i in range(1, tree.n + 1)]
	tokens = [ConllToken(i, forms[i - 1], head) for i, head in enumerate(tree.heads, start=1)]
	return ConllSentence(index=index, tokens=tokens)
