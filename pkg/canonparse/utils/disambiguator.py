# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Removal of spurious ambiguity from monotonic bottom-up shift-reduce systems.

Every stack symbol carries 2*degree + 1 Boolean features:
  stop     - the node has collected all of its dependents
  redl[k]  - a left reduction with the symbol k positions below is still allowed
  redr[k]  - a right reduction with the symbol k positions below is still allowed

Each transition comes in two variants, S (the node it touches gets stop=T) and SBAR
(stop=F). After each transition, reductions that were available in the antecedent
configuration with higher priority than the one taken are blocked for good.
"""

from dataclasses import dataclass
from enum import Enum

from canonparse.utils.exceptions import (
	CanonParseError,
	InvalidLength,
	NotApplicable,
	NotComplete,
	NotMonotonic,
	ReplayFailure,
	SystemSyntaxError,
)
from canonparse.utils.system_dsl import parse_template
from canonparse.utils.transition_core import (
	SHIFT,
	ArcKind,
	Arc,
	Computation,
	DependencyTree,
	Reduce,
	ReductionTemplate,
	missing_mandatory,
	render_arcs,
)


def _flag(value):
	return "T" if value else "F"


@dataclass(frozen=True)
class FeatureVector:
	stop: bool
	redl: tuple
	redr: tuple

	@classmethod
	def all_true(cls, degree):
		return cls(True, (True,) * degree, (True,) * degree)

	@classmethod
	def all_false(cls, degree):
		return cls(False, (False,) * degree, (False,) * degree)

	@property
	def degree(self):
		return len(self.redl)

	@property
	def feature_count(self):
		return 1 + len(self.redl) + len(self.redr)

	def left(self, k):
		return self.redl[k - 1]

	def right(self, k):
		return self.redr[k - 1]

	def with_stop(self, stop):
		return FeatureVector(stop, self.redl, self.redr)

	def blocked(self, left_ks, right_ks):
		if not left_ks and not right_ks:
			return self
		redl = tuple(False if k in left_ks else v for k, v in enumerate(self.redl, start=1))
		redr = tuple(False if k in right_ks else v for k, v in enumerate(self.redr, start=1))
		return FeatureVector(self.stop, redl, redr)

	def closed_gap(self, distance):
		"""Features after the symbol `distance` positions below has been removed"""
		if distance > self.degree:
			return self

		def shift_down(values):
			return values[: distance - 1] + values[distance:] + (True,)

		return FeatureVector(self.stop, shift_down(self.redl), shift_down(self.redr))

	def __str__(self):
		redl = ",".join(_flag(v) for v in self.redl)
		redr = ",".join(_flag(v) for v in self.redr)
		return f"{{stop={_flag(self.stop)},redl=[{redl}],redr=[{redr}]}}"


@dataclass(frozen=True)
class AnnotatedSymbol:
	node: int
	features: FeatureVector

	def __str__(self):
		return f"{self.node}{self.features}"


@dataclass(frozen=True)
class EnrichedConfiguration:
	n: int
	stack: tuple
	buffer_start: int
	arcs: frozenset = frozenset()

	@property
	def nodes(self):
		return tuple(symbol.node for symbol in self.stack)

	@property
	def buffer_empty(self):
		return self.buffer_start > self.n

	def symbol_at(self, position):
		return self.stack[-position]

	def __str__(self):
		stack = ", ".join(str(symbol) for symbol in self.stack)
		buffer = ",".join(str(i) for i in range(self.buffer_start, self.n + 1))
		return f"([{stack}], [{buffer}], {{{render_arcs(self.arcs)}}})"


class Variant(Enum):
	S = "s"
	SBAR = "ns"

	@property
	def stop(self):
		return self is Variant.S


@dataclass(frozen=True)
class EnrichedShift:
	variant: Variant

	def __str__(self):
		return f"sh.{self.variant.value}"


@dataclass(frozen=True)
class EnrichedReduce:
	template: ReductionTemplate
	variant: Variant

	def __str__(self):
		t = self.template
		return f"{t.kind}.{self.variant.value}:{t.p},{t.q}"


def enriched_sort_key(transition):
	variant = 0 if transition.variant is Variant.S else 1
	if isinstance(transition, EnrichedShift):
		return (0, "", 0, 0, variant)
	t = transition.template
	return (1, t.kind.value, t.p, t.q, variant)


@dataclass(frozen=True)
class EnrichedSystem:
	base: object
	degree: int
	depth: int

	@property
	def feature_count(self):
		return 2 * self.degree + 1

	@property
	def transitions(self):
		inventory = [EnrichedShift(Variant.S), EnrichedShift(Variant.SBAR)]
		for template in self.base.sorted_reductions:
			inventory += [EnrichedReduce(template, Variant.S), EnrichedReduce(template, Variant.SBAR)]
		return tuple(inventory)

	def __str__(self):
		return f"enriched {self.base}"


def transform(spec):
	missing = missing_mandatory(spec)
	if missing:
		raise NotMonotonic(missing)
	return EnrichedSystem(base=spec, degree=spec.degree, depth=spec.depth)


# -------------------------
# Availability predicates
# -------------------------
def predicate_bu(i, j):
	return not i.stop and j.stop


def predicate_redl(c, p, q, spec):
	"""la(p,q) is available: i_q heads i_p"""
	if len(c.stack) < p or p <= q or q < 1:
		return False
	lower = c.symbol_at(p)
	upper = c.symbol_at(q)
	if lower.node == 0 or p - q > upper.features.degree:
		return False
	return (
		upper.features.left(p - q)
		and predicate_bu(upper.features, lower.features)
		and ReductionTemplate(ArcKind.LEFT, p, q) in spec.reductions
	)


def predicate_redr(c, p, q, spec):
	"""ra(p,q) is available: i_p heads i_q"""
	if len(c.stack) < p or p <= q or q < 1:
		return False
	lower = c.symbol_at(p)
	upper = c.symbol_at(q)
	if upper.node == 0 or p - q > upper.features.degree:
		return False
	return (
		upper.features.right(p - q)
		and predicate_bu(lower.features, upper.features)
		and ReductionTemplate(ArcKind.RIGHT, p, q) in spec.reductions
	)


# -------------------------
# Configurations and transitions
# -------------------------
def enriched_initialize(n, esys=None, degree=None):
	if n < 1:
		raise InvalidLength(n)
	if degree is None:
		degree = esys.degree if esys is not None else 1
	root = AnnotatedSymbol(0, FeatureVector.all_false(degree))
	return EnrichedConfiguration(n=n, stack=(root,), buffer_start=1, arcs=frozenset())


def inapplicable_reason(c, transition, esys):
	if isinstance(transition, EnrichedShift):
		return "buffer is empty" if c.buffer_empty else None

	template = transition.template
	if template not in esys.base.reductions:
		return f"{template} is not a transition of {esys.base}"
	if len(c.stack) < template.p:
		return f"{template} needs {template.p} stack symbols, found {len(c.stack)}"
	if template.kind is ArcKind.LEFT:
		available = predicate_redl(c, template.p, template.q, esys.base)
	else:
		available = predicate_redr(c, template.p, template.q, esys.base)
	if not available:
		return f"{template} is not available in {c}"
	return None


def enriched_applicable(c, transition, esys):
	return inapplicable_reason(c, transition, esys) is None


def _blocked_stack(c, esys, left_limit=None, right_limit=None):
	"""
	Antecedent stack with available reductions blocked.

	A la pair (u+k, u) is blocked when u+k < left_limit, a ra pair when u < right_limit;
	None means no limit (shift blocks everything available).
	"""
	size = len(c.stack)
	stack = list(c.stack)
	for u in range(1, min(esys.depth, size) + 1):
		left_ks, right_ks = set(), set()
		for k in range(1, esys.degree + 1):
			if u + k > size:
				break
			if (left_limit is None or u + k < left_limit) and predicate_redl(c, u + k, u, esys.base):
				left_ks.add(k)
			if (right_limit is None or u < right_limit) and predicate_redr(c, u + k, u, esys.base):
				right_ks.add(k)
		symbol = stack[size - u]
		stack[size - u] = AnnotatedSymbol(symbol.node, symbol.features.blocked(left_ks, right_ks))
	return stack


def _remove(stack, position):
	"""Drop the symbol at `position` and re-bind the features of the symbols above it"""
	size = len(stack)
	index = size - position
	result = stack[:index]
	for above in range(index + 1, size):
		symbol = stack[above]
		distance = above - index
		result.append(AnnotatedSymbol(symbol.node, symbol.features.closed_gap(distance)))
	return tuple(result)


def enriched_apply(c, transition, esys):
	reason = inapplicable_reason(c, transition, esys)
	if reason:
		raise NotApplicable(reason)

	stop = transition.variant.stop
	if isinstance(transition, EnrichedShift):
		stack = _blocked_stack(c, esys)
		pushed = FeatureVector.all_true(esys.degree).with_stop(stop)
		stack.append(AnnotatedSymbol(c.buffer_start, pushed))
		return EnrichedConfiguration(c.n, tuple(stack), c.buffer_start + 1, c.arcs)

	template = transition.template
	p, q = template.p, template.q
	if template.kind is ArcKind.RIGHT:
		stack = _blocked_stack(c, esys, left_limit=q, right_limit=q)
		head_position, dependent_position = p, q
	else:
		stack = _blocked_stack(c, esys, left_limit=p, right_limit=p)
		head_position, dependent_position = q, p

	size = len(stack)
	head = stack[size - head_position]
	dependent = stack[size - dependent_position]
	stack[size - head_position] = AnnotatedSymbol(head.node, head.features.with_stop(stop))

	arcs = c.arcs | {Arc(head.node, dependent.node)}
	return EnrichedConfiguration(c.n, _remove(stack, dependent_position), c.buffer_start, arcs)


def enriched_is_terminal(c):
	if len(c.stack) != 1 or not c.buffer_empty:
		return False
	root = c.stack[0]
	return (
		root.node == 0
		and root.features.stop
		and not any(root.features.redl)
		and not any(root.features.redr)
	)


def enriched_replay(comp, esys):
	configurations = [enriched_initialize(comp.n, esys)]
	for step, transition in enumerate(comp.transitions, start=1):
		reason = inapplicable_reason(configurations[-1], transition, esys)
		if reason:
			raise ReplayFailure(step, reason)
		configurations.append(enriched_apply(configurations[-1], transition, esys))
	return configurations


def enriched_run(comp, esys):
	return enriched_replay(comp, esys)[-1]


def enriched_tree_of(comp, esys):
	final = enriched_run(comp, esys)
	if not enriched_is_terminal(final):
		raise NotComplete(f"Enriched computation ends in non-terminal configuration {final}")
	return DependencyTree(comp.n, final.arcs)


# -------------------------
# Projection back to the base system
# -------------------------
def tau(transition):
	if isinstance(transition, EnrichedShift):
		return SHIFT
	return Reduce(transition.template)


def tau_computation(comp):
	return Computation(comp.n, [tau(t) for t in comp.transitions])


def render_enriched(transition):
	return str(transition)


def parse_enriched(token):
	token = token.strip()
	if token in ("sh.s", "sh.ns"):
		return EnrichedShift(Variant(token[3:]))

	head, sep, positions = token.partition(":")
	kind, dot, variant = head.partition(".")
	if not sep or not dot or variant not in ("s", "ns"):
		raise SystemSyntaxError(token, "expected sh.s, sh.ns, la.s:p,q, la.ns:p,q, ra.s:p,q or ra.ns:p,q")
	try:
		template = parse_template(f"{kind}:{positions}")
	except CanonParseError:
		raise SystemSyntaxError(token, "bad enriched reduction")
	return EnrichedReduce(template, Variant(variant))


def render_enriched_computation(comp):
	return " ".join(render_enriched(t) for t in comp.transitions)


def parse_enriched_computation(n, text):
	return Computation(n, [parse_enriched(token) for token in text.split()])
