# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Canonical computations for dependency trees.

canonical_oracle() builds the canonical computation directly, by always taking the
compatible reduction whose dependent is closest to the stack top. canonicalize() reaches
the same result from any complete computation by repeatedly hoisting the reduction that
should have been taken at the leftmost troublesome configuration.
"""

from dataclasses import dataclass

from canonparse.utils.disambiguator import (
	EnrichedReduce,
	EnrichedShift,
	Variant,
	enriched_replay,
	enriched_is_terminal,
	render_enriched_computation,
)
from canonparse.utils.exceptions import (
	IndexOutOfRange,
	InvalidInput,
	InvolvesD,
	NotCanonical,
	NotMonotonic,
	PriorityTie,
	ReplayFailure,
)
from canonparse.utils.settings import get_logger
from canonparse.utils.system_dsl import render_computation
from canonparse.utils.transition_core import (
	SHIFT,
	Arc,
	Computation,
	DependencyTree,
	Reduce,
	ReductionTemplate,
	Shift,
	apply,
	applicable,
	created_arc,
	initialize,
	is_terminal,
	missing_mandatory,
	replay,
	tree_of,
)


@dataclass(frozen=True, order=True)
class CompatibleReduction:
	dependent_position: int
	template: ReductionTemplate
	arc: Arc

	@property
	def transition(self):
		return Reduce(self.template)


@dataclass(frozen=True)
class Success:
	computation: Computation
	tree: DependencyTree
	parsed = True


@dataclass(frozen=True)
class Unparseable:
	configuration: object
	reason: str
	parsed = False

	def __str__(self):
		return f"UNPARSEABLE {self.reason} at {self.configuration}"


OracleOutcome = Success | Unparseable


def _subtree_complete(node, tree, arcs):
	return all(arc in arcs for arc in tree.arcs if arc.head == node)


def compatible_reductions(c, tree, spec):
	"""Reductions at `c` that build an arc of `tree` whose dependent has all its own dependents"""
	found = set()
	for template in spec.sorted_reductions:
		if not applicable(c, Reduce(template), spec):
			continue
		arc = created_arc(c, template)
		if arc not in tree.arcs or arc in c.arcs:
			continue
		if not _subtree_complete(arc.dependent, tree, c.arcs):
			continue
		found.add(CompatibleReduction(template.dependent_position, template, arc))
	return frozenset(found)


def highest_priority(reductions):
	if not reductions:
		raise InvalidInput("highest_priority needs at least one compatible reduction")

	ranked = sorted(reductions)
	best = ranked[0]
	if len(ranked) > 1 and ranked[1].dependent_position == best.dependent_position:
		raise PriorityTie(
			f"{best.template} and {ranked[1].template} both reduce stack position {best.dependent_position}"
		)
	return best


def canonical_oracle(tree, spec, n=None):
	if not isinstance(tree, DependencyTree):
		raise InvalidInput(f"Expected a DependencyTree, got {type(tree).__name__}")
	if n is not None and n != tree.n:
		raise InvalidInput(f"Tree has {tree.n} words, sentence has {n}")

	c = initialize(tree.n)
	transitions = []
	while True:
		reductions = compatible_reductions(c, tree, spec)
		if reductions:
			transition = highest_priority(reductions).transition
		elif not c.buffer_empty:
			transition = SHIFT
		elif is_terminal(c):
			return Success(Computation(tree.n, transitions), tree)
		else:
			get_logger().debug(f"[oracle] {spec}: stuck at {c} for tree {tree}")
			return Unparseable(c, "no compatible reduction and the buffer is empty")

		c = apply(c, transition, spec)
		transitions.append(transition)


def is_troublesome(comp, k, tree, spec, configurations=None):
	"""Whether the transition taken at c_k is not the highest-priority compatible reduction"""
	if not 0 <= k < len(comp.transitions):
		raise IndexOutOfRange(f"Configuration index {k} outside 0..{len(comp.transitions) - 1}")
	if configurations is None:
		configurations = replay(comp, spec)

	reductions = compatible_reductions(configurations[k], tree, spec)
	if not reductions:
		return False
	return comp.transitions[k] != highest_priority(reductions).transition


def leftmost_troublesome(comp, tree, spec, configurations=None):
	if configurations is None:
		configurations = replay(comp, spec)
	for k in range(len(comp.transitions)):
		if is_troublesome(comp, k, tree, spec, configurations):
			return k
	return None


def phi(d, transition, c):
	"""`transition` rewritten for the stack of `c` with node d already reduced away"""
	if isinstance(transition, Shift):
		return transition

	template = transition.template
	upper = c.node_at(template.q)
	lower = c.node_at(template.p)
	if d in (upper, lower):
		raise InvolvesD(f"{template} at {c} touches node {d}")
	if d not in c.stack:
		raise InvalidInput(f"Node {d} is not on the stack of {c}")

	if lower > d:
		return transition
	if upper > d:
		return Reduce(ReductionTemplate(template.kind, template.p - 1, template.q))
	return Reduce(ReductionTemplate(template.kind, template.p - 1, template.q - 1))


def canonicalize(comp, spec):
	missing = missing_mandatory(spec)
	if missing:
		raise NotMonotonic(missing)

	tree = tree_of(comp, spec)
	transitions = list(comp.transitions)

	# every pass extends the troublesome-free prefix by at least one step
	for _ in range(len(transitions) + 1):
		current = Computation(comp.n, transitions)
		configurations = replay(current, spec)
		k = leftmost_troublesome(current, tree, spec, configurations)
		if k is None:
			return current

		hoisted = highest_priority(compatible_reductions(configurations[k], tree, spec))
		d = hoisted.arc.dependent
		j = next(
			i
			for i in range(k + 1, len(transitions))
			if isinstance(transitions[i], Reduce)
			and created_arc(configurations[i], transitions[i].template) == hoisted.arc
		)
		transitions = (
			transitions[:k]
			+ [hoisted.transition]
			+ [phi(d, transitions[i], configurations[i]) for i in range(k, j)]
			+ transitions[j + 1 :]
		)

	raise AssertionError(f"canonicalize did not converge within {len(comp.transitions) + 1} passes")


def lift_to_enriched(comp, tree, esys):
	"""Enriched counterpart of a canonical computation: S when the touched node is done"""
	configurations = replay(comp, esys.base)
	arcs = frozenset()
	lifted = []
	for c, transition in zip(configurations, comp.transitions):
		if isinstance(transition, Shift):
			node, after = c.buffer_start, arcs
		else:
			arc = created_arc(c, transition.template)
			node, after = arc.head, arcs | {arc}

		pending = any(arc.head == node and arc not in after for arc in tree.arcs)
		variant = Variant.SBAR if pending else Variant.S
		if isinstance(transition, Shift):
			lifted.append(EnrichedShift(variant))
		else:
			lifted.append(EnrichedReduce(transition.template, variant))
		arcs = after

	result = Computation(comp.n, lifted)
	try:
		final = enriched_replay(result, esys)[-1]
	except ReplayFailure as e:
		raise NotCanonical(f"{render_computation(comp)} is not canonical for {tree}: {e}")
	if not enriched_is_terminal(final) or final.arcs != tree.arcs:
		raise NotCanonical(f"{render_computation(comp)} does not derive {tree} canonically")
	return result


def render_outcome(outcome, esys=None):
	if not outcome.parsed:
		return "UNPARSEABLE"
	if esys is None:
		return render_computation(outcome.computation)
	return render_enriched_computation(lift_to_enriched(outcome.computation, outcome.tree, esys))
