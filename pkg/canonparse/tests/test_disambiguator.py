# Copyright (c) 2026, canonparse contributors
# See license.txt

import unittest

from canonparse.utils.disambiguator import (
	AnnotatedSymbol,
	EnrichedReduce,
	EnrichedShift,
	FeatureVector,
	Variant,
	enriched_applicable,
	enriched_apply,
	enriched_initialize,
	enriched_is_terminal,
	enriched_run,
	enriched_tree_of,
	parse_enriched,
	parse_enriched_computation,
	predicate_bu,
	predicate_redl,
	predicate_redr,
	render_enriched_computation,
	tau,
	tau_computation,
	transform,
)
from canonparse.utils.exceptions import InvalidLength, NotApplicable, NotMonotonic, SystemSyntaxError
from canonparse.utils.system_dsl import parse_computation
from canonparse.utils.transition_core import (
	SHIFT,
	Arc,
	DependencyTree,
	Reduce,
	builtin_system,
	la,
	ra,
	validate_system,
)
from canonparse.utils.verifier import _explore_enriched

T, F = True, False
EXAMPLE_ENRICHED = "sh.s sh.ns la.ns:2,1 sh.s ra.s:2,1 ra.s:2,1"


def features(stop, redl, redr):
	return FeatureVector(stop, tuple(redl), tuple(redr))


class TestTransform(unittest.TestCase):
	def test_arc_standard(self):
		esys = transform(builtin_system("arc-standard"))
		self.assertEqual(esys.degree, 1)
		self.assertEqual(esys.feature_count, 3)
		self.assertEqual(len(esys.transitions), 6)
		self.assertEqual(
			[str(t) for t in esys.transitions],
			["sh.s", "sh.ns", "la.s:2,1", "la.ns:2,1", "ra.s:2,1", "ra.ns:2,1"],
		)

	def test_attardi(self):
		esys = transform(builtin_system("attardi", 3))
		self.assertEqual((esys.degree, esys.depth), (2, 3))
		self.assertEqual(esys.feature_count, 5)
		self.assertEqual(len(esys.transitions), 10)
		for depth in (2, 4):
			transform(builtin_system("attardi", depth))

	def test_needs_monotonic_system(self):
		with self.assertRaises(NotMonotonic) as cm:
			transform(validate_system([la(3, 1)]))
		self.assertEqual(cm.exception.missing, {la(3, 1): frozenset({la(2, 1)})})
		self.assertIn("la:2,1", str(cm.exception))


class TestPredicates(unittest.TestCase):
	def setUp(self):
		self.spec = builtin_system("arc-standard")
		self.esys = transform(self.spec)

	def test_bu(self):
		self.assertTrue(predicate_bu(features(F, [T], [T]), features(T, [T], [T])))
		self.assertFalse(predicate_bu(features(T, [T], [T]), features(T, [T], [T])))
		self.assertFalse(predicate_bu(features(F, [T], [T]), features(F, [T], [T])))

	def test_fresh_shift(self):
		c = enriched_apply(enriched_initialize(1, self.esys), EnrichedShift(Variant.S), self.esys)
		self.assertEqual(c.stack[0], AnnotatedSymbol(0, features(F, [F], [F])))
		self.assertEqual(c.stack[1], AnnotatedSymbol(1, features(T, [T], [T])))
		self.assertTrue(predicate_redr(c, 2, 1, self.spec))
		self.assertFalse(predicate_redl(c, 2, 1, self.spec))

	def test_short_stack(self):
		c = enriched_initialize(1, self.esys)
		self.assertFalse(predicate_redl(c, 2, 1, self.spec))
		self.assertTrue(enriched_applicable(c, EnrichedShift(Variant.S), self.esys))
		self.assertFalse(enriched_applicable(c, EnrichedReduce(ra(2, 1), Variant.S), self.esys))
		with self.assertRaises(NotApplicable):
			enriched_apply(c, EnrichedReduce(ra(2, 1), Variant.S), self.esys)

	def test_initial_configuration(self):
		c = enriched_initialize(3, self.esys)
		self.assertEqual(c.nodes, (0,))
		self.assertEqual(c.buffer_start, 1)
		self.assertEqual(c.arcs, frozenset())
		self.assertFalse(enriched_is_terminal(c))
		with self.assertRaises(InvalidLength):
			enriched_initialize(0, self.esys)


class TestBlocking(unittest.TestCase):
	def setUp(self):
		self.esys = transform(builtin_system("arc-standard"))

	def test_feature_snapshot_after_blocked_prefix(self):
		c = enriched_run(parse_enriched_computation(3, "sh.s sh.ns sh.s ra.ns:2,1"), self.esys)
		self.assertEqual(c.nodes, (0, 1, 2))
		self.assertEqual(c.stack[0].features, features(F, [F], [F]))
		self.assertEqual(c.stack[1].features, features(T, [T], [F]))
		self.assertEqual(c.stack[2].features, features(F, [F], [T]))
		self.assertEqual(c.arcs, frozenset({Arc(2, 3)}))

		self.assertFalse(predicate_redl(c, 2, 1, self.esys.base))
		self.assertFalse(enriched_applicable(c, EnrichedReduce(la(2, 1), Variant.SBAR), self.esys))
		self.assertEqual(str(c.stack[1]), "1{stop=T,redl=[T],redr=[F]}")

	def test_example_computation_reaches_terminal(self):
		comp = parse_enriched_computation(3, EXAMPLE_ENRICHED)
		final = enriched_run(comp, self.esys)
		self.assertTrue(enriched_is_terminal(final))
		self.assertEqual(enriched_tree_of(comp, self.esys), DependencyTree.from_heads([2, 0, 2]))
		self.assertEqual(render_enriched_computation(comp), EXAMPLE_ENRICHED)

	def test_stop_false_dead_end(self):
		c = enriched_run(parse_enriched_computation(1, "sh.ns"), self.esys)
		self.assertFalse(enriched_applicable(c, EnrichedReduce(ra(2, 1), Variant.S), self.esys))

	def test_features_follow_their_pair_after_removal(self):
		esys = transform(builtin_system("attardi", 3))
		comp = parse_enriched_computation(4, "sh.ns sh.s sh.s sh.ns la.s:3,1")
		c = enriched_run(comp, esys)
		self.assertEqual(c.nodes, (0, 1, 3, 4))
		# 3 lost its right reduction with 1 when 4 was shifted; 0 is a new neighbour
		self.assertEqual(c.stack[2].features, features(T, [T, T], [F, T]))
		self.assertEqual(c.stack[3].features, features(T, [F, T], [T, T]))

		full = parse_enriched_computation(4, "sh.ns sh.s sh.s sh.ns la.s:3,1 ra.s:3,1 ra.ns:3,1 ra.s:2,1")
		self.assertEqual(enriched_tree_of(full, esys), DependencyTree.from_heads([0, 4, 0, 1]))


class TestProjection(unittest.TestCase):
	def test_tau(self):
		self.assertEqual(tau(EnrichedReduce(la(2, 1), Variant.SBAR)), Reduce(la(2, 1)))
		self.assertEqual(tau(EnrichedShift(Variant.S)), SHIFT)

	def test_tau_computation(self):
		comp = parse_enriched_computation(3, EXAMPLE_ENRICHED)
		self.assertEqual(tau_computation(comp), parse_computation(3, "sh sh la:2,1 sh ra:2,1 ra:2,1"))

	def test_parse_enriched(self):
		self.assertEqual(parse_enriched("la.ns:2,1"), EnrichedReduce(la(2, 1), Variant.SBAR))
		self.assertEqual(parse_enriched("sh.s"), EnrichedShift(Variant.S))
		for token in ("sh", "sh.x", "la:2,1", "ra.s:1,2"):
			with self.assertRaises(SystemSyntaxError):
				parse_enriched(token)


# (system, depth, largest sentence length) for exhaustive walks
EXHAUSTIVE = (("arc-standard", None, 5), ("attardi", 3, 4))


def pair_features(c):
	"""(lower node, upper node) -> (redl, redr) for every pair within reach"""
	pairs = {}
	for index, symbol in enumerate(c.stack):
		for k in range(1, symbol.features.degree + 1):
			if index - k < 0:
				break
			lower = c.stack[index - k].node
			pairs[(lower, symbol.node)] = (symbol.features.left(k), symbol.features.right(k))
	return pairs


class TestReachableEnrichedConfigurations(unittest.TestCase):
	def walk(self):
		for name, depth, max_len in EXHAUSTIVE:
			esys = transform(builtin_system(name, depth))
			for n in range(1, max_len + 1):
				seen = set()
				_explore_enriched(esys, n, 10_000_000, visit=seen.add)
				for c in seen:
					for t in esys.transitions:
						if enriched_applicable(c, t, esys):
							yield esys, c, t, enriched_apply(c, t, esys)

	def test_features_only_go_from_true_to_false(self):
		for esys, c, t, following in self.walk():
			before, after = pair_features(c), pair_features(following)
			for pair, (redl, redr) in after.items():
				if pair not in before:
					continue
				old_redl, old_redr = before[pair]
				self.assertFalse(redl and not old_redl, f"{c} --{t}--> {following}")
				self.assertFalse(redr and not old_redr, f"{c} --{t}--> {following}")

	def test_stopped_nodes_take_no_dependents(self):
		for esys, c, t, following in self.walk():
			stopped = {symbol.node for symbol in c.stack if symbol.features.stop}
			for arc in following.arcs - c.arcs:
				self.assertNotIn(arc.head, stopped, f"{c} --{t}--> {following}")

	def test_root_features_stay_false(self):
		for esys, c, t, following in self.walk():
			root = following.stack[0]
			self.assertEqual(root.node, 0)
			self.assertFalse(any(root.features.redl), str(following))
			self.assertFalse(any(root.features.redr), str(following))
