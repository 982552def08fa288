# Copyright (c) 2026, canonparse contributors
# See license.txt

import unittest

from canonparse.utils.disambiguator import parse_enriched_computation, transform
from canonparse.utils.exceptions import (
	IndexOutOfRange,
	InvalidInput,
	InvolvesD,
	NotCanonical,
	NotMonotonic,
	PriorityTie,
)
from canonparse.utils.oracle import (
	CompatibleReduction,
	Success,
	Unparseable,
	canonical_oracle,
	canonicalize,
	compatible_reductions,
	highest_priority,
	is_troublesome,
	lift_to_enriched,
	phi,
	render_outcome,
)
from canonparse.utils.system_dsl import parse_computation, render_computation
from canonparse.utils.transition_core import (
	SHIFT,
	Arc,
	Configuration,
	DependencyTree,
	Reduce,
	builtin_system,
	la,
	ra,
	run,
	validate_system,
)

EXAMPLE_TREE = DependencyTree.from_heads([2, 0, 2])
CANONICAL = "sh sh la:2,1 sh ra:2,1 ra:2,1"
OTHER_ORDER = "sh sh sh ra:2,1 la:2,1 ra:2,1"
NON_PROJECTIVE = DependencyTree.from_heads([2, 0, 1, 2])


class TestCompatibleReductions(unittest.TestCase):
	def setUp(self):
		self.spec = builtin_system("arc-standard")

	def test_dependent_must_be_complete(self):
		c = run(parse_computation(3, "sh sh"), self.spec)
		self.assertEqual(
			compatible_reductions(c, EXAMPLE_TREE, self.spec),
			frozenset({CompatibleReduction(2, la(2, 1), Arc(2, 1))}),
		)

	def test_root_attachment_after_subtree(self):
		c = run(parse_computation(3, "sh sh la:2,1 sh ra:2,1"), self.spec)
		self.assertEqual(c.stack, (0, 2))
		self.assertEqual(
			compatible_reductions(c, EXAMPLE_TREE, self.spec),
			frozenset({CompatibleReduction(1, ra(2, 1), Arc(0, 2))}),
		)

	def test_single_symbol_stack(self):
		c = run(parse_computation(3, ""), self.spec)
		self.assertEqual(compatible_reductions(c, EXAMPLE_TREE, self.spec), frozenset())


class TestHighestPriority(unittest.TestCase):
	def test_closest_dependent_wins(self):
		left = CompatibleReduction(2, la(2, 1), Arc(3, 2))
		right = CompatibleReduction(1, ra(3, 1), Arc(1, 3))
		self.assertEqual(highest_priority({left, right}), right)
		self.assertEqual(highest_priority({left}), left)

	def test_tie_and_empty(self):
		with self.assertRaises(PriorityTie):
			highest_priority(
				{CompatibleReduction(1, ra(2, 1), Arc(2, 3)), CompatibleReduction(1, ra(3, 1), Arc(1, 3))}
			)
		with self.assertRaises(InvalidInput):
			highest_priority(set())


class TestCanonicalOracle(unittest.TestCase):
	def test_example_tree(self):
		outcome = canonical_oracle(EXAMPLE_TREE, builtin_system("arc-standard"))
		self.assertIsInstance(outcome, Success)
		self.assertEqual(render_computation(outcome.computation), CANONICAL)

	def test_single_word(self):
		outcome = canonical_oracle(DependencyTree.from_heads([0]), builtin_system("arc-standard"))
		self.assertEqual(render_computation(outcome.computation), "sh ra:2,1")

	def test_non_projective_tree(self):
		outcome = canonical_oracle(NON_PROJECTIVE, builtin_system("arc-standard"))
		self.assertIsInstance(outcome, Unparseable)
		self.assertFalse(outcome.parsed)
		self.assertEqual(render_outcome(outcome), "UNPARSEABLE")

		outcome = canonical_oracle(NON_PROJECTIVE, builtin_system("attardi", 3))
		self.assertTrue(outcome.parsed)
		self.assertEqual(
			render_computation(outcome.computation), "sh sh sh ra:3,1 la:2,1 sh ra:2,1 ra:2,1"
		)

	def test_bad_input(self):
		with self.assertRaises(InvalidInput):
			canonical_oracle(EXAMPLE_TREE, builtin_system("arc-standard"), n=4)
		with self.assertRaises(InvalidInput):
			canonical_oracle([2, 0, 2], builtin_system("arc-standard"))


class TestTroublesome(unittest.TestCase):
	def setUp(self):
		self.spec = builtin_system("arc-standard")

	def test_shift_over_compatible_reduction(self):
		comp = parse_computation(3, OTHER_ORDER)
		self.assertFalse(is_troublesome(comp, 0, EXAMPLE_TREE, self.spec))
		self.assertTrue(is_troublesome(comp, 2, EXAMPLE_TREE, self.spec))

	def test_canonical_has_none(self):
		comp = parse_computation(3, CANONICAL)
		for k in range(len(comp)):
			self.assertFalse(is_troublesome(comp, k, EXAMPLE_TREE, self.spec))
		with self.assertRaises(IndexOutOfRange):
			is_troublesome(comp, len(comp), EXAMPLE_TREE, self.spec)


class TestPhi(unittest.TestCase):
	def test_rewrites(self):
		four = Configuration(n=4, stack=(0, 1, 2, 3, 4), buffer_start=5)
		self.assertEqual(phi(1, SHIFT, four), SHIFT)
		self.assertEqual(
			phi(1, Reduce(ra(2, 1)), Configuration(n=3, stack=(0, 1, 2, 3), buffer_start=4)),
			Reduce(ra(2, 1)),
		)
		self.assertEqual(phi(3, Reduce(ra(3, 1)), four), Reduce(ra(2, 1)))

		five = Configuration(n=5, stack=(0, 1, 2, 3, 4, 5), buffer_start=6)
		self.assertEqual(phi(4, Reduce(la(4, 3)), five), Reduce(la(3, 2)))

	def test_involves_d(self):
		four = Configuration(n=4, stack=(0, 1, 2, 3, 4), buffer_start=5)
		with self.assertRaises(InvolvesD):
			phi(3, Reduce(ra(2, 1)), four)


class TestCanonicalize(unittest.TestCase):
	def setUp(self):
		self.spec = builtin_system("arc-standard")

	def test_rewrites_other_order(self):
		rewritten = canonicalize(parse_computation(3, OTHER_ORDER), self.spec)
		self.assertEqual(render_computation(rewritten), CANONICAL)

	def test_idempotent(self):
		comp = parse_computation(3, CANONICAL)
		self.assertEqual(canonicalize(comp, self.spec), comp)

	def test_degree_two(self):
		spec = builtin_system("attardi", 3)
		comp = parse_computation(4, "sh sh sh ra:3,1 sh ra:2,1 la:2,1 ra:2,1")
		expected = canonical_oracle(NON_PROJECTIVE, spec).computation
		self.assertEqual(canonicalize(comp, spec), expected)

	def test_needs_monotonic_system(self):
		spec = validate_system([la(2, 1), ra(2, 1), la(4, 1)])
		with self.assertRaises(NotMonotonic):
			canonicalize(parse_computation(3, CANONICAL), spec)


class TestLift(unittest.TestCase):
	def setUp(self):
		self.esys = transform(builtin_system("arc-standard"))

	def lift(self, heads, text, esys=None):
		tree = DependencyTree.from_heads(heads)
		esys = esys or self.esys
		return lift_to_enriched(parse_computation(tree.n, text), tree, esys)

	def test_example_tree(self):
		self.assertEqual(
			self.lift([2, 0, 2], CANONICAL),
			parse_enriched_computation(3, "sh.s sh.ns la.ns:2,1 sh.s ra.s:2,1 ra.s:2,1"),
		)

	def test_small_trees(self):
		self.assertEqual(self.lift([0], "sh ra:2,1"), parse_enriched_computation(1, "sh.s ra.s:2,1"))
		self.assertEqual(
			self.lift([0, 0], "sh ra:2,1 sh ra:2,1"),
			parse_enriched_computation(2, "sh.s ra.ns:2,1 sh.s ra.s:2,1"),
		)

	def test_degree_two_needs_pair_features(self):
		esys = transform(builtin_system("attardi", 3))
		self.assertEqual(
			self.lift([0, 4, 0, 1], "sh sh sh sh la:3,1 ra:3,1 ra:3,1 ra:2,1", esys),
			parse_enriched_computation(4, "sh.ns sh.s sh.s sh.ns la.s:3,1 ra.s:3,1 ra.ns:3,1 ra.s:2,1"),
		)

	def test_rejects_non_canonical(self):
		with self.assertRaises(NotCanonical):
			self.lift([2, 0, 2], OTHER_ORDER)

	def test_render_enriched_outcome(self):
		outcome = canonical_oracle(EXAMPLE_TREE, self.esys.base)
		self.assertEqual(render_outcome(outcome, self.esys), "sh.s sh.ns la.ns:2,1 sh.s ra.s:2,1 ra.s:2,1")
