# Copyright (c) 2026, canonparse contributors
# See license.txt

import unittest

from canonparse.utils.exceptions import InvalidDepth, InvalidTemplate, SystemSyntaxError
from canonparse.utils.system_dsl import (
	parse_computation,
	parse_system,
	parse_transition,
	render_computation,
	render_system,
)
from canonparse.utils.transition_core import SHIFT, Reduce, builtin_system, la, ra


class TestSystemDsl(unittest.TestCase):
	def test_templates(self):
		spec = parse_system(" la:2,1 ; ra:2,1 ")
		self.assertEqual(spec.reductions, builtin_system("arc-standard").reductions)
		self.assertEqual(render_system(spec), "la:2,1;ra:2,1")

	def test_builtin_names(self):
		self.assertEqual(parse_system("arc-standard").name, "arc-standard")
		self.assertEqual(parse_system("attardi").depth, 3)
		self.assertEqual(parse_system("attardi:4").depth, 4)
		self.assertEqual(render_system(parse_system("attardi-deg2")), "la:2,1;la:3,1;ra:2,1;ra:3,1")

	def test_errors(self):
		with self.assertRaises(SystemSyntaxError):
			parse_system("")
		with self.assertRaises(SystemSyntaxError):
			parse_system("shift-reduce")
		with self.assertRaises(InvalidTemplate):
			parse_system("la:1,2")
		with self.assertRaises(InvalidDepth):
			parse_system("attardi:1")

	def test_transitions(self):
		self.assertEqual(parse_transition("sh"), SHIFT)
		self.assertEqual(parse_transition("ra:3,1"), Reduce(ra(3, 1)))
		with self.assertRaises(SystemSyntaxError):
			parse_transition("la")

		comp = parse_computation(3, "sh sh la:2,1 sh ra:2,1 ra:2,1")
		self.assertEqual(comp.n, 3)
		self.assertEqual(comp.transitions[2], Reduce(la(2, 1)))
		self.assertEqual(render_computation(comp), "sh sh la:2,1 sh ra:2,1 ra:2,1")
