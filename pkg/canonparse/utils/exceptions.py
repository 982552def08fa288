# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Error hierarchy for canonparse.

Mirrors the shape of Frappe's exception classes (a plain Exception subclass with an
http_status_code) so the Frappe layer can hand them to frappe.throw unchanged.
"""


class CanonParseError(Exception):
	http_status_code = 417


class InvalidTemplate(CanonParseError):
	def __init__(self, p, q):
		self.p = p
		self.q = q
		super().__init__(f"Invalid reduction template ({p},{q}): need p > q >= 1")


class EmptySystem(CanonParseError):
	def __init__(self):
		super().__init__("A transition system needs at least one reduction")


class UnknownSystem(CanonParseError):
	http_status_code = 404

	def __init__(self, name):
		self.name = name
		super().__init__(f"Unknown builtin system: {name}")


class InvalidDepth(CanonParseError):
	def __init__(self, depth):
		self.depth = depth
		super().__init__(f"Invalid depth {depth}: need depth >= 2")


class InvalidLength(CanonParseError):
	def __init__(self, n):
		self.n = n
		super().__init__(f"Invalid sentence length {n}: need n >= 1")


class InvalidArc(CanonParseError):
	pass


class InvalidTree(CanonParseError):
	pass


class InvalidInput(CanonParseError):
	pass


class SystemSyntaxError(CanonParseError):
	def __init__(self, token, message="cannot parse"):
		self.token = token
		super().__init__(f"{message}: {token!r}")


class NotApplicable(CanonParseError):
	def __init__(self, reason):
		self.reason = reason
		super().__init__(f"Transition not applicable: {reason}")


class ReplayFailure(CanonParseError):
	def __init__(self, step, reason):
		# 1-based position of the failing transition
		self.step = step
		self.reason = reason
		super().__init__(f"Replay failed at step {step}: {reason}")


class NotComplete(CanonParseError):
	pass


class NotMonotonic(CanonParseError):
	def __init__(self, missing):
		# template -> frozenset of missing mandatory templates
		self.missing = dict(missing)
		parts = []
		for template in sorted(self.missing):
			needed = ", ".join(str(t) for t in sorted(self.missing[template]))
			parts.append(f"{template} missing {needed}")
		super().__init__("System is not monotonic: " + "; ".join(parts))


class PriorityTie(CanonParseError):
	pass


class InvolvesD(CanonParseError):
	pass


class NotCanonical(CanonParseError):
	pass


class IndexOutOfRange(CanonParseError):
	pass


class BudgetExceeded(CanonParseError):
	def __init__(self, limit):
		self.limit = limit
		super().__init__(f"Enumeration budget of {limit} explored configurations exceeded")


class ConllDecodeError(CanonParseError):
	pass
