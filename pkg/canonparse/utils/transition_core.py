# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Bottom-up shift-reduce transition systems for dependency parsing.

A system is a shift plus a set of reductions la(p,q) / ra(p,q) over stack positions
p > q >= 1, counted from the top (position 1 = topmost symbol). Configurations are
immutable; apply() always returns a new one.
"""

from dataclasses import dataclass
from enum import Enum

from canonparse.utils.exceptions import (
	EmptySystem,
	InvalidArc,
	InvalidDepth,
	InvalidLength,
	InvalidTemplate,
	InvalidTree,
	NotApplicable,
	NotComplete,
	ReplayFailure,
	UnknownSystem,
)


class ArcKind(str, Enum):
	LEFT = "la"
	RIGHT = "ra"

	def __str__(self):
		return self.value


# -------------------------
# Trees
# -------------------------
@dataclass(frozen=True, order=True)
class Arc:
	head: int
	dependent: int

	def __post_init__(self):
		if self.head == self.dependent:
			raise InvalidArc(f"Arc {self.head}->{self.dependent} is a self loop")
		if self.dependent == 0:
			raise InvalidArc(f"Arc {self.head}->0: the root is never a dependent")
		if self.head < 0 or self.dependent < 0:
			raise InvalidArc(f"Arc {self.head}->{self.dependent} uses a negative node")

	def __str__(self):
		return f"{self.head}->{self.dependent}"


def render_arcs(arcs):
	return " ".join(str(arc) for arc in sorted(arcs))


@dataclass(frozen=True)
class DependencyTree:
	n: int
	arcs: frozenset

	def __post_init__(self):
		object.__setattr__(self, "arcs", frozenset(self.arcs))
		problem = tree_problem(self.n, self.arcs)
		if problem:
			raise InvalidTree(problem)

	@classmethod
	def from_heads(cls, heads):
		"""heads[i - 1] is the head of node i"""
		return cls(len(heads), frozenset(Arc(h, d) for d, h in enumerate(heads, start=1)))

	@classmethod
	def from_pairs(cls, n, pairs):
		return cls(n, frozenset(Arc(h, d) for h, d in pairs))

	@property
	def heads(self):
		heads = [0] * self.n
		for arc in self.arcs:
			heads[arc.dependent - 1] = arc.head
		return tuple(heads)

	def dependents_of(self, head):
		return sorted(arc.dependent for arc in self.arcs if arc.head == head)

	def __lt__(self, other):
		return (self.n, self.heads) < (other.n, other.heads)

	def __str__(self):
		return render_arcs(self.arcs)


def tree_problem(n, arcs):
	"""Why (n, arcs) is not a dependency tree rooted at 0, or None when it is"""
	if n < 1:
		return f"sentence length {n} < 1"
	if len(arcs) != n:
		return f"{len(arcs)} arcs for {n} words"

	heads = {}
	for arc in arcs:
		if arc.head > n or arc.dependent > n:
			return f"arc {arc} leaves the node range 0..{n}"
		if arc.dependent in heads:
			return f"node {arc.dependent} has two heads"
		heads[arc.dependent] = arc.head

	for node in range(1, n + 1):
		seen = set()
		current = node
		while current != 0:
			if current in seen:
				return f"cycle through node {node}"
			seen.add(current)
			current = heads[current]
	return None


def is_projective(tree):
	heads = (None, *tree.heads)

	def dominates(h, node):
		while node != 0:
			node = heads[node]
			if node == h:
				return True
		return False

	for arc in tree.arcs:
		low, high = sorted((arc.head, arc.dependent))
		for between in range(low + 1, high):
			if not dominates(arc.head, between):
				return False
	return True


# -------------------------
# Systems
# -------------------------
@dataclass(frozen=True, order=True)
class ReductionTemplate:
	kind: ArcKind
	p: int
	q: int

	def __post_init__(self):
		object.__setattr__(self, "kind", ArcKind(self.kind))
		if not (self.p > self.q >= 1):
			raise InvalidTemplate(self.p, self.q)

	@property
	def degree(self):
		return self.p - self.q

	@property
	def head_position(self):
		return self.q if self.kind is ArcKind.LEFT else self.p

	@property
	def dependent_position(self):
		return self.p if self.kind is ArcKind.LEFT else self.q

	def __str__(self):
		return f"{self.kind}:{self.p},{self.q}"


def la(p, q):
	return ReductionTemplate(ArcKind.LEFT, p, q)


def ra(p, q):
	return ReductionTemplate(ArcKind.RIGHT, p, q)


@dataclass(frozen=True)
class SystemSpec:
	reductions: frozenset
	degree: int
	depth: int
	name: str = ""

	def __contains__(self, template):
		return template in self.reductions

	@property
	def sorted_reductions(self):
		return sorted(self.reductions)

	def __str__(self):
		return self.name or ";".join(str(t) for t in self.sorted_reductions)


def validate_system(raw, name=""):
	templates = []
	for template in raw:
		if isinstance(template, ReductionTemplate):
			templates.append(template)
		else:
			kind, p, q = template
			templates.append(ReductionTemplate(ArcKind(kind), p, q))
	if not templates:
		raise EmptySystem()

	reductions = frozenset(templates)
	return SystemSpec(
		reductions=reductions,
		degree=max(t.degree for t in reductions),
		depth=max(t.p for t in reductions),
		name=name,
	)


BUILTIN_SYSTEMS = ("arc-standard", "attardi")

# depth 3 is the degree-2 system used for the treebank experiments
ATTARDI_EXPERIMENT_DEPTH = 3


def builtin_system(name, depth=None):
	if name == "arc-standard":
		return validate_system([la(2, 1), ra(2, 1)], name="arc-standard")

	if name == "attardi-deg2":
		name, depth = "attardi", ATTARDI_EXPERIMENT_DEPTH

	if name == "attardi":
		if depth is None:
			depth = ATTARDI_EXPERIMENT_DEPTH
		if depth < 2:
			raise InvalidDepth(depth)
		templates = []
		for p in range(2, depth + 1):
			templates += [la(p, 1), ra(p, 1)]
		return validate_system(templates, name=f"attardi:{depth}")

	raise UnknownSystem(name)


def mandatory_set(template):
	members = set()
	if template.p > template.q + 1:
		members.add(ReductionTemplate(template.kind, template.p - 1, template.q))
	if template.q > 1:
		members.add(ReductionTemplate(template.kind, template.p - 1, template.q - 1))
	return frozenset(members)


def missing_mandatory(spec):
	missing = {}
	for template in spec.reductions:
		absent = mandatory_set(template) - spec.reductions
		if absent:
			missing[template] = absent
	return missing


def is_monotonic(spec):
	return not missing_mandatory(spec)


# -------------------------
# Transitions and configurations
# -------------------------
@dataclass(frozen=True)
class Shift:
	def __str__(self):
		return "sh"


SHIFT = Shift()


@dataclass(frozen=True)
class Reduce:
	template: ReductionTemplate

	def __str__(self):
		return str(self.template)


def transition_sort_key(transition):
	if isinstance(transition, Shift):
		return (0,)
	t = transition.template
	return (1, t.kind.value, t.p, t.q)


@dataclass(frozen=True)
class Configuration:
	n: int
	stack: tuple
	buffer_start: int
	arcs: frozenset = frozenset()

	@property
	def buffer(self):
		return tuple(range(self.buffer_start, self.n + 1))

	@property
	def buffer_empty(self):
		return self.buffer_start > self.n

	def node_at(self, position):
		"""Node at 1-based stack position counted from the top"""
		return self.stack[-position]

	def __str__(self):
		stack = ",".join(str(i) for i in self.stack)
		buffer = ",".join(str(i) for i in self.buffer)
		return f"([{stack}], [{buffer}], {{{render_arcs(self.arcs)}}})"


@dataclass(frozen=True)
class Computation:
	n: int
	transitions: tuple

	def __post_init__(self):
		object.__setattr__(self, "transitions", tuple(self.transitions))

	def __len__(self):
		return len(self.transitions)


def initialize(n):
	if n < 1:
		raise InvalidLength(n)
	return Configuration(n=n, stack=(0,), buffer_start=1, arcs=frozenset())


def created_arc(c, template):
	"""Arc that `template` adds at `c`; the stack must hold at least p symbols"""
	upper = c.node_at(template.q)
	lower = c.node_at(template.p)
	if template.kind is ArcKind.LEFT:
		return Arc(upper, lower)
	return Arc(lower, upper)


def inapplicable_reason(c, transition, spec):
	if isinstance(transition, Shift):
		return "buffer is empty" if c.buffer_empty else None

	template = transition.template
	if template not in spec.reductions:
		return f"{template} is not a transition of {spec}"
	if len(c.stack) < template.p:
		return f"{template} needs {template.p} stack symbols, found {len(c.stack)}"
	if c.node_at(template.dependent_position) == 0:
		return f"{template} would make the root a dependent"
	return None


def applicable(c, transition, spec):
	return inapplicable_reason(c, transition, spec) is None


def apply(c, transition, spec):
	reason = inapplicable_reason(c, transition, spec)
	if reason:
		raise NotApplicable(reason)

	if isinstance(transition, Shift):
		return Configuration(c.n, c.stack + (c.buffer_start,), c.buffer_start + 1, c.arcs)

	template = transition.template
	arc = created_arc(c, template)
	removed = len(c.stack) - template.dependent_position
	stack = c.stack[:removed] + c.stack[removed + 1 :]
	return Configuration(c.n, stack, c.buffer_start, c.arcs | {arc})


def is_terminal(c):
	return c.stack == (0,) and c.buffer_empty


def replay(comp, spec):
	"""All configurations c_0..c_m of `comp`"""
	configurations = [initialize(comp.n)]
	for step, transition in enumerate(comp.transitions, start=1):
		reason = inapplicable_reason(configurations[-1], transition, spec)
		if reason:
			raise ReplayFailure(step, reason)
		configurations.append(apply(configurations[-1], transition, spec))
	return configurations


def run(comp, spec):
	return replay(comp, spec)[-1]


def tree_of(comp, spec):
	final = run(comp, spec)
	if not is_terminal(final):
		raise NotComplete(f"Computation ends in non-terminal configuration {final}")
	return DependencyTree(comp.n, final.arcs)
