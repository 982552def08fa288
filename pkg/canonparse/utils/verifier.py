# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

"""
Exhaustive small-sentence checks.

Every complete computation up to a given length is enumerated depth-first in a fixed
order, and the results are compared against the oracle, the enriched system and an
independent generator of all trees.
"""

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from canonparse.utils.disambiguator import (
	EnrichedSystem,
	enriched_apply,
	enriched_applicable,
	enriched_initialize,
	enriched_is_terminal,
	tau_computation,
	transform,
)
from canonparse.utils.exceptions import BudgetExceeded, CanonParseError, InvalidLength
from canonparse.utils.oracle import (
	canonical_oracle,
	canonicalize,
	leftmost_troublesome,
	lift_to_enriched,
)
from canonparse.utils.settings import get_enumeration_budget, get_logger
from canonparse.utils.system_dsl import render_computation
from canonparse.utils.transition_core import (
	SHIFT,
	Arc,
	Computation,
	DependencyTree,
	Reduce,
	applicable,
	apply,
	builtin_system,
	initialize,
	is_projective,
	is_terminal,
	tree_of,
	tree_problem,
)


# -------------------------
# Enumeration
# -------------------------
@dataclass
class _Exploration:
	complete: list = field(default_factory=list)
	explored: int = 0


def _explore(initial, moves, step, is_complete, limit, visit=None):
	"""Depth-first walk of every configuration reachable from `initial`"""
	result = _Exploration()
	path = []

	def expand(c):
		result.explored += 1
		if result.explored > limit:
			raise BudgetExceeded(limit)
		if visit is not None:
			visit(c)
		if is_complete(c):
			result.complete.append((tuple(path), c))
		for move in moves:
			following = step(c, move)
			if following is None:
				continue
			path.append(move)
			expand(following)
			path.pop()

	expand(initial)
	return result


def _base_moves(spec):
	return [SHIFT] + [Reduce(t) for t in spec.sorted_reductions]


def _explore_base(spec, n, limit, visit=None):
	if n < 1:
		raise InvalidLength(n)

	def step(c, t):
		return apply(c, t, spec) if applicable(c, t, spec) else None

	return _explore(initialize(n), _base_moves(spec), step, is_terminal, limit, visit)


def _explore_enriched(esys, n, limit, visit=None):
	if n < 1:
		raise InvalidLength(n)

	def step(c, t):
		return enriched_apply(c, t, esys) if enriched_applicable(c, t, esys) else None

	return _explore(
		enriched_initialize(n, esys), esys.transitions, step, enriched_is_terminal, limit, visit
	)


def enumerate_computations(spec, n, limit=None):
	limit = get_enumeration_budget(limit)
	exploration = _explore_base(spec, n, limit)
	return [Computation(n, transitions) for transitions, _ in exploration.complete]


def enumerate_enriched(esys, n, limit=None):
	limit = get_enumeration_budget(limit)
	exploration = _explore_enriched(esys, n, limit)
	return [Computation(n, transitions) for transitions, _ in exploration.complete]


def _runs_by_tree(exploration, n):
	grouped = defaultdict(list)
	for transitions, final in exploration.complete:
		grouped[DependencyTree(n, final.arcs)].append(Computation(n, transitions))
	return grouped


def all_trees(n):
	"""Every tree over words 1..n, from head vectors rather than from any parser"""
	if n < 1:
		raise InvalidLength(n)
	choices = [[h for h in range(n + 1) if h != d] for d in range(1, n + 1)]
	for heads in itertools.product(*choices):
		arcs = frozenset(Arc(h, d) for d, h in enumerate(heads, start=1))
		if tree_problem(n, arcs) is None:
			yield DependencyTree(n, arcs)


# -------------------------
# Reports
# -------------------------
@dataclass
class EnumerationReport:
	n: int
	system: str
	computation_count: int
	tree_count: int
	per_tree_counts: dict
	max_ambiguity: int
	explored: int = 0

	@property
	def ambiguous(self):
		return self.max_ambiguity > 1

	def rows(self):
		return [(str(tree), count) for tree, count in sorted(self.per_tree_counts.items())]


def spurious_ambiguity_report(system, n, limit=None):
	"""Complete computations grouped by tree, for a base or an enriched system"""
	limit = get_enumeration_budget(limit)
	if isinstance(system, EnrichedSystem):
		exploration = _explore_enriched(system, n, limit)
	else:
		exploration = _explore_base(system, n, limit)

	counts = Counter(DependencyTree(n, final.arcs) for _, final in exploration.complete)
	report = EnumerationReport(
		n=n,
		system=str(system),
		computation_count=len(exploration.complete),
		tree_count=len(counts),
		per_tree_counts=dict(counts),
		max_ambiguity=max(counts.values(), default=0),
		explored=exploration.explored,
	)
	get_logger().debug(
		f"[enumerate] {system} n={n}: {report.computation_count} computations, "
		f"{report.tree_count} trees, {report.explored} configurations"
	)
	return report


@dataclass
class EquivalenceReport:
	n: int
	base_trees: frozenset
	enriched_trees: frozenset
	enriched_per_tree_counts: dict
	tau_failures: list = field(default_factory=list)

	@property
	def equal(self):
		return self.base_trees == self.enriched_trees

	@property
	def unambiguous(self):
		return all(count == 1 for count in self.enriched_per_tree_counts.values())


def check_equivalence(spec, n, limit=None):
	esys = transform(spec)
	limit = get_enumeration_budget(limit)

	base = _explore_base(spec, n, limit)
	enriched = _explore_enriched(esys, n, limit)

	failures = []
	counts = Counter()
	for transitions, final in enriched.complete:
		tree = DependencyTree(n, final.arcs)
		counts[tree] += 1
		projected = tau_computation(Computation(n, transitions))
		try:
			if tree_of(projected, spec) != tree:
				failures.append(f"{render_computation(projected)} derives another tree than {tree}")
		except CanonParseError as e:
			failures.append(f"{render_computation(projected)}: {e}")

	return EquivalenceReport(
		n=n,
		base_trees=frozenset(DependencyTree(n, final.arcs) for _, final in base.complete),
		enriched_trees=frozenset(counts),
		enriched_per_tree_counts=dict(counts),
		tau_failures=failures,
	)


@dataclass
class OracleReport:
	n: int
	tree_total: int = 0
	parsed: int = 0
	unparseable: int = 0
	failures: list = field(default_factory=list)

	@property
	def passed(self):
		return not self.failures


def check_oracle(spec, n, limit=None):
	"""Oracle against enumeration over every tree of n words"""
	esys = transform(spec)
	limit = get_enumeration_budget(limit)
	base = _runs_by_tree(_explore_base(spec, n, limit), n)
	enriched = _runs_by_tree(_explore_enriched(esys, n, limit), n)

	report = OracleReport(n=n)
	for tree in all_trees(n):
		report.tree_total += 1
		outcome = canonical_oracle(tree, spec)
		derivable = tree in base
		if outcome.parsed != derivable:
			report.failures.append(f"{tree}: oracle parsed={outcome.parsed}, enumeration derivable={derivable}")
			continue
		if not outcome.parsed:
			report.unparseable += 1
			continue

		report.parsed += 1
		canonical = outcome.computation
		if leftmost_troublesome(canonical, tree, spec) is not None:
			report.failures.append(f"{tree}: oracle output {render_computation(canonical)} is troublesome")
		for comp in base[tree]:
			rewritten = canonicalize(comp, spec)
			if rewritten != canonical:
				report.failures.append(
					f"{tree}: canonicalize({render_computation(comp)}) = {render_computation(rewritten)}"
				)
		try:
			lifted = lift_to_enriched(canonical, tree, esys)
		except CanonParseError as e:
			report.failures.append(f"{tree}: lift failed: {e}")
			continue
		if enriched.get(tree) != [lifted]:
			report.failures.append(f"{tree}: lift is not the unique enriched computation")
		if tau_computation(lifted) != canonical:
			report.failures.append(f"{tree}: lift does not project back to the oracle output")

	return report


def reachable_feature_vectors(esys, n, limit=None):
	limit = get_enumeration_budget(limit)
	seen = set()

	def visit(c):
		seen.update(symbol.features for symbol in c.stack)

	_explore_enriched(esys, n, limit, visit)
	return frozenset(seen)


def permutation_property(spec, n, limit=None):
	"""Trees whose computations do not all use the same multiset of transitions"""
	grouped = _runs_by_tree(_explore_base(spec, n, get_enumeration_budget(limit)), n)
	violations = []
	for tree, computations in sorted(grouped.items()):
		multisets = {frozenset(Counter(comp.transitions).items()) for comp in computations}
		if len(multisets) > 1:
			violations.append(tree)
	return violations


# -------------------------
# verify
# -------------------------
@dataclass(frozen=True)
class CheckResult:
	name: str
	n: int
	passed: bool
	detail: str = ""

	def __str__(self):
		status = "PASS" if self.passed else "FAIL"
		return f"{status}\t{self.name}\tn={self.n}\t{self.detail}"


def verify_system(spec, max_len, limit=None):
	limit = get_enumeration_budget(limit)
	esys = transform(spec)
	logger = get_logger()
	results = []

	for n in range(1, max_len + 1):
		try:
			results += _verify_length(spec, esys, n, limit)
		except BudgetExceeded as e:
			results.append(CheckResult("budget", n, False, str(e)))
			break

	failed = sum(1 for r in results if not r.passed)
	logger.info(f"[verify] {spec} up to n={max_len}: {len(results)} checks, {failed} failed")
	return results


def _verify_length(spec, esys, n, limit):
	results = []

	base = spurious_ambiguity_report(spec, n, limit)
	enriched = spurious_ambiguity_report(esys, n, limit)
	results.append(
		CheckResult(
			"non_ambiguity",
			n,
			enriched.max_ambiguity == 1 and enriched.computation_count == enriched.tree_count,
			f"enriched computations={enriched.computation_count} trees={enriched.tree_count} "
			f"base computations={base.computation_count} base max_ambiguity={base.max_ambiguity}",
		)
	)

	equivalence = check_equivalence(spec, n, limit)
	results.append(
		CheckResult(
			"equivalence",
			n,
			equivalence.equal and not equivalence.tau_failures,
			f"base trees={len(equivalence.base_trees)} enriched trees={len(equivalence.enriched_trees)} "
			f"tau failures={len(equivalence.tau_failures)}",
		)
	)

	oracle = check_oracle(spec, n, limit)
	detail = f"trees={oracle.tree_total} parsed={oracle.parsed} unparseable={oracle.unparseable}"
	if oracle.failures:
		detail += f" first failure: {oracle.failures[0]}"
	results.append(CheckResult("oracle", n, oracle.passed, detail))

	vectors = reachable_feature_vectors(esys, n, limit)
	bound = 2**esys.feature_count
	results.append(CheckResult("blow_up", n, len(vectors) <= bound, f"feature vectors={len(vectors)} bound={bound}"))

	if spec.reductions == builtin_system("arc-standard").reductions:
		violations = permutation_property(spec, n, limit)
		results.append(CheckResult("permutation", n, not violations, f"violating trees={len(violations)}"))

	non_projective = sum(1 for tree in all_trees(n) if not is_projective(tree))
	results.append(
		CheckResult("trees", n, oracle.tree_total == (n + 1) ** (n - 1), f"non_projective={non_projective}")
	)
	return results
