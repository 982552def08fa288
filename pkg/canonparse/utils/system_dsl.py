"""
Text forms for systems and transitions.

System text is either a builtin name (arc-standard, attardi:<depth>, attardi-deg2) or
semicolon-separated templates like "la:2,1;ra:2,1;la:3,1;ra:3,1". Whitespace is ignored.
"""

import re

from canonparse.utils.exceptions import CanonParseError, SystemSyntaxError
from canonparse.utils.transition_core import (
	SHIFT,
	ArcKind,
	Computation,
	Reduce,
	ReductionTemplate,
	builtin_system,
	validate_system,
)

TEMPLATE_PATTERN = re.compile(r"^(la|ra):(\d+),(\d+)$")
ATTARDI_PATTERN = re.compile(r"^attardi(?::(-?\d+))?$")


def parse_template(token):
	m = TEMPLATE_PATTERN.match(token)
	if not m:
		raise SystemSyntaxError(token, "expected la:p,q or ra:p,q")
	return ReductionTemplate(ArcKind(m.group(1)), int(m.group(2)), int(m.group(3)))


def parse_system(text):
	compact = re.sub(r"\s+", "", text or "")
	if not compact:
		raise SystemSyntaxError(text or "", "empty system description")

	if compact in ("arc-standard", "attardi-deg2"):
		return builtin_system(compact)

	m = ATTARDI_PATTERN.match(compact)
	if m:
		return builtin_system("attardi", int(m.group(1)) if m.group(1) else None)

	templates = []
	for token in compact.split(";"):
		if not token:
			continue
		templates.append(parse_template(token))
	return validate_system(templates, name="")


def render_system(spec):
	return ";".join(str(t) for t in spec.sorted_reductions)


def render_transition(transition):
	return str(transition)


def parse_transition(token):
	token = token.strip()
	if token == "sh":
		return SHIFT
	try:
		return Reduce(parse_template(token))
	except CanonParseError:
		raise SystemSyntaxError(token, "expected sh, la:p,q or ra:p,q")


def render_computation(comp):
	return " ".join(render_transition(t) for t in comp.transitions)


def parse_computation(n, text):
	return Computation(n, [parse_transition(token) for token in text.split()])
