"""
Runtime configuration for canonparse.

Values come from, in order: the explicit argument, the CANONPARSE_BUDGET environment
variable, Canonparse Settings (when a Frappe site is connected) and finally the default.
"""

import logging
import os

DEFAULT_ENUMERATION_BUDGET = 10_000_000
DEFAULT_SYSTEM = "attardi-deg2"
BUDGET_ENV_VAR = "CANONPARSE_BUDGET"


def _site_connected():
	try:
		import frappe
	except ImportError:
		return None
	if not getattr(frappe.local, "site", None):
		return None
	return frappe


def get_logger():
	"""Site logger inside bench, plain 'canonparse' logger everywhere else"""
	frappe = _site_connected()
	if frappe:
		return frappe.logger("canonparse")
	return logging.getLogger("canonparse")


def _get_setting(fieldname):
	frappe = _site_connected()
	if not frappe:
		return None
	try:
		if not frappe.db.exists("DocType", "Canonparse Settings"):
			return None
		return frappe.get_cached_doc("Canonparse Settings").get(fieldname)
	except Exception:
		return None


def get_enumeration_budget(explicit=None):
	if explicit is not None:
		return int(explicit)

	raw = os.environ.get(BUDGET_ENV_VAR)
	if raw:
		try:
			value = int(raw.strip())
			if value > 0:
				return value
		except ValueError:
			pass
		get_logger().warning(f"[settings] ignoring {BUDGET_ENV_VAR}={raw!r}: not a positive integer")

	configured = _get_setting("enumeration_budget")
	if configured:
		try:
			return max(1, int(configured))
		except (TypeError, ValueError):
			pass

	return DEFAULT_ENUMERATION_BUDGET


def get_default_system():
	return _get_setting("default_system") or DEFAULT_SYSTEM
