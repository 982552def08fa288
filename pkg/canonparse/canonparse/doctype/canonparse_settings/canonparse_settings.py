# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

import frappe
from frappe.model.document import Document

from canonparse.utils.exceptions import CanonParseError
from canonparse.utils.system_dsl import parse_system


class CanonparseSettings(Document):
	def validate(self):
		if self.enumeration_budget is not None and self.enumeration_budget < 1:
			frappe.throw("Enumeration Budget must be a positive number")
		if self.default_system:
			try:
				parse_system(self.default_system)
			except CanonParseError as e:
				frappe.throw(f"Default System: {e}")
