# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

from frappe.model.document import Document

from canonparse.utils.coverage_flow import resolve_system


class TreebankCoverageUpload(Document):
	def validate(self):
		resolve_system(self)
