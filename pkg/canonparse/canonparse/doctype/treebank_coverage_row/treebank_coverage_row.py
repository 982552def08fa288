# Copyright (c) 2026, canonparse contributors
# License: MIT. See license.txt

# import frappe
from frappe.model.document import Document


class TreebankCoverageRow(Document):
	pass
