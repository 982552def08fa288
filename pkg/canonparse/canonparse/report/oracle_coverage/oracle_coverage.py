# oracle_coverage.py
import frappe


def execute(filters=None):
	columns = [
		{"fieldname": "source", "label": "Source", "fieldtype": "Link", "options": "Treebank Coverage Upload"},
		{"fieldname": "language", "label": "Language", "fieldtype": "Data"},
		{"fieldname": "system", "label": "System", "fieldtype": "Data"},
		{"fieldname": "size", "label": "Size", "fieldtype": "Int"},
		{"fieldname": "failures", "label": "Failures", "fieldtype": "Int"},
		{"fieldname": "non_projective", "label": "Non Projective", "fieldtype": "Int"},
		{"fieldname": "malformed", "label": "Malformed", "fieldtype": "Int"},
	]

	conditions = {"docstatus": 1}
	if filters and filters.get("system"):
		conditions["system"] = filters.get("system")

	uploads = frappe.get_all(
		"Treebank Coverage Upload",
		filters=conditions,
		fields=["name", "language", "system", "sentence_count", "failures", "non_projective", "malformed"],
		order_by="language asc, creation asc",
	)

	data = [
		{
			"source": upload.name,
			"language": upload.language,
			"system": upload.system,
			"size": upload.sentence_count,
			"failures": upload.failures,
			"non_projective": upload.non_projective,
			"malformed": upload.malformed,
		}
		for upload in uploads
	]
	return columns, data
