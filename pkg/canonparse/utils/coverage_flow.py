# coverage_flow.py
import traceback

import frappe
from frappe.utils.file_manager import get_file_path

from canonparse.utils.conll import parse_conllx
from canonparse.utils.coverage import sentence_coverage
from canonparse.utils.exceptions import CanonParseError
from canonparse.utils.settings import get_default_system, get_logger
from canonparse.utils.system_dsl import parse_system
from canonparse.utils.transition_core import missing_mandatory

UPLOAD_DOCTYPE = "Treebank Coverage Upload"
ROW_DOCTYPE = "Treebank Coverage Row"
RESULT_FIELDS = ("sentence_count", "failures", "non_projective", "malformed")


def append_log(doc, message):
	"""Append log line to processing_log field with timestamp"""
	new_log = (doc.processing_log or "") + f"\n{frappe.utils.now()} - {message}"
	doc.db_set("processing_log", new_log, update_modified=False)


def resolve_system(doc):
	"""System of an upload; blank means the site default"""
	text = (doc.system or "").strip() or get_default_system()
	try:
		spec = parse_system(text)
	except CanonParseError as e:
		frappe.throw(f"Invalid transition system {text!r}: {e}")

	missing = missing_mandatory(spec)
	if missing:
		needed = ", ".join(f"{t} needs {', '.join(str(m) for m in sorted(missing[t]))}" for t in sorted(missing))
		frappe.throw(f"Transition system {text!r} is not monotonic: {needed}")
	return spec


def process_uploaded_treebank(doc, method):
	"""Triggered when Treebank Coverage Upload is submitted"""
	# ------------------------
	# Step 1: Check file and system
	# ------------------------
	if not doc.treebank_file:
		frappe.throw("No file found in Treebank File field.")

	spec = resolve_system(doc)
	append_log(doc, f"Step 1: {doc.treebank_file} with system {spec}")

	# ------------------------
	# Step 2: Compute coverage in the background
	# ------------------------
	frappe.enqueue(
		"canonparse.utils.coverage_flow.run_coverage_job",
		upload_name=doc.name,
		queue="long",
		timeout=3600,
	)
	append_log(doc, "Step 2: Coverage job queued")


def run_coverage_job(upload_name):
	doc = frappe.get_doc(UPLOAD_DOCTYPE, upload_name)
	try:
		spec = resolve_system(doc)
		with open(get_file_path(doc.treebank_file), "rb") as f:
			sentences = parse_conllx(f.read())
		append_log(doc, f"Read {len(sentences)} sentences")

		row = sentence_coverage(sentences, spec, source=doc.treebank_file)
		doc.db_set(
			{
				"sentence_count": row.size,
				"failures": row.failures,
				"non_projective": row.non_projective,
				"malformed": row.malformed,
			},
			update_modified=False,
		)

		for idx, item in enumerate(row.failed_sentences, start=1):
			frappe.get_doc(
				{
					"doctype": ROW_DOCTYPE,
					"parent": doc.name,
					"parenttype": UPLOAD_DOCTYPE,
					"parentfield": "unparseable_sentences",
					"idx": idx,
					"sentence_index": item.index,
					"token_count": item.token_count,
					"status": item.status,
					"detail": item.detail,
				}
			).db_insert()
		frappe.db.commit()

		get_logger().info(f"[coverage] {doc.name}: size={row.size} failures={row.failures}")
		append_log(
			doc,
			f"Done: size={row.size}, failures={row.failures}, "
			f"non_projective={row.non_projective}, malformed={row.malformed}",
		)

	except Exception as e:
		frappe.db.rollback()
		append_log(doc, f"ERROR: {e}")
		frappe.log_error(traceback.format_exc(), f"Treebank coverage failed for {upload_name}")


def cancel_uploaded_treebank(doc, method):
	"""Triggered when Treebank Coverage Upload is cancelled"""
	get_logger().info(f"[CANCEL HOOK] cancel_uploaded_treebank called for {doc.name}")
	frappe.db.delete(ROW_DOCTYPE, {"parent": doc.name, "parenttype": UPLOAD_DOCTYPE})
	doc.db_set({field: 0 for field in RESULT_FIELDS}, update_modified=False)
	append_log(doc, "Cancelled: coverage results cleared")
