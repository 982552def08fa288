app_name = "canonparse"
app_title = "Canonparse"
app_publisher = "canonparse contributors"
app_description = "Canonical oracles for bottom-up shift-reduce dependency parsers"
app_email = "maintainers@canonparse.invalid"
app_license = "mit"

# Apps
# ------------------

# required_apps = []

# Document Events
# ---------------
# Hook on document methods and events

doc_events = {
	"Treebank Coverage Upload": {
		"on_submit": "canonparse.utils.coverage_flow.process_uploaded_treebank",
		"on_cancel": "canonparse.utils.coverage_flow.cancel_uploaded_treebank",
	}
}

# Testing
# -------

# before_tests = "canonparse.install.before_tests"
