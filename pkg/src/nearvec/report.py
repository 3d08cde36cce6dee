"""Small shared report containers for exhaustive checks."""


def jsonify(value):
    """Recursively convert tuples/sets to JSON-friendly lists."""
    if isinstance(value, dict):
        return {str(k): jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonify(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonify(v) for v in value)
    return value


class CheckReport:
    """Named pass/fail verdicts, each with a witness on failure."""

    def __init__(self, entries):
        self.entries = dict(entries)

    @property
    def all_pass(self):
        return all(ok for ok, _ in self.entries.values())

    def failed(self):
        return [name for name, (ok, _) in self.entries.items() if not ok]

    def witness(self, name):
        return self.entries[name][1]

    def to_json(self):
        return {
            name: {"pass": ok, "counterexample": jsonify(cx) if cx is not None else None}
            for name, (ok, cx) in self.entries.items()
        }

    def __repr__(self):
        bad = self.failed()
        status = "all pass" if not bad else f"failed: {', '.join(bad)}"
        return f"CheckReport({status})"
