"""Validate the JSON report of every subcommand against the report schema.

usage: check_schema.py TOOL SCHEMA DATA_DIR SCENARIO_DIR
"""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    tool, schema_path, data, scenarios = sys.argv[1:5]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    runs = [
        ["invariants", f"{data}/double_point_on_axis.scheme"],
        ["bound", "tb", "--coranks", "2,1", "--n", "14", "--c", "1"],
        ["bound", "subscheme", f"{scenarios}/cube_of_maximal_ideal.scheme", "--n", "35", "--c", "1"],
        ["bound", "subscheme", "--deg-y", "3", "--deg-t", "4", "--n", "7", "--c", "2"],
        ["bound", "family", f"{scenarios}/fermat_cone_truncation.scheme", "--n", "69", "--c", "1", "--m", "1"],
        ["bound", "family", "--deg-u", "4", "--min-deg-t", "3", "--n", "5", "--c", "2", "--m", "3"],
        ["bound", "fiber", f"{scenarios}/curvilinear_3.scheme", "--n", "1", "--c", "1"],
        ["bound", "fiber", "--deg-z", "2", "--deg-closure", "3", "--n", "1", "--c", "2"],
        ["deform", f"{scenarios}/curvilinear_4.scheme", "--fix-omega", "--closure"],
        ["deform", f"{scenarios}/curvilinear_4.scheme", "--fix-omega"],
        ["qinv", "--x", f"{data}/parabola.scheme", "--y", f"{data}/origin.scheme"],
        ["verify-paper", "--scenarios", scenarios],
    ]
    failures = 0
    for args in runs:
        for timing in ([], ["--no-timing"]):
            cmd = [tool, *args, "--json", *timing]
            proc = subprocess.run(cmd, capture_output=True, text=True)
            if proc.returncode not in (0, 1):
                print(f"FAIL {' '.join(cmd)}: exit {proc.returncode}\n{proc.stderr}")
                failures += 1
                continue
            report = json.loads(proc.stdout)
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            if report.get("exit_code") != proc.returncode:
                errors.append(f"exit_code {report.get('exit_code')} but process exited {proc.returncode}")
            if ("timing" in report) == bool(timing):
                errors.append("timing present/absent contrary to --no-timing")
            if proc.stdout != json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n":
                errors.append("output is not key-sorted with two-space indent")
            for e in errors:
                print(f"FAIL {' '.join(cmd)}: {getattr(e, 'message', e)}")
            failures += bool(errors)
            if not errors:
                print(f"ok   {' '.join(args)}{' --no-timing' if timing else ''}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
