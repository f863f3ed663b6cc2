"""Runs the CLI over the bundled cases and checks schemas, golden reports and determinism."""

import argparse
import json
import math
import pathlib
import subprocess
import sys


def run(binary, root, args):
    proc = subprocess.run([binary, *args], cwd=root, capture_output=True)
    return proc.returncode, proc.stdout


def schema_name(report):
    if "error" in report:
        return "error"
    return report["subcommand"].replace(" ", "-")


def close(expected, actual, path="$"):
    if isinstance(expected, float) or isinstance(actual, float):
        if not isinstance(actual, (int, float)) or not isinstance(expected, (int, float)):
            return [f"{path}: {expected!r} != {actual!r}"]
        if math.isclose(expected, actual, rel_tol=1e-9, abs_tol=1e-9):
            return []
        return [f"{path}: {expected!r} != {actual!r}"]
    if isinstance(expected, dict) and isinstance(actual, dict):
        diffs = []
        for k in sorted(set(expected) | set(actual)):
            if k not in expected or k not in actual:
                diffs.append(f"{path}.{k}: present on one side only")
            else:
                diffs += close(expected[k], actual[k], f"{path}.{k}")
        return diffs
    if isinstance(expected, list) and isinstance(actual, list):
        if len(expected) != len(actual):
            return [f"{path}: length {len(expected)} != {len(actual)}"]
        diffs = []
        for n, (e, a) in enumerate(zip(expected, actual)):
            diffs += close(e, a, f"{path}[{n}]")
        return diffs
    return [] if expected == actual else [f"{path}: {expected!r} != {actual!r}"]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    parser.add_argument("--root", required=True)
    parser.add_argument("--mode", choices=["schema", "golden", "determinism"], required=True)
    parser.add_argument("--update", action="store_true", help="rewrite golden files")
    opts = parser.parse_args()

    root = pathlib.Path(opts.root)
    here = pathlib.Path(__file__).parent
    cases = json.loads((here / "cases.json").read_text())
    failures = []

    if opts.mode == "schema":
        import jsonschema

        schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text())
                   for p in (root / "schemas").glob("*.schema.json")}
        for case in cases:
            code, out = run(opts.binary, root, case["args"])
            if code != case.get("exit", 0):
                failures.append(f"{case['name']}: exit {code}")
                continue
            report = json.loads(out)
            name = schema_name(report)
            try:
                jsonschema.validate(report, schemas[name])
            except (KeyError, jsonschema.ValidationError) as e:
                failures.append(f"{case['name']}: {name}: {e}")
            table_code, table = run(opts.binary, root, [*case["args"], "--format", "table"])
            if table_code != code or not table.strip():
                failures.append(f"{case['name']}: table output")

    elif opts.mode == "golden":
        for case in cases:
            code, out = run(opts.binary, root, case["args"])
            golden = here / "golden" / f"{case['name']}.json"
            if opts.update:
                golden.write_bytes(out)
                continue
            if not golden.exists():
                failures.append(f"{case['name']}: no golden file")
                continue
            diffs = close(json.loads(golden.read_text()), json.loads(out))
            failures += [f"{case['name']}: {d}" for d in diffs]

    else:
        for case in cases:
            first = run(opts.binary, root, case["args"])
            second = run(opts.binary, root, case["args"])
            if first != second:
                failures.append(f"{case['name']}: reports differ between runs")

    for f in failures:
        print("FAIL", f)
    print(f"{opts.mode}: {len(cases)} cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
