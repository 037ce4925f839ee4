#!/usr/bin/env python3
# Copyright 2026 The Figstory Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the fixture pipeline through the CLI, validates every output file
against the shipped JSON schemas and compares it with the golden copy."""

import argparse
import difflib
import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

import jsonschema

SCORE_MODES = ["zero-shot", "few-shot", "supervised", "knowledge-literal",
               "knowledge-context", "continuation-only"]
GENERATE_MODES = ["zero-shot", "few-shot", "supervised", "knowledge-literal",
                  "knowledge-context"]
SEED = "11"

JSONL_SCHEMAS = {
    "dataset.jsonl": "dataset_instance",
    "bundles.jsonl": "inference_bundle",
    "knowledge_errors.jsonl": "knowledge_error",
    "report.jsonl": "report_record",
}
PREFIX_SCHEMAS = {
    "predictions-": "prediction",
    "generations-": "generation",
}


def run_pipeline(binary, data, out, task):
    base = [binary, "-q", "-c", str(data / "config.ini"), "--seed", SEED]
    common = ["-o", str(out), "--task", task]
    continuations = ["--continuations", str(data / f"continuations_{task}.tsv")]
    steps = [["build-dataset"] + common + continuations,
             ["gen-knowledge"] + common]
    steps += [["score"] + common + ["--mode", m] for m in SCORE_MODES]
    steps += [["generate"] + common + ["--mode", m] for m in GENERATE_MODES]
    steps.append(["evaluate"] + common)
    for step in steps:
        result = subprocess.run(base + step, capture_output=True, text=True)
        if result.returncode != 0:
            raise SystemExit(f"{' '.join(step)} exited {result.returncode}:\n"
                             f"{result.stderr}")


def schema_for(name):
    if name in JSONL_SCHEMAS:
        return JSONL_SCHEMAS[name]
    for prefix, schema in PREFIX_SCHEMAS.items():
        if name.startswith(prefix) and name.endswith(".jsonl"):
            return schema
    if name == "stats.json":
        return "stats"
    return None


def validate(out, schemas):
    problems = []
    checked = 0
    for path in sorted(out.iterdir()):
        schema_name = schema_for(path.name)
        if schema_name is None:
            continue
        schema = json.loads((schemas / f"{schema_name}.schema.json").read_text())
        validator = jsonschema.Draft202012Validator(schema)
        if path.suffix == ".jsonl":
            docs = [(i, json.loads(line)) for i, line in
                    enumerate(path.read_text().splitlines(), 1) if line.strip()]
        else:
            docs = [(1, json.loads(path.read_text()))]
        for line, doc in docs:
            checked += 1
            for error in validator.iter_errors(doc):
                problems.append(f"{path.name}:{line}: {error.message}")
    return checked, problems


def compare(out, golden):
    diffs = []
    names = sorted({p.name for p in out.iterdir()} | {p.name for p in golden.iterdir()})
    for name in names:
        a, b = golden / name, out / name
        if not a.exists() or not b.exists():
            diffs.append(f"{name}: present in only one of golden/output")
            continue
        if a.read_bytes() != b.read_bytes():
            diff = difflib.unified_diff(a.read_text().splitlines(),
                                        b.read_text().splitlines(),
                                        "golden/" + name, "output/" + name,
                                        lineterm="", n=1)
            diffs.append("\n".join(list(diff)[:20]))
    return diffs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--figstory", required=True, type=pathlib.Path)
    parser.add_argument("--data", required=True, type=pathlib.Path)
    parser.add_argument("--schemas", required=True, type=pathlib.Path)
    parser.add_argument("--golden", required=True, type=pathlib.Path)
    parser.add_argument("--update", action="store_true",
                        help="overwrite the golden files with this run")
    args = parser.parse_args()

    failed = False
    with tempfile.TemporaryDirectory(prefix="figstory-e2e-") as tmp:
        for task in ("idiom", "simile"):
            out = pathlib.Path(tmp) / task
            run_pipeline(args.figstory, args.data, out, task)
            checked, problems = validate(out, args.schemas)
            print(f"{task}: {checked} records checked, {len(problems)} schema problems")
            for p in problems:
                print("  " + p)
            failed |= bool(problems) or checked == 0
            golden = args.golden / task
            if args.update:
                shutil.rmtree(golden, ignore_errors=True)
                shutil.copytree(out, golden)
                print(f"{task}: golden files updated")
                continue
            diffs = compare(out, golden)
            print(f"{task}: {len(diffs)} files differ from golden")
            for d in diffs:
                print(d)
            failed |= bool(diffs)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
