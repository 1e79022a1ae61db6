# Copyright (c) 2026, the pqforge authors.
# Licensed under the Apache License, Version 2.0.
"""Validates the CLI's --format json output against the published schemas."""

import json
import os
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator

CLI = sys.argv[1]
SCHEMA_DIR = sys.argv[2]
TMP = tempfile.mkdtemp(prefix="pqforge_schema_")
failures = []


def path(name):
    return os.path.join(TMP, name)


def load_schema(name):
    with open(os.path.join(SCHEMA_DIR, name)) as f:
        schema = json.load(f)
    Draft202012Validator.check_schema(schema)
    return schema


def run_json(*args, expect=0):
    proc = subprocess.run(
        [CLI, "--format", "json", *args], capture_output=True, text=True
    )
    if proc.returncode != expect:
        raise AssertionError(
            f"pqforge {' '.join(args)} -> {proc.returncode} (expected "
            f"{expect})\nstderr: {proc.stderr}"
        )
    return json.loads(proc.stdout)


def validate(schema_name, instance):
    errors = sorted(
        Draft202012Validator(load_schema(schema_name)).iter_errors(instance),
        key=str,
    )
    if errors:
        where = "/".join(str(p) for p in errors[0].absolute_path)
        raise AssertionError(
            f"{schema_name}: {len(errors)} violation(s); first at "
            f"'{where}': {errors[0].message}"
        )


def check(name, fn):
    try:
        fn()
        print(f"ok: {name}")
    except Exception as exc:  # noqa: BLE001 - report and count everything
        failures.append(name)
        print(f"FAIL: {name}: {exc}")


FX = path("fx.parquet")
OUT = path("out.parquet")


def gen_fixture_report():
    rep = run_json("gen-fixture", FX, "--rows", "5000", "--seed", "2",
                   "--rg-rows", "1000")
    validate("gen_fixture_report.schema.json", rep)
    assert rep["rows"] == 5000


def file_report():
    rep = run_json("inspect", FX)
    validate("file_report.schema.json", rep)
    assert rep["total_rows"] == 5000
    # The approximate census (footer only) must satisfy the same schema.
    validate("file_report.schema.json", run_json("inspect", FX, "--approximate"))


def findings():
    rep = run_json("grade", FX)
    validate("findings.schema.json", rep)
    assert rep["conformant"] is False and rep["findings"]


def rewrite_plan():
    plan = run_json("plan", FX)
    validate("rewrite_plan.schema.json", plan)
    assert plan["source_total_rows"] == 5000


def rewrite_report():
    rep = run_json("rewrite", FX, OUT)
    validate("rewrite_report.schema.json", rep)
    assert rep["rows_written"] == 5000
    # The rewritten file grades clean and still matches the schemas.
    graded = run_json("grade", OUT)
    validate("findings.schema.json", graded)
    assert graded["conformant"] is True


def equality_report():
    rep = run_json("verify", FX, OUT)
    validate("equality_report.schema.json", rep)
    assert rep["equal"] is True
    # An unequal pair (different fixtures) also matches the schema.
    other = path("other.parquet")
    run_json("gen-fixture", other, "--rows", "5000", "--seed", "9")
    bad = run_json("verify", FX, other, expect=1)
    validate("equality_report.schema.json", bad)
    assert bad["equal"] is False


def bench_report():
    rep = run_json("bench", OUT, "--reps", "2")
    validate("bench_report.schema.json", rep)
    assert rep["repetitions"] == 2 and len(rep["runtimes"]) == 2


def policy_schema_accepts_and_rejects():
    schema = load_schema("rewrite_policy.schema.json")
    good = {
        "target_rg_rows": 1000000,
        "flexible_encodings": True,
        "compression_candidate": {"kind": "ZSTD", "level": 3},
        "compression_threshold": 0.1,
        "compression_mode": "GATED",
    }
    validate("rewrite_policy.schema.json", good)
    bad = dict(good, compression_mode="SOMETIMES")
    errs = list(Draft202012Validator(schema).iter_errors(bad))
    assert errs, "invalid compression_mode should fail validation"


def bench_delta_schema_is_sound():
    validate(
        "bench_delta.schema.json",
        {
            "file_size_ratio": 0.5,
            "runtime_ratio": 1.0,
            "storage_bandwidth_ratio": 2.0,
            "effective_bandwidth_ratio": 1.0,
            "raw_decoded_size_ratio": 1.0,
            "raw_size_mismatch": False,
        },
    )


def main():
    check("gen-fixture report", gen_fixture_report)
    check("file report (inspect)", file_report)
    check("grade findings", findings)
    check("rewrite plan", rewrite_plan)
    check("rewrite report", rewrite_report)
    check("equality report (verify)", equality_report)
    check("bench report", bench_report)
    check("policy schema accepts/rejects", policy_schema_accepts_and_rejects)
    check("bench delta schema", bench_delta_schema_is_sound)
    if failures:
        print(f"{len(failures)} schema test(s) failed")
        return 1
    print("all schema tests passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
