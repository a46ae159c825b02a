"""Contract tests for the workbench command-line binary.

Usage: test_cli.py <path-to-workbench> <fixtures-dir>

Covers the documented exit codes (0 clean, 1 mathematical failure, 2 input
error), report determinism (byte-identical stdout across runs), canonical
output documents, the report re-renderer, and the documented examples.
"""

import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
FIXTURES = sys.argv[2]

passed = 0


def fixture(name):
    return os.path.join(FIXTURES, name)


def run(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def ok(label, cond):
    global passed
    if not cond:
        raise AssertionError(f"contract violated: {label}")
    passed += 1


def report_of(proc):
    return json.loads(proc.stdout)


def checks_by_id(rep):
    return {c["check"]: c for c in rep["checks"]}


def write_doc(tmp, name, doc):
    path = os.path.join(tmp, name)
    with open(path, "w") as fh:
        json.dump(doc, fh)
    return path


def main():
    tmp = tempfile.mkdtemp(prefix="workbench_cli_")

    # -- documented examples ---------------------------------------------

    p = run("check", fixture("f1.json"))
    ok("f1 check exits 0", p.returncode == 0)
    rep = report_of(p)
    ok("f1 target from metadata name", rep["target"] == "f1")
    ok("f1 hom_associative ok",
       checks_by_id(rep)["hom_associative"]["status"] == "ok")

    p = run("check", fixture("f2.json"), "--checks", "hom_associative")
    ok("f2 hom_associative exits 1", p.returncode == 1)
    cond = report_of(p)["checks"][0]["conditions"][0]
    ok("f2 condition is hom_assoc", cond["id"] == "hom_assoc")
    ok("f2 first witness is (1,1,2)", cond["witnesses"][0]["indices"] == [1, 1, 2])

    p = run("check", fixture("f5_operator.json"))
    ok("f5 operator exits 0", p.returncode == 0)
    ok("rota_baxter ok", checks_by_id(report_of(p))["rota_baxter"]["status"] == "ok")

    out = os.path.join(tmp, "double.json")
    p = run("construct", "frobenius_double", fixture("f3_bialgebra.json"), "-o", out)
    ok("frobenius_double exits 0", p.returncode == 0)
    rep = report_of(p)
    ok("double post-checks all ok",
       all(c["status"] == "ok" for c in rep["checks"]))
    ref = rep["constructions"][0]
    ok("double is a dim-4 form document", (ref["kind"], ref["dim"]) == ("form", 4))
    with open(out) as fh:
        doubled = json.load(fh)
    ok("double document re-parses as a form", doubled["kind"] == "form")
    p = run("check", out, "--checks", "form")
    ok("double re-checks clean", p.returncode == 0)

    out = os.path.join(tmp, "dend.json")
    p = run("construct", "dendriform_from_rota_baxter", fixture("f5_operator.json"), "-o", out)
    ok("dendriform_from_rota_baxter exits 0", p.returncode == 0)
    ref = report_of(p)["constructions"][0]
    ok("induced splitting is a dim-2 hom_dendriform",
       (ref["kind"], ref["dim"]) == ("hom_dendriform", 2))
    p = run("check", out)
    ok("induced splitting re-checks clean", p.returncode == 0)

    out = os.path.join(tmp, "yau.json")
    p = run("construct", "yau_twist", fixture("f4.json"), fixture("beta_id.json"), "-o", out)
    ok("yau_twist with identity exits 0", p.returncode == 0)
    with open(fixture("f4.json")) as fh:
        src = json.load(fh)
    with open(out) as fh:
        twisted = json.load(fh)
    ok("yau twist by the identity leaves the algebra unchanged",
       all(src[k] == twisted[k] for k in ("kind", "dim", "mult", "alpha")))

    # -- every fixture parses; check exit codes match content ------------

    expected_fail = {"f2.json", "f6.json"}  # f6: symmetric form check on a skew gram
    for name in sorted(os.listdir(FIXTURES)):
        p = run("check", fixture(name))
        want = 1 if name in expected_fail else 0
        ok(f"{name} check exits {want}", p.returncode == want)

    # -- determinism: byte-identical reports and outputs -----------------

    for args in (
        ("check", fixture("f2.json")),
        ("check", fixture("f5_regular_bimodule.json")),
        ("check", fixture("yau_dendriform.json")),
        ("construct", "frobenius_double", fixture("f3_bialgebra.json")),
        ("construct", "symplectic_double", fixture("f5_dendriform.json"),
         fixture("zero_dendriform2.json")),
    ):
        a, b = run(*args), run(*args)
        ok(f"deterministic stdout: {' '.join(os.path.basename(x) for x in args)}",
           a.stdout == b.stdout and a.returncode == b.returncode)

    out1 = os.path.join(tmp, "out1.json")
    out2 = os.path.join(tmp, "out2.json")
    run("construct", "dendriform_bicrossed_sum", fixture("dend_pair.json"), "-o", out1)
    run("construct", "dendriform_bicrossed_sum", fixture("dend_pair.json"), "-o", out2)
    with open(out1) as fh1, open(out2) as fh2:
        ok("deterministic output documents", fh1.read() == fh2.read())

    # -- symplectic double: two inputs, convention note, re-check --------

    out = os.path.join(tmp, "sdouble.json")
    p = run("construct", "symplectic_double", fixture("f5_dendriform.json"),
            fixture("zero_dendriform2.json"), "-o", out)
    ok("symplectic_double exits 0", p.returncode == 0)
    rep = report_of(p)
    ok("symplectic_double posts ok", all(c["status"] == "ok" for c in rep["checks"]))
    ok("orientation note rides along", any("convention" in n for n in rep["notes"]))
    p = run("check", out, "--checks", "symplectic")
    ok("symplectic double re-checks clean", p.returncode == 0)

    # -- check selection, skipped status, witness cap --------------------

    p = run("check", fixture("f6.json"))
    ok("f6 full check exits 1 (the symmetric-form check fails on a skew gram)",
       p.returncode == 1)
    by_id = checks_by_id(report_of(p))
    ok("f6 symplectic passes while form fails",
       by_id["symplectic"]["status"] == "ok" and by_id["form"]["status"] == "fail")
    p = run("check", fixture("f6.json"), "--checks", "symplectic")
    ok("f6 --checks symplectic exits 0", p.returncode == 0)

    p = run("check", fixture("f5_operator.json"), "--checks", "o_operator")
    ok("flavor mismatch is skipped, not an error", p.returncode == 0)
    ok("skipped status recorded",
       report_of(p)["checks"][0]["status"] == "skipped")

    junk = write_doc(tmp, "junk.json", {
        "kind": "hom_algebra", "dim": 3,
        "mult": [[1, 1, 2, 1], [1, 2, 3, 1], [2, 1, 1, 1], [2, 2, 1, 1], [2, 2, 3, 1],
                 [3, 1, 2, 1], [3, 3, 1, 1], [1, 3, 3, 1], [3, 2, 2, 1]],
        "alpha": [[1, 1, 0], [0, 1, 1], [1, 0, 1]],
    })
    capped = report_of(run("check", junk, "--checks", "hom_associative"))
    cond = capped["checks"][0]["conditions"][0]
    ok("witness cap holds at 25", cond["violations"] == 26 and len(cond["witnesses"]) == 25)
    lifted = report_of(run("check", junk, "--checks", "hom_associative", "--all-witnesses"))
    cond = lifted["checks"][0]["conditions"][0]
    ok("--all-witnesses lifts the cap", len(cond["witnesses"]) == 26)

    # -- report subcommand ------------------------------------------------

    rep_path = os.path.join(tmp, "f2_report.json")
    p = run("check", fixture("f2.json"))
    with open(rep_path, "w") as fh:
        fh.write(p.stdout)
    p = run("report", rep_path, "--format", "json")
    ok("report re-renders byte-identical JSON", p.returncode == 0)
    with open(rep_path) as fh:
        ok("report JSON round-trip", p.stdout == fh.read())
    p = run("report", rep_path)
    ok("report text names the witness", "witness (1, 1, 2)" in p.stdout)
    ok("report text exits 0", p.returncode == 0)

    # -- refusals carry the gate report -----------------------------------

    bad_bial = write_doc(tmp, "bad_bial.json", {
        "kind": "bialgebra_data",
        "algebra": {"kind": "hom_algebra", "dim": 3,
                    "mult": [[1, 1, 1, 1], [1, 2, 3, 1], [2, 1, 3, 1]],
                    "alpha": [[0, 0, 0], [0, 1, 0], [0, 0, 0]]},
        "coprod": [],
    })
    p = run("construct", "frobenius_double", bad_bial, "-o", os.path.join(tmp, "no.json"))
    ok("refused construction exits 1", p.returncode == 1)
    rep = report_of(p)
    ok("refusal reported under the construction id",
       rep["checks"][0]["check"] == "frobenius_double"
       and rep["checks"][0]["status"] == "fail")
    ok("refusal carries conditions", len(rep["checks"][0]["conditions"]) > 0)
    ok("refused construction writes no output",
       not os.path.exists(os.path.join(tmp, "no.json")))

    # -- input errors exit 2 ----------------------------------------------

    bad_scalar = write_doc(tmp, "bad_scalar.json", {
        "kind": "hom_algebra", "dim": 1, "mult": [[1, 1, 1, "1/0"]], "alpha": [[1]]})
    p = run("check", bad_scalar)
    ok("zero denominator exits 2", p.returncode == 2)
    ok("zero denominator names the error", "non-rational scalar" in p.stderr)

    unknown_field = write_doc(tmp, "unknown_field.json", {
        "kind": "hom_algebra", "dim": 1, "mult": [], "alpha": [[1]], "colour": 3})
    p = run("check", unknown_field)
    ok("unknown field exits 2", p.returncode == 2 and "unknown field" in p.stderr)

    bad_shape = write_doc(tmp, "bad_shape.json", {
        "kind": "hom_algebra", "dim": 2, "mult": [], "alpha": [[1, 0]]})
    p = run("check", bad_shape)
    ok("dimension inconsistency exits 2", p.returncode == 2)

    p = run("check", os.path.join(tmp, "missing.json"))
    ok("missing file exits 2", p.returncode == 2)

    p = run("check", fixture("f1.json"), "--checks", "symplectic")
    ok("inapplicable check id exits 2",
       p.returncode == 2 and "inapplicable check id" in p.stderr)

    p = run("check", fixture("f1.json"), "--checks", "nope")
    ok("unknown check id exits 2", p.returncode == 2)

    p = run("construct", "nope", fixture("f1.json"))
    ok("unknown construction exits 2", p.returncode == 2)

    p = run("construct", "yau_twist", fixture("f4.json"))
    ok("wrong arity exits 2", p.returncode == 2)

    p = run("construct", "dendriform_from_o_operator", fixture("f5_operator.json"))
    ok("carrier mismatch exits 2", p.returncode == 2)

    p = run("check", fixture("f2.json"), env_extra={"WORKBENCH_MAX_DIM": "2"})
    ok("WORKBENCH_MAX_DIM caps parsing", p.returncode == 2
       and "WORKBENCH_MAX_DIM" in p.stderr)

    print(f"cli contract: {passed} assertions passed")


if __name__ == "__main__":
    main()
