#!/usr/bin/env python3
"""Runs the command-line tool and validates its JSON output and exit codes."""
import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, schema_dir, testdata = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

resources = []
for path in sorted(schema_dir.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    Draft202012Validator.check_schema(doc)
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

failures = []
checks = 0


def run(*args, expect=0, stdin=None):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, input=stdin)
    if proc.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, wanted {expect}\n{proc.stderr}")
    return proc


def parse(proc, label):
    try:
        return json.loads(proc.stdout)
    except json.JSONDecodeError:
        failures.append(f"{label}: output is not JSON")
        return {}


def validate(schema, doc, label):
    global checks
    checks += 1
    validator = Draft202012Validator({"$ref": schema}, registry=registry)
    errors = sorted(validator.iter_errors(doc), key=str)
    if errors:
        failures.append(f"{label}: {errors[0].message} at {list(errors[0].absolute_path)}")


def check(cond, label):
    global checks
    checks += 1
    if not cond:
        failures.append(label)


with tempfile.TemporaryDirectory() as tmp:
    def write(name, doc):
        p = pathlib.Path(tmp) / name
        p.write_text(json.dumps(doc))
        return str(p)

    # count
    out = run("count", "--class", "bicolored", "--labeled", "--n", "4", "--format", "json")
    table = json.loads(out.stdout)
    validate("count-table.schema.json", table, "count bicolored")
    check(table["values"][-1]["count"] == "162", "labeled bicolored graphs on 4 vertices")
    for cls in ["split", "unbalanced", "balanced", "k-canonical", "ambiguous"]:
        out = run("count", "--class", cls, "--labeled", "--n", "30", "--format", "json")
        validate("count-table.schema.json", json.loads(out.stdout), f"count {cls}")
    out = run("count", "--class", "split", "--n", "6", "--format", "json")
    validate("count-table.schema.json", json.loads(out.stdout), "count unlabeled split")
    out = run("count", "--class", "split", "--labeled", "--n", "5", "--format", "csv")
    check(out.stdout.splitlines()[0] == "n,count,provenance", "csv header")

    for n in range(0, 6):
        out = run("count", "--census", "--n", str(n), "--format", "json")
        census = json.loads(out.stdout)
        validate("census.schema.json", census, f"census {n}")
        golden = json.loads((testdata / f"census-n{n}.json").read_text())
        check(census == golden, f"census {n} matches the golden file")

    # verify
    out = run("verify", "--suite", "formulas", "--max-n", "318")
    validate("formulas-report.schema.json", json.loads(out.stdout), "verify formulas")
    out = run("verify", "--suite", "identities", "--max-n", "6")
    validate("identities-report.schema.json", json.loads(out.stdout), "verify identities")
    out = run("verify", "--suite", "random", "--samples", "50", "--max-n", "7")
    validate("random-report.schema.json", json.loads(out.stdout), "verify random")

    # enumerate
    for cls, schema in [("split", "graph.schema.json"), ("colored-split", "colored-graph.schema.json"),
                        ("bicolored", "colored-graph.schema.json")]:
        out = run("enumerate", "--class", cls, "--n", "3", "--format", "json")
        docs = json.loads(out.stdout)
        check(isinstance(docs, list) and docs, f"enumerate {cls} returns a list")
        for i, d in enumerate(docs):
            validate(schema, d, f"enumerate {cls} #{i}")
        out = run("enumerate", "--class", cls, "--n", "3", "--format", "jsonl")
        check([json.loads(line) for line in out.stdout.splitlines()] == docs, f"jsonl {cls} matches json")

    # classify
    paw = write("paw.json", {"n": 4, "edges": [[0, 1], [1, 2], [0, 2], [2, 3]]})
    p4 = write("p4.json", {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]})
    k3 = write("k3.json", {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})
    for path in [paw, p4, k3]:
        out = run("classify", "--graph", path)
        validate("classify.schema.json", json.loads(out.stdout), f"classify {path}")
    out = run("classify", "--graph", str(testdata / "c4.g"), expect=3)
    check("not a split graph" in out.stderr, "C4 is rejected as not split")

    # biject, each direction fed by the previous one
    def same_graph(a, b):
        return a["n"] == b["n"] and sorted(map(sorted, a["edges"])) == sorted(map(sorted, b["edges"]))

    def biject(m, path):
        out = run("biject", "--map", m, "--graph", path)
        doc = parse(out, f"biject {m}")
        validate("biject.schema.json", doc, f"biject {m}")
        return doc

    parts = biject("uk-decompose", k3)
    check(same_graph(biject("uk-compose", write("ukp.json", parts)), json.loads(pathlib.Path(k3).read_text())),
          "uk round trip")
    amb_parts = {"swing": 4, "rest": json.loads(pathlib.Path(p4).read_text())}
    amb = biject("amb-compose", write("ambp.json", amb_parts))
    out = run("classify", "--graph", write("amb.json", amb))
    check(json.loads(out.stdout)["class"] == "ambiguous", "composed graph is ambiguous")
    back = biject("amb-decompose", write("amb.json", amb))
    check(back["swing"] == 4 and same_graph(back["rest"], amb_parts["rest"]), "amb round trip")
    colored = {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]], "green": [1, 2], "red": [0, 3]}
    cuk_parts = {"swings": {"elements": [4, 5], "point": 5}, "rest": colored}
    composed = biject("cuk-compose", write("cukp.json", cuk_parts))
    back = biject("cuk-decompose", write("cuk.json", composed))
    check(back.get("swings") == cuk_parts["swings"] and same_graph(back["rest"], colored)
          and back["rest"]["green"] == colored["green"], "cuk round trip")
    bic = biject("split-to-bicolored", write("colored.json", colored))
    check(bic.get("edges") == [[0, 1], [2, 3]], "green clique edges dropped")
    back = biject("bicolored-to-split", write("bic.json", bic))
    check(same_graph(back, colored) and back.get("green") == colored["green"], "bicolored round trip")

    # asym
    out = run("asym", "--max-n", "40", "--format", "json")
    validate("ratio-report.schema.json", json.loads(out.stdout), "asym")
    out = run("asym", "--max-n", "10", "--unlabeled-max", "5", "--format", "json")
    validate("ratio-report.schema.json", json.loads(out.stdout), "asym with unlabeled rows")

    # the schemas reject doctored documents
    def rejects(schema, doc, label):
        global checks
        checks += 1
        if Draft202012Validator({"$ref": schema}, registry=registry).is_valid(doc):
            failures.append(f"{label}: schema accepted a bad document")

    rejects("count-table.schema.json", {**table, "values": [{"n": 4, "count": 162, "provenance": "formula"}]},
            "numeric count")
    rejects("graph.schema.json", {"n": 3, "edges": [[0, 1, 2]]}, "three-vertex edge")
    rejects("census.schema.json", {"n": 2, "rows": []}, "empty census")
    rejects("classify.schema.json", {"graph": {"n": 0, "edges": []}, "class": "unbalanced"}, "unknown class")

    # errors
    run("count", "--class", "nonsense", "--n", "3", expect=2)
    run("count", "--census", "--class", "split", "--n", "3", expect=2)
    run(expect=2)
    run("verify", "--suite", "formulas", "--max-n", "501", expect=3)
    bad = write("bad.json", {"n": 3, "edges": [[0, 5]]})
    run("classify", "--graph", bad, expect=3)

for f in failures:
    print("FAIL:", f)
print(f"{checks} checks, {len(failures)} failures")
sys.exit(1 if failures else 0)
