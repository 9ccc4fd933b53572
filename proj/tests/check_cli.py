"""Runs every subcommand, validates output against the schemas, checks exit codes and determinism."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

schemas = {p.stem.replace(".schema", ""): json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())
failures = []


def run(*args):
    p = subprocess.run([cli, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(name, args, schema=None, code=0):
    rc, out, err = run(*args)
    if rc != code:
        failures.append(f"{name}: exit {rc}, wanted {code}: {err.strip()}")
        return None
    if schema is None:
        return out
    doc = json.loads(out)
    validator = jsonschema.Draft202012Validator(schemas[schema], registry=registry)
    errors = list(validator.iter_errors(doc))
    if errors:
        failures.append(f"{name}: {errors[0].message}")
    return doc


fermat = ["--surface", "x^3+y^3+z^3+w^3", "--plane", "w"]
doc = expect("classify", ["classify", *fermat], "report")
if doc and (doc["projective_class"] != "C3a" or doc["class_id"] != 4):
    failures.append("classify: Fermat should be C3a with connected section")
first = expect("determinism", ["classify", *fermat, "--seed", "7"])
second = expect("determinism", ["classify", *fermat, "--seed", "7"])
if first != second:
    failures.append("determinism: outputs differ for identical argv")
expect("affine input", ["classify", "--surface", "x^3+y^3+z^3+1"], "report")
expect("lines", ["lines", "--surface", "x^3+y^3+z^3+w^3"], "lines")
expect("curve", ["curve", "--cubic", "y^2*z-x^3+x*z^2"], "curve")
expect("curve section", ["curve", *fermat], "curve")
expect("graph", ["graph"], "graph")
dot = expect("graph dot", ["graph", "--format", "dot"])
if dot is not None and not dot.startswith("graph"):
    failures.append("graph dot: not DOT")
doc = expect("orbits", ["orbits", "--mu", "0"], "orbits")
if doc and len(doc[0]["orbits"]) != 3:
    failures.append("orbits: mu=0 should give 3 orbits")
expect("orbits all", ["orbits"], "orbits")
expect("counts", ["counts"], "counts")
expect("walls", ["walls"], "walls")
doc = expect("polotovsky", ["polotovsky"], "polotovsky")
if doc and doc["count"] != 25:
    failures.append("polotovsky: closure should have 25 arrangements")
expect("wall-label", ["wall-label", "--conic", "x^2+y^2+z^2", "--cubic", "y^2*z-x^3+x*z^2"], "wall_label")

expect("not transversal", ["classify", "--surface", "x^3+y^3+z^3+w^3", "--plane", "x+y"], code=2)
expect("singular", ["classify", "--surface", "4*(x^3+y^3+z^3+w^3)-(x+y+z+w)^3"], code=2)
expect("singular cubic", ["wall-label", "--conic", "x^2+y^2-z^2", "--cubic", "y^2*z-x^3"], code=2)
expect("bad polynomial", ["classify", "--surface", "x^3+"], code=64)
expect("no subcommand", [], code=64)
expect("unknown flag", ["walls", "--bogus"], code=64)

with tempfile.NamedTemporaryFile("w", suffix=".txt", delete=False) as f:
    f.write("# surface ; plane\nx^3+y^3+z^3+w^3 ; w\nx^3+y^3+z^3+w^3 ; x+y\n")
    batch = f.name
doc = expect("batch", ["classify", "--batch", batch], "batch", code=2)
if doc and ("report" not in doc[0] or "error" not in doc[1]):
    failures.append("batch: wanted one report and one rejection")

for line in failures:
    print("FAIL", line)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
