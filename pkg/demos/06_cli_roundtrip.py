#!/usr/bin/env python3
"""The command-line surface, exercised end to end through its file formats.

Writes a space file and a sites file, computes a diagram into a result
file, re-verifies that file, asks for the uniqueness report, and renders
an image; every call goes through the same entry point the ``zoned``
executable uses, and the exit codes are part of the contract.
"""

import json
import tempfile
from pathlib import Path

from zoned.cli import main

work = Path(tempfile.mkdtemp(prefix="zoned-demo-"))
print("working in", work, "\n")


def write(name, doc):
    path = work / name
    path.write_text(json.dumps(doc, indent=1))
    return str(path)


space = write("space.json", {
    "kind": "grid-2d",
    "params": {"xmin": -8, "xmax": 8, "ymin": -8, "ymax": 8, "step": 1, "norm": "l2"},
})
sites = write("sites.json", {"sites": [
    {"loci": [{"type": "circle", "radius": 1}]},
    {"loci": [{"type": "circle", "radius": 4}]},
]})

result = str(work / "result.json")
code = main(["compute", "--space", space, "--sites", sites,
             "--mode", "double", "--direction", "ascending", "--out", result])
print("compute exit code:", code)
doc = json.loads(Path(result).read_text())
print("  kind:", doc["kind"], "| extremal:", doc["extremal"],
      "| steps:", doc["steps"], "of bound", doc["bound"])

code = main(["verify", "--space", space, "--sites", sites,
             "--candidate", result, "--kind", "double"])
print("verify exit code:", code, "(0 means the result file checks out)")

code = main(["uniq", "--space", space, "--sites", sites,
             "--effort", "bracketing-only", "--out", str(work / "uniq.json")])
report = json.loads((work / "uniq.json").read_text())
print("uniq exit code:", code, "| bracket matches:", report["conditions"]["a"])

code = main(["render", "--result", result, "--out", str(work / "rings.ppm")])
print("render exit code:", code, "->", work / "rings.ppm")

# Failure modes use distinct codes; order2 on three site groups, for instance.
sites3 = write("sites3.json", {"sites": [[0], [1], [2]]})
code = main(["compute", "--space", space, "--sites", sites3,
             "--mode", "order2", "--out", str(work / "nope.json")])
print("\norder2 with three site groups exits with", code, "(expected 6)")
