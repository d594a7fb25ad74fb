# The JSON interchange format and the command-line surface.  Everything the
# library does is reachable through `huliu <subcommand>`; this script drives
# the CLI in-process and shows the exit-code contract (0 pass, 1 violation,
# 2 input error).

import tempfile
from pathlib import Path

from huliu import catalog, emit_structure, parse_structure
from huliu.cli import run

r8 = catalog()["r8"]
text = emit_structure(r8)
print("canonical document for r8 (first 5 lines):")
print("\n".join(text.splitlines()[:5]))
print("round-trip is the identity:", parse_structure(text) == r8.raw())
print()

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "r8.json"
    path.write_text(text, encoding="utf-8")

    print("$ huliu spectrum r8.json --format csv")
    code = run(["spectrum", str(path), "--format", "csv"])
    print("exit:", code)
    print()

    print("$ huliu lying-over r8.json")
    code = run(["lying-over", str(path)])
    print("exit:", code)
    print()

    print("$ huliu lying-over r8.json --subset 0,1,2   (not a subrng)")
    code = run(["lying-over", str(path), "--subset", "0,1,2"])
    print("exit:", code)
