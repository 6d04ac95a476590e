"""
The command-line pipeline
=========================

Run every subcommand into a scratch directory and list what each one wrote.
The same calls work from a shell as ``fps-lmg <subcommand> ...``.
"""

import json
import tempfile
from pathlib import Path

from finite_phase_space.cli import main

out = Path(tempfile.mkdtemp(prefix="fps-lmg-"))

for args in (["spectrum"], ["evolve"], ["gap"], ["potential"], ["validate"]):
    code = main([*args, "--out", str(out / args[0])])
    print(f"--> {args[0]} exited with {code}")

# every manifest lists its files with checksums
for path in sorted(out.glob("*/manifest_*.json")):
    man = json.loads(path.read_text())
    print(path.name, [f["path"] for f in man["files"]])
