"""
Enumeration, files and the command line
=======================================

Write enumerated graphs to graph6, read them back as a stream, and drive the
same checks through the ``idcodes`` command.
"""
#############################################################################
import subprocess
import sys
import tempfile
from pathlib import Path

from idcodes import GraphStream, enumerate_connected, enumerate_trees, write_graph6
from idcodes.harness import verify

print([len(enumerate_connected(n)) for n in range(1, 8)])
print([len(enumerate_trees(n)) for n in range(1, 13)])

#############################################################################
# A graph6 file is one graph per line; any stream can be verified against a
# claim instead of the builtin enumeration.

folder = Path(tempfile.mkdtemp())
shard = folder / "connected6.g6"
shard.write_text("".join(write_graph6(G) + "\n" for G in enumerate_connected(6)))
report = verify("thm-4.2", source=GraphStream.from_graph6_file(shard))
print(report.to_json())

#############################################################################
# The CLI reads the same files.  gen output can be piped straight into solve.

def idcodes(*args, stdin=None):
    out = subprocess.run([sys.executable, "-m", "idcodes", *args], input=stdin, capture_output=True, text=True)
    return out.stdout.strip()

g6 = idcodes("gen", "--family", "ld-gap", "--k", "2")
print(g6)
print(idcodes("solve", "--code", "tid", "--in", "-", stdin=g6 + "\n"))
print(idcodes("check", "--code", "tid", "--set", "0,1", "--in", "-", stdin="Bg\n"))
print(idcodes("verify", "--claim", "thm-4.4", "--source", str(shard)))
