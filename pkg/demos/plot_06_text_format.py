"""
The text format and the command line
====================================

Systems are stored one application per line.  The same files feed the
``tgs`` command.
"""

import io
import os
import tempfile

from tgs import ParseError, get_fixture, parse_tgs, serialize_tgs
from tgs.cli import main

text = serialize_tgs(get_fixture("z2"))
print(text)
assert serialize_tgs(parse_tgs(text)) == text

# Errors carry the line they refer to.
broken = text.replace("S1 g1 S1 g1 S1 -> S1\n", "")
try:
    parse_tgs(broken)
except ParseError as e:
    print(type(e).__name__, "-", e)

with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "z6.tgs")
    main(["fixture", "z6", "-o", path])
    out = io.StringIO()
    code = main(["prime", path, "--set", "S0,S2,S4"], out=out)
    print(out.getvalue(), "exit", code)
