"""Drive the command-line interface in-process and show the JSON it emits.

Equivalent shell commands:

    revolutio analyze --implicit "x^2+y^2-z^3-1"
    revolutio analyze --implicit "x^2+y^2-1"          # exits 3 (CYLINDER)
    revolutio quadric --implicit "4*x^2+y^2+z^2-1"
    revolutio p2 decompose --x "t^3" --z "t"
    revolutio verify-catalog
"""

import json

from revolutio.cli import main


def run(*argv):
    print("$ revolutio " + " ".join(argv))
    code = main(list(argv))
    print(f"(exit {code})\n")


run("analyze", "--implicit", "x^2+y^2-z^3-1")
run("analyze", "--implicit", "x^2+y^2-1")
run("quadric", "--implicit", "4*x^2+y^2+z^2-1")
run("p2", "decompose", "--x", "t^3", "--z", "t")
