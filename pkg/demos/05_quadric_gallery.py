"""Classify every canonical quadric, print the polynomiality verdicts, and
construct a verified witness wherever one exists.
"""

from revolutio import NotPolynomial, Unsupported, parse_poly, quadric_param, quadric_report

GALLERY = [
    "x^2+y^2-z^2",
    "x^2+y^2-1",
    "x^2-y^2-1",
    "x^2-z",
    "x^2+y^2+z^2-1",
    "x^2+y^2-z^2-1",
    "x^2+y^2-z^2+1",
    "x^2-y^2-z",
    "x^2+y^2-z",
    "3*x^2+5*y^2+z^2-7",
    "x^2+2*y^2-3*z^2+4*x-5",
]

for text in GALLERY:
    F = parse_poly(text)
    rep = quadric_report(F)
    over_r = rep.polynomial_over_R
    print(f"{text:28s} {rep.quadric_class:24s} over C: {str(rep.polynomial_over_C):5s} over R: {over_r}")
    if rep.witness is not None:
        print(f"{'':28s} witness [{rep.witness.x}, {rep.witness.y}, {rep.witness.z}]")
