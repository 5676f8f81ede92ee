"""JSON schema round-trips: identical canonical forms after decode(encode)."""

from fractions import Fraction

from revolutio import QQ, MultiPoly, UniPoly, cubic_example, sphere_witness
from revolutio.jsonio import (
    field_to_json,
    json_to_field,
    json_to_param,
    json_to_poly,
    json_to_tower,
    param_to_json,
    poly_to_json,
    tower_to_json,
)


def test_field_round_trip():
    tower = QQ.extend("i", [1, 0, 1]).extend("sqrt2", [-2, 0, 1], embedding=(Fraction(1), Fraction(2)))
    e = tower.gen("i") * Fraction(3, 4) + tower.gen("sqrt2") - 2
    assert json_to_field(field_to_json(e), tower) == e


def test_tower_round_trip_with_embedding():
    tower = QQ.extend("sqrt2", [-2, 0, 1], embedding=(Fraction(1), Fraction(2))).extend("i", [1, 0, 1])
    back = json_to_tower(tower_to_json(tower))
    assert back == tower
    assert back.steps[0].embedding == (1, 2)


def test_poly_round_trip_rational():
    t = UniPoly.variable("t")
    p = Fraction(7, 3) * t ** 5 - t + Fraction(1, 2)
    obj = poly_to_json(p)
    assert json_to_poly(obj) == p.to_multi()


def test_poly_round_trip_tower_coefficients():
    tower = QQ.extend("i", [1, 0, 1])
    i = tower.gen("i")
    u = MultiPoly.variable("u", ("u", "v"), tower)
    v = MultiPoly.variable("v", ("u", "v"), tower)
    p = i * u * v + (1 - i) * v ** 2 - 3
    assert json_to_poly(poly_to_json(p), tower) == p


def test_param_round_trip_sphere():
    s = sphere_witness()
    back = json_to_param(param_to_json(s))
    assert back.components == s.components
    assert back.tower == s.tower
    assert back.properness == s.properness
    assert back.provenance == s.provenance


def test_param_round_trip_cubic():
    s = cubic_example()
    back = json_to_param(param_to_json(s))
    assert back.components == s.components
    assert back.tower == s.tower


def test_json_is_pure_data():
    import json

    s = cubic_example()
    text = json.dumps(param_to_json(s))
    assert json_to_param(json.loads(text)).components == s.components
