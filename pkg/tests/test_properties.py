"""Randomized property suites (200 cases each, fixed seeds documented in
property_suites.py)."""

import pytest

import property_suites


@pytest.mark.parametrize("name,suite", property_suites.ALL_SUITES, ids=[n for n, _ in property_suites.ALL_SUITES])
def test_property_suite(name, suite):
    assert suite() == property_suites.CASES
