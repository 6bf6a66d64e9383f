# Copyright (c) 2024 The Gorenstein Developers.
# Distributed under the terms of the BSD 3-Clause License.
# SPDX-License-Identifier: BSD-3-Clause
#
# This code is part of the Gorenstein project
#
"""
Test the worked examples against their known answers
"""
import pytest

from .. import parse_poly
from .._cli.gallery import FIXTURES, Recorder, verify_all, verify_example
from .._cli.report import merge
from .utils import ideal, ring

SLOW = {"char-p-failure", "perazzo-cubic", "wlp-failure"}


@pytest.mark.parametrize(
    "identifier",
    [
        pytest.param(name, marks=pytest.mark.slow) if name in SLOW else name
        for name in sorted(FIXTURES)
    ],
)
def test_example(identifier):
    "Every quantity of a worked example matches its known value"
    report = verify_example(identifier)
    assert report.error is None
    assert report.checks
    assert not report.failures(), [
        (check.target, check.actual, check.expected) for check in report.failures()
    ]


def test_examples_registered():
    "All worked examples are registered"
    assert len(FIXTURES) == 17
    assert "hat-trichotomy" in FIXTURES
    assert "toric-surfaces" in FIXTURES


def test_unknown_example():
    "Unknown identifiers list the valid ones"
    with pytest.raises(ValueError, match="Unknown example 'missing'"):
        verify_example("missing")


def test_recorder():
    "Mismatches are recorded with both renderings"
    check = Recorder("demo", seed=1)
    check("same", (1, 2), (1, 2))
    check("different", True, False)
    plane = ring("x y")
    check.ideal("ideal", ideal(plane, "x^2", "y"), ideal(plane, "y", "x^2 + x*y"))
    report = check.report
    assert [c.target for c in report.checks] == [
        "demo.same",
        "demo.different",
        "demo.ideal",
    ]
    (failure,) = report.failures()
    assert failure.target == "demo.different"
    assert (failure.actual, failure.expected) == ("true", "false")
    assert report.entries[0].values["same"] == [1, 2]


def test_recorder_polynomials():
    "Polynomials are compared up to scalars and missing ones are none"
    check = Recorder("demo")
    plane = ring("x y")
    check.polynomial("scaled", parse_poly("-2*y", plane), parse_poly("y", plane))
    check.polynomial("missing", None, None)
    check.polynomial("found", parse_poly("x", plane), None)
    check.polynomial("lost", None, parse_poly("x", plane))
    report = check.report
    assert [c.passed for c in report.checks] == [True, True, False, False]
    assert report.checks[2].expected == "none"
    assert report.checks[3].actual == "none"
    assert report.entries[0].values["missing"] is None


def test_merge_orders_by_source():
    "Merged reports follow the identifiers and collect errors"
    first = Recorder("b-example").report
    second = Recorder("a-example").report
    second.error = "broken"
    merged = merge([first, second])
    assert [entry.label for entry in merged.entries] == ["a-example", "b-example"]
    assert merged.error == "a-example: broken"
    assert not merged.passed


@pytest.mark.slow
def test_verify_all():
    "Running every example at once"
    report = verify_all()
    assert report.source == "all"
    assert report.passed
    assert len(report.entries) == len(FIXTURES)
