import pytest

from umbralab.errors import ParamParseError
from umbralab.utils.param_utils import (
    format_value, parse_assignments, parse_list, parse_range, parse_scalar,
)


def test_parse_scalar():
    assert parse_scalar("3") == 3
    assert isinstance(parse_scalar("3"), int)
    assert parse_scalar(" -0.25 ") == -0.25
    assert parse_scalar("1e-3") == 0.001
    with pytest.raises(ParamParseError):
        parse_scalar("abc")


def test_parse_assignments():
    assert parse_assignments("n=2,a=1,coeffs=1;0;1") == {"n": 2, "a": 1, "coeffs": (1.0, 0.0, 1.0)}
    assert parse_assignments("") == {}
    assert parse_assignments("x=1.5,") == {"x": 1.5}
    for bad in ("n", "=1", "n=", "n=1,n=2"):
        with pytest.raises(ParamParseError):
            parse_assignments(bad)


def test_parse_range():
    assert parse_range("n=0..4") == ("n", [0, 1, 2, 3, 4])
    assert parse_range("x=0..1:0.25") == ("x", [0.0, 0.25, 0.5, 0.75, 1.0])
    assert parse_range("x=1..0:-0.5") == ("x", [1.0, 0.5, 0.0])
    # float steps that do not divide the span stop before the end
    assert parse_range("x=0..1:0.3")[1] == pytest.approx([0.0, 0.3, 0.6, 0.9])
    assert parse_range("x=0..0.3:0.1")[1] == pytest.approx([0.0, 0.1, 0.2, 0.3])


@pytest.mark.parametrize("text", ["n=4..0", "n=0..4:0", "n=0..1:-1", "n=0:4", "n"])
def test_parse_range_errors(text):
    with pytest.raises(ParamParseError):
        parse_range(text)


def test_parse_list():
    assert parse_list("alpha=0.5,1,2,4") == ("alpha", [0.5, 1, 2, 4])
    assert parse_list("coeffs=1;0,2;3") == ("coeffs", [(1.0, 0.0), (2.0, 3.0)])
    with pytest.raises(ParamParseError):
        parse_list("alpha=,")


def test_format_value():
    assert format_value(0.1 + 0.2) == "0.3"
    assert format_value(3) == "3"
    assert format_value(True) == "true"
    assert format_value((1.0, 2.5)) == "1;2.5"
    assert format_value(None) == "-"
    assert format_value("text") == "text"
