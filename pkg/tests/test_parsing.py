import pytest

from causalfrac.exceptions import SpecParseError
from causalfrac.parsing import format_order, parse_order


@pytest.mark.parametrize(
    "text, value",
    [
        ("0.5", 0.5),
        ("-1.5", -1.5),
        ("0.5+0.5i", 0.5 + 0.5j),
        ("1-2i", 1 - 2j),
        ("2i", 2j),
        ("-i", -1j),
        ("1+i", 1 + 1j),
        ("1e-3", 1e-3),
        ("0.5-0.5j", 0.5 - 0.5j),
        (".25", 0.25),
    ],
)
def test_parse(text, value):
    assert parse_order(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1+", "1 + 2i", "i2", "1+2", "0.5+0.5ii"])
def test_reject(text):
    with pytest.raises(SpecParseError):
        parse_order(text)


@pytest.mark.parametrize("s", [0.5, -0.1, 0.5 + 0.5j, 1 - 2j, 0.1 + 1e-17j, 1 / 3 - 2 / 7j])
def test_round_trip(s):
    assert parse_order(format_order(s)) == s
