import json
from fractions import Fraction

import numpy as np
import pytest
import sympy

from griesskit.utils import (csv_dumps, fmt_rational, jsonable, matrix_to_strings, parse_rational,
                             report_dumps, report_write, to_fraction)


def test_fmt_rational():
    assert fmt_rational(Fraction(3, 2)) == '3/2'
    assert fmt_rational(Fraction(-6, 4)) == '-3/2'
    assert fmt_rational(Fraction(4, 2)) == '2'
    assert parse_rational('-21/160') == Fraction(-21, 160)
    assert parse_rational('7') == Fraction(7)


def test_to_fraction_sources():
    assert to_fraction(3) == Fraction(3)
    assert to_fraction(np.int64(5)) == Fraction(5)
    assert to_fraction('1/16') == Fraction(1, 16)
    assert to_fraction(sympy.Rational(7, 20)) == Fraction(7, 20)
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_jsonable_and_matrix():
    obj = {'a': (Fraction(1, 2), True, None), 1: np.array([Fraction(3)], dtype=object)}
    assert jsonable(obj) == {'a': ['1/2', True, None], '1': ['3']}
    M = np.array([[Fraction(1, 4), Fraction(1, 32)]], dtype=object)
    assert matrix_to_strings(M) == [['1/4', '1/32']]


def test_json_report_is_sorted_and_stable():
    report = {'b': Fraction(1, 3), 'a': [1, 2]}
    text = report_dumps(report, 'json')
    assert text == report_dumps(dict(reversed(list(report.items()))), 'json')
    assert list(json.loads(text)) == ['a', 'b']
    assert text.endswith('\n')


def test_csv_quotes_rationals():
    text = csv_dumps([{'m': 1, 'pd': True, 'h': Fraction(1, 2)}])
    lines = text.splitlines()
    assert lines[0] == '"h","m","pd"'
    assert lines[1] == '"1/2",1,"true"'


def test_text_and_unknown_format():
    text = report_dumps({'n': 3, 'rows': [{'m': 1}]}, 'text')
    assert 'n: 3' in text
    assert 'm=1' in text
    with pytest.raises(ValueError):
        report_dumps({}, 'xml')


def test_report_roundtrip_file(tmp_path):
    path = str(tmp_path / 'r.json')
    report_write(path, report_dumps({'c': Fraction(6, 5)}))
    with open(path) as F:
        assert json.load(F) == {'c': '6/5'}
