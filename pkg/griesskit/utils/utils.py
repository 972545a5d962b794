#!/usr/bin/env python

import csv
import io
import json
from fractions import Fraction

import numpy as np


'''
Utility functions for exact values and reports
'''

def to_fraction(x):
    """Converts an int, a Fraction, a "p/q" string or a sympy/gmpy rational into a Fraction.

    Args:
        x: The value to convert.

    Returns:
        A Fraction equal to x.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return parse_rational(x)
    # sympy Rational carries p/q; gmpy and sympy's PythonMPQ carry numerator/denominator
    if hasattr(x, 'p') and hasattr(x, 'q'):
        return Fraction(int(x.p), int(x.q))
    if hasattr(x, 'numerator') and hasattr(x, 'denominator'):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError('cannot convert {!r} to an exact rational'.format(x))

def fmt_rational(x):
    """Serializes an exact rational as "p/q", or "p" when q == 1.

    Args:
        x (Fraction): The value to serialize.

    Returns:
        The canonical string, sign carried on the numerator.
    """
    x = to_fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{}/{}'.format(x.numerator, x.denominator)

def parse_rational(s):
    """Parses the "p/q" (or "p") serialization back into a Fraction."""
    s = s.strip()
    if '/' in s:
        p, q = s.split('/')
        return Fraction(int(p), int(q))
    return Fraction(int(s))

def matrix_to_strings(M):
    """Row-major list of lists of "p/q" strings.

    Args:
        M (array_like): A 2-d array of exact rationals.

    Returns:
        A list of rows, each a list of serialized entries.
    """
    return [[fmt_rational(x) for x in row] for row in np.asarray(M, dtype=object)]

def jsonable(obj):
    """Recursively replaces rationals by their string form and tuples by lists."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (Fraction,)):
        return fmt_rational(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.ndarray):
        return [jsonable(x) for x in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, 'to_json'):
        return jsonable(obj.to_json())
    return fmt_rational(obj)

def json_dumps(report):
    """Byte-stable JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(jsonable(report), sort_keys=True, indent=2, separators=(',', ': ')) + '\n'

def csv_dumps(rows):
    """Serializes a list of flat dicts as CSV with a header row.

    The header is the sorted union of keys; strings (and so every rational) are quoted.

    Args:
        rows (list): List of dicts.

    Returns:
        The CSV text.
    """
    rows = [jsonable(r) for r in rows]
    keys = sorted({k for r in rows for k in r.keys()})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, quoting=csv.QUOTE_NONNUMERIC, lineterminator='\n')
    writer.writeheader()
    for r in rows:
        writer.writerow({k: _csv_cell(r.get(k)) for k in keys})
    return buf.getvalue()

def _csv_cell(v):
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    if v is None:
        return ''
    return v

def text_dumps(report):
    """Human-readable rendering: scalar fields first, then one line per row."""
    report = jsonable(report)
    lines = []
    rows = report.get('rows', []) if isinstance(report, dict) else []
    for key in sorted(report.keys()):
        if key == 'rows':
            continue
        lines.append('{}: {}'.format(key, _text_cell(report[key])))
    for r in rows:
        lines.append('  '.join('{}={}'.format(k, _text_cell(r[k])) for k in sorted(r.keys())))
    return '\n'.join(lines) + '\n'

def _text_cell(v):
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)

def report_dumps(report, output_format='json'):
    """Serializes a report dict in one of the supported formats.

    Args:
        report (dict): The report; tabular content lives under 'rows'.
        output_format (str): 'json', 'csv' or 'text'.

    Returns:
        The serialized report.
    """
    if output_format == 'json':
        return json_dumps(report)
    elif output_format == 'csv':
        rows = report.get('rows')
        if rows is None:
            rows = [{k: v for k, v in report.items()}]
        return csv_dumps(rows)
    elif output_format == 'text':
        return text_dumps(report)
    raise ValueError('unknown output format {}'.format(output_format))

def report_write(filename, text):
    """Writes a serialized report to filename.

    Args:
        filename (str): Path to the file
        text (str): Serialized report

    """
    with open(filename, 'w') as F:
        F.write(text)
