#!/usr/bin/env python3

# standards
from io import StringIO

# 3rd parties
import pytest

# lpaf
import lpaf
from lpaf import ArgFramework, ClaimFramework, Program, Rule


def test_loads():
    assert lpaf.loads('1: a :- not b.') == Program([Rule(1, 'a', neg={'b'})])


def test_loads_parser_error():
    with pytest.raises(lpaf.ParserError) as error:
        lpaf.loads('1: a :- not b')
    assert str(error.value) == "Line 1, column 14: expected `.`, found ''"


def test_load():
    assert lpaf.load(StringIO('arg(a).\natt(b,a).\n')) == ArgFramework({'a'}, {('b', 'a')})


def test_load_parser_error():
    with pytest.raises(lpaf.ParserError) as error:
        lpaf.load(StringIO('arg(a).\natt(a,b).\n'))
    assert str(error.value) == 'Line 2: undeclared target b'


@pytest.mark.parametrize(
    'text, kind',
    [
        ('1: a :- not b.', 'lp'),
        ('', 'lp'),
        ('% arg(a).\n1: a.', 'lp'),
        ('arg(a).', 'af'),
        ('  att(b,a).\narg(a).', 'af'),
        ('carg(x1,a).', 'caf'),
        ('catt(a,x1).\ncarg(x1,a).', 'caf'),
    ],
)
def test_detect_kind(text, kind):
    assert lpaf.detect_kind(text) == kind


def test_explicit_kind():
    # with no statements, only the caller can say it's a CAF
    assert lpaf.loads('', 'caf') == ClaimFramework()
    assert lpaf.parse_caf('') == ClaimFramework()
    assert lpaf.parse_lp('') == Program()


def test_empty_af():
    with pytest.raises(lpaf.EmptyFrameworkError):
        lpaf.parse_af('% nothing here\n')


@pytest.mark.parametrize(
    'value',
    [
        lpaf.parse_lp('1: x :- not y, not a.\n2: y :- not x, not a.\n3: a.\n'),
        lpaf.parse_af('arg(x).\narg(y).\narg(a).\natt(x,y).\natt(y,x).\natt(a,x).\natt(a,y).\n'),
        lpaf.parse_caf('carg(x1,a).\ncarg(x2,a).\ncarg(x3,b).\ncatt(b,x1).\ncatt(c,x2).\ncatt(a,x3).\n'),
        Program(),
    ],
)
def test_render_round_trip(value):
    assert lpaf.loads(lpaf.render(value)) == value


def test_render_is_canonical():
    assert lpaf.render(lpaf.parse_af('att(b,a).\narg(b).\narg(a).\natt(a,b).')) == 'arg(a).\narg(b).\natt(a,b).\natt(b,a).\n'
