#!/usr/bin/env python3

# standards
from itertools import count
import re


RE_SYMBOL = re.compile(r'(?!not\b)[a-z][A-Za-z0-9_]*')
RE_INDEXED_ARGUMENT = re.compile(r'x([1-9][0-9]*)')
RE_DIGITS = re.compile(r'(\d+)')


def is_symbol(text):
    return RE_SYMBOL.fullmatch(text) is not None


def symbol_names():
    """
    Yields an endless supply of symbols in a fixed order: `a` to `z`, then `a1` to `z1`, `a2` to `z2`, etc.
    """
    letters = 'abcdefghijklmnopqrstuvwxyz'
    yield from letters
    for suffix in count(1):
        for letter in letters:
            yield f'{letter}{suffix}'


def fresh_symbols(used, how_many):
    """
    Returns a list of `how_many` symbols that aren't in `used`, picked in the order of `symbol_names()`.
    """
    fresh = []
    if how_many <= 0:
        return fresh
    for name in symbol_names():
        if name not in used:
            fresh.append(name)
            if len(fresh) == how_many:
                return fresh
    raise AssertionError('unreachable')  # pragma: no cover


def natural_key(name):
    """
    Sort key under which `x2` comes before `x10`.
    """
    return tuple(int(part) if part.isdigit() else part for part in RE_DIGITS.split(name))


def canonical(symbols):
    return tuple(sorted(symbols))
