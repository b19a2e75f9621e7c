#!/usr/bin/env python3

"""
Core top-level functions for this package: reading and writing programs, AFs and CAFs in their text formats.
"""

# standards
from io import StringIO
import re

# lpaf
from .builder import TextPrinter, ValueBuilder, feed
from .lexer import Lexer
from .parser import Parser


RE_AF_STATEMENT = re.compile(r'^\s*(?:arg|att)\s*\(', flags=re.M)
RE_CAF_STATEMENT = re.compile(r'^\s*(?:carg|catt)\s*\(', flags=re.M)
RE_COMMENT = re.compile(r'%.*')


def detect_kind(text):
    """
    Guesses the format of `text` from the predicates it uses: `carg`/`catt` make it a CAF, `arg`/`att` an AF, and anything else
    is read as a logic program.
    """
    text = RE_COMMENT.sub('', text)
    if RE_CAF_STATEMENT.search(text):
        return 'caf'
    if RE_AF_STATEMENT.search(text):
        return 'af'
    return 'lp'


def parse(builder, text, kind=None):
    """
    Read the given `text` and feed it to the given `Builder`, returning whatever the builder builds. `kind` is detected from the
    text if not given.
    """
    if kind is None:
        kind = detect_kind(text)
    lexer = Lexer(text)
    parser = Parser(lexer, builder)
    document = parser.document(kind)
    lexer.end(checked=True)
    builder.flush()
    return document


def loads(text, kind=None):
    """
    Parse `text`, a `str`, into a `Program`, `ArgFramework` or `ClaimFramework`.

    Will raise `ParserError` if a syntax error is encountered, or if a statement breaks the rules of its format (duplicate
    identifiers, undeclared attack targets, etc).
    """
    return parse(ValueBuilder(), text, kind)


def load(file, kind=None):
    """
    Same as `loads`, reading from `file`, a text mode file object open for reading.
    """
    return loads(file.read(), kind)


def parse_lp(text):
    return loads(text, 'lp')


def parse_af(text):
    return loads(text, 'af')


def parse_caf(text):
    return loads(text, 'caf')


def render(value, builder_class=TextPrinter):
    """
    The canonical text of `value`, such that `loads(render(value)) == value`.
    """
    output = StringIO()
    feed(value, builder_class(output))
    return output.getvalue()
