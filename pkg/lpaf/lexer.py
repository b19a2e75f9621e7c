#!/usr/bin/env python3

# standards
import re
from typing import Optional

# lpaf
from .parser import ParserError
from .utils import RE_SYMBOL


RE_SKIPPED = re.compile(r'(?:\s+|%[^\n]*)+')
RE_RULE_ID = re.compile(r'\d+')
RE_NOT = re.compile(r'not\b')
RE_PREDICATE = re.compile(r'(carg|catt|arg|att)\b')


class Lexer:
    """
    Walks through program or framework text one token at a time. Tokens are symbols (`a`, `x12`), rule identifiers, the `not`
    keyword, the `arg`/`att`/`carg`/`catt` predicates and punctuation. Whitespace and `%` comments are skipped between tokens.

    Every method that consumes a token leaves the position on the next token, so `line` and `column` always point at what comes
    next.
    """

    def __init__(self, text):
        self.text = text
        self.position = 0
        self._skip()

    def _skip(self):
        match = RE_SKIPPED.match(self.text, self.position)
        if match:
            self.position = match.end()

    def _take(self, regex):
        match = regex.match(self.text, self.position)
        if match:
            self.position = match.end()
            self._skip()
        return match

    @property
    def line(self):
        return self.text.count('\n', 0, self.position) + 1

    @property
    def column(self):
        return self.position - self.text.rfind('\n', 0, self.position)

    def error(self, expected):
        """
        Raise a `ParserError` saying that `expected` (a token description, e.g. `atom`, or a punctuation mark) wasn't found here.
        """
        if not expected.isalpha():
            expected = f'`{expected}`'
        found = self.text[self.position : self.position + 30].split('\n', 1)[0]
        raise ParserError(f'Line {self.line}, column {self.column}: expected {expected}, found {found!r}')

    def at(self, punctuation) -> bool:
        return self.text.startswith(punctuation, self.position)

    def accept(self, punctuation) -> bool:
        if not self.at(punctuation):
            return False
        self.position += len(punctuation)
        self._skip()
        return True

    def expect(self, punctuation):
        if not self.accept(punctuation):
            self.error(punctuation)

    def symbol(self, what) -> str:
        """
        Consumes an atom, argument or claim name. `what` says which, for the error message.
        """
        match = self._take(RE_SYMBOL)
        if not match:
            self.error(what)
        return match.group()

    def rule_id(self) -> Optional[int]:
        match = self._take(RE_RULE_ID)
        return int(match.group()) if match else None

    def negation(self) -> bool:
        return self._take(RE_NOT) is not None

    def predicate(self) -> str:
        match = self._take(RE_PREDICATE)
        if not match:
            self.error('statement')
        return match.group(1)

    def end(self, checked=False) -> bool:
        if self.position == len(self.text):
            return True
        if checked:
            self.error('end')
        return False
