#!/usr/bin/env python3

# lpaf
from .errors import LpafError


PREDICATES = {
    'af': ('arg', 'att'),
    'caf': ('carg', 'catt'),
}


class ParserError(LpafError):
    """
    Exception used to signal that the input text does not follow a format that we were able to parse. The message starts with the
    line (and, for lexical errors, the column) where the problem was found.
    """


class Parser:
    """
    Uses a Lexer to chop the input into tokens, and then interprets these tokens statement by statement. Makes one call to a
    `Builder` method per statement, passing along the line it started on. Does not store the parsed data in memory, and does no
    validation beyond syntax: that is the builder's job.

    Three formats are understood, one per document:

     * `lp`: rules like `3: c :- not b, a.` (the `3:` identifier is optional);
     * `af`: `arg(a).` and `att(a,b).`;
     * `caf`: `carg(x1,a).` and `catt(a,x1).`.
    """

    def __init__(self, lexer, builder):
        self.lexer = lexer
        self.builder = builder

    def document(self, kind):
        self.builder.open_document(kind)
        while not self.lexer.end():
            if kind == 'lp':
                self.rule()
            else:
                self.fact(kind)
        return self.builder.close_document()

    def _reject_constraint(self, line):
        if self.lexer.at(':-'):
            raise ParserError(f'Line {line}: constraints (rules without a head) are not supported')

    def rule(self):
        line = self.lexer.line
        self._reject_constraint(line)
        rule_id = self.lexer.rule_id()
        if rule_id is not None:
            if rule_id < 1:
                raise ParserError(f'Line {line}: rule identifiers must be positive, got {rule_id}')
            self.lexer.expect(':')
            self._reject_constraint(line)
        head = self.lexer.symbol('atom')
        pos, neg = [], []
        if self.lexer.accept(':-'):
            while True:
                if self.lexer.negation():
                    neg.append(self.lexer.symbol('atom'))
                else:
                    pos.append(self.lexer.symbol('literal'))
                if not self.lexer.accept(','):
                    break
        self.lexer.expect('.')
        self.builder.rule(line, rule_id, head, pos, neg)

    def fact(self, kind):
        line = self.lexer.line
        allowed = PREDICATES[kind]
        predicate = self.lexer.predicate()
        if predicate not in allowed:
            raise ParserError(f'Line {line}: `{predicate}` statements cannot be mixed with `{"`/`".join(allowed)}` statements')
        self.lexer.expect('(')
        first = self.lexer.symbol('argument' if predicate in ('arg', 'att', 'carg') else 'claim')
        second = None
        if predicate != 'arg':
            self.lexer.expect(',')
            second = self.lexer.symbol('claim' if predicate == 'carg' else 'argument')
        self.lexer.expect(')')
        self.lexer.expect('.')
        if predicate == 'arg':
            self.builder.argument(line, first)
        elif predicate == 'att':
            self.builder.attack(line, first, second)
        elif predicate == 'carg':
            self.builder.claimed_argument(line, first, second)
        else:
            self.builder.claim_attack(line, first, second)
