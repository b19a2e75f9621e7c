#!/usr/bin/env python3

# lpaf
from .base import Builder
from ..af import ArgFramework
from ..caf import ClaimFramework
from ..lp import Program, Rule
from ..parser import ParserError


def _where(line):
    return f'Line {line}: ' if line is not None else ''


class ValueBuilder(Builder):
    """
    A builder that assembles the parsed statements into a `Program`, `ArgFramework` or `ClaimFramework`. This is where the
    statement-level checks happen (duplicate identifiers, undeclared targets, etc), so that errors can point at the offending
    line.
    """

    def __init__(self):
        self.kind = NotImplemented
        self.statements = NotImplemented

    def open_document(self, kind):
        assert self.statements is NotImplemented, repr(self.statements)
        self.kind = kind
        self.statements = []

    def rule(self, line, rule_id, head, pos, neg):
        self.statements.append(('rule', line, (rule_id, head, tuple(pos), tuple(neg))))

    def argument(self, line, name):
        self.statements.append(('argument', line, (name,)))

    def attack(self, line, source, target):
        self.statements.append(('attack', line, (source, target)))

    def claimed_argument(self, line, argument, claim):
        self.statements.append(('claimed_argument', line, (argument, claim)))

    def claim_attack(self, line, claim, target):
        self.statements.append(('claim_attack', line, (claim, target)))

    def close_document(self):
        statements = self.statements
        self.statements = NotImplemented
        build = {
            'lp': self._build_program,
            'af': self._build_framework,
            'caf': self._build_claim_framework,
        }[self.kind]
        return build(statements)

    @staticmethod
    def _build_program(statements):
        rules = [(line, fields) for _kind, line, fields in statements]
        with_ids = [fields[0] is not None for _line, fields in rules]
        if any(with_ids) and not all(with_ids):
            line = next(line for (line, _fields), has_id in zip(rules, with_ids) if has_id != with_ids[0])
            raise ParserError(f'{_where(line)}either every rule has an identifier, or none does')
        if rules and not with_ids[0]:
            # no identifiers: number the rules by the rank of their head, which then must be unique
            seen = {}
            for line, (_rule_id, head, _pos, _neg) in rules:
                if head in seen:
                    raise ParserError(
                        f'{_where(line)}rules without identifiers need distinct heads, '
                        f'but {head} already heads the rule on line {seen[head]}'
                    )
                seen[head] = line
            ranks = {head: rank for rank, head in enumerate(sorted(seen), 1)}
            rules = [(line, (ranks[head], head, pos, neg)) for line, (_rule_id, head, pos, neg) in rules]
        seen = {}
        for line, (rule_id, _head, _pos, _neg) in rules:
            if rule_id in seen:
                raise ParserError(f'{_where(line)}identifier {rule_id} is already used on line {seen[rule_id]}')
            seen[rule_id] = line
        return Program(Rule(rule_id, head, pos, neg) for _line, (rule_id, head, pos, neg) in rules)

    @staticmethod
    def _build_framework(statements):
        args = {fields[0] for kind, _line, fields in statements if kind == 'argument'}
        attacks = []
        for kind, line, fields in statements:
            if kind == 'attack':
                source, target = fields
                if target not in args:
                    raise ParserError(f'{_where(line)}undeclared target {target}')
                attacks.append((source, target))
        return ArgFramework(frozenset(args), frozenset(attacks))

    @staticmethod
    def _build_claim_framework(statements):
        labels = {}
        label_lines = {}
        for kind, line, (argument, claim) in statements:
            if kind == 'claimed_argument':
                if labels.setdefault(argument, claim) != claim:
                    raise ParserError(
                        f'{_where(line)}argument {argument} already has claim {labels[argument]} '
                        f'(line {label_lines[argument]})'
                    )
                label_lines.setdefault(argument, line)
        claim_attacks = []
        for kind, line, (claim, target) in statements:
            if kind == 'claim_attack':
                if target not in labels:
                    raise ParserError(f'{_where(line)}undeclared target {target}')
                claim_attacks.append((claim, target))
        return ClaimFramework(labels, frozenset(claim_attacks))

    def flush(self):
        pass  # we don't print out anything
