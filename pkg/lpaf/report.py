#!/usr/bin/env python3

"""
Text and JSON rendering of results: collections of answer sets or extensions, equivalence verdicts and kernel reports.
"""

# lpaf
from .lp import format_rule
from .verdict import AttackDiff, ConditionFailure, RuleDiff, SEModelWitness, UpdateWitness


def format_set(members):
    return '{' + ', '.join(sorted(members)) + '}'


def format_interpretations(interpretations, indent=''):
    return ''.join(f'{indent}{format_set(members)}\n' for members in interpretations.sets)


def interpretations_to_json(interpretations):
    return [list(members) for members in interpretations.sets]


def _format_program(program, indent='  '):
    return ''.join(f'{indent}{rule}\n' for rule in program)


def _witness_lines(witness):
    if isinstance(witness, AttackDiff):
        for side, args, attacks in (
                ('left', witness.left_only_args, witness.left_only_attacks),
                ('right', witness.right_only_args, witness.right_only_attacks),
                ):
            for arg in args:
                yield f'{side} only: arg({arg}).\n'
            for source, target in attacks:
                yield f'{side} only: att({source},{target}).\n'
    elif isinstance(witness, RuleDiff):
        for side, rules in (('left', witness.left_only), ('right', witness.right_only)):
            for rule in rules:
                yield f'{side} only: {format_rule(rule, with_id=False)}\n'
    elif isinstance(witness, ConditionFailure):
        yield f'{witness.condition}: {witness.detail}\n'
    elif isinstance(witness, SEModelWitness):
        side = 'left' if witness.in_left else 'right'
        yield f'SE-model ({format_set(witness.x)}, {format_set(witness.y)}) on the {side} side only\n'
        yield 'update:\n'
        yield _format_program(witness.update)
    elif isinstance(witness, UpdateWitness):
        yield 'update:\n'
        yield _format_program(witness.update)
        for side, interpretations in (('left', witness.left), ('right', witness.right)):
            yield f'{side}:\n'
            yield format_interpretations(interpretations, indent='  ')


def format_verdict(verdict):
    if verdict.equivalent:
        return 'equivalent (bounded)\n' if verdict.bounded else 'equivalent\n'
    return 'not equivalent\n' + ''.join(_witness_lines(verdict.witness))


def _rule_to_json(rule):
    return {'id': rule.id, 'head': rule.head, 'pos': sorted(rule.pos), 'neg': sorted(rule.neg)}


def witness_to_json(witness):
    if isinstance(witness, AttackDiff):
        return {
            'type': 'attack-diff',
            'left_only_args': list(witness.left_only_args),
            'right_only_args': list(witness.right_only_args),
            'left_only_attacks': [list(attack) for attack in witness.left_only_attacks],
            'right_only_attacks': [list(attack) for attack in witness.right_only_attacks],
        }
    if isinstance(witness, RuleDiff):
        return {
            'type': 'rule-diff',
            'left_only': [_rule_to_json(rule) for rule in witness.left_only],
            'right_only': [_rule_to_json(rule) for rule in witness.right_only],
        }
    if isinstance(witness, ConditionFailure):
        return {
            'type': 'condition',
            'condition': witness.condition,
            'subject': witness.subject,
            'detail': witness.detail,
        }
    if isinstance(witness, SEModelWitness):
        return {
            'type': 'se-model',
            'x': list(witness.x),
            'y': list(witness.y),
            'side': 'left' if witness.in_left else 'right',
            'update': [_rule_to_json(rule) for rule in witness.update],
        }
    return {
        'type': 'update',
        'update': [_rule_to_json(rule) for rule in witness.update],
        'left': interpretations_to_json(witness.left),
        'right': interpretations_to_json(witness.right),
    }


def verdict_to_json(verdict):
    return {
        'equivalent': verdict.equivalent,
        'bounded': verdict.bounded,
        'witness': None if verdict.witness is None else witness_to_json(verdict.witness),
    }


def format_kernel_report(report):
    lines = []
    for check in report.checks:
        line = f'{check.law}: {"pass" if check.passed else "FAIL"}'
        if check.detail:
            line += f' ({check.detail})'
        lines.append(line)
    return ''.join(f'{line}\n' for line in lines)


def kernel_report_to_json(report):
    return {
        'kernel': [_rule_to_json(rule) for rule in report.kernel],
        'checks': [
            {'law': check.law, 'passed': check.passed, 'detail': check.detail}
            for check in report.checks
        ],
    }
