#!/usr/bin/env python3

"""
Rule refinement, and the two update operators built on it.

`head_update` (written ⊎) works on h-unique programs and matches rules by head. `id_update` (written ⊎⁺) works on any atomic
program and matches rules by identifier. In both cases a matched rule keeps its own head and identifier, and gets the updating
rule's body added to its own.
"""

# standards
from functools import reduce

# lpaf
from .errors import ClassViolation
from .lp import Program, Rule, format_rule, rank_by_head, require_atomic, require_h_unique


def refine(rule, other) -> Rule:
    return Rule(rule.id, rule.head, rule.pos | other.pos, rule.neg | other.neg)


def _require_atomic_rule(rule, operation):
    if not rule.is_atomic:
        raise ClassViolation(f'{operation} needs an atomic rule, but `{format_rule(rule)}` has a positive body')


def head_update(program, rule) -> Program:
    """
    `program ⊎ rule`. If no rule of `program` has the same head as `rule`, `rule` is added, otherwise that rule gets refined.

    The result is numbered by head rank (see `rank_by_head`), so that identifiers never depend on the order updates come in.
    """
    require_atomic(program, 'head_update')
    require_h_unique(program, 'head_update')
    _require_atomic_rule(rule, 'head_update')
    matched = program.rule_with_head(rule.head)
    if matched is None:
        rules = [*program, rule.with_id(program.next_id())]
    else:
        rules = [refine(existing, rule) if existing is matched else existing for existing in program]
    return rank_by_head(Program(rules))


def head_update_program(program, update) -> Program:
    require_atomic(program, 'head_update')
    require_h_unique(program, 'head_update')
    return reduce(head_update, update, rank_by_head(program))


def id_update(program, rule) -> Program:
    """
    `program ⊎⁺ rule`. If `rule`'s identifier is fresh, `rule` is added as is; otherwise the rule with that identifier is refined
    and `rule`'s head is discarded.
    """
    require_atomic(program, 'id_update')
    _require_atomic_rule(rule, 'id_update')
    matched = program.by_id.get(rule.id)
    if matched is None:
        return Program([*program, rule])
    return Program(refine(existing, rule) if existing is matched else existing for existing in program)


def id_update_program(program, update) -> Program:
    require_atomic(program, 'id_update')
    require_atomic(update, 'id_update')
    return reduce(id_update, update, program)
