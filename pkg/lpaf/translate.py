#!/usr/bin/env python3

"""
Translations between atomic programs, argumentation frameworks and claim-augmented frameworks.

Programs and AFs correspond rule-for-argument when the program is h-unique (each head atom is an argument, each negated atom an
attacker). Any atomic program corresponds to a well-formed CAF, with one argument `x<id>` per rule.
"""

# lpaf
from .af import ArgFramework, attackers
from .caf import ClaimFramework
from .errors import ArgumentNameError
from .lp import Program, Rule, require_atomic, require_h_unique
from .utils import RE_INDEXED_ARGUMENT


def af_to_lp(framework) -> Program:
    """
    One rule per argument, with the argument's attackers as negative body. Rule identifiers are the ranks of the arguments in
    lexicographic order.
    """
    return Program(
        Rule(rule_id, argument, neg=attackers(framework, argument))
        for rule_id, argument in enumerate(sorted(framework.args), 1)
    )


def lp_to_af(program) -> ArgFramework:
    require_atomic(program, 'lp_to_af')
    require_h_unique(program, 'lp_to_af')
    return ArgFramework(
        program.heads,
        frozenset((atom, rule.head) for rule in program for atom in rule.neg),
    )


def argument_name(rule_id) -> str:
    return f'x{rule_id}'


def rule_id_of(argument) -> int:
    match = RE_INDEXED_ARGUMENT.fullmatch(argument)
    if not match:
        raise ArgumentNameError(f"can't map argument {argument!r} to a rule: arguments must be named x1, x2, ...")
    return int(match.group(1))


def lp_to_caf(program) -> ClaimFramework:
    require_atomic(program, 'lp_to_caf')
    return ClaimFramework(
        tuple((argument_name(rule.id), rule.head) for rule in program),
        frozenset((atom, argument_name(rule.id)) for rule in program for atom in rule.neg),
    )


def caf_to_lp(framework) -> Program:
    """
    Rule `i` gets the claim of `x<i>` as head, and every claim attacking `x<i>` as a negated atom.
    """
    return Program(
        Rule(rule_id_of(argument), claim, neg=framework.attacking_claims(argument))
        for argument, claim in framework.labels
    )


def af_to_caf(framework) -> ClaimFramework:
    return lp_to_caf(af_to_lp(framework))


def caf_to_af(framework) -> ArgFramework:
    return lp_to_af(caf_to_lp(framework))
