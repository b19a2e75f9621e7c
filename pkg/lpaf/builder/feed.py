#!/usr/bin/env python3

# lpaf
from ..af import ArgFramework
from ..caf import ClaimFramework
from ..lp import Program


def feed(value, builder):
    """
    Replays a value as the sequence of builder calls that parsing its text form would make, and returns whatever the builder's
    `close_document` returns. Events carry no line number.
    """
    if isinstance(value, Program):
        builder.open_document('lp')
        for rule in value:
            builder.rule(None, rule.id, rule.head, sorted(rule.pos), sorted(rule.neg))
    elif isinstance(value, ArgFramework):
        builder.open_document('af')
        for arg in sorted(value.args):
            builder.argument(None, arg)
        for source, target in sorted(value.attacks):
            builder.attack(None, source, target)
    elif isinstance(value, ClaimFramework):
        builder.open_document('caf')
        for argument, claim in value.labels:
            builder.claimed_argument(None, argument, claim)
        for claim, target in sorted(value.claim_attacks):
            builder.claim_attack(None, claim, target)
    else:
        raise TypeError(f"don't know how to feed a {type(value).__name__}")
    return builder.close_document()
