#!/usr/bin/env python3

"""
Well-formed claim-augmented argumentation frameworks, where attacks are given as claim-attacks: a pair `(c, x)` means that every
argument claiming `c` attacks `x`. Claims that label no argument may still attack, which is the claim-level counterpart of an
ungrounded attack.
"""

# standards
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Tuple

# lpaf
from .af import ArgFramework, stable_extensions
from .errors import FrameworkError
from .lp import InterpretationSet
from .utils import natural_key
from .verdict import EQUIVALENT, ConditionFailure, SEVerdict


Claim = str
ClaimAttack = Tuple[Claim, str]


def _claim_attack_key(claim_attack):
    claim, target = claim_attack
    return (claim, natural_key(target))


@dataclass(frozen=True)
class ClaimFramework:
    """
    `labels` gives the claim of every argument, as `(argument, claim)` pairs or as a mapping; the arguments of the framework are
    exactly the labelled ones.
    """

    labels: Tuple[Tuple[str, Claim], ...] = ()
    claim_attacks: FrozenSet[ClaimAttack] = frozenset()

    def __post_init__(self):
        pairs = self.labels.items() if isinstance(self.labels, dict) else self.labels
        gamma: Dict[str, Claim] = {}
        for argument, claim in pairs:
            if gamma.setdefault(argument, claim) != claim:
                raise FrameworkError(f'argument {argument} is labelled with both {gamma[argument]} and {claim}')
        object.__setattr__(self, 'labels', tuple(sorted(gamma.items(), key=lambda item: natural_key(item[0]))))
        object.__setattr__(self, 'claim_attacks', frozenset((claim, target) for claim, target in self.claim_attacks))
        for claim, target in sorted(self.claim_attacks, key=_claim_attack_key):
            if target not in gamma:
                raise FrameworkError(f'claim-attack ({claim},{target}) targets {target}, which is not an argument')

    @cached_property
    def gamma(self) -> Dict[str, Claim]:
        return dict(self.labels)

    @cached_property
    def args(self) -> FrozenSet[str]:
        return frozenset(self.gamma)

    @cached_property
    def claims(self) -> FrozenSet[Claim]:
        return frozenset(self.gamma.values())

    def attacking_claims(self, argument) -> FrozenSet[Claim]:
        return frozenset(claim for claim, target in self.claim_attacks if target == argument)

    def __str__(self):
        lines = [f'carg({argument},{claim}).\n' for argument, claim in self.labels]
        lines.extend(
            f'catt({claim},{target}).\n'
            for claim, target in sorted(self.claim_attacks, key=_claim_attack_key)
        )
        return ''.join(lines)


def induced_af(framework) -> ArgFramework:
    """
    The argument-level framework: `x` attacks `y` whenever the claim of `x` attacks `y`. Claim-attacks from claims that label no
    argument are dropped.
    """
    by_claim: Dict[Claim, list] = {}
    for argument, claim in framework.labels:
        by_claim.setdefault(claim, []).append(argument)
    return ArgFramework(
        framework.args,
        frozenset(
            (source, target)
            for claim, target in framework.claim_attacks
            for source in by_claim.get(claim, ())
        ),
    )


def is_well_formed(framework) -> bool:
    """
    Whether arguments with the same claim attack the same arguments in the induced framework.
    """
    if not framework.labels:
        return True
    attacks = induced_af(framework).attacks
    out_attacks: Dict[Claim, FrozenSet[str]] = {}
    for argument, claim in framework.labels:
        targets = frozenset(target for source, target in attacks if source == argument)
        if out_attacks.setdefault(claim, targets) != targets:
            return False
    return True


def stable_claim_extensions(framework) -> InterpretationSet:
    if not framework.labels:
        # no arguments: the empty set is the only extension
        return InterpretationSet([()])
    gamma = framework.gamma
    return InterpretationSet(
        {gamma[argument] for argument in extension}
        for extension in stable_extensions(induced_af(framework))
    )


def caf_union(framework, other):
    """
    Componentwise union. An argument labelled in both frameworks keeps its claim from `framework`.
    """
    gamma = {**other.gamma, **framework.gamma}
    return ClaimFramework(gamma, framework.claim_attacks | other.claim_attacks)


def caf_strongly_equivalent(framework, other) -> SEVerdict:
    if framework.args != other.args:
        different = sorted(framework.args ^ other.args, key=natural_key)
        return SEVerdict(False, ConditionFailure(
            'arguments',
            different[0],
            f'argument {different[0]} occurs in only one framework',
        ))
    if framework.claim_attacks != other.claim_attacks:
        different = sorted(framework.claim_attacks ^ other.claim_attacks, key=_claim_attack_key)
        claim, target = different[0]
        return SEVerdict(False, ConditionFailure(
            'claim-attacks',
            f'({claim},{target})',
            f'claim-attack ({claim},{target}) occurs in only one framework',
        ))
    for argument, claim in framework.labels:
        other_claim = other.gamma[argument]
        if claim == other_claim:
            continue
        attacking = framework.attacking_claims(argument)
        if claim not in attacking or other_claim not in attacking:
            return SEVerdict(False, ConditionFailure(
                'labels',
                argument,
                f'argument {argument} claims {claim} on one side and {other_claim} on the other, and not both claims attack it',
            ))
    return EQUIVALENT
