#!/usr/bin/env python3

"""
Abstract argumentation frameworks whose attacks may come from outside the framework ("ungrounded" attacks), under stable
semantics.
"""

# standards
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import FrozenSet, Tuple

# lpaf
from .errors import EmptyFrameworkError, FrameworkError
from .lp import InterpretationSet
from .verdict import EQUIVALENT, AttackDiff, SEVerdict


Argument = str
Attack = Tuple[Argument, Argument]


@dataclass(frozen=True)
class ArgFramework:
    """
    `args` is a non-empty set of arguments. Every attack targets an argument of the framework, but its source may be any
    argument of the universe.
    """

    args: FrozenSet[Argument]
    attacks: FrozenSet[Attack] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, 'args', frozenset(self.args))
        object.__setattr__(self, 'attacks', frozenset((source, target) for source, target in self.attacks))
        if not self.args:
            raise EmptyFrameworkError('an argumentation framework needs at least one argument')
        for source, target in sorted(self.attacks):
            if target not in self.args:
                raise FrameworkError(f'attack ({source},{target}) targets {target}, which is not an argument')

    @cached_property
    def proper_attacks(self) -> FrozenSet[Attack]:
        return frozenset(attack for attack in self.attacks if attack[0] in self.args)

    @cached_property
    def ungrounded_attacks(self) -> FrozenSet[Attack]:
        return self.attacks - self.proper_attacks

    @cached_property
    def is_strict(self) -> bool:
        return not self.ungrounded_attacks

    @cached_property
    def self_attackers(self) -> FrozenSet[Argument]:
        return frozenset(source for source, target in self.attacks if source == target)

    def __str__(self):
        lines = [f'arg({arg}).\n' for arg in sorted(self.args)]
        lines.extend(f'att({source},{target}).\n' for source, target in sorted(self.attacks))
        return ''.join(lines)


def attackers(framework, argument) -> FrozenSet[Argument]:
    """
    Every source attacking `argument`, including the ungrounded ones.
    """
    return frozenset(source for source, target in framework.attacks if target == argument)


def restrict(framework):
    return ArgFramework(framework.args, framework.proper_attacks)


def range_of(framework, extension) -> FrozenSet[Argument]:
    """
    The extension plus every argument it attacks, over proper attacks.
    """
    extension = frozenset(extension)
    return extension | {target for source, target in framework.proper_attacks if source in extension}


def is_conflict_free(framework, extension) -> bool:
    extension = frozenset(extension)
    if not extension <= framework.args:
        outside = ', '.join(sorted(extension - framework.args))
        raise FrameworkError(f'{outside} not an argument of the framework')
    return not any(source in extension and target in extension for source, target in framework.proper_attacks)


def stable_extensions(framework) -> InterpretationSet:
    args = sorted(framework.args)
    found = []
    for size in range(len(args) + 1):
        for candidate in combinations(args, size):
            if is_conflict_free(framework, candidate) and range_of(framework, candidate) == framework.args:
                found.append(candidate)
    return InterpretationSet(found)


def union(framework, other):
    return ArgFramework(framework.args | other.args, framework.attacks | other.attacks)


def stable_kernel(framework):
    """
    Drops every attack `(a, b)` with `a != b` where `a` attacks itself.
    """
    self_attackers = framework.self_attackers
    return ArgFramework(
        framework.args,
        frozenset(
            (source, target)
            for source, target in framework.attacks
            if source == target or source not in self_attackers
        ),
    )


def diff_frameworks(left, right) -> AttackDiff:
    return AttackDiff(
        left_only_args=tuple(sorted(left.args - right.args)),
        right_only_args=tuple(sorted(right.args - left.args)),
        left_only_attacks=tuple(sorted(left.attacks - right.attacks)),
        right_only_attacks=tuple(sorted(right.attacks - left.attacks)),
    )


def af_strongly_equivalent(framework, other) -> SEVerdict:
    left, right = stable_kernel(framework), stable_kernel(other)
    if left == right:
        return EQUIVALENT
    return SEVerdict(False, diff_frameworks(left, right))
