#!/usr/bin/env python3

"""
Results of the strong-equivalence deciders. A verdict that says "not equivalent" always carries a witness explaining why; the
witness types below are what the deciders produce and what `report.py` knows how to print.
"""

# standards
from dataclasses import dataclass
from typing import Optional, Tuple, Union

# lpaf
from .lp import InterpretationSet, Program, Rule


@dataclass(frozen=True)
class AttackDiff:
    """
    Symmetric difference between two (kernel) frameworks.
    """

    left_only_args: Tuple[str, ...] = ()
    right_only_args: Tuple[str, ...] = ()
    left_only_attacks: Tuple[Tuple[str, str], ...] = ()
    right_only_attacks: Tuple[Tuple[str, str], ...] = ()

    @property
    def attacks(self):
        return self.left_only_attacks + self.right_only_attacks


@dataclass(frozen=True)
class RuleDiff:
    """
    Rules found in one kernel and not the other.
    """

    left_only: Tuple[Rule, ...] = ()
    right_only: Tuple[Rule, ...] = ()


@dataclass(frozen=True)
class ConditionFailure:
    """
    A syntactic characterization failed. `condition` names the clause (e.g. `bodies`), `subject` what it failed on (a rule
    identifier, an argument) and `detail` is a human-readable account.
    """

    condition: str
    subject: str
    detail: str


@dataclass(frozen=True)
class SEModelWitness:
    """
    An SE-model `(x, y)` that one program has and the other doesn't. `update` is a program that, added to both, makes their answer
    sets differ.
    """

    x: Tuple[str, ...]
    y: Tuple[str, ...]
    in_left: bool
    update: Program


@dataclass(frozen=True)
class UpdateWitness:
    """
    A common update after which the two sides have different semantics.
    """

    update: Program
    left: InterpretationSet
    right: InterpretationSet


Witness = Union[AttackDiff, RuleDiff, ConditionFailure, SEModelWitness, UpdateWitness]


@dataclass(frozen=True)
class SEVerdict:
    equivalent: bool
    witness: Optional[Witness] = None
    bounded: bool = False

    def __post_init__(self):
        if self.equivalent != (self.witness is None):
            raise ValueError('a verdict has a witness exactly when it is negative')

    def __bool__(self):
        return self.equivalent


EQUIVALENT = SEVerdict(True)
