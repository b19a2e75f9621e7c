#!/usr/bin/env python3

"""
Seeded random instances, for the `gen` command and for the randomized test suites.
"""

# standards
from dataclasses import asdict, dataclass
from itertools import islice
import logging
from random import Random
from typing import Optional

# lpaf
from .af import ArgFramework
from .errors import GeneratorError
from .lp import Program, Rule
from .translate import lp_to_caf
from .utils import symbol_names


logger = logging.getLogger(__name__)


KINDS = ('lp', 'af', 'caf')


@dataclass(frozen=True)
class RandomSpec:
    """
    `size` is the number of atoms (for programs and CAFs) or of arguments (for AFs). `density` is the probability of each
    possible body literal, or of each possible attack. `rules` defaults to `size`.

    `ungrounded` is, for AFs, the number of extra sources that attack from outside the framework.
    """

    kind: str = 'lp'
    size: int = 3
    density: float = 0.3
    rules: Optional[int] = None
    atomic: bool = True
    strict: bool = False
    h_unique: bool = False
    ungrounded: int = 0
    seed: int = 0

    @property
    def num_rules(self):
        return self.size if self.rules is None else self.rules


def _check(spec):
    if spec.kind not in KINDS:
        raise GeneratorError(f'unknown kind {spec.kind!r}, expected one of {", ".join(KINDS)}')
    if spec.size < 0 or spec.num_rules < 0 or spec.ungrounded < 0:
        raise GeneratorError('sizes must not be negative')
    if not 0 <= spec.density <= 1:
        raise GeneratorError(f'density must be between 0 and 1, got {spec.density}')
    if spec.kind == 'af' and spec.size == 0:
        raise GeneratorError('an argumentation framework needs at least one argument')
    if spec.kind != 'af':
        if spec.h_unique and spec.num_rules > spec.size:
            raise GeneratorError(f"can't have {spec.num_rules} rules with distinct heads over {spec.size} atoms")
        if spec.strict and spec.num_rules < spec.size:
            raise GeneratorError(f"can't head all {spec.size} atoms with {spec.num_rules} rules")
        if spec.kind == 'caf' and not spec.atomic:
            raise GeneratorError('CAFs correspond to atomic programs only')


def _program(spec, rng):
    atoms = list(islice(symbol_names(), spec.size))
    if spec.h_unique:
        heads = rng.sample(atoms, spec.num_rules)
    elif spec.strict:
        heads = atoms + [rng.choice(atoms) for _ in range(spec.num_rules - len(atoms))]
        rng.shuffle(heads)
    else:
        heads = [rng.choice(atoms) for _ in range(spec.num_rules)]
    rules = []
    for rule_id, head in enumerate(heads, 1):
        neg = [atom for atom in atoms if rng.random() < spec.density]
        pos = [] if spec.atomic else [atom for atom in atoms if rng.random() < spec.density / 2]
        rules.append(Rule(rule_id, head, pos, neg))
    # when strict, every atom heads some rule, so any body is fine
    return Program(rules)


def _framework(spec, rng):
    args = list(islice(symbol_names(), spec.size + spec.ungrounded))
    args, outsiders = args[:spec.size], args[spec.size:]
    attacks = {
        (source, target)
        for source in args + outsiders
        for target in args
        if rng.random() < spec.density
    }
    return ArgFramework(frozenset(args), frozenset(attacks))


def generate(spec):
    """
    Builds a random program, AF or CAF according to `spec`. The same spec (seed included) always gives the same instance.
    """
    _check(spec)
    logger.debug('generating %s', asdict(spec))
    rng = Random(spec.seed)
    if spec.kind == 'af':
        return _framework(spec, rng)
    program = _program(spec, rng)
    if spec.kind == 'caf':
        return lp_to_caf(program)
    return program
