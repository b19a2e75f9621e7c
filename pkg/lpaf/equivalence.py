#!/usr/bin/env python3

"""
Strong equivalence.

Two knowledge bases are strongly equivalent when no common update can tell them apart. What counts as an update depends on the
setting:

 * `union`: plain expansion `P ∪ R` (classic strong equivalence, decided exactly by `standard_se` through SE-models);
 * `head`: rule refinement by head, `P ⊎ R`, on h-unique atomic programs (decided by `rr_se_hunique`, through kernels);
 * `id`: rule refinement by identifier, `P ⊎⁺ R`, on atomic programs (decided by `rr_se_atomic`).

`oracle_se` decides all three by brute force over a bounded space of updates. It is slow, and only conclusive when it finds a
distinguishing update, but it's what the deciders above are checked against.
"""

# standards
from dataclasses import dataclass
from itertools import chain, combinations
import logging
from math import comb
from random import Random
from typing import FrozenSet, Iterator, NamedTuple, Tuple

# lpaf
from .af import stable_kernel
from .dynamics import head_update_program, id_update_program
from .errors import AlphabetError, BudgetError
from .lp import (
    Program,
    Rule,
    answer_sets,
    is_model,
    language,
    program_union,
    reduct,
    require_atomic,
    require_h_unique,
)
from .translate import lp_to_af
from .utils import fresh_symbols
from .verdict import EQUIVALENT, ConditionFailure, RuleDiff, SEModelWitness, SEVerdict, UpdateWitness


logger = logging.getLogger(__name__)


MODES = ('union', 'head', 'id')

MAX_CANDIDATES = 10 ** 7


def lp_kernel(program) -> Program:
    """
    Removes from each rule the negated atoms that head some *other* loop rule. A loop rule keeps its own `not head`.
    """
    require_atomic(program, 'lp_kernel')
    require_h_unique(program, 'lp_kernel')
    loop_heads = frozenset(rule.head for rule in program if rule.is_loop)
    return Program(
        rule.with_body(rule.pos, rule.neg - (loop_heads - {rule.head}))
        for rule in program
    )


def _kernel_rules(program):
    # ids are head-derived in h-unique programs, so we compare rules on head and body only
    return {(rule.head, rule.neg): rule for rule in lp_kernel(program)}


def rr_se_hunique(program, other) -> SEVerdict:
    left, right = _kernel_rules(program), _kernel_rules(other)
    if left.keys() == right.keys():
        return EQUIVALENT
    return SEVerdict(False, RuleDiff(
        left_only=tuple(rule for key, rule in sorted(left.items(), key=_rule_item_key) if key not in right),
        right_only=tuple(rule for key, rule in sorted(right.items(), key=_rule_item_key) if key not in left),
    ))


def _rule_item_key(item):
    (head, neg), _rule = item
    return (head, sorted(neg))


def rr_se_atomic(program, other) -> SEVerdict:
    """
    Atomic programs are RR strongly equivalent (under updates by identifier) iff they have the same identifiers, and rules with
    the same identifier have the same body, and the same head unless both are loop rules.
    """
    require_atomic(program, 'rr_se_atomic')
    require_atomic(other, 'rr_se_atomic')
    if program.ids != other.ids:
        rule_id = min(program.ids ^ other.ids)
        return SEVerdict(False, ConditionFailure(
            'identifiers',
            str(rule_id),
            f'rule {rule_id} occurs in only one program',
        ))
    for rule in program:
        paired = other.by_id[rule.id]
        if rule.neg != paired.neg:
            return SEVerdict(False, ConditionFailure(
                'bodies',
                str(rule.id),
                f'rule {rule.id} has different bodies: `{rule}` and `{paired}`',
            ))
        if rule.head != paired.head and not (rule.is_loop and paired.is_loop):
            return SEVerdict(False, ConditionFailure(
                'heads',
                str(rule.id),
                f'rule {rule.id} has different heads and is not a loop rule on both sides: `{rule}` and `{paired}`',
            ))
    return EQUIVALENT


def _subsets(atoms) -> Iterator[Tuple[str, ...]]:
    atoms = sorted(atoms)
    return chain.from_iterable(combinations(atoms, size) for size in range(len(atoms) + 1))


def se_models(program, alphabet) -> FrozenSet[Tuple[FrozenSet[str], FrozenSet[str]]]:
    """
    All pairs `(X, Y)` with `X ⊆ Y ⊆ alphabet`, where `Y` is a model of `program` and `X` a model of its reduct by `Y`.
    """
    alphabet = frozenset(alphabet)
    missing = language(program) - alphabet
    if missing:
        raise AlphabetError(f'alphabet lacks {", ".join(sorted(missing))}, which occur in the program')
    models = set()
    for y in map(frozenset, _subsets(alphabet)):
        if not is_model(program, y):
            continue
        reduced = reduct(program, y)
        for x in map(frozenset, _subsets(y)):
            if is_model(reduced, x):
                models.add((x, y))
    return frozenset(models)


def _se_model_key(model):
    x, y = model
    return (len(y), sorted(y), len(x), sorted(x))


def _realizing_update(x, y, other) -> Program:
    """
    A program `R` such that adding it to the side holding the SE-model `(x, y)` and to `other` (which lacks it) gives different
    answer sets.
    """
    if not is_model(other, y):
        # y is an answer set of the holding side plus the facts of y, and not of the other
        atoms = sorted(y)
        return Program(Rule(rule_id, atom) for rule_id, atom in enumerate(atoms, 1))
    # Here y is an answer set of `other ∪ R`, but not of the holding side plus R
    facts = [(atom, ()) for atom in sorted(x)]
    gap = sorted(y - x)
    links = [(head, (body,)) for head in gap for body in gap if head != body]
    return Program(
        Rule(rule_id, head, pos=pos)
        for rule_id, (head, pos) in enumerate(facts + links, 1)
    )


def standard_se(program, other) -> SEVerdict:
    alphabet = language(program) | language(other)
    left, right = se_models(program, alphabet), se_models(other, alphabet)
    if left == right:
        return EQUIVALENT
    x, y = min(left ^ right, key=_se_model_key)
    in_left = (x, y) in left
    update = _realizing_update(x, y, other if in_left else program)
    logger.debug('SE-model (%s, %s) only on the %s side', sorted(x), sorted(y), 'left' if in_left else 'right')
    return SEVerdict(False, SEModelWitness(tuple(sorted(x)), tuple(sorted(y)), in_left, update))


@dataclass(frozen=True)
class OracleBudget:
    """
    How far `oracle_se` looks. Updates are built from the atoms of both programs plus `fresh_atoms` new ones, have at most
    `max_rules` rules, each with at most `max_body` body literals. In `id` mode, rules may use the identifiers of both programs
    plus `fresh_ids` new ones.
    """

    fresh_atoms: int = 1
    max_rules: int = 2
    max_body: int = 2
    fresh_ids: int = 1

    def __post_init__(self):
        for name in ('fresh_atoms', 'max_rules', 'max_body', 'fresh_ids'):
            if getattr(self, name) < 0:
                raise BudgetError(f'{name} must not be negative')


def _check_mode(program, other, mode):
    if mode not in MODES:
        raise ValueError(f'unknown update mode {mode!r}')
    if mode == 'head':
        for side in (program, other):
            require_atomic(side, 'head-mode equivalence')
            require_h_unique(side, 'head-mode equivalence')
    elif mode == 'id':
        for side in (program, other):
            require_atomic(side, 'id-mode equivalence')


def apply_update(program, update, mode) -> Program:
    if mode == 'union':
        return program_union(program, update)
    if mode == 'head':
        return head_update_program(program, update)
    if mode == 'id':
        return id_update_program(program, update)
    raise ValueError(f'unknown update mode {mode!r}')


class _Candidate(NamedTuple):
    sort_key: tuple
    rule_id: int
    head: str
    pos: Tuple[str, ...]
    neg: Tuple[str, ...]


def _candidate_rules(atoms, rule_ids, max_body, with_pos):
    literals = [(False, atom) for atom in atoms]
    if with_pos:
        literals = [(True, atom) for atom in atoms] + literals
    bodies = [body for size in range(max_body + 1) for body in combinations(literals, size)]
    for rule_id in rule_ids:
        for head in atoms:
            for body in bodies:
                pos = tuple(atom for positive, atom in body if positive)
                neg = tuple(atom for positive, atom in body if not positive)
                yield _Candidate((len(body), head, rule_id, neg, pos), rule_id, head, pos, neg)


def _delta_alphabet(program, other, budget):
    used = language(program) | language(other)
    return sorted(used) + fresh_symbols(used, budget.fresh_atoms)


def count_candidates(program, other, mode, budget) -> int:
    """
    How many updates `candidate_deltas` will yield, computed without enumerating them.
    """
    num_atoms = len(_delta_alphabet(program, other, budget))
    num_literals = num_atoms * (2 if mode == 'union' else 1)
    bodies_per_head = sum(comb(num_literals, size) for size in range(budget.max_body + 1))
    rules_per_id = num_atoms * bodies_per_head
    if mode == 'id':
        num_ids = len(program.ids | other.ids) + budget.fresh_ids
        # distinct identifiers within one update
        return sum(comb(num_ids, size) * rules_per_id ** size for size in range(budget.max_rules + 1))
    return sum(comb(rules_per_id, size) for size in range(budget.max_rules + 1))


def candidate_deltas(program, other, mode, budget=OracleBudget()) -> Iterator[Program]:
    """
    Every update the oracle tries, in canonical order: fewer rules first, then fewer body literals, then lexicographically. In
    `union` mode rule bodies may contain positive literals; the refinement modes only use atomic updates.
    """
    if mode not in MODES:
        raise ValueError(f'unknown update mode {mode!r}')
    total = count_candidates(program, other, mode, budget)
    if total > MAX_CANDIDATES:
        raise BudgetError(f'budget would try {total} updates, more than {MAX_CANDIDATES}; use a smaller budget')
    atoms = _delta_alphabet(program, other, budget)
    if mode == 'id':
        known_ids = sorted(program.ids | other.ids)
        rule_ids = known_ids + list(range(max(known_ids, default=0) + 1, max(known_ids, default=0) + 1 + budget.fresh_ids))
    else:
        rule_ids = [0]  # placeholder, renumbered below
    candidates = sorted(_candidate_rules(atoms, rule_ids, budget.max_body, with_pos=(mode == 'union')))
    for size in range(budget.max_rules + 1):
        deltas = []
        for chosen in combinations(candidates, size):
            if mode == 'id' and len({candidate.rule_id for candidate in chosen}) < size:
                continue
            body_size = sum(len(candidate.pos) + len(candidate.neg) for candidate in chosen)
            deltas.append((body_size, [candidate.sort_key for candidate in chosen], chosen))
        deltas.sort(key=lambda delta: delta[:2])
        for _body_size, _key, chosen in deltas:
            yield Program(
                Rule(
                    candidate.rule_id if mode == 'id' else position,
                    candidate.head,
                    pos=candidate.pos,
                    neg=candidate.neg,
                )
                for position, candidate in enumerate(chosen, 1)
            )


def oracle_se(program, other, mode, budget=OracleBudget()) -> SEVerdict:
    """
    Brute-force strong equivalence: tries every update within `budget` and returns the first one after which the answer sets of
    the two sides differ. When none is found the verdict is positive, but flagged as `bounded`.
    """
    _check_mode(program, other, mode)
    logger.info('%s-mode oracle: trying %d updates', mode, count_candidates(program, other, mode, budget))
    for update in candidate_deltas(program, other, mode, budget):
        left = answer_sets(apply_update(program, update, mode))
        right = answer_sets(apply_update(other, update, mode))
        if left != right:
            logger.debug('distinguishing update: %s', ' '.join(str(rule) for rule in update))
            return SEVerdict(False, UpdateWitness(update, left, right))
    return SEVerdict(True, bounded=True)


def replay(verdict, program, other, mode='union') -> bool:
    """
    Re-checks the update carried by a negative verdict: returns whether applying it to both sides really gives different answer
    sets. SE-model witnesses are replayed in `union` mode whatever `mode` says.
    """
    witness = verdict.witness
    if isinstance(witness, SEModelWitness):
        mode = 'union'
    elif not isinstance(witness, UpdateWitness):
        raise ValueError(f"can't replay a {type(witness).__name__} witness")
    left = answer_sets(apply_update(program, witness.update, mode))
    right = answer_sets(apply_update(other, witness.update, mode))
    return left != right


class LawCheck(NamedTuple):
    law: str
    passed: bool
    detail: str = ''


class KernelReport(NamedTuple):
    kernel: Program
    checks: Tuple[LawCheck, ...]

    @property
    def passed(self):
        return all(check.passed for check in self.checks)


def _same_kernel_partner(program, rng):
    """
    A random program with the same kernel as `program`: each rule may gain negated atoms that head other loop rules.
    """
    loop_heads = sorted(rule.head for rule in program if rule.is_loop)
    rules = []
    for rule in program:
        extra = {head for head in loop_heads if head != rule.head and rng.random() < 0.5}
        rules.append(rule.with_body(rule.pos, rule.neg | extra))
    return Program(rules)


def _random_update(program, rng, budget):
    atoms = sorted(language(program)) + fresh_symbols(language(program), budget.fresh_atoms)
    rules = []
    for rule_id in range(1, rng.randint(1, max(budget.max_rules, 1)) + 1):
        neg = rng.sample(atoms, rng.randint(0, min(budget.max_body, len(atoms))))
        rules.append(Rule(rule_id, rng.choice(atoms), neg=neg))
    return Program(rules)


def kernel_sanity(program, samples=20, seed=0, budget=OracleBudget()) -> KernelReport:
    """
    Checks, on `program`, the three laws the kernel is supposed to satisfy: it preserves answer sets, it commutes with the AF
    stable kernel, and programs with the same kernel keep the same kernel under any common update (checked on `samples` random
    partners and updates).
    """
    require_atomic(program, 'kernel_sanity')
    require_h_unique(program, 'kernel_sanity')
    kernel = lp_kernel(program)
    checks = []

    checks.append(LawCheck(
        'answer-sets',
        answer_sets(program) == answer_sets(kernel),
    ))

    if len(program) == 0:
        checks.append(LawCheck('af-kernel', True, 'empty program'))
    else:
        checks.append(LawCheck(
            'af-kernel',
            stable_kernel(lp_to_af(program)) == lp_to_af(kernel),
        ))

    rng = Random(seed)
    failure = ''
    for _ in range(samples):
        partner = _same_kernel_partner(program, rng)
        update = _random_update(program, rng, budget)
        left = lp_kernel(head_update_program(program, update))
        right = lp_kernel(head_update_program(partner, update))
        if left != right:
            failure = f'partner {" ".join(map(str, partner))} diverges under update {" ".join(map(str, update))}'
            break
    checks.append(LawCheck('update-stability', not failure, failure))

    return KernelReport(kernel, tuple(checks))
