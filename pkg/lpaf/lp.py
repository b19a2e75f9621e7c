#!/usr/bin/env python3

"""
Normal logic programs with identified rules, and their stable-model (answer set) semantics.

A rule is written `id: head :- pos, not neg.`. Rules carry an identifier so that two rules with the same head and body can
coexist in one program, and so that updates can address a rule by its identifier.
"""

# standards
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import FrozenSet, Iterator, NamedTuple, Tuple

# lpaf
from .errors import ClassViolation, ProgramError


Atom = str


@dataclass(frozen=True)
class Rule:
    id: int
    head: Atom
    pos: FrozenSet[Atom] = frozenset()
    neg: FrozenSet[Atom] = frozenset()

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, int) or self.id < 1:
            raise ProgramError(f'rule identifiers must be positive integers, got {self.id!r}')
        # frozen, so we have to go around our own __setattr__
        object.__setattr__(self, 'pos', frozenset(self.pos))
        object.__setattr__(self, 'neg', frozenset(self.neg))

    @property
    def is_atomic(self) -> bool:
        return not self.pos

    @property
    def is_loop(self) -> bool:
        return self.head in self.neg

    @property
    def atoms(self) -> FrozenSet[Atom]:
        return self.pos | self.neg | {self.head}

    @property
    def body_key(self):
        return (tuple(sorted(self.pos)), tuple(sorted(self.neg)))

    def with_id(self, new_id):
        return Rule(new_id, self.head, self.pos, self.neg)

    def with_body(self, pos, neg):
        return Rule(self.id, self.head, pos, neg)

    def __str__(self):
        return format_rule(self)


def format_rule_parts(rule_id, head, pos, neg):
    """
    Renders a rule in the text format that the parser reads, e.g. `3: c :- not b.`. Facts are rendered without `:-`, and the
    identifier is left out when `rule_id` is `None`.
    """
    literals = [*sorted(pos), *(f'not {atom}' for atom in sorted(neg))]
    text = head
    if literals:
        text += ' :- ' + ', '.join(literals)
    if rule_id is not None:
        text = f'{rule_id}: {text}'
    return text + '.'


def format_rule(rule, with_id=True):
    return format_rule_parts(rule.id if with_id else None, rule.head, rule.pos, rule.neg)


@dataclass(frozen=True)
class Program:
    """
    A finite set of rules, with pairwise distinct identifiers. Rules are kept sorted by identifier, so two programs are equal
    exactly when they have the same rules.
    """

    rules: Tuple[Rule, ...] = ()

    def __post_init__(self):
        rules = tuple(sorted(set(self.rules), key=lambda rule: rule.id))
        for previous, rule in zip(rules, rules[1:]):
            if previous.id == rule.id:
                raise ProgramError(f'two rules have identifier {rule.id}: `{previous}` and `{rule}`')
        object.__setattr__(self, 'rules', rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self):
        return len(self.rules)

    def __str__(self):
        return ''.join(f'{rule}\n' for rule in self.rules)

    @cached_property
    def ids(self) -> FrozenSet[int]:
        return frozenset(rule.id for rule in self.rules)

    @cached_property
    def heads(self) -> FrozenSet[Atom]:
        return frozenset(rule.head for rule in self.rules)

    @cached_property
    def neg_atoms(self) -> FrozenSet[Atom]:
        return frozenset(atom for rule in self.rules for atom in rule.neg)

    @cached_property
    def pos_atoms(self) -> FrozenSet[Atom]:
        return frozenset(atom for rule in self.rules for atom in rule.pos)

    @cached_property
    def by_id(self):
        return {rule.id: rule for rule in self.rules}

    @cached_property
    def is_atomic(self) -> bool:
        return all(rule.is_atomic for rule in self.rules)

    @cached_property
    def is_h_unique(self) -> bool:
        return len(self.heads) == len(self.rules)

    @cached_property
    def is_strict(self) -> bool:
        return (self.neg_atoms | self.pos_atoms) <= self.heads

    def rule_with_head(self, head):
        """
        Returns the rule whose head is `head`, or `None`. Only meaningful on h-unique programs.
        """
        for rule in self.rules:
            if rule.head == head:
                return rule
        return None

    def next_id(self) -> int:
        return max(self.ids, default=0) + 1


class ProgramClass(NamedTuple):
    atomic: bool
    strict: bool
    h_unique: bool


@dataclass(frozen=True)
class InterpretationSet:
    """
    A collection of sets of atoms (or arguments, or claims), in canonical form: each member is a sorted tuple, and the members are
    sorted and deduplicated. Iterating yields `frozenset`s.
    """

    sets: Tuple[Tuple[str, ...], ...] = ()

    def __post_init__(self):
        canonical = tuple(sorted({tuple(sorted(set(members))) for members in self.sets}))
        object.__setattr__(self, 'sets', canonical)

    def __iter__(self) -> Iterator[FrozenSet[str]]:
        return (frozenset(members) for members in self.sets)

    def __len__(self):
        return len(self.sets)

    def __contains__(self, members):
        return tuple(sorted(set(members))) in self.sets

    def __str__(self):
        return ''.join('{' + ', '.join(members) + '}\n' for members in self.sets)


def require_atomic(program, operation):
    if not program.is_atomic:
        offending = next(rule for rule in program if not rule.is_atomic)
        raise ClassViolation(f'{operation} needs an atomic program, but `{offending}` has a positive body')


def require_h_unique(program, operation):
    if not program.is_h_unique:
        seen = set()
        for rule in program:
            if rule.head in seen:
                raise ClassViolation(f'{operation} needs an h-unique program, but `{rule.head}` heads several rules')
            seen.add(rule.head)


def language(program) -> FrozenSet[Atom]:
    return program.heads | program.pos_atoms | program.neg_atoms


def class_of(program) -> ProgramClass:
    return ProgramClass(
        atomic=program.is_atomic,
        strict=program.is_strict,
        h_unique=program.is_h_unique,
    )


def loop_rules(program):
    return Program(rule for rule in program if rule.is_loop)


def reduct(program, interpretation):
    """
    Drops every rule blocked by `interpretation` (i.e. one of its negated atoms is true), and strips the negative literals off the
    remaining rules. Identifiers are preserved.
    """
    interpretation = frozenset(interpretation)
    return Program(
        Rule(rule.id, rule.head, rule.pos)
        for rule in program
        if not rule.neg & interpretation
    )


def _least_model(rules):
    model = set()
    pending = list(rules)
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if rule.pos <= model:
                if rule.head not in model:
                    model.add(rule.head)
                    changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return frozenset(model)


def _reduct_model(rules, interpretation):
    # Same as minimal_model(reduct(...)) without building the intermediate Program
    return _least_model(rule for rule in rules if not rule.neg & interpretation)


def minimal_model(program) -> FrozenSet[Atom]:
    """
    Least model of a negation-free program.
    """
    for rule in program:
        if rule.neg:
            raise ClassViolation(f'minimal_model needs a negation-free program, but `{rule}` has negative literals')
    return _least_model(program.rules)


def is_answer_set(program, interpretation) -> bool:
    interpretation = frozenset(interpretation)
    return _reduct_model(program.rules, interpretation) == interpretation


@lru_cache(maxsize=1 << 16)
def answer_sets(program) -> InterpretationSet:
    """
    All answer sets of `program`. Only subsets of the heads are tried, since the minimal model of any reduct is made of heads.
    """
    heads = sorted(program.heads)
    found = []
    for size in range(len(heads) + 1):
        for candidate in combinations(heads, size):
            if _reduct_model(program.rules, frozenset(candidate)) == frozenset(candidate):
                found.append(candidate)
    return InterpretationSet(found)


def equivalent(program, other) -> bool:
    return answer_sets(program) == answer_sets(other)


def is_model(program, interpretation) -> bool:
    """
    Whether `interpretation` satisfies every rule of `program`, reading `not` classically.
    """
    interpretation = frozenset(interpretation)
    return all(
        rule.head in interpretation
        for rule in program
        if rule.pos <= interpretation and not rule.neg & interpretation
    )


def ungrounded_vulnerabilities(program) -> FrozenSet[Atom]:
    return program.neg_atoms - program.heads


def strict_projection(program):
    """
    Removes from every rule the negated atoms that head no rule. These can never be true in an answer set, so the answer sets
    stay the same.
    """
    require_atomic(program, 'strict_projection')
    vulnerabilities = ungrounded_vulnerabilities(program)
    return Program(rule.with_body(rule.pos, rule.neg - vulnerabilities) for rule in program)


def rank_by_head(program):
    """
    Renumbers an h-unique program so that each rule's identifier is the rank of its head in lexicographic order (starting at 1).
    In that numbering, identifier equality is head equality.
    """
    require_h_unique(program, 'rank_by_head')
    ranks = {head: rank for rank, head in enumerate(sorted(program.heads), 1)}
    return Program(rule.with_id(ranks[rule.head]) for rule in program)


def program_union(program, expansion):
    """
    The plain expansion `program ∪ expansion`. Rules of `expansion` whose head and body already occur in `program` are dropped;
    the others are added under fresh identifiers, numbered after the largest identifier of `program`, in the order of their own
    identifiers.
    """
    present = {(rule.head, rule.body_key) for rule in program}
    rules = list(program)
    next_id = program.next_id()
    for rule in expansion:
        key = (rule.head, rule.body_key)
        if key not in present:
            present.add(key)
            rules.append(rule.with_id(next_id))
            next_id += 1
    return Program(rules)
