#!/usr/bin/env python3

# standards
from itertools import chain, combinations, product

# 3rd parties
import pytest

# lpaf
from lpaf import (
    ClassViolation,
    InterpretationSet,
    Program,
    ProgramError,
    Rule,
    answer_sets,
    class_of,
    equivalent,
    is_answer_set,
    is_model,
    language,
    loop_rules,
    minimal_model,
    parse_lp,
    program_union,
    rank_by_head,
    reduct,
    strict_projection,
    ungrounded_vulnerabilities,
)


MURDER = parse_lp('''
    1: x :- not y, not a.
    2: y :- not x, not a.
    3: a.
''')

MURDER_UPDATE = parse_lp('''
    1: a :- not d.
    2: d.
''')

# the program of the AF arg(a), arg(b), arg(c), att(a,a), att(a,b), att(b,a), att(b,c)
SELF_ATTACK = parse_lp('''
    1: a :- not a, not b.
    2: b :- not a.
    3: c :- not b.
''')


def test_rule_identifiers_must_be_positive():
    for bad_id in (0, -1, True, '1'):
        with pytest.raises(ProgramError):
            Rule(bad_id, 'a')


def test_duplicate_identifiers():
    with pytest.raises(ProgramError):
        Program([Rule(1, 'a'), Rule(1, 'b')])


def test_identical_rules_are_merged():
    assert Program([Rule(1, 'a'), Rule(1, 'a')]) == Program([Rule(1, 'a')])


def test_program_order_does_not_matter():
    assert Program([Rule(2, 'b'), Rule(1, 'a')]) == Program([Rule(1, 'a'), Rule(2, 'b')])
    assert [rule.id for rule in Program([Rule(3, 'c'), Rule(1, 'a')])] == [1, 3]


def test_language():
    assert language(MURDER) == {'x', 'y', 'a'}
    assert language(parse_lp('1: a :- not b.')) == {'a', 'b'}
    assert language(Program()) == set()


@pytest.mark.parametrize(
    'text, atomic, strict, h_unique',
    [
        ('1: a :- not b.\n2: b.', True, True, True),
        ('1: a :- not b.', True, False, True),
        ('1: a.\n3: b.\n2: b :- not a.', True, True, False),
        ('1: a :- b.\n2: b.', False, True, True),
    ],
)
def test_class_of(text, atomic, strict, h_unique):
    assert class_of(parse_lp(text)) == (atomic, strict, h_unique)


def test_loop_rules():
    assert loop_rules(SELF_ATTACK) == Program([Rule(1, 'a', neg={'a', 'b'})])
    assert loop_rules(MURDER) == Program()


def test_reduct():
    assert reduct(SELF_ATTACK, {'b'}) == Program([Rule(2, 'b')])
    assert reduct(SELF_ATTACK, set()) == Program([Rule(1, 'a'), Rule(2, 'b'), Rule(3, 'c')])
    assert reduct(program_union(MURDER, MURDER_UPDATE), {'a', 'd'}) == Program([Rule(3, 'a'), Rule(5, 'd')])


def test_minimal_model():
    assert minimal_model(parse_lp('1: a.\n2: b :- a.')) == {'a', 'b'}
    assert minimal_model(Program()) == set()
    assert minimal_model(parse_lp('1: b.')) == {'b'}
    assert minimal_model(parse_lp('1: b :- a.')) == set()


def test_minimal_model_needs_negation_free_program():
    with pytest.raises(ClassViolation):
        minimal_model(parse_lp('1: a :- not b.'))


def test_is_answer_set():
    assert is_answer_set(SELF_ATTACK, {'b'})
    assert not is_answer_set(SELF_ATTACK, {'a'})
    assert is_answer_set(program_union(MURDER, MURDER_UPDATE), {'a', 'd'})


def test_answer_sets():
    assert answer_sets(program_union(MURDER, MURDER_UPDATE)) == InterpretationSet([{'a', 'd'}])
    assert answer_sets(MURDER) == InterpretationSet([{'a'}])
    assert answer_sets(SELF_ATTACK) == InterpretationSet([{'b'}])
    assert answer_sets(parse_lp('1: a :- not a.')) == InterpretationSet()
    assert len(answer_sets(parse_lp('1: a :- not a.'))) == 0
    assert answer_sets(Program()) == InterpretationSet([set()])


def test_answer_sets_with_positive_bodies():
    assert answer_sets(parse_lp('1: a :- b.\n2: b :- a.')) == InterpretationSet([set()])
    assert answer_sets(parse_lp('1: a :- not b.\n2: b :- not a.\n3: c :- a.')) == InterpretationSet([{'a', 'c'}, {'b'}])


def test_answer_sets_under_expansion():
    left, right = parse_lp('1: a :- not b.'), parse_lp('1: a.')
    expansion = parse_lp('1: b.')
    assert answer_sets(program_union(left, expansion)) == InterpretationSet([{'b'}])
    assert answer_sets(program_union(right, expansion)) == InterpretationSet([{'a', 'b'}])


def test_interpretation_set():
    interpretations = InterpretationSet([('b', 'a'), {'c'}, ['a', 'b']])
    assert interpretations.sets == (('a', 'b'), ('c',))
    assert {'a', 'b'} in interpretations
    assert {'a'} not in interpretations
    assert list(interpretations) == [frozenset({'a', 'b'}), frozenset({'c'})]
    assert str(interpretations) == '{a, b}\n{c}\n'
    assert InterpretationSet([('a', 'a'), ['a']]).sets == (('a',),)
    assert ('a', 'a') in InterpretationSet([{'a'}])


def test_equivalent():
    assert equivalent(parse_lp('1: a :- not b.'), parse_lp('1: a.'))
    assert equivalent(MURDER, MURDER)
    assert not equivalent(parse_lp('1: a.'), parse_lp('1: b.'))


def test_is_model():
    program = parse_lp('1: a :- not b.')
    assert is_model(program, {'a'})
    assert is_model(program, {'b'})
    assert not is_model(program, set())


@pytest.mark.parametrize(
    'text, expected',
    [
        ('1: a :- not a, not b.\n2: b :- not a, not c.', {'c'}),
        ('1: a :- not b.\n2: b.', set()),
        ('1: a :- not b.', {'b'}),
    ],
)
def test_ungrounded_vulnerabilities(text, expected):
    assert ungrounded_vulnerabilities(parse_lp(text)) == expected


@pytest.mark.parametrize(
    'text, expected',
    [
        ('1: a :- not a, not b.\n2: b :- not a, not c.', '1: a :- not a, not b.\n2: b :- not a.'),
        ('1: a :- not b.\n2: b.', '1: a :- not b.\n2: b.'),
        ('1: a :- not b.', '1: a.'),
    ],
)
def test_strict_projection(text, expected):
    projected = strict_projection(parse_lp(text))
    assert projected == parse_lp(expected)
    assert class_of(projected).strict
    assert answer_sets(projected) == answer_sets(parse_lp(text))


def test_strict_projection_needs_atomic_program():
    with pytest.raises(ClassViolation):
        strict_projection(parse_lp('1: a :- b, not c.'))


def test_rank_by_head():
    program = parse_lp('7: c.\n2: a :- not c.\n5: b :- not a.')
    assert rank_by_head(program) == parse_lp('1: a :- not c.\n2: b :- not a.\n3: c.')
    with pytest.raises(ClassViolation):
        rank_by_head(parse_lp('1: a.\n2: a :- not b.'))


def test_program_union():
    union = program_union(MURDER, MURDER_UPDATE)
    assert union == parse_lp('''
        1: x :- not y, not a.
        2: y :- not x, not a.
        3: a.
        4: a :- not d.
        5: d.
    ''')
    assert program_union(parse_lp('1: a.'), parse_lp('7: a.')) == parse_lp('1: a.')
    assert program_union(MURDER, Program()) == MURDER
    assert program_union(Program(), MURDER_UPDATE) == MURDER_UPDATE


def subsets(atoms):
    return [frozenset(chosen) for chosen in chain.from_iterable(combinations(atoms, size) for size in range(len(atoms) + 1))]


def small_programs():
    """
    Every program of at most two rules with heads in `abc`, positive bodies over `ab` and negative bodies over `abc`.
    """
    shapes = [(head, pos, neg) for head in 'abc' for pos in subsets('ab') for neg in subsets('abc')]
    yield Program()
    for count in (1, 2):
        for rules in product(shapes, repeat=count):
            yield Program(Rule(rule_id, head, pos, neg) for rule_id, (head, pos, neg) in enumerate(rules, 1))


def test_answer_sets_match_brute_force():
    for program in small_programs():
        candidates = subsets(sorted(language(program)))
        expected = InterpretationSet(
            candidate for candidate in candidates if minimal_model(reduct(program, candidate)) == candidate
        )
        assert answer_sets(program) == expected, program


def test_reduct_models_are_made_of_heads():
    for program in small_programs():
        for candidate in subsets(sorted(language(program))):
            assert minimal_model(reduct(program, candidate)) <= program.heads, (program, candidate)


def test_answer_sets_avoid_vulnerabilities():
    for program in small_programs():
        vulnerabilities = ungrounded_vulnerabilities(program)
        for answer_set in answer_sets(program):
            assert not answer_set & vulnerabilities, (program, answer_set)


def test_answer_sets_block_atomic_loop_rules():
    for program in small_programs():
        if not program.is_atomic:
            continue
        loop_ids = loop_rules(program).ids
        for answer_set in answer_sets(program):
            assert not loop_ids & reduct(program, answer_set).ids, (program, answer_set)
    # with a positive body, a loop rule can survive: `a :- b, not a.` has answer set {} and keeps its rule
    program = parse_lp('1: a :- b, not a.')
    assert answer_sets(program) == InterpretationSet([set()])
    assert reduct(program, set()).ids == {1}
