#!/usr/bin/env python3

# standards
from itertools import combinations, product

# 3rd parties
import pytest

# lpaf
from lpaf import (
    ArgFramework,
    EmptyFrameworkError,
    FrameworkError,
    InterpretationSet,
    af_strongly_equivalent,
    attackers,
    is_conflict_free,
    parse_af,
    range_of,
    restrict,
    stable_extensions,
    stable_kernel,
    union,
)
from lpaf.verdict import AttackDiff


MURDER = parse_af('''
    arg(x). arg(y). arg(a).
    att(x,y). att(y,x). att(a,x). att(a,y).
''')

MURDER_UPDATE = parse_af('''
    arg(a). arg(d).
    att(d,a).
''')

SELF_ATTACK = ArgFramework({'a', 'b', 'c'}, {('a', 'a'), ('a', 'b'), ('b', 'a'), ('b', 'c')})

# the frameworks of {a :- not b, not c. b :- not a, not c. c.} and {a :- not c. b :- not a, not c. c.}
LEFT = ArgFramework({'a', 'b', 'c'}, {('b', 'a'), ('c', 'a'), ('a', 'b'), ('c', 'b')})
RIGHT = ArgFramework({'a', 'b', 'c'}, {('c', 'a'), ('a', 'b'), ('c', 'b')})


def test_needs_an_argument():
    with pytest.raises(EmptyFrameworkError):
        ArgFramework(set())


def test_attack_targets_must_be_arguments():
    with pytest.raises(FrameworkError):
        ArgFramework({'a'}, {('a', 'b')})


def test_ungrounded_attacks():
    framework = ArgFramework({'a', 'b'}, {('a', 'b'), ('c', 'b')})
    assert framework.proper_attacks == {('a', 'b')}
    assert framework.ungrounded_attacks == {('c', 'b')}
    assert not framework.is_strict
    assert attackers(framework, 'b') == {'a', 'c'}
    assert attackers(framework, 'a') == set()


@pytest.mark.parametrize(
    'framework, expected',
    [
        (ArgFramework({'a', 'b'}, {('a', 'b'), ('c', 'b')}), ArgFramework({'a', 'b'}, {('a', 'b')})),
        (SELF_ATTACK, SELF_ATTACK),
        (ArgFramework({'a'}, {('b', 'a')}), ArgFramework({'a'})),
    ],
)
def test_restrict(framework, expected):
    assert restrict(framework) == expected
    assert restrict(framework).is_strict


def test_is_conflict_free():
    assert is_conflict_free(SELF_ATTACK, {'b'})
    assert is_conflict_free(SELF_ATTACK, set())
    assert not is_conflict_free(SELF_ATTACK, {'a'})
    assert not is_conflict_free(SELF_ATTACK, {'b', 'c'})
    # ungrounded attacks can't cause conflicts
    assert is_conflict_free(ArgFramework({'a'}, {('c', 'a')}), {'a'})


def test_is_conflict_free_outside_arguments():
    with pytest.raises(FrameworkError):
        is_conflict_free(SELF_ATTACK, {'z'})


def test_range_of():
    assert range_of(SELF_ATTACK, {'b'}) == {'a', 'b', 'c'}
    assert range_of(SELF_ATTACK, set()) == set()
    assert range_of(ArgFramework({'a'}, {('c', 'a')}), set()) == set()


@pytest.mark.parametrize(
    'framework, expected',
    [
        (union(MURDER, MURDER_UPDATE), [{'d', 'x'}, {'d', 'y'}]),
        (MURDER, [{'a'}]),
        (SELF_ATTACK, [{'b'}]),
        (ArgFramework({'a'}, {('a', 'a')}), []),
        (ArgFramework({'a'}, {('b', 'a')}), [{'a'}]),
        (ArgFramework({'a', 'b'}, {('a', 'b'), ('b', 'a')}), [{'a'}, {'b'}]),
    ],
)
def test_stable_extensions(framework, expected):
    assert stable_extensions(framework) == InterpretationSet(expected)


def test_union():
    combined = union(MURDER, MURDER_UPDATE)
    assert combined.args == {'x', 'y', 'a', 'd'}
    assert combined.attacks == {('x', 'y'), ('y', 'x'), ('a', 'x'), ('a', 'y'), ('d', 'a')}
    assert union(MURDER, MURDER) == MURDER


def test_union_grounds_attacks():
    combined = union(ArgFramework({'a'}, {('c', 'a')}), ArgFramework({'c'}))
    assert combined == ArgFramework({'a', 'c'}, {('c', 'a')})
    assert combined.is_strict


def test_stable_kernel():
    assert stable_kernel(SELF_ATTACK) == ArgFramework({'a', 'b', 'c'}, {('a', 'a'), ('b', 'a'), ('b', 'c')})
    assert stable_kernel(MURDER) == MURDER
    # no self-attacking argument, so both are their own kernels
    assert stable_kernel(LEFT) == LEFT
    assert stable_kernel(RIGHT) == RIGHT


def test_af_strongly_equivalent():
    verdict = af_strongly_equivalent(LEFT, RIGHT)
    assert not verdict
    assert verdict.witness == AttackDiff(left_only_attacks=(('b', 'a'),))
    assert verdict.witness.attacks == (('b', 'a'),)


def test_af_strongly_equivalent_modulo_kernel():
    assert af_strongly_equivalent(SELF_ATTACK, SELF_ATTACK)
    assert af_strongly_equivalent(
        ArgFramework({'a', 'b'}, {('a', 'a'), ('a', 'b')}),
        ArgFramework({'a', 'b'}, {('a', 'a')}),
    )


def test_af_strongly_equivalent_different_arguments():
    verdict = af_strongly_equivalent(ArgFramework({'a'}), ArgFramework({'a', 'b'}))
    assert verdict.witness == AttackDiff(right_only_args=('b',))


def strict_frameworks(universe, max_attacks=None):
    """
    Every framework whose arguments are a non-empty subset of `universe` and whose attacks are all proper, optionally with at
    most `max_attacks` attacks.
    """
    for size in range(1, len(universe) + 1):
        for args in combinations(universe, size):
            possible = list(product(args, repeat=2))
            most = len(possible) if max_attacks is None else min(max_attacks, len(possible))
            for count in range(most + 1):
                for attacks in combinations(possible, count):
                    yield ArgFramework(args, attacks)


def test_strict_framework_family():
    assert len(list(strict_frameworks('ab'))) == 20
    assert len(list(strict_frameworks('abz'))) == 566


def test_strong_equivalence_matches_expansions():
    # the expansions range over the arguments of both sides plus a fresh `z`
    frameworks = list(strict_frameworks('ab'))
    expansions = list(strict_frameworks('abz'))
    extensions = {
        (framework, expansion): stable_extensions(union(framework, expansion))
        for framework in frameworks
        for expansion in expansions
    }
    for left, right in combinations(frameworks, 2):
        universe = left.args | right.args | {'z'}
        agree = all(
            extensions[left, expansion] == extensions[right, expansion]
            for expansion in expansions
            if expansion.args <= universe
        )
        assert af_strongly_equivalent(left, right).equivalent == agree, (left, right)


def test_kernel_survives_expansions():
    expansions = list(strict_frameworks('abcz', max_attacks=1))
    for framework in strict_frameworks('abc'):
        kernel = stable_kernel(framework)
        if len(framework.args) < 3 or kernel == framework:
            continue
        assert af_strongly_equivalent(framework, kernel), framework
        for expansion in expansions:
            expanded, expanded_kernel = union(framework, expansion), union(kernel, expansion)
            assert stable_extensions(expanded) == stable_extensions(expanded_kernel), (framework, expansion)


def test_union_is_associative_and_commutative():
    frameworks = list(strict_frameworks('ab'))
    for first, second in product(frameworks, repeat=2):
        assert union(first, second) == union(second, first)
        for third in frameworks:
            assert union(union(first, second), third) == union(first, union(second, third))
