#!/usr/bin/env python3

"""
Defines the command-line interface for lpaf. This is what gets run when `lpaf` is invoked on the command line.

Exit status is 0 on success (and, for `se` and `oracle`, when the inputs are equivalent), 1 when `se` or `oracle` find the
inputs not equivalent, or `kernel --sanity` finds a law broken, and 2 on bad input.
"""

# standards
import argparse
import json
import logging
import sys

# lpaf
from .af import ArgFramework, af_strongly_equivalent, restrict, stable_extensions, stable_kernel
from .builder import JsonPrinter, TextPrinter, feed
from .caf import ClaimFramework, caf_strongly_equivalent, stable_claim_extensions
from .equivalence import (
    OracleBudget,
    apply_update,
    kernel_sanity,
    lp_kernel,
    oracle_se,
    rr_se_atomic,
    rr_se_hunique,
    standard_se,
)
from .errors import ClassViolation, LpafError
from .generate import KINDS, RandomSpec, generate
from .lp import Program, answer_sets, strict_projection
from .lpaf import loads
from .report import (
    format_interpretations,
    format_kernel_report,
    format_verdict,
    interpretations_to_json,
    kernel_report_to_json,
    verdict_to_json,
)
from .translate import af_to_caf, af_to_lp, caf_to_af, caf_to_lp, lp_to_af, lp_to_caf


logger = logging.getLogger(__name__)


CLASS_FLAGS = ('atomic', 'strict', 'h-unique')

KIND_NAMES = {
    Program: 'lp',
    ArgFramework: 'af',
    ClaimFramework: 'caf',
}

TRANSLATIONS = {
    ('lp', 'af'): lp_to_af,
    ('lp', 'caf'): lp_to_caf,
    ('af', 'lp'): af_to_lp,
    ('af', 'caf'): af_to_caf,
    ('caf', 'lp'): caf_to_lp,
    ('caf', 'af'): caf_to_af,
}

SE_MODES = ('standard', 'rr-head', 'rr-id', 'af', 'caf')


def class_flags(text):
    flags = {flag.strip() for flag in text.split(',') if flag.strip()}
    unknown = flags - set(CLASS_FLAGS)
    if unknown:
        raise argparse.ArgumentTypeError(f'unknown class {", ".join(sorted(unknown))}, expected some of {", ".join(CLASS_FLAGS)}')
    return flags


def parse_command_line(argv):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '-j',
        '--json',
        action='store_true',
        help='Print results as JSON',
    )
    common.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        help='Log progress to stderr (repeat for more detail)',
    )

    parser = argparse.ArgumentParser(
        prog='lpaf',
        description='Logic programs, argumentation frameworks and claim-augmented frameworks: semantics, translations, '
                    'updates and strong equivalence',
    )
    commands = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)

    solve = commands.add_parser(
        'solve',
        parents=[common],
        help='Print the answer sets of a program, or the stable (claim-)extensions of an AF or CAF',
    )
    solve.add_argument('file', help='Input file, or - for stdin')

    translate = commands.add_parser('translate', parents=[common], help='Translate between the three formats')
    translate.add_argument('file', help='Input file, or - for stdin')
    translate.add_argument('--from', dest='source_kind', choices=KINDS, help='Input format (default: detected)')
    translate.add_argument('--to', dest='target_kind', choices=KINDS, required=True, help='Output format')
    translate.add_argument(
        '--project',
        action='store_true',
        help='Drop ungrounded vulnerabilities (programs) or ungrounded attacks (AFs) before translating',
    )

    kernel = commands.add_parser(
        'kernel',
        parents=[common],
        help='Print the kernel of an h-unique atomic program, or the stable kernel of an AF',
    )
    kernel.add_argument('file', help='Input file, or - for stdin')
    kernel.add_argument('--sanity', action='store_true', help='Check the kernel laws on the program instead')
    kernel.add_argument('--samples', type=int, default=20, metavar='N', help='Random partners tried by --sanity (default: 20)')
    kernel.add_argument('--seed', type=int, default=0, metavar='N', help='Seed for --sanity (default: 0)')

    update = commands.add_parser('update', parents=[common], help='Update a program with another')
    update.add_argument('--base', required=True, metavar='FILE', help='The program to update')
    update.add_argument('--delta', required=True, metavar='FILE', help='The update')
    update.add_argument(
        '--mode',
        choices=('union', 'head', 'id'),
        default='union',
        help='Plain union, refinement by head, or refinement by identifier (default: union)',
    )

    se = commands.add_parser('se', parents=[common], help='Decide strong equivalence')
    se.add_argument('--mode', choices=SE_MODES, default='standard', help='Which notion of strong equivalence (default: standard)')
    se.add_argument('left', metavar='FILE1')
    se.add_argument('right', metavar='FILE2')

    oracle = commands.add_parser('oracle', parents=[common], help='Look for a distinguishing update by brute force')
    oracle.add_argument('--mode', choices=('union', 'head', 'id'), default='union', help='Update operator (default: union)')
    defaults = OracleBudget()
    oracle.add_argument('--fresh-atoms', type=int, default=defaults.fresh_atoms, metavar='K')
    oracle.add_argument('--max-rules', type=int, default=defaults.max_rules, metavar='M')
    oracle.add_argument('--max-body', type=int, default=defaults.max_body, metavar='B')
    oracle.add_argument('--fresh-ids', type=int, default=defaults.fresh_ids, metavar='I')
    oracle.add_argument('left', metavar='FILE1')
    oracle.add_argument('right', metavar='FILE2')

    gen = commands.add_parser('gen', parents=[common], help='Generate a random instance')
    gen.add_argument('--kind', choices=KINDS, default='lp')
    gen.add_argument('--seed', type=int, default=0, metavar='N')
    gen.add_argument('--size', type=int, default=3, metavar='K', help='Number of atoms, or of arguments (default: 3)')
    gen.add_argument('--rules', type=int, metavar='N', help='Number of rules (default: same as --size)')
    gen.add_argument('--density', type=float, default=0.3, help='Probability of each body literal or attack (default: 0.3)')
    gen.add_argument('--ungrounded', type=int, default=0, metavar='N', help='Extra attack sources outside an AF (default: 0)')
    gen.add_argument(
        '--class',
        dest='class_flags',
        type=class_flags,
        default={'atomic'},
        metavar='FLAGS',
        help=f'Comma-separated classes to enforce, among {", ".join(CLASS_FLAGS)} (default: atomic)',
    )

    return parser.parse_args(argv[1:])


def read_text(path):
    if path == '-':
        return sys.stdin.read()
    with open(path, 'rt', encoding='UTF-8') as file_in:
        return file_in.read()


def kind_of(value):
    return KIND_NAMES[type(value)]


def expect(value, kinds, what):
    if kind_of(value) not in kinds:
        raise ClassViolation(f'{what} needs {" or ".join(kinds)} input, got {kind_of(value)}')
    return value


def print_value(value, options):
    printer_class = JsonPrinter if options.json else TextPrinter
    printer = printer_class(sys.stdout)
    feed(value, printer)
    printer.flush()


def print_json(data):
    print(json.dumps(data))


def run_solve(options, value):
    if isinstance(value, Program):
        interpretations = answer_sets(value)
    elif isinstance(value, ArgFramework):
        interpretations = stable_extensions(value)
    else:
        interpretations = stable_claim_extensions(value)
    if options.json:
        print_json(interpretations_to_json(interpretations))
    else:
        sys.stdout.write(format_interpretations(interpretations))
    return 0


def run_translate(options, value):
    source_kind = kind_of(value)
    if options.project:
        if source_kind == 'lp':
            value = strict_projection(value)
        elif source_kind == 'af':
            value = restrict(value)
        else:
            raise ClassViolation('--project applies to programs and AFs only')
    if source_kind != options.target_kind:
        value = TRANSLATIONS[source_kind, options.target_kind](value)
    print_value(value, options)
    return 0


def run_kernel(options, value):
    expect(value, ('lp', 'af'), 'kernel')
    if options.sanity:
        report = kernel_sanity(expect(value, ('lp',), 'kernel --sanity'), samples=options.samples, seed=options.seed)
        if options.json:
            print_json(kernel_report_to_json(report))
        else:
            sys.stdout.write(format_kernel_report(report))
        return 0 if report.passed else 1
    print_value(lp_kernel(value) if isinstance(value, Program) else stable_kernel(value), options)
    return 0


def run_update(options, base, delta):
    expect(base, ('lp',), 'update')
    expect(delta, ('lp',), 'update')
    print_value(apply_update(base, delta, options.mode), options)
    return 0


def run_se(options, left, right):
    if options.mode == 'af':
        left, right = (
            lp_to_af(side) if isinstance(side, Program) else expect(side, ('af',), 'se --mode af')
            for side in (left, right)
        )
        verdict = af_strongly_equivalent(left, right)
    elif options.mode == 'caf':
        left, right = (
            lp_to_caf(side) if isinstance(side, Program) else expect(side, ('caf',), 'se --mode caf')
            for side in (left, right)
        )
        verdict = caf_strongly_equivalent(left, right)
    else:
        for side in (left, right):
            expect(side, ('lp',), f'se --mode {options.mode}')
        decider = {
            'standard': standard_se,
            'rr-head': rr_se_hunique,
            'rr-id': rr_se_atomic,
        }[options.mode]
        verdict = decider(left, right)
    return print_verdict(options, verdict)


def run_oracle(options, left, right):
    for side in (left, right):
        expect(side, ('lp',), 'oracle')
    budget = OracleBudget(
        fresh_atoms=options.fresh_atoms,
        max_rules=options.max_rules,
        max_body=options.max_body,
        fresh_ids=options.fresh_ids,
    )
    return print_verdict(options, oracle_se(left, right, options.mode, budget))


def print_verdict(options, verdict):
    if options.json:
        print_json(verdict_to_json(verdict))
    else:
        sys.stdout.write(format_verdict(verdict))
    return 0 if verdict.equivalent else 1


def run_gen(options):
    spec = RandomSpec(
        kind=options.kind,
        size=options.size,
        density=options.density,
        rules=options.rules,
        atomic='atomic' in options.class_flags,
        strict='strict' in options.class_flags,
        h_unique='h-unique' in options.class_flags,
        ungrounded=options.ungrounded,
        seed=options.seed,
    )
    print_value(generate(spec), options)
    return 0


def run(options):
    if options.command == 'gen':
        return run_gen(options)
    if options.command in ('se', 'oracle'):
        left, right = (loads(read_text(path)) for path in (options.left, options.right))
        logger.info('read %s and %s', kind_of(left), kind_of(right))
        return {'se': run_se, 'oracle': run_oracle}[options.command](options, left, right)
    if options.command == 'update':
        base, delta = (loads(read_text(path), 'lp') for path in (options.base, options.delta))
        return run_update(options, base, delta)
    text = read_text(options.file)
    value = loads(text, getattr(options, 'source_kind', None))
    logger.info('read %s (%d lines)', kind_of(value), len(text.splitlines()))
    return {
        'solve': run_solve,
        'translate': run_translate,
        'kernel': run_kernel,
    }[options.command](options, value)


def main():
    options = parse_command_line(sys.argv)
    logging.basicConfig(
        format='[%(levelname)s] %(name)s: %(message)s',
        level=(logging.WARNING, logging.INFO, logging.DEBUG)[min(options.verbose, 2)],
    )
    try:
        status = run(options)
    except BrokenPipeError:
        status = 0
    except (LpafError, OSError) as error:
        print(f'{type(error).__name__}: {error}', file=sys.stderr)
        status = 2
    sys.exit(status)


if __name__ == '__main__':
    main()
