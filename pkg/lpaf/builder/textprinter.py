#!/usr/bin/env python3

# lpaf
from .printer import CanonicalPrinter
from ..lp import format_rule_parts


class TextPrinter(CanonicalPrinter):
    """
    Prints documents back out in the same text format that the parser reads, one statement per line.
    """

    def _write_document(self):
        lines = []
        if self.kind == 'lp':
            lines.extend(format_rule_parts(*rule) for rule in self.sorted_rules())
        elif self.kind == 'af':
            lines.extend(f'arg({arg}).' for arg in sorted(self.args))
            lines.extend(f'att({source},{target}).' for source, target in sorted(self.attacks))
        else:
            lines.extend(f'carg({argument},{claim}).' for argument, claim in self.sorted_labels())
            lines.extend(f'catt({claim},{target}).' for claim, target in self.sorted_claim_attacks())
        self.output.write(''.join(f'{line}\n' for line in lines))
