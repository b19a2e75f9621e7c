#!/usr/bin/env python3

# standards
import json

# lpaf
from .printer import CanonicalPrinter


class JsonPrinter(CanonicalPrinter):
    """
    Prints documents out as JSON, one document per line, with the same canonical ordering as `TextPrinter`.
    """

    def to_json(self):
        if self.kind == 'lp':
            return {
                'kind': 'lp',
                'rules': [
                    {'id': rule_id, 'head': head, 'pos': pos, 'neg': neg}
                    for rule_id, head, pos, neg in self.sorted_rules()
                ],
            }
        if self.kind == 'af':
            return {
                'kind': 'af',
                'args': sorted(self.args),
                'attacks': [list(attack) for attack in sorted(self.attacks)],
            }
        return {
            'kind': 'caf',
            'args': [{'arg': argument, 'claim': claim} for argument, claim in self.sorted_labels()],
            'claim_attacks': [list(claim_attack) for claim_attack in self.sorted_claim_attacks()],
        }

    def _write_document(self):
        self.output.write(json.dumps(self.to_json()))
        self.output.write('\n')
