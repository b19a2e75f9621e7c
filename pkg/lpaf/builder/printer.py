#!/usr/bin/env python3

# standards
from abc import abstractmethod

# lpaf
from .base import Builder
from ..utils import natural_key


class CanonicalPrinter(Builder):
    """
    Abstract base class for builders that print out a document. Statements are buffered until the document closes, and then
    printed in canonical order (rules by identifier, arguments and attacks sorted), so that equal values always print the same.
    """

    def __init__(self, output):
        """
        The output will be written to `output`, which should be a writable, text-mode file.
        """
        super().__init__()
        self.output = output
        self.kind = None
        self.rules = []
        self.args = set()
        self.attacks = set()
        self.labels = {}
        self.claim_attacks = set()

    def open_document(self, kind):
        self.kind = kind
        self.rules = []
        self.args = set()
        self.attacks = set()
        self.labels = {}
        self.claim_attacks = set()

    def rule(self, line, rule_id, head, pos, neg):
        self.rules.append((rule_id, head, sorted(pos), sorted(neg)))

    def argument(self, line, name):
        self.args.add(name)

    def attack(self, line, source, target):
        self.attacks.add((source, target))

    def claimed_argument(self, line, argument, claim):
        self.labels[argument] = claim

    def claim_attack(self, line, claim, target):
        self.claim_attacks.add((claim, target))

    def sorted_rules(self):
        return sorted(self.rules, key=lambda rule: (rule[0] or 0, rule[1]))

    def sorted_labels(self):
        return sorted(self.labels.items(), key=lambda item: natural_key(item[0]))

    def sorted_claim_attacks(self):
        return sorted(self.claim_attacks, key=lambda claim_attack: (claim_attack[0], natural_key(claim_attack[1])))

    def close_document(self):
        self._write_document()
        self.kind = None

    @abstractmethod
    def _write_document(self):
        ...

    def flush(self):
        self.output.flush()
