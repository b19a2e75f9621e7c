#!/usr/bin/env python3

# standards
from abc import ABC, abstractmethod


class Builder(ABC):
    """
    `Builder` subclasses define a method for every statement that the parser encounters as it reads the input. The `Parser` takes
    a `Builder` instance and calls those callback methods as the input is parsed, passing the line number the statement started
    on (or `None` when the events don't come from text, see `feed`). It's then up to the `Builder` to assemble a value, print
    something out, or whatever else it needs.

    `kind` is one of `lp`, `af` or `caf`.
    """

    @abstractmethod
    def open_document(self, kind):
        ...

    @abstractmethod
    def rule(self, line, rule_id, head, pos, neg):
        ...

    @abstractmethod
    def argument(self, line, name):
        ...

    @abstractmethod
    def attack(self, line, source, target):
        ...

    @abstractmethod
    def claimed_argument(self, line, argument, claim):
        ...

    @abstractmethod
    def claim_attack(self, line, claim, target):
        ...

    @abstractmethod
    def close_document(self):
        ...

    @abstractmethod
    def flush(self):
        ...
