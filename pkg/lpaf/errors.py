#!/usr/bin/env python3

"""
Exceptions raised by this package. They all derive from `LpafError`, so that callers (and the command-line tool) can catch
everything we raise in one place.
"""


class LpafError(Exception):
    """
    Base class for every error raised by lpaf.
    """


class ClassViolation(LpafError):
    """
    An operation was given a program outside the class it is defined on (e.g. a non-atomic program, or one where two rules share
    a head where h-uniqueness is required).
    """


class EmptyFrameworkError(LpafError):
    """
    Argumentation frameworks need at least one argument.
    """


class FrameworkError(LpafError):
    """
    An attack or claim-attack targets something that isn't an argument of the framework, or a claim labelling isn't total.
    """


class ArgumentNameError(LpafError):
    """
    A CAF argument can't be mapped back to a rule identifier.
    """


class AlphabetError(LpafError):
    pass


class BudgetError(LpafError):
    """
    The oracle was asked to enumerate more candidate updates than we're willing to try.
    """


class GeneratorError(LpafError):
    pass


class ProgramError(LpafError):
    """
    A program was built with two rules sharing an identifier, or with an identifier that isn't a positive integer.
    """
