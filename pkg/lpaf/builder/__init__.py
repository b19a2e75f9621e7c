#!/usr/bin/env python3

from .base import Builder
from .feed import feed
from .jsonprinter import JsonPrinter
from .textprinter import TextPrinter
from .values import ValueBuilder
