#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: __init__.py
#
# Copyright 2026 Costas Tyfoxylos
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
#  of this software and associated documentation files (the "Software"), to
#  deal in the Software without restriction, including without limitation the
#  rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
#  sell copies of the Software, and to permit persons to whom the Software is
#  furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
#  all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
#  IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
#  FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
#  AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
#  LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
#  FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
#  DEALINGS IN THE SOFTWARE.
#

"""
cpslicingcli library package.

Import all parts from the library here

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html
"""

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

from .datamodels import ObstructionReport, PresentationSide, SearchBudget, SideBounds
from .diophantine import pretzel_condition, three_square
from .embedder import donaldson_obstruction, min_obstructed_m
from .knotspec import (CP2,
                       CP2BAR,
                       CP2BARTOP,
                       CP2TOP,
                       Mirror,
                       neg_filling_of,
                       normalize,
                       parse,
                       render,
                       seifert_of,
                       upper_rules)
from .pipeline import compute_bounds
from .reproduction import ROWS, reproduce
from .seifert import alexander, knot_determinant, mirror, signature_gate
from .upperbound import genus_one_top_bound, thm14_search
from .validators import (check_args_set,
                         default_environment_variable,
                         environment_variable_boolean,
                         nonnegative_integer,
                         positive_integer,
                         scientific_integer)

assert ObstructionReport
assert PresentationSide
assert SearchBudget
assert SideBounds
assert pretzel_condition
assert three_square
assert donaldson_obstruction
assert min_obstructed_m
assert CP2
assert CP2BAR
assert CP2BARTOP
assert CP2TOP
assert Mirror
assert neg_filling_of
assert normalize
assert parse
assert render
assert seifert_of
assert upper_rules
assert compute_bounds
assert ROWS
assert reproduce
assert alexander
assert knot_determinant
assert mirror
assert signature_gate
assert genus_one_top_bound
assert thm14_search
assert check_args_set
assert default_environment_variable
assert environment_variable_boolean
assert nonnegative_integer
assert positive_integer
assert scientific_integer
