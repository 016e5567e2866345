#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: cpslicingcliexceptions.py
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
Custom exception code for cpslicingcli.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class InvalidLatticeError(ValueError):
    """The gram matrix provided is not a square symmetric integer matrix."""


class ContinuedFractionInputError(ValueError):
    """The fraction p/q does not satisfy p > q > 0 with gcd(p, q) == 1."""


class PlumbingHypothesisError(ValueError):
    """A hypothesis of the star shaped pretzel plumbing does not hold."""


class InvalidSeifertMatrixError(ValueError):
    """The matrix is not a valid Seifert matrix or a constructor got invalid parameters."""


class NotGenusOneError(ValueError):
    """A genus one only operation was called on a matrix of another genus."""


class NearSingularSampleError(ArithmeticError):
    """The hermitian matrix of a Tristram-Levine sample is too close to singular."""

    def __init__(self, omega, determinant):
        self.omega = omega
        self.determinant = determinant
        super().__init__(f'Hermitian form at omega={omega} has |det|={abs(determinant):.3e}, sample skipped.')


class NotNegativeDefiniteError(ValueError):
    """The lattice provided to the embedding search is not negative definite."""


class BudgetExceeded(Exception):  # noqa: N818
    """A search ran out of its node budget before reaching a verdict."""

    def __init__(self, nodes, budget, frontier=None, message=None):
        self.nodes = nodes
        self.budget = budget
        self.frontier = frontier
        super().__init__(message or f'Node budget of {budget} exhausted after {nodes} nodes '
                                    f'(certified frontier: {frontier}).')


class PretzelHypothesisError(ValueError):
    """The parameters do not satisfy the hypotheses of the pretzel Diophantine system."""


class PretzelParameterError(ValueError):
    """A pretzel classifier got a parameter equal to +-1 or an even parameter."""


class DimensionMismatchError(ValueError):
    """Matrices or vectors of a decomposition have incompatible shapes."""


class InternalConsistencyError(RuntimeError):
    """A mathematically guaranteed step failed, results can not be trusted."""


class KnotParseError(ValueError):
    """The knot expression could not be parsed."""

    def __init__(self, text, position, reason):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f'{reason} at position {position}: {text!r}')


class UnsupportedKnotError(ValueError):
    """The knot contains an atom that the requested construction does not support."""

    def __init__(self, atom, reason):
        self.atom = atom
        self.reason = reason
        super().__init__(f'Unsupported atom "{atom}": {reason}')
