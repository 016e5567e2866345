#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_datamodels.py
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
test_datamodels
----------------------------------
Tests for `datamodels` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import json
import unittest

from cpslicingcli.cpslicingcliexceptions import InternalConsistencyError
from cpslicingcli.library.datamodels import (INFINITY,
                                             ObstructionReport,
                                             PresentationSide,
                                             SearchBudget,
                                             SideBounds)
from cpslicingcli.library.knotspec import CP2, CP2BAR, CP2BARTOP, CP2TOP

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class TestSideBounds(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.bounds = SideBounds(CP2)

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_starts_unknown(self):
        self.assertEqual(self.bounds.status, 'unknown')
        self.assertFalse(self.bounds.infinite)

    def test_bounds_only_tighten(self):
        self.bounds.raise_lower(2, 'obstructed at m=1')
        self.bounds.raise_lower(1, 'weaker')
        self.bounds.lower_upper(4, 'four changes')
        self.bounds.lower_upper(5, 'weaker')
        self.assertEqual((self.bounds.lower, self.bounds.upper), (2, 4))
        self.assertEqual(self.bounds.status, 'range')
        self.assertEqual(len(self.bounds.evidence), 2)
        self.bounds.lower_upper(2, 'two changes')
        self.assertEqual(self.bounds.status, 'exact')
        self.assertTrue(self.bounds.finite)

    def test_infinite(self):
        self.bounds.mark_infinite('positive signature sample')
        self.bounds.mark_infinite('again')
        self.assertEqual(self.bounds.status, 'infinite')
        self.assertEqual(self.bounds.to_dict()['lower'], INFINITY)
        self.assertEqual(len(self.bounds.evidence), 1)

    def test_contradictions_are_caught(self):
        self.bounds.mark_finite('crossing changes')
        self.bounds.mark_infinite('signature')
        with self.assertRaises(InternalConsistencyError):
            self.bounds.check()
        inverted = SideBounds(CP2BAR, 3, 1, True)
        with self.assertRaises(InternalConsistencyError):
            inverted.check()

    def test_round_trip(self):
        self.bounds.mark_infinite('signature')
        self.assertEqual(SideBounds.from_dict(self.bounds.to_dict()), self.bounds)


class TestObstructionReport(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.report = ObstructionReport('T(2,3)', 'T(2,3)', budget=SearchBudget(m_max=2))
        self.report.invariants = {'signature': -2, 'determinant': 3}
        self.report.sides[CP2].lower_upper(1, 'one change')
        self.report.sides[CP2].raise_lower(1, 'determinant')
        self.report.sides[CP2BAR].mark_infinite('signature')
        self.report.notes.append('a note')

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_has_all_sides(self):
        self.assertEqual(set(self.report.sides), {CP2, CP2BAR, CP2TOP, CP2BARTOP})
        self.assertIs(self.report.side(CP2), self.report.sides[CP2])

    def test_json_round_trip(self):
        text = self.report.to_json()
        self.assertEqual(json.loads(text)['sides'][CP2BAR]['lower'], INFINITY)
        self.assertEqual(ObstructionReport.from_json(text), self.report)

    def test_mirrored_sides(self):
        mirrored = self.report.mirrored_sides()
        self.assertTrue(mirrored[CP2].infinite)
        self.assertEqual(mirrored[CP2BAR].upper, 1)
        self.assertEqual(mirrored[CP2BAR].side, CP2BAR)

    def test_check(self):
        self.report.check()
        self.report.sides[CP2TOP].raise_lower(3, 'made up')
        self.report.sides[CP2TOP].lower_upper(1, 'made up')
        with self.assertRaises(InternalConsistencyError):
            self.report.check()

    def test_budget_round_trip(self):
        budget = SearchBudget(m_max=1, node_budget=10)
        self.assertEqual(SearchBudget.from_dict(budget.to_dict()), budget)


class TestPresentationSide(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        pass

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_upper_text(self):
        self.assertEqual(PresentationSide(SideBounds(CP2)).upper_text, '?')
        self.assertEqual(PresentationSide(SideBounds(CP2, finite=True)).upper_text, 'finite')
        self.assertEqual(PresentationSide(SideBounds(CP2, 1, 2, True)).upper_text, '2')
        self.assertEqual(PresentationSide(SideBounds(CP2, float('inf'))).upper_text, INFINITY)

    def test_presentation_row(self):
        row = PresentationSide(SideBounds(CP2TOP, 1, 2, True, ['lower 1: a', 'upper 2: b'])).presentation_row
        self.assertEqual(len(row), 5)
        self.assertEqual(row[1], '1')
        self.assertIn('CP2 top', str(row[0]))
        self.assertIn('range', str(row[3]))
        self.assertEqual(row[4], 'lower 1: a\nupper 2: b')
