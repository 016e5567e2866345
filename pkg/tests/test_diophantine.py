#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_diophantine.py
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
test_diophantine
----------------------------------
Tests for `diophantine` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

from cpslicingcli.cpslicingcliexceptions import BudgetExceeded, PretzelHypothesisError, PretzelParameterError
from cpslicingcli.library.diophantine import (PretzelSystem,
                                              biprojectively_slice_3strand,
                                              four_square,
                                              is_perfect_square,
                                              legendre_three_square_possible,
                                              positively_slice_class,
                                              pretzel_condition,
                                              three_square)

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class TestSquares(unittest.TestCase):

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

    def test_perfect_square(self):
        self.assertTrue(is_perfect_square(0))
        self.assertTrue(is_perfect_square(49))
        self.assertFalse(is_perfect_square(45))
        self.assertFalse(is_perfect_square(-4))

    def test_three_square(self):
        self.assertIsNone(three_square(7))
        self.assertIsNone(three_square(28))
        self.assertEqual(three_square(6), (1, 1, 2))
        self.assertEqual(three_square(0), (0, 0, 0))
        self.assertEqual(three_square(3), (1, 1, 1))
        self.assertEqual(three_square(9, 1), (1, 2, 2))

    def test_three_square_matches_legendre(self):
        for number in range(10001):
            triple = three_square(number)
            self.assertEqual(triple is not None, legendre_three_square_possible(number))
            if triple:
                self.assertEqual(sum(value * value for value in triple), number)

    def test_four_square(self):
        self.assertEqual(four_square(0), (0, 0, 0, 0))
        self.assertEqual(four_square(7), (1, 1, 1, 2))
        for number in range(300):
            self.assertEqual(sum(value * value for value in four_square(number)), number)
        with self.assertRaises(ValueError):
            four_square(-1)


class TestPretzelCondition(unittest.TestCase):

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

    def test_not_slice(self):
        self.assertFalse(pretzel_condition([3, 9], [-5], 0).solvable)

    def test_one_change_is_not_enough(self):
        self.assertFalse(pretzel_condition([3, 9], [-7], 1).solvable)

    def test_pigeonhole(self):
        self.assertFalse(pretzel_condition([3, 3, 3], [-5, -5], 1).solvable)

    def test_solvable_witness(self):
        outcome = pretzel_condition([3, 9], [-5], 1)
        self.assertTrue(outcome.solvable)
        self.assertEqual(outcome.witness.a, ((1, 0),))
        self.assertEqual(outcome.witness.b, ((-1,),))
        self.assertTrue(outcome.witness.is_solution())
        self.assertEqual(outcome.to_dict()['verdict'], 'Solvable')

    def test_slice_pretzel(self):
        self.assertTrue(pretzel_condition([3, 3], [-3], 0).solvable)

    def test_permutation_invariance(self):
        for m in range(3):
            self.assertEqual(pretzel_condition([3, 9], [-7], m).solvable,
                             pretzel_condition([9, 3], [-7], m).solvable)
            self.assertEqual(pretzel_condition([3, 3, 5], [-5, -7], m).solvable,
                             pretzel_condition([5, 3, 3], [-7, -5], m).solvable)

    def test_hypotheses(self):
        for positives, negatives in (([5, 7], [-3]), ([3], [-5]), ([3, 4], [-5]), ([3, 9], [-1])):
            with self.assertRaises(PretzelHypothesisError):
                pretzel_condition(positives, negatives, 0)
        with self.assertRaises(PretzelHypothesisError):
            PretzelSystem((3, 9), (-5,), -1)

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            pretzel_condition([3, 3, 3], [-5, -5], 2, budget=3)

    def test_system_round_trip(self):
        witness = pretzel_condition([3, 9], [-5], 1).witness
        self.assertEqual(PretzelSystem.from_dict(witness.to_dict()), witness)


class TestSliceClasses(unittest.TestCase):

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

    def test_positively_slice(self):
        self.assertTrue(positively_slice_class(3, -5, 9).positively_slice)
        self.assertTrue(positively_slice_class(-3, -5, 7).positively_slice)
        self.assertEqual(positively_slice_class(3, 5, 7).verdict, 'NotPositivelySlice')
        self.assertFalse(positively_slice_class(5, 7, -3).positively_slice)
        self.assertFalse(positively_slice_class(7, 9, -5).positively_slice)

    def test_biprojectively_slice(self):
        self.assertTrue(biprojectively_slice_3strand(3, -5, 9))
        self.assertTrue(biprojectively_slice_3strand(3, -5, 3))
        self.assertTrue(biprojectively_slice_3strand(-3, 5, -9))
        self.assertFalse(biprojectively_slice_3strand(3, 5, 7))
        self.assertFalse(biprojectively_slice_3strand(7, 9, -5))

    def test_rejects_bad_parameters(self):
        for parameters in ((1, 3, 5), (2, 3, 5), (3, -1, 5), (3, 5, -3.0)):
            with self.assertRaises(PretzelParameterError):
                positively_slice_class(*parameters)
            with self.assertRaises(PretzelParameterError):
                biprojectively_slice_3strand(*parameters)
