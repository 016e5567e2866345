#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_seifert.py
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
test_seifert
----------------------------------
Tests for `seifert` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import cmath
import unittest

from cpslicingcli.cpslicingcliexceptions import InvalidSeifertMatrixError, NearSingularSampleError
from cpslicingcli.library.seifert import (LaurentPolynomial,
                                          SeifertMatrix,
                                          SignatureGate,
                                          alexander,
                                          bryant_signature,
                                          connected_sum,
                                          determinant_polynomial,
                                          knot_determinant,
                                          mirror,
                                          pretzel3_alexander,
                                          pretzel3_seifert,
                                          pretzel_determinant,
                                          pretzel_seifert,
                                          sample_points,
                                          signature,
                                          signature_gate,
                                          torus2_seifert,
                                          tristram_levine,
                                          twist_seifert)

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


class TestSeifertMatrix(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.twist = twist_seifert(3)
        self.trefoil = torus2_seifert(1)

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_validation(self):
        with self.assertRaises(InvalidSeifertMatrixError):
            SeifertMatrix(((1, 1), (1, 1)))
        with self.assertRaises(InvalidSeifertMatrixError):
            SeifertMatrix(((1,),))
        with self.assertRaises(InvalidSeifertMatrixError):
            twist_seifert(0)
        with self.assertRaises(InvalidSeifertMatrixError):
            pretzel_seifert([3, 5])
        with self.assertRaises(InvalidSeifertMatrixError):
            pretzel_seifert([3, 4, 5])

    def test_twist_knot(self):
        self.assertEqual(self.twist.entries, ((1, 1), (0, -3)))
        self.assertEqual(self.twist.genus, 1)
        self.assertEqual(signature(self.twist), 0)
        self.assertEqual(knot_determinant(self.twist), 13)
        self.assertEqual(alexander(self.twist).coefficients, (3, -7, 3))

    def test_figure_eight_alexander(self):
        polynomial = alexander(twist_seifert(1))
        self.assertTrue(polynomial.equivalent(LaurentPolynomial((-1, 3, -1), -1)))
        self.assertEqual(str(polynomial), '1 - 3t + t^2')

    def test_pretzel_matrix_layout(self):
        self.assertEqual(pretzel3_seifert(3, -5, 9).entries, ((2, -3), (-2, -1)))
        self.assertEqual(pretzel_seifert([3, -5, 9, -5, 3]).genus, 2)

    def test_pretzel_determinants(self):
        self.assertEqual(knot_determinant(pretzel3_seifert(3, -5, 9)), 33)
        self.assertEqual(knot_determinant(pretzel3_seifert(3, -5, 15)), 45)
        self.assertEqual(pretzel_determinant((3, -5, 15)), 45)
        self.assertEqual(pretzel_determinant((3, 3, 3, -5, -5)), knot_determinant(pretzel_seifert([3, 3, 3, -5, -5])))

    def test_pretzel_alexander_closed_form(self):
        for parameters in ((3, -5, 9), (3, 5, 7), (-3, -5, 7), (3, -7, 11)):
            self.assertTrue(pretzel3_alexander(*parameters).equivalent(alexander(pretzel3_seifert(*parameters))))

    def test_bryant_signature_agrees(self):
        for parameters in ((3, -5, 9), (3, 5, 7), (-3, -5, 7), (3, -3, 3), (5, -7, 9), (-3, -3, -3)):
            self.assertEqual(bryant_signature(parameters), signature(pretzel3_seifert(*parameters)))
        self.assertEqual(bryant_signature((3, -5, 9)), 0)
        self.assertEqual(bryant_signature((3, 5, 7)), 2)

    def test_torus_knot(self):
        self.assertEqual(signature(self.trefoil), -2)
        self.assertEqual(knot_determinant(self.trefoil), 3)
        self.assertEqual(signature(torus2_seifert(2)), -4)

    def test_mirror(self):
        self.assertEqual(mirror(self.twist).entries, ((-1, 0), (-1, 3)))
        self.assertEqual(signature(mirror(self.trefoil)), 2)
        self.assertEqual(mirror(mirror(self.twist)), self.twist)

    def test_connected_sum(self):
        total = connected_sum(self.twist, self.trefoil)
        self.assertEqual(total.genus, 2)
        self.assertEqual(signature(total), -2)
        self.assertEqual(knot_determinant(total), 39)

    def test_determinant_polynomial_general_size(self):
        total = connected_sum(self.twist, self.trefoil)
        general = determinant_polynomial(total.entries).normalized()
        product = (3, -10, 13, -10, 3)
        self.assertEqual(general.coefficients, product)


class TestLaurentPolynomial(unittest.TestCase):

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

    def test_strips_zeros(self):
        polynomial = LaurentPolynomial((0, 0, 2, 0), -1)
        self.assertEqual(polynomial.coefficients, (2,))
        self.assertEqual(polynomial.min_degree, 1)
        self.assertTrue(LaurentPolynomial(()).is_zero)

    def test_monomial(self):
        self.assertTrue(LaurentPolynomial((-1,), 4).is_monomial)
        self.assertFalse(LaurentPolynomial((2,), 0).is_monomial)

    def test_evaluate_and_symmetry(self):
        polynomial = LaurentPolynomial((3, -7, 3), -1)
        self.assertEqual(polynomial.evaluate(-1), -13)
        self.assertTrue(polynomial.is_symmetric())
        self.assertEqual(polynomial.symmetrized().min_degree, -1)

    def test_round_trip(self):
        polynomial = LaurentPolynomial((1, -3, 1), -1)
        self.assertEqual(LaurentPolynomial.from_dict(polynomial.to_dict()), polynomial)


class TestSignatureFunction(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        self.trefoil = torus2_seifert(1)

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        pass

    def test_tristram_levine_at_minus_one_is_signature(self):
        self.assertEqual(tristram_levine(self.trefoil, -1), -2)

    def test_tristram_levine_near_root(self):
        with self.assertRaises(NearSingularSampleError):
            tristram_levine(self.trefoil, cmath.exp(1j * cmath.pi / 3))

    def test_sample_points(self):
        self.assertEqual([str(point) for point in sample_points(3)], ['1/8', '1/4', '3/8'])
        with self.assertRaises(ValueError):
            sample_points(0)

    def test_trefoil_gate(self):
        gate = signature_gate(self.trefoil, 16)
        self.assertTrue(gate.cp2bar_infinite)
        self.assertFalse(gate.cp2_infinite)
        self.assertEqual(gate.cp2top_lower, 1)
        self.assertIn('InfiniteUCP2bar', gate.verdicts)

    def test_mirrored_gate(self):
        gate = signature_gate(mirror(self.trefoil), 16)
        self.assertTrue(gate.cp2_infinite)
        self.assertFalse(gate.cp2bar_infinite)
        self.assertEqual(gate.cp2bartop_lower, 1)

    def test_algebraically_slice_gate(self):
        gate = signature_gate(twist_seifert(2), 16)
        self.assertFalse(gate.cp2_infinite)
        self.assertFalse(gate.cp2bar_infinite)
        self.assertEqual(gate.cp2top_lower, 0)

    def test_gate_round_trip(self):
        gate = signature_gate(self.trefoil, 8)
        self.assertEqual(SignatureGate.from_dict(gate.to_dict()), gate)
