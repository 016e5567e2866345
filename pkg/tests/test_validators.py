#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_validators.py
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
test_validators
----------------------------------
Tests for `validators` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import argparse
import os
import unittest

from cpslicingcli.library.validators import (check_args_set,
                                             default_environment_variable,
                                             environment_variable_boolean,
                                             nonnegative_integer,
                                             positive_integer,
                                             scientific_integer)

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


VARIABLE = 'CP_SLICING_TEST_M_MAX'


class TestValidators(unittest.TestCase):

    def setUp(self):
        """
        Test set up

        This is where you can setup things that you use throughout the tests. This method is called before every test.
        """
        os.environ[VARIABLE] = '3'

    def tearDown(self):
        """
        Test tear down

        This is where you should tear down what you've setup in setUp before. This method is called after every test.
        """
        os.environ.pop(VARIABLE, None)

    def _parser(self):
        parser = argparse.ArgumentParser()
        parser.add_argument('--m-max', action=default_environment_variable(VARIABLE), type=nonnegative_integer,
                            default=4)
        return parser

    def test_environment_default(self):
        self.assertEqual(self._parser().parse_args([]).m_max, 3)

    def test_command_line_wins(self):
        self.assertEqual(self._parser().parse_args(['--m-max', '1']).m_max, 1)

    def test_plain_default(self):
        os.environ.pop(VARIABLE)
        self.assertEqual(self._parser().parse_args([]).m_max, 4)

    def test_boolean(self):
        self.assertTrue(environment_variable_boolean('true'))
        self.assertTrue(environment_variable_boolean(1))
        self.assertFalse(environment_variable_boolean('no'))

    def test_scientific_integer(self):
        self.assertEqual(scientific_integer('1e8'), 10 ** 8)
        self.assertEqual(scientific_integer(' 2E5 '), 200000)
        self.assertEqual(scientific_integer('17'), 17)
        for value in ('1.5', 'ten', 'inf', '1e-1'):
            with self.assertRaises(argparse.ArgumentTypeError):
                scientific_integer(value)

    def test_signed_integers(self):
        self.assertEqual(nonnegative_integer('0'), 0)
        self.assertEqual(positive_integer('1e3'), 1000)
        with self.assertRaises(argparse.ArgumentTypeError):
            nonnegative_integer('-1')
        with self.assertRaises(argparse.ArgumentTypeError):
            positive_integer('0')

    def test_check_args_set(self):
        namespace = argparse.Namespace(knot='K(3)', side='cp2')
        self.assertTrue(check_args_set(namespace, ['knot', 'side']))
        self.assertFalse(check_args_set(namespace, ['knot', 'm']))
