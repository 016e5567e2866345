#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: test_knotspec.py
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
test_knotspec
----------------------------------
Tests for `knotspec` module.

.. _Google Python Style Guide:
   http://google.github.io/styleguide/pyguide.html

"""

import unittest

from cpslicingcli.cpslicingcliexceptions import KnotParseError, UnsupportedKnotError
from cpslicingcli.library.knotspec import (CP2,
                                           CP2BAR,
                                           CP2BARTOP,
                                           CP2TOP,
                                           ConnectedSum,
                                           Mirror,
                                           Pretzel,
                                           Torus2,
                                           TwistKnot,
                                           Unknot,
                                           UpperRule,
                                           neg_filling_of,
                                           normalize,
                                           parse,
                                           render,
                                           seifert_of,
                                           summands,
                                           upper_rules)
from cpslicingcli.library.seifert import signature

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".


def _bounds(text):
    return {rule.side: rule.bound for rule in upper_rules(parse(text))}


class TestParser(unittest.TestCase):

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

    def test_connected_sum(self):
        self.assertEqual(parse('K(3)#-K(5)'), ConnectedSum((TwistKnot(3), Mirror(TwistKnot(5)))))

    def test_atoms(self):
        self.assertEqual(parse(' P( 3 , -5 , 9 ) '), Pretzel((3, -5, 9)))
        self.assertEqual(parse('T(2,5)'), Torus2(2))
        self.assertEqual(parse('U'), Unknot())

    def test_render_is_canonical(self):
        for text in ('K(3)#-K(5)', 'P(3,-5,9)', 'T(2,7)', 'U#-P(3,-5,15)'):
            self.assertEqual(render(parse(text)), text)

    def test_errors_carry_position(self):
        for text, position in (('K(0)', 0), ('K(3))', 4), ('K(3)#X', 5), ('K(3)#', 5)):
            with self.assertRaises(KnotParseError) as context:
                parse(text)
            self.assertEqual(context.exception.position, position, text)

    def test_rejected_atoms(self):
        for text in ('P(3,5)', 'P(2,3,5)', 'T(3,5)', 'T(2,4)', 'K(a)', ''):
            with self.assertRaises(KnotParseError):
                parse(text)


class TestNormalization(unittest.TestCase):

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

    def test_mirrors_move_to_atoms(self):
        self.assertEqual(normalize(Mirror(Pretzel((3, -5, 9)))), Pretzel((-3, 5, -9)))
        self.assertEqual(normalize(Mirror(Mirror(TwistKnot(3)))), TwistKnot(3))
        self.assertEqual(normalize(Mirror(ConnectedSum((TwistKnot(3), Torus2(1))))),
                         ConnectedSum((Mirror(TwistKnot(3)), Mirror(Torus2(1)))))

    def test_unknots_are_dropped(self):
        self.assertEqual(normalize(parse('U#K(3)')), TwistKnot(3))
        self.assertEqual(normalize(parse('U#U')), Unknot())
        self.assertEqual(summands(parse('U')), ())
        self.assertEqual(len(summands(parse('K(3)#U#-K(5)#T(2,3)'))), 3)

    def test_seifert_of(self):
        matrix = seifert_of(parse('K(3)#-K(5)'))
        self.assertEqual(matrix.genus, 2)
        self.assertEqual(signature(matrix), 0)
        self.assertEqual(signature(seifert_of(parse('-T(2,3)'))), 2)
        self.assertEqual(seifert_of(Unknot()).size, 0)


class TestFillings(unittest.TestCase):

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

    def test_twist_sum(self):
        lattice = neg_filling_of(parse('K(3)#K(5)'))
        self.assertEqual(lattice.diagonal, (-7, -2, -11, -2))
        self.assertEqual(lattice.labels[0], 's1_x1')
        self.assertEqual(lattice.labels[2], 's2_x1')

    def test_mirrored_twist(self):
        self.assertEqual(neg_filling_of(parse('-K(3)')).diagonal, (-2, -2, -2, -2, -2, -3))

    def test_pretzel(self):
        self.assertEqual(neg_filling_of(parse('P(3,-5,9)')).rank, 12)

    def test_unknot(self):
        self.assertEqual(neg_filling_of(Unknot()).rank, 0)

    def test_unsupported(self):
        with self.assertRaises(UnsupportedKnotError):
            neg_filling_of(parse('T(2,3)'))
        with self.assertRaises(UnsupportedKnotError) as context:
            neg_filling_of(parse('K(3)#P(3,5,7)'))
        self.assertEqual(context.exception.atom, 'P(3,5,7)')


class TestUpperRules(unittest.TestCase):

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

    def test_unknot(self):
        self.assertEqual(_bounds('U'), {CP2: 0, CP2BAR: 0, CP2TOP: 0, CP2BARTOP: 0})

    def test_twist_sums(self):
        self.assertEqual(_bounds('K(3)#K(5)'), {CP2: 4, CP2BAR: 2})
        self.assertEqual(_bounds('K(3)#K(3)#-K(4)'), {CP2: 3, CP2BAR: 2})
        self.assertEqual(_bounds('K(2)'), {CP2: 0, CP2BAR: 0})
        self.assertEqual(_bounds('K(1)#K(1)'), {CP2: 0, CP2BAR: 0})
        self.assertEqual(_bounds('K(1)'), {CP2: 1, CP2BAR: 1})

    def test_mirror_swaps_sides(self):
        self.assertEqual(_bounds('-K(3)#-K(5)'), {CP2: 2, CP2BAR: 4})
        self.assertEqual(_bounds('-T(2,3)'), {CP2BAR: 1})

    def test_three_strand_pretzels(self):
        self.assertEqual(_bounds('P(3,-5,9)'), {CP2: 1, CP2BAR: 2})
        self.assertEqual(_bounds('P(3,-7,11)'), {CP2: 2, CP2BAR: 2})
        self.assertEqual(_bounds('P(3,-5,15)'), {CP2: 1, CP2BAR: 5, CP2TOP: 1})
        self.assertEqual(_bounds('P(-3,-5,7)'), {CP2: None, CP2BAR: 1})

    def test_cp2bar_rule_shrinks_the_positive_parameter(self):
        rule = next(rule for rule in upper_rules(parse('P(3,-5,9)')) if rule.side == CP2BAR)
        self.assertEqual(rule.citation, '2 negative to positive crossing changes turn the parameter 9 into 5, '
                                        'leaving a ribbon pretzel')

    def test_pretzel_family(self):
        for p, q in ((3, 1), (3, 2), (5, 3)):
            self.assertEqual(_bounds(f'P({p},{-p - 2 * q},{p + 2 * q + 2})')[CP2], q)
            self.assertEqual(_bounds(f'P({p},{-p - 2 * q},{p + 2 * q + 2})')[CP2BAR], 1)

    def test_alternating_pretzel(self):
        self.assertEqual(_bounds('P(3,-5,3,-5,3)'), {CP2: 2})
        self.assertEqual(_bounds('P(3,-5,3,-7,3)'), {})

    def test_torus_knot(self):
        self.assertEqual(_bounds('T(2,7)'), {CP2: 3})

    def test_sums_add_up(self):
        self.assertEqual(_bounds('K(3)#P(3,-5,9)'), {CP2: 2, CP2BAR: 3})
        self.assertEqual(_bounds('K(3)#T(2,3)'), {CP2: 2})
        self.assertEqual(_bounds('K(3)#P(-3,-5,7)'), {CP2: None, CP2BAR: 2})

    def test_rule_helpers(self):
        rule = UpperRule(CP2, 2, 'two changes')
        self.assertTrue(rule.counted)
        self.assertEqual(rule.mirrored().side, CP2BAR)
        self.assertFalse(UpperRule(CP2, None, 'finite').counted)
        self.assertEqual(rule.to_dict(), {'side': CP2, 'bound': 2, 'citation': 'two changes'})
