#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: seifert.py
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
Main code for seifert.

Seifert matrices of the supported knot families and the classical invariants
read off from them: signature, Alexander polynomial, determinant and the
sampled Tristram-Levine signature function.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import cmath
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, prod
from typing import List, Tuple

import numpy as np
from sympy import Matrix, Poly, Symbol

from cpslicingcli.cpslicingcliexceptions import InvalidSeifertMatrixError, NearSingularSampleError
from .lattice import form_signature

__author__ = '''Costas Tyfoxylos <ctyfoxylos@schubergphilis.com>'''
__docformat__ = '''google'''
__date__ = '''19-10-2026'''
__copyright__ = '''Copyright 2026, Costas Tyfoxylos'''
__credits__ = ["Costas Tyfoxylos"]
__license__ = '''MIT'''
__maintainer__ = '''Costas Tyfoxylos'''
__email__ = '''<ctyfoxylos@schubergphilis.com>'''
__status__ = '''Development'''  # "Prototype", "Development", "Production".

# This is the main prefix used for logging
LOGGER_BASENAME = '''seifert'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

T = Symbol('t')
NEAR_SINGULAR_GUARD = 1e-9
DEFAULT_SAMPLES = 64


def _transpose(rows):
    return tuple(zip(*rows)) if rows else ()


@dataclass(frozen=True)
class SeifertMatrix:
    """An even rank integer matrix A with det(A - A^T) == 1."""

    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        try:
            entries = tuple(tuple(int(value) for value in row) for row in self.entries)
        except (TypeError, ValueError):
            raise InvalidSeifertMatrixError(f'Seifert matrix {self.entries} does not consist of integers.') from None
        if any(len(row) != len(entries) for row in entries):
            raise InvalidSeifertMatrixError(f'Seifert matrix {entries} is not square.')
        if len(entries) % 2:
            raise InvalidSeifertMatrixError(f'Seifert matrix of odd size {len(entries)}.')
        if entries:
            skew = Matrix(entries) - Matrix(entries).T
            if skew.det(method='bareiss') != 1:
                raise InvalidSeifertMatrixError(f'Seifert matrix {entries} has det(A - A^T) != 1.')
        object.__setattr__(self, 'entries', entries)

    @property
    def genus(self):
        return len(self.entries) // 2

    @property
    def size(self):
        return len(self.entries)

    @property
    def transpose(self):
        return _transpose(self.entries)

    @property
    def symmetrized(self):
        """The symmetric matrix A + A^T."""
        return tuple(tuple(self.entries[i][j] + self.entries[j][i] for j in range(self.size))
                     for i in range(self.size))

    def to_dict(self):
        return {'genus': self.genus, 'entries': [list(row) for row in self.entries]}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(tuple(row) for row in data['entries']))


@dataclass(frozen=True)
class LaurentPolynomial:
    """An integer Laurent polynomial sum(c_i t^(min_degree + i)), zero is the empty coefficient tuple."""

    coefficients: Tuple[int, ...] = ()
    min_degree: int = 0

    def __post_init__(self):
        coefficients = [int(value) for value in self.coefficients]
        min_degree = self.min_degree
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
            min_degree += 1
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))
        object.__setattr__(self, 'min_degree', min_degree if coefficients else 0)

    @property
    def is_zero(self):
        return not self.coefficients

    @property
    def max_degree(self):
        return self.min_degree + len(self.coefficients) - 1

    @property
    def is_monomial(self):
        """True for +-t^k."""
        return len(self.coefficients) == 1 and abs(self.coefficients[0]) == 1

    def normalized(self):
        """Shifted to min_degree 0 with a positive lowest coefficient."""
        if self.is_zero:
            return self
        sign = 1 if self.coefficients[0] > 0 else -1
        return LaurentPolynomial(tuple(sign * value for value in self.coefficients), 0)

    def symmetrized(self):
        """Shifted so that the exponents are centered around zero when the span is even."""
        normalized = self.normalized()
        return LaurentPolynomial(normalized.coefficients, -((len(normalized.coefficients) - 1) // 2))

    def evaluate(self, value):
        """Exact evaluation at an integer or rational point."""
        value = Fraction(value)
        return sum(coefficient * value ** (self.min_degree + index)
                   for index, coefficient in enumerate(self.coefficients))

    def equivalent(self, other):
        """Equality up to multiplication by +-t^k."""
        return self.normalized().coefficients == other.normalized().coefficients

    def is_symmetric(self):
        return self.normalized().coefficients == tuple(reversed(self.normalized().coefficients))

    def to_dict(self):
        return {'min_degree': self.min_degree, 'coeffs': list(self.coefficients)}

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data['coeffs']), data['min_degree'])

    def __str__(self):
        if self.is_zero:
            return '0'
        terms = []
        for index, coefficient in enumerate(self.coefficients):
            if not coefficient:
                continue
            degree = self.min_degree + index
            power = '' if degree == 0 else ('t' if degree == 1 else f't^{degree}')
            magnitude = abs(coefficient)
            body = f'{magnitude}{power}' if magnitude != 1 or not power else power
            terms.append(('-' if coefficient < 0 else '+', body))
        text = ' '.join(f'{sign} {body}' for sign, body in terms)
        return text[2:] if text.startswith('+ ') else f'-{text[2:]}'


def twist_seifert(twists):
    """The Seifert matrix [[1, 1], [0, -a]] of the twist knot K_a."""
    if not isinstance(twists, int) or twists < 1:
        raise InvalidSeifertMatrixError(f'Twist knots need a >= 1, got {twists!r}.')
    return SeifertMatrix(((1, 1), (0, -twists)))


def pretzel_seifert(parameters):
    """The Seifert matrix of the odd pretzel knot P(q_1, ..., q_n) for odd n >= 3.

    The surface is built from two disks joined by n twisted bands. The loop y_i runs through bands i and i + 1,
    the basis lists the loops in reverse band order so that the 3 strand case is [[(b+c)/2, (b-1)/2],
    [(b+1)/2, (a+b)/2]].

    Args:
        parameters: The odd twist parameters.

    Returns:
        A SeifertMatrix of genus (n - 1) / 2.

    """
    parameters = list(parameters)
    if len(parameters) < 3 or len(parameters) % 2 == 0:
        raise InvalidSeifertMatrixError(f'Pretzel knots need an odd number >= 3 of strands, got {parameters}.')
    if any(not isinstance(value, int) or value % 2 == 0 for value in parameters):
        raise InvalidSeifertMatrixError(f'Pretzel parameters must be odd integers, got {parameters}.')
    loops = len(parameters) - 1
    loop_matrix = [[0] * loops for _ in range(loops)]
    for index in range(loops):
        loop_matrix[index][index] = (parameters[index] + parameters[index + 1]) // 2
        if index + 1 < loops:
            shared = parameters[index + 1]
            loop_matrix[index + 1][index] = (shared - 1) // 2
            loop_matrix[index][index + 1] = (shared + 1) // 2
    order = list(reversed(range(loops)))
    return SeifertMatrix(tuple(tuple(loop_matrix[i][j] for j in order) for i in order))


def pretzel3_seifert(first, second, third):
    """The genus one Seifert matrix of P(a, b, c)."""
    return pretzel_seifert([first, second, third])


def torus2_seifert(half_twists_pairs):
    """The Seifert matrix of the right handed torus knot T(2, 2m + 1)."""
    if not isinstance(half_twists_pairs, int) or half_twists_pairs < 1:
        raise InvalidSeifertMatrixError(f'Torus knots T(2, 2m + 1) need m >= 1, got {half_twists_pairs!r}.')
    size = 2 * half_twists_pairs
    return SeifertMatrix(tuple(tuple(-1 if i == j else (1 if j == i + 1 else 0) for j in range(size))
                               for i in range(size)))


def connected_sum(first, second):
    """Block sum of two Seifert matrices."""
    size = first.size + second.size
    rows = [[0] * size for _ in range(size)]
    for offset, matrix in ((0, first), (first.size, second)):
        for i, row in enumerate(matrix.entries):
            for j, value in enumerate(row):
                rows[offset + i][offset + j] = value
    return SeifertMatrix(tuple(tuple(row) for row in rows))


def mirror(matrix):
    """The Seifert matrix -A^T of the mirror image."""
    return SeifertMatrix(tuple(tuple(-value for value in row) for row in matrix.transpose))


def signature(matrix):
    """The exact signature of A + A^T."""
    return form_signature(matrix.symmetrized)


def determinant_polynomial(rows):
    """The raw polynomial det(tB - B^T) of any square integer matrix B, not normalized.

    Args:
        rows: The square matrix B.

    Returns:
        A LaurentPolynomial with min_degree equal to the lowest power of t present.

    """
    rows = tuple(tuple(row) for row in rows)
    if not rows:
        return LaurentPolynomial((1,), 0)
    if len(rows) == 2:
        (b00, b01), (b10, b11) = rows
        outer = b00 * b11 - b01 * b10
        return LaurentPolynomial((outer, b01 * b01 + b10 * b10 - 2 * b00 * b11, outer), 0)
    matrix = Matrix(rows)
    expression = (T * matrix - matrix.T).det(method='berkowitz')
    coefficients = Poly(expression, T).all_coeffs() if expression != 0 else []
    return LaurentPolynomial(tuple(int(value) for value in reversed(coefficients)), 0)


def alexander(matrix):
    """The Alexander polynomial det(tA - A^T), normalized to min_degree 0 with positive lowest coefficient."""
    return determinant_polynomial(matrix.entries).normalized()


def knot_determinant(matrix):
    """The knot determinant |Delta(-1)|."""
    return abs(int(alexander(matrix).evaluate(-1)))


def tristram_levine(matrix, omega):
    """The Tristram-Levine signature at a point omega of the unit circle.

    Args:
        matrix: The SeifertMatrix A.
        omega: A complex number of modulus one.

    Returns:
        The signature of (1 - omega) A + (1 - conj(omega)) A^T.

    Raises:
        NearSingularSampleError: if the hermitian matrix has |det| below the guard.

    """
    if abs(omega + 1) < 1e-15:
        return signature(matrix)
    if not matrix.size:
        return 0
    values = np.array(matrix.entries, dtype=complex)
    hermitian = (1 - omega) * values + (1 - np.conj(omega)) * values.T
    eigenvalues = np.linalg.eigvalsh(hermitian)
    hermitian_determinant = float(np.prod(eigenvalues))
    if abs(hermitian_determinant) < NEAR_SINGULAR_GUARD:
        raise NearSingularSampleError(omega, hermitian_determinant)
    return int(np.sum(eigenvalues > 0)) - int(np.sum(eigenvalues < 0))


def sample_points(samples=DEFAULT_SAMPLES):
    """Angles theta_j = j / (2 (samples + 1)) of the upper half circle, the endpoints +-1 excluded."""
    if samples < 1:
        raise ValueError(f'Need at least one sample, got {samples}.')
    return [Fraction(index, 2 * (samples + 1)) for index in range(1, samples + 1)]


@dataclass
class SignatureGate:
    """The outcome of the signature function gate for both orientations."""

    exact_signature: int
    values: List[Tuple[str, int]] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)

    @property
    def sampled_values(self):
        return [value for _, value in self.values]

    @property
    def cp2_infinite(self):
        return any(value > 0 for value in self.sampled_values)

    @property
    def cp2bar_infinite(self):
        return any(value < 0 for value in self.sampled_values)

    @property
    def cp2top_lower(self):
        return max(0, ceil(max(-value for value in self.sampled_values) / 2))

    @property
    def cp2bartop_lower(self):
        return max(0, ceil(max(self.sampled_values) / 2))

    @property
    def verdicts(self):
        verdicts = []
        if self.cp2_infinite:
            verdicts.append('InfiniteUCP2')
        if self.cp2bar_infinite:
            verdicts.append('InfiniteUCP2bar')
        if not verdicts or self.cp2top_lower or self.cp2bartop_lower:
            verdicts.append(f'LowerBound(cp2top>={self.cp2top_lower}, cp2bartop>={self.cp2bartop_lower})')
        return verdicts

    def to_dict(self):
        return {'exact_signature': self.exact_signature,
                'values': [[angle, value] for angle, value in self.values],
                'skipped': list(self.skipped)}

    @classmethod
    def from_dict(cls, data):
        return cls(data['exact_signature'],
                   [(angle, value) for angle, value in data['values']],
                   list(data['skipped']))


def signature_gate(matrix, samples=DEFAULT_SAMPLES):
    """Samples the signature function and derives the infinity verdicts and the topological lower bounds.

    A knot that is H-slice in a connected sum of m copies of CP2 has -2m <= sigma(omega) <= 0 at every regular
    value, so a positive sample rules out the CP2 side and the most negative sample bounds it from below.
    The mirror gives the dual statements.

    Args:
        matrix: The SeifertMatrix of the knot.
        samples: The number of sample points on the upper half circle.

    Returns:
        A SignatureGate.

    """
    exact = signature(matrix)
    gate = SignatureGate(exact, [('1/2', exact)])
    for angle in sample_points(samples):
        omega = cmath.exp(2j * cmath.pi * float(angle))
        try:
            gate.values.append((str(angle), tristram_levine(matrix, omega)))
        except NearSingularSampleError as exc:
            LOGGER.debug('Skipping sample %s: %s', angle, exc)
            gate.skipped.append(str(angle))
    return gate


def _validate_pretzel_parameters(parameters):
    if not parameters or any(not isinstance(value, int) or value % 2 == 0 for value in parameters):
        raise InvalidSeifertMatrixError(f'Pretzel parameters must be odd nonzero integers, got {parameters}.')


def bryant_signature(parameters):
    """The signature p - n - sgn(sum 1/q_i) of an odd pretzel knot, with sgn(0) = 0."""
    parameters = list(parameters)
    _validate_pretzel_parameters(parameters)
    if len(parameters) % 2 == 0:
        LOGGER.warning('P%s has an even number of strands and is a link, evaluating the formula anyway.',
                       tuple(parameters))
    positives = sum(1 for value in parameters if value > 0)
    negatives = len(parameters) - positives
    reciprocal_sum = sum(Fraction(1, value) for value in parameters)
    sign = (reciprocal_sum > 0) - (reciprocal_sum < 0)
    return positives - negatives - sign


def pretzel3_alexander(first, second, third):
    """((pq + qr + pr)(t - 2 + 1/t) + (t + 2 + 1/t)) / 4 in its symmetric normalization."""
    _validate_pretzel_parameters([first, second, third])
    pairs = first * second + second * third + first * third
    outer, middle = pairs + 1, 2 - 2 * pairs
    if outer % 4 or middle % 4:
        raise InvalidSeifertMatrixError(f'Alexander polynomial of P({first},{second},{third}) is not integral.')
    return LaurentPolynomial((outer // 4, middle // 4, outer // 4), -1)


def pretzel_determinant(parameters):
    """The determinant |sum_i prod_{j != i} q_j| of an odd pretzel knot."""
    parameters = list(parameters)
    _validate_pretzel_parameters(parameters)
    return abs(sum(prod(value for position, value in enumerate(parameters) if position != index)
                   for index in range(len(parameters))))
