#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: embedder.py
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
Main code for embedder.

The diagonalization obstruction as an exhaustive search. A negative definite
lattice G together with m extra classes u_i of square -2, orthogonal to G,
is embedded into (Z^N, -Id) with N = rank(G) + 2m. A full embedding only
counts when every u_j has a dual class w_j, found by solving an integer linear
system. When no such data exist the lattice is obstructed at m.

The search runs over the images one generator at a time, assigning coordinates
depth first. Coordinates that look alike to everything placed so far are
interchangeable, so only one ordering of them is tried.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from math import isqrt
from time import perf_counter
from typing import List, Optional, Tuple

from cpslicingcli.cpslicingcliexceptions import BudgetExceeded, InternalConsistencyError, NotNegativeDefiniteError
from .lattice import IntegralLattice, direct_sum, is_negative_definite
from .normalforms import solve_integer_systems

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
LOGGER_BASENAME = '''embedder'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

DEFAULT_NODE_BUDGET = 10 ** 8


class Verdict(Enum):
    """The outcome of an obstruction search."""

    OBSTRUCTED = 'Obstructed'
    INCONCLUSIVE = 'Inconclusive'


def dot(first, second):
    return sum(left * right for left, right in zip(first, second))


def diagonal_pairing(first, second):
    """The pairing of (Z^N, -Id)."""
    return -dot(first, second)


def _suffix_squares(vector, length):
    tails = [0] * (length + 1)
    for position in range(length - 1, -1, -1):
        tails[position] = tails[position + 1] + vector[position] * vector[position]
    return tails


def _square_partitions(total, parts, largest):
    """Nonincreasing positive integers, at most parts of them and none above largest, with squares summing to total."""
    if not total:
        yield ()
        return
    if not parts:
        return
    for value in range(min(largest, isqrt(total)), 0, -1):
        for rest in _square_partitions(total - value * value, parts - 1, value):
            yield (value,) + rest


def _coordinate_search(norm, length, constraints, tick, admissible=None):
    """Depth first assignment of the first length coordinates of a vector.

    Args:
        norm: The sum of squares available to the whole vector.
        length: The number of coordinates to assign.
        constraints: Pairs (vector, required dot product), dot meaning the plain euclidean product.
        tick: Called once per visited node.
        admissible: Optional predicate (position, value, entries) restricting the values tried.

    Yields:
        (entries, remaining norm) for every assignment meeting all constraints exactly, in lexicographic order.

    """
    residuals = [required for _, required in constraints]
    tails = [_suffix_squares(vector, length) for vector, _ in constraints]
    entries = [0] * length

    def descend(position, remaining):
        tick()
        if position == length:
            if not any(residuals):
                yield tuple(entries), remaining
            return
        reach = isqrt(remaining)
        for value in range(-reach, reach + 1):
            if admissible is not None and not admissible(position, value, entries):
                continue
            rest = remaining - value * value
            # Cauchy-Schwarz on the coordinates still to come.
            if any((residuals[index] - value * vector[position]) ** 2 > rest * tails[index][position + 1]
                   for index, (vector, _) in enumerate(constraints)):
                continue
            for index, (vector, _) in enumerate(constraints):
                residuals[index] -= value * vector[position]
            entries[position] = value
            yield from descend(position + 1, rest)
            for index, (vector, _) in enumerate(constraints):
                residuals[index] += value * vector[position]
        entries[position] = 0

    yield from descend(0, norm)


def enumerate_vectors(norm, target_rank, constraints=()):
    """Every vector v of Z^N with <v, v> = -norm meeting the pairing constraints, in lexicographic order.

    Args:
        norm: A positive integer.
        target_rank: The dimension N.
        constraints: Pairs (vector, required value of <vector, v>) in the -Id pairing.

    Yields:
        Integer tuples of length N, each exactly once.

    """
    plain = [(tuple(vector), -required) for vector, required in constraints]
    for entries, remaining in _coordinate_search(norm, target_rank, plain, lambda: None):
        if not remaining:
            yield entries


@dataclass
class PartialEmbedding:
    """Images assigned so far, in processing order, with the gram matrix they have to realize."""

    target_rank: int
    required: Tuple[Tuple[int, ...], ...]
    images: List[Tuple[int, ...]] = field(default_factory=list)
    _used: List[int] = field(default_factory=lambda: [0], init=False, repr=False)

    @property
    def used(self):
        """The number of leading coordinates some image touches, untouched coordinates are always a suffix."""
        return self._used[-1]

    def push(self, vector):
        self.images.append(tuple(vector))
        last = max((position + 1 for position, entry in enumerate(vector) if entry), default=0)
        self._used.append(max(self.used, last))

    def pop(self):
        self._used.pop()
        return self.images.pop()

    def is_consistent(self):
        return all(diagonal_pairing(self.images[i], self.images[j]) == self.required[i][j]
                   for i in range(len(self.images)) for j in range(i + 1))

    def coordinate_classes(self):
        """For every used coordinate, its normalizing sign and the previous used coordinate with the same column.

        Two coordinates whose columns agree up to sign can be swapped, fixing every image placed so far.
        """
        last_seen, classes = {}, []
        for position in range(self.used):
            column = [image[position] for image in self.images]
            sign = next((1 if entry > 0 else -1 for entry in column if entry), 1)
            key = tuple(sign * entry for entry in column)
            classes.append((sign, last_seen.get(key)))
            last_seen[key] = position
        return classes


@dataclass(frozen=True)
class EmbeddingWitness:
    """A full embedding with its dual classes, generator images in the input order of the lattice."""

    images: Tuple[Tuple[int, ...], ...]
    u_images: Tuple[Tuple[int, ...], ...]
    w_vectors: Tuple[Tuple[int, ...], ...]

    def to_dict(self):
        return {'images': [list(image) for image in self.images],
                'u_images': [list(image) for image in self.u_images],
                'w_vectors': [list(vector) for vector in self.w_vectors]}

    @classmethod
    def from_dict(cls, data):
        return cls(*(tuple(tuple(vector) for vector in data[key]) for key in ('images', 'u_images', 'w_vectors')))


@dataclass(frozen=True)
class ObstructionOutcome:
    """The verdict of one search together with its witness and statistics."""

    verdict: Verdict
    m: int
    target_rank: int
    witness: Optional[EmbeddingWitness] = None
    nodes: int = 0
    seconds: float = 0.0

    @property
    def is_obstructed(self):
        return self.verdict is Verdict.OBSTRUCTED

    def to_dict(self):
        return {'verdict': self.verdict.value,
                'm': self.m,
                'target_rank': self.target_rank,
                'witness': self.witness.to_dict() if self.witness else None,
                'nodes': self.nodes,
                'seconds': round(self.seconds, 6)}

    @classmethod
    def from_dict(cls, data):
        witness = EmbeddingWitness.from_dict(data['witness']) if data.get('witness') else None
        return cls(Verdict(data['verdict']), data['m'], data['target_rank'], witness,
                   data.get('nodes', 0), data.get('seconds', 0.0))


def _extended_gram(lattice, m):
    return direct_sum(lattice, IntegralLattice(tuple(tuple(-2 if i == j else 0 for j in range(m))
                                                     for i in range(m))))


def _dual_targets(rank, m):
    return [[0] * rank + [-1 if index == column else 0 for index in range(m)] for column in range(m)]


def verify_embedding(lattice, m, witness):
    """Independently re-checks every equality an embedding witness claims.

    Args:
        lattice: The negative definite lattice G.
        m: The number of square -2 classes.
        witness: An EmbeddingWitness.

    Returns:
        True if all gram equalities and all dual class equations hold exactly.

    """
    target_rank = lattice.rank + 2 * m
    rows = list(witness.images) + list(witness.u_images)
    if len(witness.images) != lattice.rank or len(witness.u_images) != m or len(witness.w_vectors) != m:
        return False
    if any(len(vector) != target_rank for vector in rows + list(witness.w_vectors)):
        return False
    gram = _extended_gram(lattice, m).gram
    if any(diagonal_pairing(rows[i], rows[j]) != gram[i][j] for i in range(len(rows)) for j in range(len(rows))):
        return False
    for column, vector in enumerate(witness.w_vectors):
        expected = [0] * lattice.rank + [1 if index == column else 0 for index in range(m)]
        if [diagonal_pairing(row, vector) for row in rows] != expected:
            return False
    return True


def _validate(lattice, m):
    if not isinstance(m, int) or m < 0:
        raise ValueError(f'm must be a nonnegative integer, got {m!r}.')
    if not is_negative_definite(lattice):
        raise NotNegativeDefiniteError(f'Lattice with gram {lattice.gram} is not negative definite.')


class DonaldsonSearch:
    """The symmetry reduced exhaustive search for one lattice and one m."""

    def __init__(self, lattice, m, node_budget=DEFAULT_NODE_BUDGET):
        _validate(lattice, m)
        self.lattice = lattice
        self.m = m
        self.node_budget = node_budget
        self.target_rank = lattice.rank + 2 * m
        self.order = self._processing_order()
        gram = _extended_gram(lattice, m).gram
        self.required = tuple(tuple(gram[row][column] for column in self.order) for row in self.order)
        self.nodes = 0
        self.state = PartialEmbedding(self.target_rank, self.required)

    def _processing_order(self):
        """Generators of G by increasing norm, preferring those most connected to the ones already chosen.

        The u classes come last.
        """
        gram, remaining, order = self.lattice.gram, set(range(self.lattice.rank)), []
        while remaining:
            def preference(index):
                links = sum(1 for chosen in order if gram[index][chosen])
                return -gram[index][index], -links, index
            chosen = min(remaining, key=preference)
            order.append(chosen)
            remaining.remove(chosen)
        return order + list(range(self.lattice.rank, self.lattice.rank + self.m))

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_budget:
            raise BudgetExceeded(self.nodes, self.node_budget)

    def extensions(self):
        """Symmetry reduced candidates for the image of the next generator."""
        step = len(self.state.images)
        norm = -self.required[step][step]
        used = self.state.used
        constraints = [(image, -self.required[step][index]) for index, image in enumerate(self.state.images)]
        classes = self.state.coordinate_classes()

        def admissible(position, value, entries):
            sign, previous = classes[position]
            return previous is None or sign * value <= classes[previous][0] * entries[previous]

        free = self.target_rank - used
        for entries, remaining in _coordinate_search(norm, used, constraints, self._tick, admissible):
            for fresh in _square_partitions(remaining, free, isqrt(norm)):
                yield entries + fresh + (0,) * (free - len(fresh))

    def _descend(self):
        if len(self.state.images) == len(self.order):
            return self._certificate()
        for candidate in self.extensions():
            self.state.push(candidate)
            try:
                witness = self._descend()
            finally:
                self.state.pop()
            if witness is not None:
                return witness
        return None

    def _certificate(self):
        placed = [None] * len(self.order)
        for position, generator in enumerate(self.order):
            placed[generator] = self.state.images[position]
        images, u_images = placed[:self.lattice.rank], placed[self.lattice.rank:]
        if not self.m:
            return EmbeddingWitness(tuple(images), (), ())
        # <u_i, w_j> = delta_ij and <g, w_j> = 0 read -dot(u_i, w_j) = delta_ij in plain coordinates.
        solutions = solve_integer_systems(images + u_images, _dual_targets(self.lattice.rank, self.m),
                                          self.target_rank)
        if any(solution is None for solution in solutions):
            return None
        return EmbeddingWitness(tuple(images), tuple(u_images), tuple(solutions))

    def run(self):
        """Runs the search to completion.

        Returns:
            An ObstructionOutcome.

        Raises:
            BudgetExceeded: The node budget ran out before a verdict was reached.

        """
        started = perf_counter()
        witness = self._descend()
        verdict = Verdict.INCONCLUSIVE if witness else Verdict.OBSTRUCTED
        outcome = ObstructionOutcome(verdict, self.m, self.target_rank, witness, self.nodes,
                                     perf_counter() - started)
        LOGGER.debug('Rank %s lattice at m=%s: %s after %s nodes.', self.lattice.rank, self.m,
                     verdict.value, self.nodes)
        return outcome


def donaldson_obstruction(lattice, m, node_budget=DEFAULT_NODE_BUDGET):
    """Decides whether the lattice together with m square -2 classes embeds with dual classes.

    Args:
        lattice: A negative definite IntegralLattice G.
        m: The number of square -2 classes, the target is (Z^(rank + 2m), -Id).
        node_budget: The number of search nodes after which BudgetExceeded is raised.

    Returns:
        An ObstructionOutcome. Obstructed certifies that no embedding with dual classes exists, Inconclusive
        carries a witness that passed verify_embedding.

    """
    outcome = DonaldsonSearch(lattice, m, node_budget).run()
    if outcome.witness is not None and not verify_embedding(lattice, m, outcome.witness):
        LOGGER.error('Witness for m=%s failed verification: %s', m, outcome.witness)
        raise InternalConsistencyError(f'Embedding witness at m={m} failed verification.')
    return outcome


def naive_obstruction(lattice, m, entry_bound=2):
    """The same decision by brute force over every image with entries in [-entry_bound, entry_bound].

    No symmetry is used, only the gram equalities prune. Meant as an oracle for small lattices.
    """
    _validate(lattice, m)
    started = perf_counter()
    target_rank = lattice.rank + 2 * m
    gram = _extended_gram(lattice, m).gram
    box = list(itertools.product(range(-entry_bound, entry_bound + 1), repeat=target_rank))
    by_norm = {}
    for norm in {-gram[index][index] for index in range(len(gram))}:
        by_norm[norm] = [vector for vector in box if dot(vector, vector) == norm]
    images, nodes = [], 0

    def descend():
        nonlocal nodes
        step = len(images)
        if step == len(gram):
            rank = lattice.rank
            if not m:
                return EmbeddingWitness(tuple(images), (), ())
            solutions = solve_integer_systems(images, _dual_targets(rank, m), target_rank)
            if any(solution is None for solution in solutions):
                return None
            return EmbeddingWitness(tuple(images[:rank]), tuple(images[rank:]), tuple(solutions))
        for candidate in by_norm[-gram[step][step]]:
            nodes += 1
            if any(diagonal_pairing(candidate, image) != gram[step][index] for index, image in enumerate(images)):
                continue
            images.append(candidate)
            witness = descend()
            images.pop()
            if witness is not None:
                return witness
        return None

    witness = descend()
    verdict = Verdict.INCONCLUSIVE if witness else Verdict.OBSTRUCTED
    return ObstructionOutcome(verdict, m, target_rank, witness, nodes, perf_counter() - started)


def obstruction_sweep(lattice, m_max, node_budget=DEFAULT_NODE_BUDGET):
    """Runs the search for m = 0, 1, ... and stops at the first Inconclusive outcome or at m_max.

    An obstruction at m implies one at every smaller m, so nothing above the first Inconclusive can be obstructed.

    Raises:
        BudgetExceeded: With the largest m certified Obstructed so far as frontier.

    """
    outcomes, frontier = [], None
    for m in range(m_max + 1):
        try:
            outcome = donaldson_obstruction(lattice, m, node_budget)
        except BudgetExceeded as exc:
            LOGGER.info('Budget exhausted at m=%s, certified frontier is %s.', m, frontier)
            raise BudgetExceeded(exc.nodes, exc.budget, frontier) from exc
        outcomes.append(outcome)
        LOGGER.info('m=%s: %s (%s nodes).', m, outcome.verdict.value, outcome.nodes)
        if not outcome.is_obstructed:
            break
        frontier = m
    return outcomes


def min_obstructed_m(lattice, m_max, node_budget=DEFAULT_NODE_BUDGET):
    """The largest m <= m_max at which the lattice is obstructed, or None if it is not obstructed at m = 0.

    The implied lower bound on the slicing number is the returned value plus one.
    """
    outcomes = obstruction_sweep(lattice, m_max, node_budget)
    obstructed = [outcome.m for outcome in outcomes if outcome.is_obstructed]
    return obstructed[-1] if obstructed else None
