#!/usr/bin/env python
# -*- coding: utf-8 -*-
# File: datamodels.py
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
Main code for datamodels.

.. _Google Python Style Guide:
   https://google.github.io/styleguide/pyguide.html

"""

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from colorclass import Color

from cpslicingcli.cpslicingcliexceptions import InternalConsistencyError
from .diophantine import DEFAULT_SYSTEM_BUDGET
from .embedder import DEFAULT_NODE_BUDGET
from .knotspec import CP2, CP2BAR, CP2BARTOP, CP2TOP, MIRRORED_SIDE
from .seifert import DEFAULT_SAMPLES
from .upperbound import DEFAULT_BASIS_DEPTH, DEFAULT_COEFF_BOUND, DEFAULT_N_MAX, DEFAULT_SEARCH_BUDGET

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
LOGGER_BASENAME = '''datamodels'''
LOGGER = logging.getLogger(LOGGER_BASENAME)
LOGGER.addHandler(logging.NullHandler())

SIDES = (CP2, CP2BAR, CP2TOP, CP2BARTOP)
INFINITY = 'infinity'
EXACT, RANGE, INFINITE, UNKNOWN = 'exact', 'range', 'infinite', 'unknown'
SIDE_TITLES = {CP2: 'CP2', CP2BAR: 'CP2bar', CP2TOP: 'CP2 top', CP2BARTOP: 'CP2bar top'}
STATUS_COLORS = {EXACT: 'autogreen', RANGE: 'autoyellow', INFINITE: 'autored', UNKNOWN: 'autoblack'}


@dataclass(frozen=True)
class SearchBudget:
    """Limits shared by every engine that compute_bounds drives."""

    m_max: int = 4
    node_budget: int = DEFAULT_NODE_BUDGET
    n_max: int = DEFAULT_N_MAX
    coeff_bound: int = DEFAULT_COEFF_BOUND
    basis_depth: int = DEFAULT_BASIS_DEPTH
    search_budget: int = DEFAULT_SEARCH_BUDGET
    samples: int = DEFAULT_SAMPLES
    system_budget: int = DEFAULT_SYSTEM_BUDGET

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        return cls(**data)


def _encode(value):
    return INFINITY if value == float('inf') else value


def _decode(value):
    return float('inf') if value == INFINITY else value


@dataclass
class SideBounds:
    """Lower and upper bound of one slicing number, upper None meaning no certified finite bound."""

    side: str
    lower: float = 0
    upper: Optional[float] = None
    finite: bool = False
    evidence: List[str] = field(default_factory=list)

    @property
    def infinite(self):
        return self.lower == float('inf')

    @property
    def status(self):
        if self.infinite:
            return INFINITE
        if self.upper is None:
            return UNKNOWN
        return EXACT if self.lower == self.upper else RANGE

    def raise_lower(self, value, reason):
        if value > self.lower:
            self.lower = value
            self.evidence.append(f'lower {_encode(value)}: {reason}')

    def lower_upper(self, value, reason):
        if self.upper is None or value < self.upper:
            self.upper = value
            self.finite = True
            self.evidence.append(f'upper {value}: {reason}')

    def mark_finite(self, reason):
        if not self.finite:
            self.finite = True
            self.evidence.append(f'finite: {reason}')

    def mark_infinite(self, reason):
        if not self.infinite:
            self.lower = float('inf')
            self.evidence.append(f'infinite: {reason}')

    def check(self):
        """Raises InternalConsistencyError when the bounds contradict each other."""
        if self.infinite and self.finite:
            raise InternalConsistencyError(f'Side {self.side} was certified both finite and infinite: '
                                           f'{self.evidence}')
        if self.upper is not None and self.lower > self.upper:
            raise InternalConsistencyError(f'Side {self.side} has lower {self.lower} above upper {self.upper}: '
                                           f'{self.evidence}')

    def to_dict(self):
        return {'side': self.side,
                'lower': _encode(self.lower),
                'upper': self.upper,
                'finite': self.finite,
                'status': self.status,
                'evidence': list(self.evidence)}

    @classmethod
    def from_dict(cls, data):
        return cls(data['side'], _decode(data['lower']), data['upper'], data['finite'], list(data['evidence']))


@dataclass
class ObstructionReport:
    """Everything compute_bounds learned about one knot, serializable to and from JSON."""

    knot: str
    normalized: str
    invariants: Dict = field(default_factory=dict)
    sides: Dict[str, SideBounds] = field(default_factory=lambda: {side: SideBounds(side) for side in SIDES})
    witnesses: Dict = field(default_factory=dict)
    stats: Dict = field(default_factory=dict)
    budget: SearchBudget = field(default_factory=SearchBudget)
    notes: List[str] = field(default_factory=list)

    def side(self, name):
        return self.sides[name]

    def check(self):
        for bounds in self.sides.values():
            bounds.check()

    def mirrored_sides(self):
        """The side bounds as they read for the mirror image."""
        return {MIRRORED_SIDE[name]: SideBounds(MIRRORED_SIDE[name], bounds.lower, bounds.upper, bounds.finite,
                                                list(bounds.evidence))
                for name, bounds in self.sides.items()}

    def to_dict(self):
        return {'knot': self.knot,
                'normalized': self.normalized,
                'invariants': self.invariants,
                'sides': {name: bounds.to_dict() for name, bounds in self.sides.items()},
                'witnesses': self.witnesses,
                'stats': self.stats,
                'budget': self.budget.to_dict(),
                'notes': list(self.notes)}

    @classmethod
    def from_dict(cls, data):
        return cls(data['knot'],
                   data['normalized'],
                   data['invariants'],
                   {name: SideBounds.from_dict(bounds) for name, bounds in data['sides'].items()},
                   data['witnesses'],
                   data['stats'],
                   SearchBudget.from_dict(data['budget']),
                   list(data['notes']))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass
class PresentationSide:
    bounds: SideBounds

    @property
    def name(self):
        return Color(f'{{blue}}{SIDE_TITLES[self.bounds.side]}{{/blue}}')

    @property
    def status_color(self):
        return STATUS_COLORS[self.bounds.status]

    @property
    def upper_text(self):
        if self.bounds.infinite:
            return INFINITY
        if self.bounds.upper is None:
            return 'finite' if self.bounds.finite else '?'
        return str(self.bounds.upper)

    @property
    def presentation_row(self):
        return (self.name,
                str(_encode(self.bounds.lower)),
                self.upper_text,
                Color(f'{{{self.status_color}}}{self.bounds.status}{{/{self.status_color}}}'),
                '\n'.join(self.bounds.evidence))
